"""Floating-point cross-checks: grid eigensolver, tilde states, stencil application."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.integrate import cumulative_simpson
from scipy.linalg import eigh_tridiagonal

from .diffop import DiffOp
from .exactalg import QuasiRational, RationalFn


class PoleOnNode(ArithmeticError):
    """An operator coefficient has a pole at a grid node."""


@dataclass(frozen=True)
class Grid:
    """Uniform grid on [-L, L] with spacing h = 2L/N; Dirichlet at both ends.

    ``nodes`` are the N-1 interior points, optionally displaced by ``offset``.
    """

    L: float = 10.0
    N: int = 4000
    offset: float = 0.0

    def __post_init__(self):
        if self.N < 3:
            raise ValueError("a grid needs N >= 3")
        if self.L <= 0:
            raise ValueError("half width must be positive")

    @property
    def h(self) -> float:
        return 2 * self.L / self.N

    @property
    def nodes(self) -> np.ndarray:
        return -self.L + self.h * np.arange(1, self.N) + self.offset

    def shifted(self) -> "Grid":
        """Same grid moved by half a step."""
        return Grid(self.L, self.N, self.offset + self.h / 2)

    def coarse(self) -> "Grid":
        if self.N % 2:
            raise ValueError("coarsening needs an even N")
        return Grid(self.L, self.N // 2, self.offset)


def _evaluate(v, x: np.ndarray) -> np.ndarray:
    if isinstance(v, (RationalFn, QuasiRational)):
        return np.asarray(v.eval_float(x) if isinstance(v, RationalFn) else v(x), dtype=float)
    return np.asarray(v(x), dtype=float)


# -- eigenvalues ------------------------------------------------------------


@dataclass
class NumericSpectrum:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # shape (k, N-1), unit norm in the grid inner product
    grid: Grid
    stencil_order: int = 2
    raw: np.ndarray | None = None
    coarse: np.ndarray | None = None
    extrapolated: np.ndarray | None = None
    warnings: list = field(default_factory=list)

    @property
    def best(self) -> np.ndarray:
        return self.extrapolated if self.extrapolated is not None else self.eigenvalues


def _tridiagonal_solve(vals: np.ndarray, grid: Grid, k: int):
    h2 = grid.h**2
    d = 2.0 / h2 + vals
    e = np.full(len(vals) - 1, -1.0 / h2)
    w, v = eigh_tridiagonal(d, e, select="i", select_range=(0, k - 1))
    v = v.T / np.sqrt(grid.h)
    # fix signs: positive at the first sizeable node from the left
    for row in v:
        i = int(np.argmax(np.abs(row) > 1e-3 * np.abs(row).max()))
        if row[i] < 0:
            row *= -1
    return w, v


def eigensolve(potential, grid: Grid | None = None, k: int = 6, richardson: bool = False,
               tol: float = 1e-3) -> NumericSpectrum:
    """Lowest k eigenvalues of -D^2 + V with second-order central differences.

    ``potential`` is a RationalFn (or any vectorised callable). With
    ``richardson`` the solve is repeated on the N/2 grid and combined as
    (4 E_N - E_{N/2}) / 3; a combination moving further than ``tol`` from the
    raw value is reported in ``warnings``.
    """
    grid = grid or Grid()
    if k < 1 or k > (grid.N - 1) // 4:
        raise ValueError(f"k={k} out of range for N={grid.N}")
    w, v = _tridiagonal_solve(_evaluate(potential, grid.nodes), grid, k)
    out = NumericSpectrum(w, v, grid, raw=w)
    if richardson:
        cg = grid.coarse()
        wc, _ = _tridiagonal_solve(_evaluate(potential, cg.nodes), cg, k)
        ex = (4 * w - wc) / 3
        out.coarse, out.extrapolated = wc, ex
        bad = np.nonzero(np.abs(ex - w) > tol)[0]
        for i in bad:
            out.warnings.append(f"level {i}: raw {w[i]:.8f}, coarse {wc[i]:.8f}, extrapolated {ex[i]:.8f}")
    return out


def spectrum_table(predicted, spec: NumericSpectrum) -> list:
    """Rows (level, predicted, computed, error[, extrapolated, error])."""
    rows = []
    for i, e in enumerate(predicted[: len(spec.eigenvalues)]):
        e = float(e)
        row = {"level": i, "predicted": e, "computed": float(spec.eigenvalues[i]),
               "error": float(abs(spec.eigenvalues[i] - e))}
        if spec.extrapolated is not None:
            row["extrapolated"] = float(spec.extrapolated[i])
            row["extrapolated_error"] = float(abs(spec.extrapolated[i] - e))
        rows.append(row)
    return rows


# -- finite-difference application -------------------------------------------


def fd_weights(offsets: np.ndarray, m: int) -> np.ndarray:
    """Fornberg weights for derivatives 0..m at 0 from the given offsets; shape (m+1, n)."""
    z = 0.0
    x = np.asarray(offsets, dtype=float)
    n = len(x)
    c = np.zeros((m + 1, n))
    c1, c4 = 1.0, x[0] - z
    c[0, 0] = 1.0
    for i in range(1, n):
        mn = min(i, m)
        c2, c5, c4 = 1.0, c4, x[i] - z
        for j in range(i):
            c3 = x[i] - x[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[k, i] = c1 * (k * c[k - 1, i - 1] - c5 * c[k, i - 1]) / c2
                c[0, i] = -c1 * c5 * c[0, i - 1] / c2
            for k in range(mn, 0, -1):
                c[k, j] = (c4 * c[k, j] - k * c[k - 1, j]) / c3
            c[0, j] = c4 * c[0, j] / c3
        c1 = c2
    return c


def _central_derivative(values: np.ndarray, k: int, h: float, accuracy: int) -> np.ndarray:
    if k == 0:
        return values.copy()
    npts = 2 * ((k + 1) // 2) - 1 + accuracy
    r = npts // 2
    w = fd_weights(np.arange(-r, r + 1), k)[k] / h**k
    out = np.full_like(values, np.nan, dtype=float)
    if len(values) > 2 * r:
        win = np.lib.stride_tricks.sliding_window_view(values, 2 * r + 1)
        out[r:len(values) - r] = win @ w
    return out


def _check_poles(op: DiffOp, x: np.ndarray, h: float) -> None:
    for c in op.coeffs:
        for p in c.numeric_poles():
            if np.min(np.abs(x - p)) < 1e-9 * max(h, 1.0):
                raise PoleOnNode(f"coefficient pole at x={p:.6g} lies on the grid")


def apply_numeric(op: DiffOp, values: np.ndarray, grid: Grid, accuracy: int = 8) -> np.ndarray:
    """Apply op to node samples with central stencils of the given accuracy order.

    Nodes whose stencil leaves the array (or touches NaN) come back as NaN.
    """
    x = grid.nodes
    values = np.asarray(values, dtype=float)
    if values.shape != x.shape:
        raise ValueError("values must be sampled on grid.nodes")
    _check_poles(op, x, grid.h)
    out = np.zeros_like(values)
    for k, c in enumerate(op.coeffs):
        if c:
            out = out + c.eval_float(x) * _central_derivative(values, k, grid.h, accuracy)
    return out


def apply_numeric_fn(op: DiffOp, f: Callable, grid: Grid, accuracy: int = 8):
    """Sample f on the grid and apply op; on a coefficient pole, retry once on the half-shifted grid.

    Returns (grid used, values).
    """
    try:
        return grid, apply_numeric(op, _evaluate(f, grid.nodes), grid, accuracy)
    except PoleOnNode:
        g2 = grid.shifted()
        return g2, apply_numeric(op, _evaluate(f, g2.nodes), g2, accuracy)


def annihilation_threshold(op: DiffOp, values: np.ndarray, grid: Grid, mask=None) -> float:
    """1e-4 x input peak x largest coefficient magnitude over the (masked) nodes."""
    x = grid.nodes
    m = np.isfinite(values) if mask is None else mask & np.isfinite(values)
    cmax = max(float(np.max(np.abs(c.eval_float(x[m])))) for c in op.coeffs if c)
    return 1e-4 * float(np.max(np.abs(values[m]))) * cmax


def cosine_similarity(a: np.ndarray, b: np.ndarray) -> float:
    m = np.isfinite(a) & np.isfinite(b)
    a, b = a[m], b[m]
    return float(abs(a @ b) / (np.linalg.norm(a) * np.linalg.norm(b)))


# -- tilde states ------------------------------------------------------------


@dataclass
class TildeState:
    """psi~ = psi * int_{x0}^x dxi / psi^2 on ``grid.nodes``; NaN outside ``window``."""

    grid: Grid
    x0: float
    values: np.ndarray
    psi: np.ndarray
    window: tuple  # (first, last) node indices, inclusive

    @property
    def mask(self) -> np.ndarray:
        m = np.zeros(len(self.values), dtype=bool)
        m[self.window[0]:self.window[1] + 1] = True
        return m

    @property
    def x_window(self) -> tuple:
        x = self.grid.nodes
        return float(x[self.window[0]]), float(x[self.window[1]])


def _gauss_cumulative(psi, x: np.ndarray, points: int = 8) -> np.ndarray:
    """Cumulative integral of 1/psi^2 over consecutive nodes, Gauss-Legendre per interval."""
    t, w = np.polynomial.legendre.leggauss(points)
    a, b = x[:-1], x[1:]
    mid, half = (a + b) / 2, (b - a) / 2
    pts = mid[:, None] + half[:, None] * t[None, :]
    vals = 1.0 / _evaluate(psi, pts.ravel()).reshape(pts.shape) ** 2
    return np.concatenate([[0.0], np.cumsum((vals @ w) * half)])


def tilde_state(psi, x0: float, grid: Grid | None = None, cap: float = 1e6,
                method: str = "simpson") -> TildeState:
    """Second solution at the energy of psi, by composite Simpson quadrature.

    The usable window is the run of nodes around x0 where |psi|, 1/psi^2 and
    |psi~| stay below ``cap``; everything outside is NaN. Differentiating
    psi~ on the grid loses about eps*|psi~|/h to cancellation, which is what
    the default cap keeps small.

    ``method="gauss"`` swaps Simpson for 8-point Gauss-Legendre on each
    interval (needs psi callable off the grid); its error is smooth enough to
    survive high-order stencils.
    """
    if method not in ("simpson", "gauss"):
        raise ValueError(f"unknown quadrature {method!r}")
    grid = grid or Grid()
    x = grid.nodes
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        p = _evaluate(psi, x)
        inv2 = 1.0 / p**2
    i0 = int(np.argmin(np.abs(x - x0)))
    ok = np.isfinite(inv2) & (np.abs(p) <= cap) & (inv2 <= cap)
    if not ok[i0]:
        raise ValueError(f"psi is too small or too large at x0={x0}")
    lo, hi = i0, i0
    while lo > 0 and ok[lo - 1]:
        lo -= 1
    while hi < len(x) - 1 and ok[hi + 1]:
        hi += 1
    vals = np.full(len(x), np.nan)
    integ = np.zeros(len(x))
    if method == "gauss":
        c = _gauss_cumulative(psi, x[lo:hi + 1])
        integ[lo:hi + 1] = c - c[i0 - lo]
    else:
        if hi > i0:
            integ[i0:hi + 1] = cumulative_simpson(inv2[i0:hi + 1], dx=grid.h, initial=0.0)
        if lo < i0:
            left = cumulative_simpson(inv2[lo:i0 + 1][::-1], dx=grid.h, initial=0.0)
            integ[lo:i0 + 1] = -left[::-1]
    vals[lo:hi + 1] = p[lo:hi + 1] * integ[lo:hi + 1]
    # trim where psi~ itself overflows the cap
    while hi > i0 and abs(vals[hi]) > cap:
        vals[hi] = np.nan
        hi -= 1
    while lo < i0 and abs(vals[lo]) > cap:
        vals[lo] = np.nan
        lo += 1
    return TildeState(grid, float(x[i0]), vals, p, (lo, hi))


def wronskian_numeric(ts: TildeState, accuracy: int = 8) -> np.ndarray:
    """psi psi~' - psi' psi~ on the window (should be identically 1)."""
    d1 = _central_derivative(ts.values, 1, ts.grid.h, accuracy)
    dp = _central_derivative(ts.psi, 1, ts.grid.h, accuracy)
    return ts.psi * d1 - dp * ts.values
