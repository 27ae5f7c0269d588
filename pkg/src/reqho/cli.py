"""Command-line front end: ``reqho build|verify|export <scheme.json>``.

Reports are JSON (sorted keys, exact rationals as "num/den" strings) and are
written to ``--out``, else ``$REQHO_REPORT_DIR``, else ``./reports``.

Exit codes: 0 success, 1 internal defect, 2 user error (parse/inadmissible).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from fractions import Fraction
from importlib import resources
from pathlib import Path

import jsonschema

from . import __version__
from .dckat import build_system, check_admissible, eigenstates, gauge_shift, product_polynomial_check
from .exactalg import Poly, QuasiRational, RationalFn
from .ladder import FAILED, identity_catalog, trinity_for, verify_catalog
from .numeric import Grid, eigensolve, spectrum_table
from .scheme import Scheme, SchemeError
from .spectral import (
    kernel_classify,
    level_state,
    predict_spectrum,
    spectrum_generating_walk,
)

EXIT_OK, EXIT_DEFECT, EXIT_USER = 0, 1, 2
ALL_CHECKS = ("identities", "kernels", "spectrum", "walks")
SPECTRUM_TOL = 1e-3
DEFAULT_MAX_ORDER = 40


class UserError(Exception):
    pass


def _schema() -> dict:
    text = resources.files("reqho").joinpath("data/scheme_file.schema.json").read_text()
    return json.loads(text)


def load_scheme_file(path: str | Path) -> tuple:
    """Parse and validate a scheme file; returns (Scheme, options)."""
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise UserError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UserError(f"{path} is not valid JSON: {exc}") from exc
    try:
        jsonschema.validate(data, _schema())
    except jsonschema.ValidationError as exc:
        raise UserError(f"{path}: {exc.message}") from exc
    try:
        scheme = Scheme(tuple((s["kind"], s["n"]) for s in data["seeds"]))
    except SchemeError as exc:
        raise UserError(str(exc)) from exc
    return scheme, data.get("options", {})


# -- serialisation -------------------------------------------------------------


def q(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def poly_json(p: Poly) -> list:
    return [q(c) for c in p.coeffs]


def ratfn_json(r: RationalFn) -> dict:
    return {"num": poly_json(r.num), "den": poly_json(r.den), "text": str(r)}


def state_json(s: QuasiRational) -> dict:
    return {"rat": ratfn_json(s.rat), "gexp": q(s.gexp)}


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "w", newline="") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _out_dir(arg: str | None) -> Path:
    return Path(arg or os.environ.get("REQHO_REPORT_DIR") or "reports")


# -- report pieces ---------------------------------------------------------------


def system_summary(scheme: Scheme) -> dict:
    """Build the system and describe it; raises UserError when inadmissible."""
    if scheme.size == 0:
        v = RationalFn(Poly([-1, 0, 1]))
        return {
            "scheme": "{}",
            "family": "empty",
            "potential": ratfn_json(v),
            "shift": q(-1),
            "spectrum": predict_spectrum(scheme).as_dict(),
            "delta": "0/1",
            "n_plus": 0,
            "n_minus": 0,
            "bands": [],
            "gaps": [],
            "defects": [],
        }
    adm = check_admissible(scheme)
    if not adm:
        raise UserError(f"{scheme.label} is inadmissible: Wronskian has {adm.root_count} real root(s)")
    sys_ = build_system(scheme)
    sp = predict_spectrum(scheme)
    defects = list(adm.defects)
    try:
        product_polynomial_check(sys_)
    except ArithmeticError as exc:
        defects.append(str(exc))
    return {
        "scheme": scheme.label,
        "family": scheme.family,
        "wronskian": {"poly": poly_json(sys_.wronskian.poly), "gexp": q(sys_.wronskian.gexp)},
        "potential": ratfn_json(sys_.potential),
        "shift": q(gauge_shift(scheme)),
        "spectrum": sp.as_dict(),
        "delta": q(sp.delta),
        "n_plus": sp.n_plus,
        "n_minus": sp.n_minus,
        "bands": [[q(s), c] for s, c in sp.bands],
        "gaps": list(sp.n_gaps),
        "intertwiner_order": sys_.order,
        "defects": defects,
    }


def _grid_from(options: dict, override: str | None) -> Grid:
    g = options.get("grid", {})
    L, N = float(g.get("L", 10.0)), int(g.get("N", 4000))
    if override:
        try:
            a, b = override.split(",")
            L, N = float(a), int(b)
        except ValueError as exc:
            raise UserError(f"--grid expects L,N (got {override!r})") from exc
    if N % 2:
        raise UserError("grid N must be even (Richardson uses N/2)")
    return Grid(L, N)


def verify_report(scheme: Scheme, options: dict, grid: Grid, checks) -> tuple:
    """Full verification; returns (report dict, ok flag)."""
    summary = system_summary(scheme)
    rep = {"system": summary, "checks": list(checks)}
    ok = not summary["defects"]
    sp = predict_spectrum(scheme)
    tr = None
    if sp.n_plus:
        tr = trinity_for(scheme)
        rep["complementary_pair"] = {"alpha": tr.alpha.scheme.label, "beta": tr.beta.scheme.label}
        rep["operators"] = [
            {"name": n, "order": op.order, "step": op.step, "direction": op.direction} for n, op in tr.basic_ops()
        ]
    if "identities" in checks and tr is not None:
        recs = verify_catalog(identity_catalog(tr), options.get("max_order", DEFAULT_MAX_ORDER))
        rep["identities"] = [r.as_dict() for r in recs]
        rep["identity_counts"] = {
            s: sum(r.status == s for r in recs) for s in sorted({r.status for r in recs})
        }
        ok &= not any(r.status == FAILED for r in recs)
    if "kernels" in checks and tr is not None:
        kern = []
        for _, op in tr.basic_ops():
            kr = kernel_classify(op, tr)
            kern.append(kr.as_dict())
            ok &= kr.ok
        rep["kernels"] = kern
    if "walks" in checks and tr is not None:
        walks = []
        top = sp.n_plus + 2
        for k in range(top + 1):
            for src, dst in ((k, 0), (0, k)):
                if src == dst:
                    continue
                try:
                    w = spectrum_generating_walk(tr, src, dst)
                    walks.append({"from": src, "to": dst, "word": list(w.word), "factor": q(w.factor)})
                except ArithmeticError as exc:
                    walks.append({"from": src, "to": dst, "error": str(exc)})
                    ok = False
        rep["walks"] = walks
        rep["actions"] = ladder_actions(tr, sp.n_plus + int(sp.delta))
    if "spectrum" in checks:
        k = 6
        ns = eigensolve(_potential(scheme), grid, k, richardson=True)
        table = spectrum_table(sp.first(k), ns)
        err = max(r["error"] for r in table)
        rep["spectrum_table"] = [{key: _round(v) for key, v in r.items()} for r in table]
        rep["grid"] = {"L": grid.L, "N": grid.N}
        rep["spectrum_max_error"] = _round(err)
        rep["spectrum_warnings"] = ns.warnings
        ok &= err < SPECTRUM_TOL
    rep["ok"] = bool(ok)
    return rep, bool(ok)


def ladder_actions(tr, count: int) -> list:
    """Exact image of each of the lowest ``count`` levels under each basic operator.

    Entries read op Psi_from = factor * Psi_to; an image that vanishes is
    listed with ``"to": null``.
    """
    sp = tr.spectrum
    reps = {}

    def rep_of(k):
        if k not in reps:
            reps[k] = level_state(tr, k)
        return reps[k]

    out = []
    for k in range(count):
        for name, op in tr.basic_ops():
            img = op.apply(rep_of(k))
            if img.is_zero():
                out.append({"op": name, "from": k, "to": None})
                continue
            j = sp.index_of(sp.energy(k) + op.signed_step)
            c = img.ratio_to(rep_of(j)) if j is not None else None
            if c is None:
                raise ArithmeticError(f"{name} Psi_{k} is not a multiple of a level state")
            out.append({"op": name, "from": k, "to": j, "factor": q(c)})
    return out


def _round(v):
    return float(f"{v:.10g}") if isinstance(v, float) else v


def _potential(scheme: Scheme) -> RationalFn:
    if scheme.size == 0:
        return RationalFn(Poly([-1, 0, 1]))
    return build_system(scheme).potential


# -- commands ------------------------------------------------------------------------


def cmd_build(args) -> int:
    scheme, _ = load_scheme_file(args.file)
    summary = system_summary(scheme)
    out = _out_dir(args.out) / f"{Path(args.file).stem}.build.json"
    _write_atomic(out, _dump(summary))
    print(f"{summary['scheme']}: V = {summary['potential']['text']}")
    print(f"delta={summary['delta']} n_plus={summary['n_plus']} n_minus={summary['n_minus']} -> {out}")
    return EXIT_DEFECT if summary["defects"] else EXIT_OK


def cmd_verify(args) -> int:
    scheme, options = load_scheme_file(args.file)
    checks = tuple(args.checks or options.get("checks") or ALL_CHECKS)
    bad = [c for c in checks if c not in ALL_CHECKS]
    if bad:
        raise UserError(f"unknown checks: {', '.join(bad)}")
    grid = _grid_from(options, args.grid)
    rep, ok = verify_report(scheme, options, grid, checks)
    out = _out_dir(args.out) / f"{Path(args.file).stem}.verify.json"
    _write_atomic(out, _dump(rep))
    counts = rep.get("identity_counts", {})
    print(f"{rep['system']['scheme']}: identities {counts or '-'}; "
          f"spectrum max error {rep.get('spectrum_max_error', '-')}; {'OK' if ok else 'DEFECT'} -> {out}")
    return EXIT_OK if ok else EXIT_DEFECT


def cmd_export(args) -> int:
    scheme, options = load_scheme_file(args.file)
    stem = Path(args.file).stem
    outdir = _out_dir(args.out)
    if scheme.size and not check_admissible(scheme):
        raise UserError(f"{scheme.label} is inadmissible")
    if args.what == "potential":
        grid = _grid_from(options, args.grid)
        v = _potential(scheme)
        x = grid.nodes
        y = v.eval_float(x)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["x", "V"])
        for xi, yi in zip(x, y):
            w.writerow([f"{xi:.10g}", f"{yi:.12g}"])
        path = outdir / f"{stem}.potential.csv"
        _write_atomic(path, buf.getvalue())
    elif args.what == "spectrum":
        sp = predict_spectrum(scheme)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["level", "energy"])
        for i, e in enumerate(sp.first(args.levels)):
            w.writerow([i, q(e)])
        path = outdir / f"{stem}.spectrum.csv"
        _write_atomic(path, buf.getvalue())
        _write_atomic(outdir / f"{stem}.spectrum.json", _dump(sp.as_dict()))
    else:
        path = outdir / f"{stem}.states.json"
        _write_atomic(path, _dump(_states_json(scheme, args.levels)))
    print(path)
    return EXIT_OK


def _states_json(scheme: Scheme, n: int) -> dict:
    if scheme.size == 0:
        from .oscillator import physical

        pairs = [(Fraction(2 * k), QuasiRational.from_quasi(physical(k).state)) for k in range(n)]
    else:
        pairs = eigenstates(build_system(scheme), n)
    return {f"Psi_{k}": {"energy": q(e), **state_json(st)} for k, (e, st) in enumerate(pairs)}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="reqho", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct the system and write its summary")
    b.add_argument("file")
    b.add_argument("--out", help="report directory")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="identities, kernels, walks and numeric spectrum")
    v.add_argument("file")
    v.add_argument("--grid", help="L,N for the eigensolver")
    v.add_argument("--checks", nargs="+", metavar="CHECK", help=f"subset of {', '.join(ALL_CHECKS)}")
    v.add_argument("--out", help="report directory")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="plot data: potential CSV, spectrum, exact states")
    e.add_argument("file")
    e.add_argument("--what", choices=("potential", "spectrum", "states"), required=True)
    e.add_argument("--levels", type=int, default=8)
    e.add_argument("--grid", help="L,N for the potential samples")
    e.add_argument("--out", help="output directory")
    e.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UserError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except SchemeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
