"""Seed schemes and their Maya-diagram bookkeeping."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .oscillator import NONPHYS, PHYS, SeedState, seed

_TOKEN = re.compile(r"^\s*psi(-?)_?(\d+)\s*$")


class SchemeError(ValueError):
    """Malformed or inadmissible scheme."""


@dataclass(frozen=True)
class Scheme:
    """Ordered tuple of seeds ``(kind, index)``."""

    seeds: tuple

    def __post_init__(self):
        seeds = tuple((str(k), int(n)) for k, n in self.seeds)
        for k, n in seeds:
            if k not in (PHYS, NONPHYS):
                raise SchemeError(f"unknown seed kind {k!r}")
            if n < 0:
                raise SchemeError("seed indices must be non-negative")
        if len(set(seeds)) != len(seeds):
            raise SchemeError("repeated seed in scheme")
        object.__setattr__(self, "seeds", seeds)

    @classmethod
    def alpha(cls, indices: Iterable[int]) -> "Scheme":
        """Scheme of non-physical seeds psi^-_j."""
        return cls(tuple((NONPHYS, j) for j in indices))

    @classmethod
    def beta(cls, indices: Iterable[int]) -> "Scheme":
        """Scheme of physical seeds psi_i."""
        return cls(tuple((PHYS, i) for i in indices))

    @classmethod
    def parse(cls, text: str) -> "Scheme":
        """Parse ``{psi-_2, psi-_3}`` / ``psi_1,psi_2`` style labels."""
        body = text.strip().strip("{}")
        if not body.strip():
            return cls(())
        out = []
        for tok in body.split(","):
            m = _TOKEN.match(tok)
            if not m:
                raise SchemeError(f"cannot parse seed {tok.strip()!r}")
            out.append((NONPHYS if m.group(1) else PHYS, int(m.group(2))))
        return cls(tuple(out))

    @property
    def states(self) -> list[SeedState]:
        return [seed(k, n) for k, n in self.seeds]

    @property
    def size(self) -> int:
        return len(self.seeds)

    @property
    def phys_indices(self) -> tuple:
        return tuple(sorted(n for k, n in self.seeds if k == PHYS))

    @property
    def nonphys_indices(self) -> tuple:
        return tuple(sorted(n for k, n in self.seeds if k == NONPHYS))

    @property
    def is_alpha(self) -> bool:
        return all(k == NONPHYS for k, _ in self.seeds)

    @property
    def is_beta(self) -> bool:
        return all(k == PHYS for k, _ in self.seeds)

    @property
    def family(self) -> str:
        """'alpha' (all non-physical), 'beta' (all physical) or 'gamma' (mixed)."""
        if self.is_alpha:
            return "alpha"
        return "beta" if self.is_beta else "gamma"

    @property
    def label(self) -> str:
        return "{" + ",".join(seed(k, n).name for k, n in self.seeds) + "}"

    def canonical(self) -> "Scheme":
        """Same seeds in a fixed order (non-physical first, ascending index)."""
        return Scheme(tuple(sorted(self.seeds, key=lambda s: (s[0] != NONPHYS, s[1]))))

    def __str__(self) -> str:
        return self.label


def present_levels(scheme: Scheme, upto: int) -> list[int]:
    """Occupied oscillator levels m (energy 2m+1 before the gauge shift) below ``upto``.

    Physical seeds psi_i remove level i; non-physical seeds psi^-_j add level -j-1.
    """
    removed = set(scheme.phys_indices)
    out = sorted(-j - 1 for j in scheme.nonphys_indices)
    out += [m for m in range(0, upto) if m not in removed]
    return out


def lowest_level(scheme: Scheme) -> int:
    neg = scheme.nonphys_indices
    if neg:
        return -max(neg) - 1
    removed = set(scheme.phys_indices)
    m = 0
    while m in removed:
        m += 1
    return m


def maya_nodeless(scheme: Scheme) -> bool:
    """Combinatorial screen: every finite gap above the lowest level has even length."""
    top = max([n for _, n in scheme.seeds], default=0) + 2
    lv = present_levels(scheme, top + 1)
    for a, b in zip(lv, lv[1:]):
        if (b - a - 1) % 2:
            return False
    return True
