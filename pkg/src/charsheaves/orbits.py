"""Component groups, supports of character sheaves and pi_1 descriptors."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional

from .counts import p_half
from .richardson import diagram_gcd, is_richardson, richardson_orbits
from .syd import (
    OrbitLabel,
    SignedYoungDiagram,
    SymmetricPair,
    canonical_orbit,
    enumerate_syd,
    is_valid_orbit,
    join_diagrams,
)


@dataclass(frozen=True)
class ComponentGroup:
    kind: str          # "Cyclic", "Elementary2", "Trivial"
    value: int = 0     # order for Cyclic, rank for Elementary2

    def __post_init__(self):
        if self.kind == "Cyclic" and self.value < 1:
            raise ValueError("cyclic order must be >= 1")
        if self.kind == "Elementary2" and self.value < 0:
            raise ValueError("rank must be >= 0")
        if (self.kind == "Cyclic" and self.value == 1) or (self.kind == "Elementary2" and self.value == 0):
            object.__setattr__(self, "kind", "Trivial")
            object.__setattr__(self, "value", 0)

    @property
    def order(self) -> int:
        if self.kind == "Cyclic":
            return self.value
        if self.kind == "Elementary2":
            return 2 ** self.value
        return 1

    def __str__(self):
        if self.kind == "Trivial":
            return "1"
        if self.kind == "Cyclic":
            return f"Z/{self.value}"
        return "Z/2" if self.value == 1 else f"(Z/2)^{self.value}"


TRIVIAL = ComponentGroup("Trivial")


def r_bdi(d: SignedYoungDiagram) -> int:
    odd = [(a, b) for L, a, b in d.rows if L % 2]
    if not odd:
        return 0
    return sum(1 for a, _ in odd if a) + sum(1 for _, b in odd if b) - 1


def r_ci(d: SignedYoungDiagram) -> int:
    return sum((a > 0) + (b > 0) for L, a, b in d.rows if L % 2 == 0)


def _group(kind: str, d: SignedYoungDiagram) -> ComponentGroup:
    if kind == "AIII_SL":
        return ComponentGroup("Cyclic", diagram_gcd(d) or 1)
    if kind == "AIII_PGL":
        if d.rows and all(a == b for _, a, b in d.rows):
            return ComponentGroup("Elementary2", 1)
        return TRIVIAL
    if kind == "BDI":
        return ComponentGroup("Elementary2", r_bdi(d))
    if kind == "CI":
        return ComponentGroup("Elementary2", r_ci(d))
    return TRIVIAL


def component_group(pair: SymmetricPair, orbit: OrbitLabel) -> ComponentGroup:
    if not is_valid_orbit(pair, orbit):
        raise ValueError(f"{orbit.text()} is not an orbit of {pair}")
    return _group(pair.kind, orbit.diagram)


@lru_cache(maxsize=None)
def orbital_complex_count(pair: SymmetricPair) -> int:
    """Number of pairs (orbit, irreducible equivariant local system)."""
    return sum(_group(pair.kind, o.diagram).order for o in enumerate_syd(pair))


# ---------------------------------------------------------------------------
# supports

@dataclass(frozen=True)
class SupportLabel:
    """A stratum carrying character sheaves.

    shape "MK": (m, k, mu) for BDI and CI; "K": (k, mu) for AIII_PGL, CII,
    DIII; "ML": (m, l, mu) for AIII_SL.  For "K" the field m is 0.
    """

    pair: SymmetricPair
    shape: str
    m: int
    k: int
    mu: OrbitLabel
    decoration: Optional[str] = None

    @property
    def reduced_pair(self) -> SymmetricPair:
        return reduced_pair(self.pair, self.m, self.k)

    def orbit(self) -> OrbitLabel:
        """The orbit obtained by joining the small blocks with mu."""
        pr = self.pair
        m, k = self.m, self.k
        if pr.kind == "BDI":
            blocks = ((1, m, m), (2, k, k))
        elif pr.kind == "CI":
            blocks = ((1, m, m), (2, k, k))
        elif pr.kind == "AIII_PGL":
            blocks = ((1, k, k),)
        elif pr.kind == "CII":
            blocks = ((1, 2 * k, 2 * k),)
        elif pr.kind == "DIII":
            blocks = ((1, 2 * k, 2 * k),)
        else:  # AIII_SL: m^l_+ m^l_-
            blocks = ((m, k, k),) if k else ()
        small = SignedYoungDiagram(tuple(b for b in blocks if b[1] + b[2]))
        d = join_diagrams(small, self.mu.diagram)
        dec = self.decoration if self.decoration else self.mu.decoration
        return canonical_orbit(pr, d, dec)

    def to_json(self) -> dict:
        key = "l" if self.shape == "ML" else "k"
        out = {"pair": self.pair.text(), key: self.k, "mu": self.mu.to_json(), "decoration": self.decoration}
        if self.shape != "K":
            out["m"] = self.m
        return out

    def text(self) -> str:
        dec = f"^{self.decoration}" if self.decoration else ""
        if self.shape == "K":
            return f"(k={self.k}, mu={self.mu.text()}){dec}"
        key = "l" if self.shape == "ML" else "k"
        return f"(m={self.m}, {key}={self.k}, mu={self.mu.text()}){dec}"

    def __str__(self):
        return self.text()


def reduced_pair(pair: SymmetricPair, m: int, k: int) -> SymmetricPair:
    kind = pair.kind
    if kind == "BDI":
        return SymmetricPair("BDI", pair.p - m - 2 * k, pair.q - m - 2 * k)
    if kind == "CI":
        n = pair.n - m - 2 * k
        return SymmetricPair("CI", n, n)
    if kind in ("AIII_PGL", "CII"):
        return pair.with_params(pair.p - k, pair.q - k)
    if kind == "DIII":
        n = pair.n - 2 * k
        return SymmetricPair("DIII", n, n)
    if kind == "AIII_SL":
        return SymmetricPair("AIII_SL", pair.p - m * k, pair.q - m * k)
    raise ValueError(kind)


def _empty() -> OrbitLabel:
    return OrbitLabel(SignedYoungDiagram())


@lru_cache(maxsize=None)
def _support_set(pair: SymmetricPair) -> tuple[SupportLabel, ...]:
    kind = pair.kind
    out: list[SupportLabel] = []
    if kind == "BDI":
        p, q = pair.p, pair.q
        r = min(p, q)
        N = p + q
        for m in range(r + 1):
            if N % 2 == 0 and (m - q) % 2:
                continue
            for k in range((r - m) // 2 + 1):
                red = reduced_pair(pair, m, k)
                mus = richardson_orbits(red)
                if not mus and red.p == red.q == 0:
                    mus = (_empty(),)
                for mu in mus:
                    if mu.diagram.is_empty and m == 0 and 2 * k == p == q and k > 0:
                        # the very even tail: two decorated strata
                        out.append(SupportLabel(pair, "MK", 0, k, mu, "I"))
                        out.append(SupportLabel(pair, "MK", 0, k, mu, "II"))
                    else:
                        out.append(SupportLabel(pair, "MK", m, k, mu))
    elif kind == "CI":
        n = pair.n
        for m in range(n + 1):
            for k in range((n - m) // 2 + 1):
                for mu in richardson_orbits(reduced_pair(pair, m, k)):
                    out.append(SupportLabel(pair, "MK", m, k, mu))
    elif kind in ("AIII_PGL", "CII"):
        for k in range(min(pair.p, pair.q) + 1):
            red = reduced_pair(pair, 0, k)
            if kind == "AIII_PGL" and k:
                # the swap identification only applies to the whole diagram
                red = SymmetricPair("AIII_SL", red.p, red.q)
            for mu in richardson_orbits(red):
                out.append(SupportLabel(pair, "K", 0, k, mu))
    elif kind == "DIII":
        for k in range(pair.n // 2 + 1):
            for mu in richardson_orbits(reduced_pair(pair, 0, k)):
                out.append(SupportLabel(pair, "K", 0, k, mu))
    elif kind == "AIII_SL":
        p, q = pair.p, pair.q
        n = p + q
        seen = set()
        for m in range(1, max(n, 1) + 1, 2):
            for l in range(min(p, q) // m + 1):
                if l == 0 and m != 1:
                    continue
                for mu in richardson_orbits(reduced_pair(pair, m, l)):
                    if l > 0 and not mu.diagram.is_empty and diagram_gcd(mu.diagram) % m:
                        continue
                    key = (m if l else 0, l, mu)
                    if key in seen:
                        continue
                    seen.add(key)
                    out.append(SupportLabel(pair, "ML", m if l else 0, l, mu))
        if p == q and p > 0:
            for m in range(1, n + 1):
                if n % (2 * m):
                    continue
                l = n // (2 * m)
                key = (m, l, _empty())
                if key not in seen:
                    seen.add(key)
                    out.append(SupportLabel(pair, "ML", m, l, _empty()))
    else:
        raise ValueError(f"no support table for {kind}")
    return tuple(out)


def support_set(pair: SymmetricPair) -> list[SupportLabel]:
    return list(_support_set(pair))


# ---------------------------------------------------------------------------
# fundamental groups

@dataclass(frozen=True)
class FundGroupDescriptor:
    braid: tuple[tuple[str, int], ...] = ()
    abelian: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "braid", tuple((f, r) for f, r in self.braid if r > 0))
        object.__setattr__(self, "abelian", tuple(sorted(o for o in self.abelian if o > 1)))

    def to_json(self) -> dict:
        return {"braid": [{"family": f, "rank": r} for f, r in self.braid], "abelian": list(self.abelian)}

    def text(self) -> str:
        parts = [f"{f}({r})" for f, r in self.braid] + [f"Z/{o}" for o in self.abelian]
        return " x ".join(parts) if parts else "1"


def fundamental_group_descriptor(support: SupportLabel) -> FundGroupDescriptor:
    pair = support.pair
    if support not in _support_set(pair):
        raise ValueError(f"{support.text()} is not a support of {pair}")
    mu = support.mu.diagram
    kind = pair.kind
    if kind == "AIII_PGL":
        dmu = diagram_gcd(mu)
        return FundGroupDescriptor((("B", support.k),), (2,) if dmu and dmu % 2 == 0 else ())
    if kind == "AIII_SL":
        m, l = support.m, support.k
        dmu = diagram_gcd(mu)
        if l == 0:
            order = dmu
        elif mu.is_empty:
            order = 2 * m
        else:
            order = gcd(2 * m, dmu)
        return FundGroupDescriptor((("B", l),), (order,))
    if kind == "BDI":
        if mu.is_empty:
            return FundGroupDescriptor((("ExtD", support.m), ("ExtB", support.k)))
        return FundGroupDescriptor((("ExtB", support.m), ("ExtB", support.k)), (2,) * r_bdi(mu))
    if kind == "CI":
        return FundGroupDescriptor((("ExtB", support.m), ("ExtB", support.k)), (2,) * r_ci(mu))
    return FundGroupDescriptor((("B", support.k),))


def supports_to_json(labels) -> str:
    return json.dumps([s.to_json() for s in labels], sort_keys=True)
