"""Hecke simple-module counts and full-support counts."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .series import Factor, expand, prod
from .syd import SymmetricPair, partition_count, partition_tuples

HECKE_FAMILIES = ("B_1_neg1", "B_1_1", "B_neg1_neg1", "B_neg1_1", "D_neg1")

# table size for the memoized generating functions; grown on demand
_TABLE = 64


@lru_cache(maxsize=None)
def _d_table(n: int) -> tuple[int, ...]:
    s = expand(prod(Factor((2, 0)), Factor((1, 0))), n)
    return tuple(int(c) for c in s.coeffs)


@lru_cache(maxsize=None)
def _e_table(n: int) -> tuple[int, ...]:
    s = expand(prod(Factor((2, -1)), Factor((1, 0))), n)
    return tuple(int(c) for c in s.coeffs)


def _lookup(table, k: int) -> int:
    if k < 0:
        return 0
    n = _TABLE
    while k > n:
        n *= 2
    return table(n)[k]


def d(k: int) -> int:
    """Simple modules of the rank-k Hecke algebra with parameters (-1, -1)."""
    return _lookup(_d_table, k)


def e(k: int) -> int:
    """Simple modules of the rank-k Hecke algebra with parameters (-1, 1)."""
    return _lookup(_e_table, k)


def p(n: int) -> int:
    return partition_count(n) if n >= 0 else 0


def p_half(q: int) -> int:
    """p(q/2), zero for odd q."""
    return p(q // 2) if q % 2 == 0 else 0


@lru_cache(maxsize=None)
def bipartition_count(n: int) -> int:
    return sum(p(a) * p(n - a) for a in range(n + 1))


@lru_cache(maxsize=None)
def p_distinct_sizes(l: int, k: int) -> int:
    """Partitions of l with exactly k distinct part sizes."""
    if l < 0 or k < 0:
        return 0
    return sum(1 for t in partition_tuples(l) if len(set(t)) == k)


@dataclass(frozen=True)
class HeckeFamily:
    variant: str
    rank: int

    def __post_init__(self):
        if self.variant not in HECKE_FAMILIES:
            raise ValueError(f"unknown Hecke family {self.variant!r}")
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")


def hecke_count(family: HeckeFamily) -> Fraction:
    k = family.rank
    v = family.variant
    if v == "B_1_neg1":
        return Fraction(p(k))
    if v == "B_1_1":
        return Fraction(bipartition_count(k))
    if v == "B_neg1_neg1":
        return Fraction(d(k))
    if v == "B_neg1_1":
        return Fraction(e(k))
    # type D with parameter -1; the rank-0 group is trivial
    if k == 0:
        return Fraction(1)
    return Fraction(e(k), 2)


def full_support_count(pair: SymmetricPair, convention: str = "formula") -> Fraction:
    """|Theta| for the pair.

    With ``convention="formula"`` the split orthogonal pair of size 0 counts
    1/2, matching the bookkeeping of the closed formulas; with
    ``"enumeration"`` it counts 1.
    """
    kind = pair.kind
    if kind == "BDI":
        P, Q = max(pair.p, pair.q), min(pair.p, pair.q)
        if (P + Q) % 2:
            return Fraction(sum(d(k) * d(Q - k) for k in range(Q + 1)))
        if P == Q:
            if Q == 0 and convention != "formula":
                return Fraction(1)
            return Fraction(sum(e(k) * e(Q - k) for k in range(Q + 1)), 2)
        return Fraction(sum(e(k) * e(Q - k) for k in range(Q + 1)))
    if kind == "CI":
        n = pair.n
        return Fraction(sum(d(k) * e(n - k) for k in range(n + 1)))
    if kind == "DIII":
        return Fraction(p(pair.n // 2))
    r = min(pair.p, pair.q)
    if kind == "AIII_SL" and pair.p == pair.q:
        return Fraction(p(r) + bipartition_count(r))
    if kind == "AIII_PGL" and pair.p == pair.q:
        return Fraction(2 * p(r))
    return Fraction(p(r))


def f_odd(m: int) -> Fraction:
    """Full-support count of the split pair SO(2m+1)."""
    return full_support_count(SymmetricPair("BDI", m + 1, m))


def f_even(m: int, convention: str = "formula") -> Fraction:
    """Full-support count of the split pair SO(2m)."""
    return full_support_count(SymmetricPair("BDI", m, m), convention)
