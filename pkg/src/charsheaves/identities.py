"""Registry of q-series identities, each checked side against side.

Every entry builds two truncated series independently (one side from a
product or a finite q-hypergeometric sum, the other from a direct count
or a different product) and compares them coefficientwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from .counts import p, p_distinct_sizes, p_half
from .orbits import orbital_complex_count, r_bdi
from .series import (
    Factor,
    ProductSpec,
    TruncatedSeries1,
    TruncatedSeries2,
    expand,
    prod,
    qpoch,
)
from .syd import SymmetricPair, enumerate_syd, partition_tuples

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    order: int
    holds: bool
    first_mismatch: Optional[object] = None
    detail: str = ""

    def to_json(self) -> dict:
        fm = self.first_mismatch
        if isinstance(fm, tuple):
            fm = list(fm)
        return {"identity": self.identity, "order": self.order, "holds": self.holds, "firstMismatch": fm}


def _cmp1(lhs: TruncatedSeries1, rhs: TruncatedSeries1):
    return lhs.first_mismatch(rhs)


# ---------------------------------------------------------------------------
# the two-variable weight

def wt(p_: int, q_: int) -> int:
    """Weighted count of diagrams of the orthogonal pair (p, q), decorations merged."""
    total = 0
    for o in enumerate_syd(SymmetricPair("BDI", p_, q_)):
        if o.decoration == "II":
            continue
        total += 2 ** (r_bdi(o.diagram) + 1)
    return total - (p_half(q_) if p_ == q_ else 0)


def F_uv(orders: tuple[int, int]) -> TruncatedSeries2:
    spec = ProductSpec(
        (
            Factor((2, 0), (2, 0), sign=-1, power=-1),
            Factor((1, 1), (1, 0), sign=1, start=0),
            Factor((1, 0), (1, 1), sign=1, start=0),
            Factor((1, 1), (1, 0), sign=-1, power=-1, start=0),
            Factor((1, 0), (1, 1), sign=-1, power=-1, start=0),
        ),
        variables=2,
    )
    return expand(spec, orders)


def check_C2_wt_product(order: int):
    rhs = F_uv((order, order))
    for total in range(order + 1):
        for a in range(total + 1):
            b = total - a
            if wt(a, b) != rhs.coefficient(a, b):
                return (a, b)
    return None


def diagonal_closed_form(k: int, order: int) -> TruncatedSeries1:
    base = expand(prod(Factor((1, 0)), Factor((1, 0), sign=-1, power=-3)), order)
    if k == 0:
        return base
    denom = TruncatedSeries1.one(order) + TruncatedSeries1.monomial(k, order)
    return base * 2 / denom


def check_C3_diagonal(order: int):
    table = F_uv((order + 4, order))
    for k in range(5):
        lhs = table.diagonal(k).truncate(order)
        bad = _cmp1(lhs, diagonal_closed_form(k, order))
        if bad is not None:
            return (k, bad)
    return None


# ---------------------------------------------------------------------------
# odd-part weights

def odd_partitions(N: int) -> list[tuple[int, ...]]:
    return [t for t in partition_tuples(N) if all(x % 2 for x in t)]


def wt_lambda(lam: tuple[int, ...]) -> int:
    mus = [(x - 1) // 2 for x in lam]
    s = len(mus)
    N = sum(lam)
    if N % 2:
        pairs = [(mus[2 * j - 2], mus[2 * j - 1]) for j in range(1, (s - 1) // 2 + 1)]
    else:
        pairs = [(mus[2 * j - 1], mus[2 * j]) for j in range(1, s // 2)]
    w = 1
    for a, b in pairs:
        if a == b + 1:
            w *= 3
        elif a >= b + 2:
            w *= 4
    return w


def b_weight(n: int) -> int:
    return sum(wt_lambda(t) for t in odd_partitions(2 * n + 1))


def c_weight(n: int) -> Fraction:
    if n == 0:
        return Fraction(1, 4)   # matches the constant term of the product
    return Fraction(sum(wt_lambda(t) for t in odd_partitions(2 * n)))


def bn_product(order: int) -> TruncatedSeries1:
    return expand(prod(Factor((4, 0), power=2), Factor((2, 0), power=2), prefactor=1), order)


def cn_product(order: int) -> TruncatedSeries1:
    return expand(prod(Factor((4, -2), power=2), Factor((2, 0), power=2), scalar=Fraction(1, 4)), order)


def check_C2b_bn(order: int):
    lhs = TruncatedSeries1.zero(order)
    for n in range((order - 1) // 2 + 1):
        lhs.coeffs[2 * n + 1] = Fraction(b_weight(n))
    return _cmp1(lhs, bn_product(order))


def check_C2b_cn(order: int):
    lhs = TruncatedSeries1.zero(order)
    for n in range(order // 2 + 1):
        lhs.coeffs[2 * n] = c_weight(n)
    return _cmp1(lhs, cn_product(order))


# ---------------------------------------------------------------------------
# F(q) +- F(-q)

def F_one(order: int) -> TruncatedSeries1:
    return expand(prod(Factor((2, -1), power=2), Factor((2, -1), sign=-1, power=-2)), order)


def check_Fodd(order: int):
    F = F_one(order)
    lhs = F - F.negate_variable()
    rhs = expand(prod(Factor((4, 0), power=4), Factor((2, 0), power=4), scalar=8, prefactor=1), order)
    return _cmp1(lhs, rhs)


def check_Feven(order: int):
    F = F_one(order)
    lhs = F + F.negate_variable()
    rhs = expand(prod(Factor((4, -2), power=4), Factor((2, 0), power=4), scalar=2), order)
    return _cmp1(lhs, rhs)


# ---------------------------------------------------------------------------
# q-Gauss at the specializations used for b_n and c_n

def _finite(factors, order, scalar=1, prefactor=0) -> TruncatedSeries1:
    return expand(prod(*factors, scalar=scalar, prefactor=prefactor), order)


def qgauss_bn_sum(order: int) -> TruncatedSeries1:
    """q/(1-q^2) sum_k (-q^2;q^4)_k^2 / ((q^6;q^4)_k (q^4;q^4)_k) q^(2k)."""
    total = TruncatedSeries1.zero(order)
    for k in range(order // 2 + 1):
        term = _finite(
            [
                qpoch(2, 4, 1, 2, k),
                qpoch(6, 4, -1, -1, k),
                qpoch(4, 4, -1, -1, k),
            ],
            order,
            prefactor=2 * k,
        )
        total = total + term
    pre = _finite([Factor((0, 2), sign=-1, power=-1, start=0, stop=0)], order, prefactor=1)
    return pre * total


def qgauss_bn_product(order: int) -> TruncatedSeries1:
    """q/(1-q^2) (-q^4;q^4)^2 / ((q^6;q^4)(q^2;q^4))."""
    return _finite(
        [
            Factor((0, 2), sign=-1, power=-1, start=0, stop=0),
            qpoch(4, 4, 1, 2),
            qpoch(6, 4, -1, -1),
            qpoch(2, 4, -1, -1),
        ],
        order,
        prefactor=1,
    )


def qgauss_cn_sum(order: int) -> TruncatedSeries1:
    """1/4 sum_k (-1;q^4)_k^2 / ((q^2;q^4)_k (q^4;q^4)_k) q^(2k)."""
    total = TruncatedSeries1.zero(order)
    for k in range(order // 2 + 1):
        term = _finite(
            [qpoch(0, 4, 1, 2, k), qpoch(2, 4, -1, -1, k), qpoch(4, 4, -1, -1, k)],
            order,
            prefactor=2 * k,
        )
        total = total + term
    return total * Fraction(1, 4)


def qgauss_cn_product(order: int) -> TruncatedSeries1:
    return _finite([qpoch(2, 4, 1, 2), qpoch(2, 4, -1, -2)], order, scalar=Fraction(1, 4))


def check_qGauss(order: int):
    bad = _cmp1(qgauss_bn_sum(order), qgauss_bn_product(order))
    if bad is not None:
        return ("bn", bad)
    if _cmp1(qgauss_bn_product(order), bn_product(order)) is not None:
        return ("bn-simplified", _cmp1(qgauss_bn_product(order), bn_product(order)))
    bad = _cmp1(qgauss_cn_sum(order), qgauss_cn_product(order))
    if bad is not None:
        return ("cn", bad)
    bad = _cmp1(qgauss_cn_product(order), cn_product(order))
    if bad is not None:
        return ("cn-simplified", bad)
    return None


# ---------------------------------------------------------------------------
# bilateral sums at the 1psi1 specializations

def lambert_term(k: int, order: int) -> TruncatedSeries1:
    """q^k / (1 + q^(2k)) for k >= 1."""
    s = TruncatedSeries1.zero(order)
    j = 0
    while k * (2 * j + 1) <= order:
        s.coeffs[k * (2 * j + 1)] += (-1) ** j
        j += 1
    return s


def bilateral(order: int, parity: Optional[int]) -> TruncatedSeries1:
    """sum over integers k (restricted to a parity) of q^k/(1+q^2k); terms k and -k agree."""
    s = TruncatedSeries1.zero(order)
    if parity in (None, 0):
        s.coeffs[0] += HALF
    for k in range(1, order + 1):
        if parity is None or k % 2 == parity:
            s = s + lambert_term(k, order) * 2
    return s


def check_psi1(order: int):
    odd_rhs = _finite(
        [qpoch(4, 4, 1, 2), qpoch(4, 4, -1, 2), qpoch(2, 4, -1, -2), qpoch(2, 4, 1, -2)],
        order, scalar=2, prefactor=1,
    )
    bad = _cmp1(bilateral(order, 1), odd_rhs)
    if bad is not None:
        return ("odd", bad)
    even_rhs = _finite(
        [qpoch(2, 4, 1, 2), qpoch(4, 4, -1, 2), qpoch(2, 4, -1, -2), qpoch(4, 4, 1, -2)],
        order, scalar=HALF,
    )
    bad = _cmp1(bilateral(order, 0), even_rhs)
    if bad is not None:
        return ("even", bad)
    full_rhs = F_one(order) * _finite([qpoch(2, 2, -1, 2), qpoch(2, 2, 1, -2)], order, scalar=HALF)
    bad = _cmp1(bilateral(order, None), full_rhs)
    if bad is not None:
        return ("full", bad)
    return None


# ---------------------------------------------------------------------------
# counting identities with a direct side

def ci_product(order: int) -> TruncatedSeries1:
    return expand(prod(Factor((1, 0), power=3), Factor((1, 0), sign=-1, power=-2)), order)


def check_hecke_CI(order: int):
    rhs = ci_product(order)
    for n in range(order + 1):
        if orbital_complex_count(SymmetricPair("CI", n, n)) != rhs.coefficient(n):
            return n
    return None


def check_partition_identity_1(order: int):
    rhs = expand(prod(Factor((1, 0)), Factor((1, 0), sign=-1, power=-1)), order)
    for n in range(order + 1):
        lhs = sum(p_distinct_sizes(n, k) * 2 ** k for k in range(n + 1))
        if lhs != rhs.coefficient(n):
            return n
    return None


@dataclass(frozen=True)
class IdentityEntry:
    name: str
    check: Callable[[int], object]
    default_order: int
    max_order: int
    description: str


REGISTRY: dict[str, IdentityEntry] = {
    e.name: e
    for e in [
        IdentityEntry("C2_wt_product", check_C2_wt_product, 14, 16,
                      "weighted diagram count wt(p,q) vs the two-variable product, p+q <= order"),
        IdentityEntry("C3_diagonal", check_C3_diagonal, 24, 60,
                      "diagonals k=0..4 of the two-variable product vs the closed form"),
        IdentityEntry("C2b_bn", check_C2b_bn, 25, 61, "odd-part weights b_n vs product"),
        IdentityEntry("C2b_cn", check_C2b_cn, 24, 60, "odd-part weights c_n vs product"),
        IdentityEntry("Fodd", check_Fodd, 60, 200, "F(q) - F(-q)"),
        IdentityEntry("Feven", check_Feven, 60, 200, "F(q) + F(-q)"),
        IdentityEntry("qGauss_at_CI_specialization", check_qGauss, 60, 120,
                      "q-Gauss with q->q^4, a=b=-q^2, c=q^6 (and the c_n instance)"),
        IdentityEntry("psi1_specializations", check_psi1, 60, 120,
                      "bilateral Lambert sums at the two 1psi1 specializations"),
        IdentityEntry("hecke_CI_count", check_hecke_CI, 12, 14,
                      "orbital complexes of (sp(2n), GL(n)) vs product"),
        IdentityEntry("partition_identity_1", check_partition_identity_1, 30, 40,
                      "sum_k p(n,k) 2^k vs prod (1+x^s)/(1-x^s)"),
    ]
}


def verify_identity(name: str, order: Optional[int] = None) -> IdentityReport:
    if name not in REGISTRY:
        raise KeyError(f"unknown identity {name!r}")
    entry = REGISTRY[name]
    n = entry.default_order if order is None else min(int(order), entry.max_order)
    bad = entry.check(n)
    return IdentityReport(name, n, bad is None, bad)
