"""Character-sheaf label sets, the explicit orbit-to-label bijections, and
the two-way count checks.

Full-support sets are tracked only by size, so their members appear as
opaque indices 1..|Theta|.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional

from .counts import bipartition_count, f_even, f_odd, full_support_count, p, p_half
from .orbits import (
    SupportLabel,
    _support_set,
    component_group,
    orbital_complex_count,
    support_set,
)
from .richardson import (
    diagram_gcd,
    is_richardson,
    nilpotent_support_count,
    odd_order_characters,
    pi_characters,
    richardson_orbits,
)
from .series import Factor, expand, prod
from .syd import (
    OrbitLabel,
    Partition,
    SignedYoungDiagram,
    SymmetricPair,
    bipartitions,
    canonical_orbit,
    enumerate_partitions,
    enumerate_syd,
    is_valid_orbit,
)

ATLAS_KINDS = ("AIII_SL", "AIII_PGL", "BDI", "CI", "CII", "DIII")


def phi(n: int) -> int:
    """Euler's totient."""
    out, m, f = n, n, 2
    while f * f <= m:
        if m % f == 0:
            while m % f == 0:
                m //= f
            out -= out // f
        f += 1
    if m > 1:
        out -= out // m
    return out


def primitive_characters(n: int) -> list[Fraction]:
    """Characters of Z/n of exact order n, encoded a/n."""
    if n == 1:
        return [Fraction(0)]
    return [Fraction(a, n) for a in range(1, n) if gcd(a, n) == 1]


@dataclass(frozen=True)
class LocalSystem:
    kind: str
    tau: Optional[Partition] = None
    rho: Optional[tuple[Partition, Partition]] = None
    theta: Optional[int] = None
    omega: Optional[str] = None
    phi: Optional[tuple[int, ...]] = None
    order: Optional[int] = None
    char: Optional[Fraction] = None

    def text(self) -> str:
        bits = []
        if self.theta is not None:
            bits.append(f"theta={self.theta}")
        if self.omega is not None:
            bits.append(f"omega={self.omega}")
        if self.tau is not None:
            bits.append(f"tau={self.tau}")
        if self.rho is not None:
            bits.append(f"rho={self.rho[0]};{self.rho[1]}")
        if self.phi is not None:
            bits.append("phi=" + "".join(map(str, self.phi)))
        if self.order is not None:
            bits.append(f"m={self.order}")
        if self.char is not None:
            bits.append(f"psi={self.char.numerator}/{self.char.denominator}")
        return f"{self.kind}[{', '.join(bits)}]"

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.tau is not None:
            out["tau"] = list(self.tau.parts)
        if self.rho is not None:
            out["rho"] = [list(self.rho[0].parts), list(self.rho[1].parts)]
        if self.theta is not None:
            out["theta"] = self.theta
        if self.omega is not None:
            out["omega"] = self.omega
        if self.phi is not None:
            out["phi"] = list(self.phi)
        if self.order is not None:
            out["m"] = self.order
        if self.char is not None:
            out["character"] = f"{self.char.numerator}/{self.char.denominator}"
        return out


@dataclass(frozen=True)
class CharSheafLabel:
    support: SupportLabel
    local: LocalSystem

    def text(self) -> str:
        return f"{self.support.text()} {self.local.text()}"

    def to_json(self) -> dict:
        return {"support": self.support.to_json(), "localSystem": self.local.to_json()}


def _taus(k: int) -> list[Partition]:
    return enumerate_partitions(k)


# ---------------------------------------------------------------------------
# label enumeration

def _labels_sl(pair: SymmetricPair) -> list[CharSheafLabel]:
    out = []
    n = pair.p + pair.q
    for s in _support_set(pair):
        m, l, mu = s.m, s.k, s.mu
        if l == 0:
            d = diagram_gcd(mu.diagram)
            for psi in odd_order_characters(d):
                out.append(CharSheafLabel(s, LocalSystem("NilpotentE", char=psi)))
            continue
        if m % 2 == 1:
            for tau in _taus(l):
                for a in primitive_characters(m):
                    out.append(CharSheafLabel(s, LocalSystem("TauPsiM", tau=tau, order=m, char=a)))
        if pair.p == pair.q and mu.diagram.is_empty and 2 * m * l == n:
            for rho in bipartitions(l):
                for a in primitive_characters(2 * m):
                    out.append(CharSheafLabel(s, LocalSystem("RhoPsi2m", rho=rho, order=2 * m, char=a)))
    return out


def _pgl_swapped_duplicate(s, tau: Partition) -> bool:
    # PGL, p=q: when both tau^t and mu have only even parts the whole orbit
    # is all-even and equal to its sign swap, so (k, mu) and (k, swap mu)
    # carry a single label; keep it on the canonical mu.
    pair = s.pair
    if pair.kind != "AIII_PGL" or pair.p != pair.q or s.k == 0:
        return False
    mu = s.mu.diagram
    if not mu.all_even() or any(x % 2 for x in tau.transpose().parts):
        return False
    return canonical_orbit(s.reduced_pair, mu) != s.mu


def _labels_k(pair: SymmetricPair) -> list[CharSheafLabel]:
    out = []
    for s in _support_set(pair):
        for tau in _taus(s.k):
            if _pgl_swapped_duplicate(s, tau):
                continue
            out.append(CharSheafLabel(s, LocalSystem("Tau", tau=tau)))
        if pair.kind == "AIII_PGL" and pair.p == pair.q > 0 and s.k == pair.q and s.mu.diagram.is_empty:
            for tau in _taus(s.k):
                out.append(CharSheafLabel(s, LocalSystem("TauPsi2", tau=tau)))
    return out


def _labels_ci(pair: SymmetricPair) -> list[CharSheafLabel]:
    out = []
    for s in _support_set(pair):
        size = int(full_support_count(SymmetricPair("CI", s.m, s.m)))
        for th in range(1, size + 1):
            for tau in _taus(s.k):
                out.append(CharSheafLabel(s, LocalSystem("RhoTau", tau=tau, theta=th)))
    return out


def _labels_bd(pair: SymmetricPair) -> list[CharSheafLabel]:
    out = []
    odd = (pair.p + pair.q) % 2 == 1
    for s in _support_set(pair):
        m, k, mu = s.m, s.k, s.mu
        if odd:
            size = int(f_odd(m))
            for th in range(1, size + 1):
                for tau in _taus(k):
                    for ph in pi_characters(mu):
                        out.append(CharSheafLabel(s, LocalSystem("RhoTauPhi", tau=tau, theta=th, phi=ph)))
            continue
        size = int(f_even(m, "enumeration"))
        if s.decoration is not None:
            for tau in _taus(k):
                out.append(CharSheafLabel(s, LocalSystem("Tau", tau=tau)))
        elif mu.diagram.is_empty:
            for th in range(1, size + 1):
                for tau in _taus(k):
                    out.append(CharSheafLabel(s, LocalSystem("RhoTau", tau=tau, theta=th)))
        elif m == 0:
            for tau in _taus(k):
                for ph in pi_characters(mu):
                    out.append(CharSheafLabel(s, LocalSystem("RhoTauPhi", tau=tau, theta=1, phi=ph)))
        else:
            for th in range(1, size + 1):
                for om in ("I", "II"):
                    for tau in _taus(k):
                        for ph in pi_characters(mu):
                            out.append(CharSheafLabel(
                                s, LocalSystem("RhoOmegaTauPhi", tau=tau, theta=th, omega=om, phi=ph)))
    return out


@lru_cache(maxsize=None)
def _char_labels(pair: SymmetricPair) -> tuple[CharSheafLabel, ...]:
    kind = pair.kind
    if kind == "AIII_SL":
        return tuple(_labels_sl(pair))
    if kind in ("AIII_PGL", "CII", "DIII"):
        return tuple(_labels_k(pair))
    if kind == "CI":
        return tuple(_labels_ci(pair))
    if kind == "BDI":
        return tuple(_labels_bd(pair))
    raise ValueError(f"no label table for {kind}")


def enumerate_char_labels(pair: SymmetricPair) -> list[CharSheafLabel]:
    return list(_char_labels(pair))


def char_count(pair: SymmetricPair) -> int:
    return len(_char_labels(pair))


def labels_to_json(labels) -> str:
    return json.dumps([lab.to_json() for lab in labels], sort_keys=True)


# ---------------------------------------------------------------------------
# formula side

def A_prime(p_: int, q_: int) -> Fraction:
    """Formula-side count for the orthogonal pair, with the 1/2 conventions at size 0."""
    def b(x, y):
        return nilpotent_support_count(SymmetricPair("BDI", x, y), "formula")

    r = min(p_, q_)
    if (p_ + q_) % 2:
        return sum(
            (f_odd(m) * sum((p(k) * b(p_ - m - 2 * k, q_ - m - 2 * k) for k in range((r - m) // 2 + 1)), Fraction(0))
             for m in range(r + 1)),
            Fraction(0),
        )
    if p_ % 2:
        total = Fraction(0)
        for m in range((r - 1) // 2 + 1):
            inner = sum(p(k) * b(p_ - 2 * m - 2 * k - 1, q_ - 2 * m - 2 * k - 1) for k in range((r - 2 * m - 1) // 2 + 1))
            total += f_even(2 * m + 1) * inner
        return 2 * total
    P, Q = max(p_, q_), min(p_, q_)
    total = Fraction(0)
    for m in range(Q // 2 + 1):
        inner = sum(p(k) * b(P - 2 * m - 2 * k, Q - 2 * m - 2 * k) for k in range((Q - 2 * m) // 2 + 1))
        total += f_even(2 * m) * inner
    return 2 * total + Fraction(3, 2) * (p_half(Q) if P == Q else 0)


def offset_total_series(offset: int, order: int):
    """Closed form for sum_q |Char(SO(q+offset+q))| x^q."""
    base = expand(prod(Factor((1, 0)), Factor((1, 0), sign=-1, power=-3)), order)
    from .series import TruncatedSeries1
    denom = TruncatedSeries1.one(order) + TruncatedSeries1.monomial(offset, order)
    out = base / denom
    if offset == 0:
        out = out + expand(prod(Factor((2, 0), sign=-1, power=-1)), order) * Fraction(3, 2)
    return out


def offset_nilpotent_series(offset: int, order: int):
    """Closed form for sum_q b_{q+offset, q} x^q (offset odd, or q and offset both even)."""
    from .series import TruncatedSeries1
    denom = TruncatedSeries1.one(order) + TruncatedSeries1.monomial(offset, order)
    if offset % 2:
        num = expand(prod(Factor((2, -1), power=2), Factor((2, 0), sign=-1, power=-2)), order)
    else:
        num = expand(prod(Factor((2, 0), power=2), Factor((2, 0), sign=-1, power=-2)), order)
    return num / denom


def ci_formula(n: int) -> int:
    total = 0
    for m in range(n + 1):
        th = int(full_support_count(SymmetricPair("CI", m, m)))
        for k in range((n - m) // 2 + 1):
            rest = n - m - 2 * k
            total += th * p(k) * int(nilpotent_support_count(SymmetricPair("CI", rest, rest)))
    return total


def ci_product_coefficient(n: int) -> int:
    s = expand(prod(Factor((1, 0), power=3), Factor((1, 0), sign=-1, power=-2)), n)
    return int(s.coefficient(n))


@dataclass(frozen=True)
class CountReport:
    pair: SymmetricPair
    orbital: int
    labels: int
    formula: Optional[Fraction]
    ok: bool
    notes: tuple[str, ...] = ()

    def row(self) -> list[str]:
        f = "" if self.formula is None else fraction_text(self.formula)
        return [self.pair.text(), str(self.orbital), str(self.labels), f, "ok" if self.ok else "FAIL"]


def fraction_text(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def verify_counts(pair: SymmetricPair) -> CountReport:
    A = orbital_complex_count(pair)
    n_labels = char_count(pair)
    notes = []
    formula: Optional[Fraction] = None
    ok = A == n_labels
    if not ok:
        notes.append(f"|A|={A} but {n_labels} labels")
    if pair.kind == "CI":
        formula = Fraction(ci_formula(pair.n))
        prod_c = ci_product_coefficient(pair.n)
        if not (formula == prod_c == A):
            ok = False
            notes.append(f"formula {formula}, product {prod_c}")
    elif pair.kind == "BDI":
        if (pair.p, pair.q) != (0, 0):
            formula = A_prime(pair.p, pair.q)
            if formula != A:
                ok = False
                notes.append(f"A'={formula}")
    return CountReport(pair, A, n_labels, formula, ok, tuple(notes))


# ---------------------------------------------------------------------------
# bijections

class InadmissibleCharacter(ValueError):
    pass


def _pgl_map(pair, orbit: OrbitLabel, character: int) -> CharSheafLabel:
    d = orbit.diagram
    ls = [min(a, b) for _, a, b in d.rows]
    k = sum(L * l for (L, _, _), l in zip(d.rows, ls))
    alpha = Partition(tuple(x for (L, _, _), l in zip(d.rows, ls) for x in [L] * l))
    resid = SignedYoungDiagram(tuple((L, a - l, b - l) for (L, a, b), l in zip(d.rows, ls)))
    # the residual is only identified with its sign swap when the whole orbit is
    mu = canonical_orbit(pair.with_params(pair.p - k, pair.q - k), resid) if d.all_even() else OrbitLabel(resid)
    support = SupportLabel(pair, "K", 0, k, mu)
    if character == 0:
        return CharSheafLabel(support, LocalSystem("Tau", tau=alpha.transpose()))
    if component_group(pair, orbit).order != 2:
        raise InadmissibleCharacter("nontrivial character needs a Z/2 component group")
    return CharSheafLabel(support, LocalSystem("TauPsi2", tau=alpha.transpose()))


def _cd_map(pair, orbit: OrbitLabel, split_parity: int) -> CharSheafLabel:
    """Shared recipe for CII (split_parity=0) and DIII (split_parity=1).

    Lengths of parity split_parity carry equal sign counts a and give up
    2[a/2] rows per sign; the other lengths give up 2 min rows per sign
    (their counts are even).
    """
    d = orbit.diagram
    k = 0
    alpha: list[int] = []
    resid = []
    for L, a, b in d.rows:
        if L % 2 == split_parity:
            t = a // 2
            k += t * L
            alpha.extend([L] * t)
            resid.append((L, a - 2 * t, b - 2 * t))
        else:
            l = min(a, b) // 2
            k += l * L
            alpha.extend([L] * l)
            resid.append((L, a - 2 * l, b - 2 * l))
    mu = OrbitLabel(SignedYoungDiagram(tuple(resid)))
    support = SupportLabel(pair, "K", 0, k, mu)
    return CharSheafLabel(support, LocalSystem("Tau", tau=Partition(tuple(sorted(alpha, reverse=True))).transpose()))


def _sl_map(pair, orbit: OrbitLabel, psi: Fraction) -> CharSheafLabel:
    d = orbit.diagram
    dl = diagram_gcd(d) or 1
    psi = Fraction(psi)
    if not 0 <= psi < 1 or (psi * dl).denominator != 1:
        raise InadmissibleCharacter(f"{psi} is not a character of Z/{dl}")
    order = psi.denominator
    if order % 2 == 1:
        m = order
        if is_richardson(pair, orbit, check=False):
            return CharSheafLabel(SupportLabel(pair, "ML", 0, 0, orbit), LocalSystem("NilpotentE", char=psi))
        ds = [L // m for L, _, _ in d.rows]
        ls = [min(a, b) for _, a, b in d.rows]
        l = sum(x * y for x, y in zip(ds, ls))
        tau = Partition(tuple(x for di, li in zip(ds, ls) for x in [di] * li))
        resid = SignedYoungDiagram(tuple((L, a - li, b - li) for (L, a, b), li in zip(d.rows, ls)))
        support = SupportLabel(pair, "ML", m, l, OrbitLabel(resid))
        return CharSheafLabel(support, LocalSystem("TauPsiM", tau=tau, order=m, char=psi))
    m = order // 2
    n = pair.p + pair.q
    ds = [L // (2 * m) for L, _, _ in d.rows]
    rho = (
        Partition(tuple(x for di, (_, a, _) in zip(ds, d.rows) for x in [di] * a)),
        Partition(tuple(x for di, (_, _, b) in zip(ds, d.rows) for x in [di] * b)),
    )
    l = n // (2 * m)
    support = SupportLabel(pair, "ML", m, l, OrbitLabel(SignedYoungDiagram()))
    return CharSheafLabel(support, LocalSystem("RhoPsi2m", rho=rho, order=2 * m, char=psi))


def bijection_orbital_to_char(pair: SymmetricPair, orbit: OrbitLabel, character=0) -> CharSheafLabel:
    """Explicit map from an orbital datum to a character-sheaf label.

    character: 0/1 for AIII_PGL (trivial / nontrivial), ignored for CII and
    DIII (component groups are trivial), and a rational j/d encoding a
    character of Z/d for AIII_SL.
    """
    if not is_valid_orbit(pair, orbit):
        raise ValueError(f"{orbit.text()} is not an orbit of {pair}")
    if pair.kind == "AIII_PGL":
        if character not in (0, 1):
            raise InadmissibleCharacter("PGL characters are 0 or 1")
        return _pgl_map(pair, orbit, character)
    if pair.kind == "CII":
        if character:
            raise InadmissibleCharacter("component group is trivial")
        return _cd_map(pair, orbit, 0)
    if pair.kind == "DIII":
        if character:
            raise InadmissibleCharacter("component group is trivial")
        return _cd_map(pair, orbit, 1)
    if pair.kind == "AIII_SL":
        return _sl_map(pair, orbit, Fraction(character))
    raise ValueError(f"no explicit bijection for {pair.kind}")


def orbital_data(pair: SymmetricPair) -> list[tuple[OrbitLabel, object]]:
    """All (orbit, character) pairs of the pair, characters encoded as for the bijection."""
    out = []
    for o in enumerate_syd(pair):
        g = component_group(pair, o)
        if pair.kind == "AIII_SL":
            dl = g.order
            out.extend((o, Fraction(j, dl)) for j in range(dl))
        elif pair.kind == "AIII_PGL":
            out.extend((o, c) for c in range(g.order))
        else:
            out.extend((o, 0) for _ in range(g.order))
    return out


@dataclass(frozen=True)
class BijectionReport:
    pair: SymmetricPair
    domain: int
    image: int
    targets: int
    injective: bool
    surjective: bool
    by_order: tuple = ()

    @property
    def ok(self) -> bool:
        return self.injective and self.surjective and self.domain == self.targets


def _family_order(lab: CharSheafLabel) -> int:
    ls = lab.local
    if ls.kind in ("TauPsiM", "RhoPsi2m"):
        return ls.order
    if ls.kind == "NilpotentE":
        return ls.char.denominator
    return 0


def verify_bijection(pair: SymmetricPair) -> BijectionReport:
    dom = orbital_data(pair)
    images = [bijection_orbital_to_char(pair, o, c) for o, c in dom]
    targets = set(_char_labels(pair))
    img = set(images)
    by_order = ()
    if pair.kind == "AIII_SL":
        rows = []
        orders = sorted({(c.denominator) for _, c in dom})
        for m in orders:
            src = [(o, c) for o, c in dom if c.denominator == m]
            im = {bijection_orbital_to_char(pair, o, c) for o, c in src}
            tgt = {t for t in targets if _family_order(t) == m}
            rows.append((m, len(src), len(tgt), im == tgt and len(im) == len(src)))
        by_order = tuple(rows)
    return BijectionReport(
        pair, len(dom), len(img), len(targets),
        injective=len(img) == len(images),
        surjective=img == targets,
        by_order=by_order,
    )
