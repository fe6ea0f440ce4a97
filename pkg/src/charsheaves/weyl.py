"""Little Weyl groups, the 2-group I and stabilizers of its characters.

Everything here is brute force over signed permutations.  The restricted
root data are written down per family; the stabilizers are then computed by
scanning the whole group, and compared against block subgroups built
directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterable, Optional

from .syd import SymmetricPair

DEFAULT_BOUND = 7


class BruteForceBound(ValueError):
    pass


# ---------------------------------------------------------------------------
# signed permutations

@dataclass(frozen=True, order=True)
class SignedPermutation:
    """images[i] = +-(j+1) means e_{i+1} -> +-e_{j+1}."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(abs(x) for x in self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a signed permutation: {self.images}")

    @classmethod
    def identity(cls, r: int) -> "SignedPermutation":
        return cls(tuple(range(1, r + 1)))

    @classmethod
    def from_parts(cls, perm: Iterable[int], signs: Iterable[int]) -> "SignedPermutation":
        return cls(tuple(s * (j + 1) for j, s in zip(perm, signs)))

    @property
    def rank(self) -> int:
        return len(self.images)

    @property
    def permutation(self) -> tuple[int, ...]:
        return tuple(abs(x) - 1 for x in self.images)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if x > 0 else -1 for x in self.images)

    def is_even(self) -> bool:
        return sum(1 for x in self.images if x < 0) % 2 == 0

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return SignedPermutation(_mul(self.images, other.images))

    def inverse(self) -> "SignedPermutation":
        return SignedPermutation(_inv(self.images))

    def act(self, v: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * len(v)
        for i, x in enumerate(self.images):
            j = abs(x) - 1
            out[j] += v[i] if x > 0 else -v[i]
        return tuple(out)


# raw tuple arithmetic, used in the hot loops
def _mul(a: tuple, b: tuple) -> tuple:
    return tuple(a[x - 1] if x > 0 else -a[-x - 1] for x in b)


def _inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[abs(x) - 1] = (i + 1) if x > 0 else -(i + 1)
    return tuple(out)


def _ident(r: int) -> tuple:
    return tuple(range(1, r + 1))


def hyperoctahedral(r: int, even: bool = False) -> list[tuple]:
    """All of W_r (or W'_r when even=True) as raw image tuples."""
    out = []
    for perm in permutations(range(r)):
        for signs in product((1, -1), repeat=r):
            if even and signs.count(-1) % 2:
                continue
            out.append(tuple(s * (j + 1) for j, s in zip(perm, signs)))
    return out


def hyperoctahedral_order(r: int, even: bool = False) -> int:
    if even and r >= 1:
        return 2 ** (r - 1) * factorial(r)
    return 2 ** r * factorial(r)


def reflection(root: tuple[int, ...]) -> tuple:
    """The signed permutation s_alpha for alpha of the form e_i +- e_j, e_i, 2e_i."""
    r = len(root)
    img = list(_ident(r))
    nz = [i for i, c in enumerate(root) if c]
    if len(nz) == 1:
        i = nz[0]
        img[i] = -img[i]
    elif len(nz) == 2:
        i, j = nz
        if root[i] * root[j] < 0:      # e_i - e_j
            img[i], img[j] = j + 1, i + 1
        else:                          # e_i + e_j
            img[i], img[j] = -(j + 1), -(i + 1)
    else:
        raise ValueError(f"unexpected root {root}")
    return tuple(img)


class _Closure:
    """A subgroup grown one generator at a time."""

    def __init__(self, r: int):
        self.r = r
        self.elems = {_ident(r)}
        self.gens: list[tuple] = []

    def add(self, s: tuple) -> bool:
        if s in self.elems:
            return False
        self.gens.append(s)
        # old elements times old generators are old; only products with s are new
        frontier = []
        for g in list(self.elems):
            h = _mul(g, s)
            if h not in self.elems:
                self.elems.add(h)
                frontier.append(h)
        while frontier:
            nxt = []
            for g in frontier:
                for t in self.gens:
                    h = _mul(g, t)
                    if h not in self.elems:
                        self.elems.add(h)
                        nxt.append(h)
            frontier = nxt
        return True


def generate(gens: Iterable[tuple], r: int) -> frozenset:
    c = _Closure(r)
    for s in gens:
        c.add(s)
    return frozenset(c.elems)


def generating_set(group: frozenset, r: int) -> list[tuple]:
    """A short list of elements generating the group (greedy, deterministic)."""
    c = _Closure(r)
    for g in sorted(group):
        if len(c.elems) == len(group):
            break
        c.add(g)
    return c.gens


# ---------------------------------------------------------------------------
# restricted root data

@dataclass(frozen=True)
class RestrictedRootDatum:
    pair: SymmetricPair
    type_name: str
    rank: int
    roots: tuple[tuple[tuple[int, ...], int], ...]          # positive roots with multiplicity
    real_coroots: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]   # positive real root -> coroot(-1) in I
    i_rank: int
    i_action: str              # "permute": W permutes coordinates of I; "trivial"
    type_d: bool               # W_a is W'_r rather than W_r

    def multiplicity(self, root: tuple[int, ...]) -> int:
        root = _positive(root)
        for a, m in self.roots:
            if a == root:
                return m
        return 0

    @property
    def reflections(self) -> tuple[tuple, ...]:
        return tuple(sorted({reflection(a) for a, _ in self.roots}))

    def delta(self, s: tuple) -> Fraction:
        # each positive root stands for the pair +-alpha
        return Fraction(sum(2 * m for a, m in self.roots if reflection(a) == s), 2)

    def real_root_of(self, s: tuple) -> Optional[tuple[int, ...]]:
        hits = [a for a, _ in self.real_coroots if reflection(a) == s]
        return hits[0] if len(hits) == 1 else None

    def coroot_mod2(self, root: tuple[int, ...]) -> tuple[int, ...]:
        for a, v in self.real_coroots:
            if a == root:
                return v
        raise KeyError(f"{root} is not a real root")

    @property
    def order(self) -> int:
        return hyperoctahedral_order(self.rank, self.type_d)


def _positive(v: tuple[int, ...]) -> tuple[int, ...]:
    for c in v:
        if c:
            return v if c > 0 else tuple(-x for x in v)
    return v


def _unit(r: int, *entries: tuple[int, int]) -> tuple[int, ...]:
    v = [0] * r
    for i, c in entries:
        v[i] = c
    return tuple(v)


def _long_roots(r: int, mult: int) -> list[tuple[tuple[int, ...], int]]:
    out = []
    for i in range(r):
        for j in range(i + 1, r):
            out.append((_unit(r, (i, 1), (j, -1)), mult))
            out.append((_unit(r, (i, 1), (j, 1)), mult))
    return out


def _pair_vec(r: int, i: int, j: int) -> tuple[int, ...]:
    return tuple(1 if k in (i, j) else 0 for k in range(r))


@lru_cache(maxsize=None)
def restricted_root_datum(pair: SymmetricPair) -> RestrictedRootDatum:
    kind = pair.kind
    if kind == "BDI":
        big, q = max(pair.p, pair.q), min(pair.p, pair.q)
        split_d = big == q and (big + q) % 2 == 0
        roots = _long_roots(q, 1)
        if big > q:
            roots += [(_unit(q, (i, 1)), big - q) for i in range(q)]
        real = [(a, _pair_vec(q, *[i for i, c in enumerate(a) if c])) for a, _ in _long_roots(q, 1)]
        if (big + q) % 2:
            # the short coroot is 2 e_i^vee, trivial at -1
            real += [(_unit(q, (i, 1)), (0,) * q) for i in range(q)]
        name = f"D{q}" if split_d else f"B{q}"
        return RestrictedRootDatum(pair, name, q, tuple(roots), tuple(real), q, "permute", split_d)
    if kind == "CI":
        n = pair.n
        roots = _long_roots(n, 1) + [(_unit(n, (i, 2)), 1) for i in range(n)]
        real = [(a, _pair_vec(n, *[i for i, c in enumerate(a) if c])) for a, _ in _long_roots(n, 1)]
        real += [(_unit(n, (i, 2)), _unit(n, (i, 1))) for i in range(n)]
        return RestrictedRootDatum(pair, f"C{n}", n, tuple(roots), tuple(real), n, "permute", False)
    if kind in ("AIII_SL", "AIII_PGL", "GLGL", "CII"):
        big, q = max(pair.p, pair.q), min(pair.p, pair.q)
        long_m, double_m, short_m = (4, 3, 4) if kind == "CII" else (2, 1, 2)
        roots = _long_roots(q, long_m) + [(_unit(q, (i, 2)), double_m) for i in range(q)]
        if big > q:
            roots += [(_unit(q, (i, 1)), short_m * (big - q)) for i in range(q)]
        i_rank = 1 if kind in ("AIII_SL", "AIII_PGL") and big == q and q > 0 else 0
        gen = (1,) if kind == "AIII_SL" and i_rank else (0,) * i_rank
        real = [(_unit(q, (i, 2)), gen) for i in range(q)]
        name = f"C{q}" if big == q else f"BC{q}"
        return RestrictedRootDatum(pair, name, q, tuple(roots), tuple(real), i_rank, "trivial", False)
    if kind == "DIII":
        n = pair.n
        r = n // 2
        roots = _long_roots(r, 4) + [(_unit(r, (i, 2)), 1) for i in range(r)]
        if n % 2:
            roots += [(_unit(r, (i, 1)), 4) for i in range(r)]
        real = [(_unit(r, (i, 2)), ()) for i in range(r)]
        name = f"BC{r}" if n % 2 else f"C{r}"
        return RestrictedRootDatum(pair, name, r, tuple(roots), tuple(real), 0, "trivial", False)
    raise ValueError(f"no root datum for {kind}")


# ---------------------------------------------------------------------------
# the group I and its characters

@dataclass(frozen=True, order=True)
class ICharacter:
    """A character of I = F_2^rank, given by its pairing vector."""

    values: tuple[int, ...]

    def __call__(self, v: tuple[int, ...]) -> int:
        return sum(a * b for a, b in zip(self.values, v)) % 2

    def sign(self, v: tuple[int, ...]) -> int:
        return -1 if self(v) else 1

    def text(self) -> str:
        return "".join(map(str, self.values)) or "1"


@dataclass(frozen=True)
class IGroup:
    rank: int
    rank0: int
    generators: tuple[tuple[int, ...], ...]
    iota: ICharacter


def f2_rank(vectors: Iterable[tuple[int, ...]]) -> int:
    basis: list[int] = []
    for v in vectors:
        x = int("".join(map(str, v)) or "0", 2)
        for b in basis:
            x = min(x, x ^ b)
        if x:
            basis.append(x)
    return len(basis)


def i_group(pair: SymmetricPair) -> IGroup:
    datum = restricted_root_datum(pair)
    r = datum.i_rank
    rank0 = f2_rank(v for _, v in datum.real_coroots)
    if datum.i_action == "permute" and r:
        # gamma_i = coroot of e_i - e_{i+1} at -1, and gamma_r = e_r
        gens = tuple(_pair_vec(r, i, i + 1) for i in range(r - 1)) + (_unit(r, (r - 1, 1)),)
    else:
        gens = tuple(_unit(r, (i, 1)) for i in range(r))
    iota = (0,) * r
    if pair.kind == "BDI" and (pair.p + pair.q) % 2:
        iota = (1,) * r
    elif pair.kind == "AIII_PGL" and r and pair.q % 2:
        iota = (1,)
    return IGroup(r, rank0, gens, ICharacter(iota))


def all_characters(pair: SymmetricPair) -> list[ICharacter]:
    r = restricted_root_datum(pair).i_rank
    return [ICharacter(v) for v in product((0, 1), repeat=r)]


def act_on_character(datum: RestrictedRootDatum, g: tuple, chi: ICharacter) -> ICharacter:
    if datum.i_action == "trivial":
        return chi
    out = [0] * len(chi.values)
    for i, x in enumerate(g):
        out[abs(x) - 1] = chi.values[i]
    return ICharacter(tuple(out))


def character_orbit_reps(pair: SymmetricPair) -> list[ICharacter]:
    """chi_0, ..., chi_r with chi_m = -1 exactly on gamma_m."""
    datum = restricted_root_datum(pair)
    r = datum.i_rank
    if datum.i_action == "trivial":
        return all_characters(pair)
    return [ICharacter((1,) * m + (0,) * (r - m)) for m in range(r + 1)]


def character_orbits(pair: SymmetricPair) -> list[frozenset]:
    """W_a-orbits on the characters of I, by closure under reflections."""
    datum = restricted_root_datum(pair)
    seen: set = set()
    orbits = []
    for chi in all_characters(pair):
        if chi in seen:
            continue
        orb = {chi}
        todo = [chi]
        while todo:
            c = todo.pop()
            for s in datum.reflections:
                d = act_on_character(datum, s, c)
                if d not in orb:
                    orb.add(d)
                    todo.append(d)
        seen |= orb
        orbits.append(frozenset(orb))
    return orbits


def expected_orbit_count(pair: SymmetricPair) -> int:
    datum = restricted_root_datum(pair)
    if datum.i_action == "permute":
        return datum.i_rank + 1
    return 2 ** datum.i_rank


# ---------------------------------------------------------------------------
# stabilizers

@dataclass(frozen=True)
class GroupInvariants:
    order: int
    abelianization: int
    reflections: int
    derived_length: Optional[int]      # None if not solvable


@dataclass(frozen=True)
class StabilizerReport:
    pair: SymmetricPair
    chi: ICharacter
    w_chi: frozenset
    w0: frozenset
    normal: bool
    elementary_two: bool
    quotient: Optional[tuple[int, ...]]

    @property
    def index(self) -> int:
        return len(self.w_chi) // len(self.w0)

    def to_json(self) -> dict:
        return {
            "pair": self.pair.text(),
            "chi": list(self.chi.values),
            "stabilizerOrder": len(self.w_chi),
            "w0Order": len(self.w0),
            "quotient": list(self.quotient) if self.quotient is not None else None,
        }


def _ambient(datum: RestrictedRootDatum) -> list[tuple]:
    return hyperoctahedral(datum.rank, datum.type_d)


def w0_generators(datum: RestrictedRootDatum, chi: ICharacter) -> list[tuple]:
    gens = []
    for s in datum.reflections:
        delta = datum.delta(s)
        if delta > 1:
            gens.append(s)
        elif delta == 1:
            a = datum.real_root_of(s)
            if a is None:
                raise ValueError(f"no real root for a delta-one reflection of {datum.pair}")
            if chi(datum.coroot_mod2(a)) == 0:
                gens.append(s)
    return gens


def stabilizer(pair: SymmetricPair, chi: ICharacter, bound: int = DEFAULT_BOUND) -> StabilizerReport:
    datum = restricted_root_datum(pair)
    if datum.rank > bound:
        raise BruteForceBound(f"rank {datum.rank} exceeds the brute force bound {bound}")
    if len(chi.values) != datum.i_rank:
        raise ValueError("character has the wrong rank")
    w_chi = frozenset(g for g in _ambient(datum) if act_on_character(datum, g, chi) == chi)
    gens0 = w0_generators(datum, chi)
    w0 = generate(gens0, datum.rank)
    # conjugating the generators of W0 by generators of W_chi is enough
    outer = generating_set(w_chi, datum.rank)
    normal = w0 <= w_chi and all(_mul(_mul(g, h), _inv(g)) in w0 for g in outer for h in gens0)
    squares = all(_mul(g, g) in w0 for g in w_chi)
    ok = normal and squares
    quotient = None
    if ok:
        idx = len(w_chi) // len(w0)
        quotient = (2,) * (idx.bit_length() - 1)
    return StabilizerReport(pair, chi, w_chi, w0, normal, ok, quotient)


# ---------------------------------------------------------------------------
# invariants of subgroups

@lru_cache(maxsize=256)
def derived_subgroup(group: frozenset, r: int) -> frozenset:
    small = generating_set(group, r)
    c = _Closure(r)
    for a in small:
        for b in small:
            c.add(_mul(_mul(a, b), _mul(_inv(a), _inv(b))))
    # normal closure: conjugate the generators found so far until stable
    i = 0
    while i < len(c.gens):
        h = c.gens[i]
        for g in small:
            c.add(_mul(_mul(g, h), _inv(g)))
        i += 1
    return frozenset(c.elems)


def invariants(group: frozenset, datum: RestrictedRootDatum) -> GroupInvariants:
    r = datum.rank
    der = derived_subgroup(group, r)
    refl = sum(1 for s in datum.reflections if s in group)
    length: Optional[int] = 0
    cur = group
    while len(cur) > 1:
        nxt = derived_subgroup(cur, r)
        if len(nxt) == len(cur):
            length = None
            break
        cur = nxt
        length += 1
    return GroupInvariants(len(group), len(group) // len(der), refl, length)


def block_subgroup(sizes: tuple[int, ...], even_blocks: tuple[bool, ...] = (), even_total: bool = False) -> frozenset:
    """Signed permutations preserving consecutive coordinate blocks."""
    r = sum(sizes)
    even_blocks = even_blocks or (False,) * len(sizes)
    pieces = []
    start = 0
    for size, ev in zip(sizes, even_blocks):
        local = []
        for g in hyperoctahedral(size, ev):
            local.append(tuple((abs(x) + start) * (1 if x > 0 else -1) for x in g))
        pieces.append(local)
        start += size
    out = set()
    for combo in product(*pieces):
        g = tuple(x for part in combo for x in part)
        if even_total and sum(1 for x in g if x < 0) % 2:
            continue
        out.add(g)
    assert all(len(g) == r for g in out)
    return frozenset(out)


def expected_stabilizers(pair: SymmetricPair, m: int) -> tuple[frozenset, frozenset]:
    """The block subgroups W_chi_m and W0_chi_m from the structure tables."""
    datum = restricted_root_datum(pair)
    r = datum.rank
    rest = r - m
    if pair.kind == "CI":
        return block_subgroup((m, rest)), block_subgroup((m, rest), (True, False))
    if pair.kind == "BDI":
        if not datum.type_d:
            w = block_subgroup((m, rest))
            return w, w
        if m in (0, r):
            w = block_subgroup((r,), (True,))
            return w, w
        return (block_subgroup((m, rest), even_total=True),
                block_subgroup((m, rest), (True, True)))
    raise ValueError(f"no stabilizer table for {pair.kind}")
