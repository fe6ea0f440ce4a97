"""Partitions, symmetric pairs and signed Young diagrams.

A signed Young diagram is stored by its distinct row lengths, each with
the number of rows that begin with ``+`` and the number that begin with
``-``.  Signs alternate along a row, so a row of length L starting with
``+`` holds ceil(L/2) plus boxes and floor(L/2) minus boxes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

KINDS = ("AIII_SL", "AIII_PGL", "BDI", "CI", "CII", "DIII", "GLGL")
_ONE_PARAM = ("CI", "DIII")


# ---------------------------------------------------------------------------
# partitions

@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        ps = tuple(int(x) for x in self.parts)
        if any(x < 1 for x in ps):
            raise ValueError(f"parts must be positive: {ps}")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {ps}")
        object.__setattr__(self, "parts", ps)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for x in self.parts:
            out[x] = out.get(x, 0) + 1
        return out

    def transpose(self) -> "Partition":
        return Partition(conjugate(self.parts))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for x in parts if x > i) for i in range(parts[0]))


@lru_cache(maxsize=None)
def partition_tuples(n: int, largest: Optional[int] = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of n with parts <= largest, reverse-lexicographic."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if largest is None or largest > n:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for first in range(largest, 0, -1):
        for rest in partition_tuples(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    return [Partition(t) for t in partition_tuples(n)]


def transpose(p: Partition) -> Partition:
    return p.transpose()


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    if n < 0:
        return 0
    return len(partition_tuples(n))


def bipartitions(n: int) -> list[tuple[Partition, Partition]]:
    out = []
    for a in range(n, -1, -1):
        for x in partition_tuples(a):
            for y in partition_tuples(n - a):
                out.append((Partition(x), Partition(y)))
    return out


# ---------------------------------------------------------------------------
# symmetric pairs

@dataclass(frozen=True)
class SymmetricPair:
    """One classical symmetric pair type with its parameters.

    CI and DIII carry the single rank n (stored as p = q = n).  CII(p, q)
    acts on a space of dimension 2p + 2q.
    """

    kind: str
    p: int
    q: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown pair type {self.kind!r}")
        if self.p < 0 or self.q < 0:
            raise ValueError("parameters must be nonnegative")
        if self.kind in _ONE_PARAM and self.p != self.q:
            raise ValueError(f"{self.kind} takes a single rank")

    @classmethod
    def of(cls, kind: str, *params: int) -> "SymmetricPair":
        if kind in _ONE_PARAM:
            (n,) = params
            return cls(kind, n, n)
        p, q = params
        return cls(kind, p, q)

    @classmethod
    def parse(cls, text: str) -> "SymmetricPair":
        """Parse ``TYPE:p,q`` or ``TYPE:n``."""
        try:
            kind, rest = text.split(":", 1)
            params = [int(x) for x in rest.split(",")]
        except ValueError:
            raise ValueError(f"bad pair syntax {text!r}") from None
        kind = kind.strip().upper().replace("-", "_")
        if kind == "AIII":
            kind = "AIII_SL"
        if kind not in KINDS:
            raise ValueError(f"unknown pair type {kind!r}")
        if len(params) != (1 if kind in _ONE_PARAM else 2):
            raise ValueError(f"wrong number of parameters in {text!r}")
        return cls.of(kind, *params)

    @property
    def n(self) -> int:
        return self.p

    @property
    def signature(self) -> tuple[int, int]:
        """Box signature of the diagrams labelling orbits."""
        if self.kind == "CII":
            return (2 * self.p, 2 * self.q)
        return (self.p, self.q)

    @property
    def size(self) -> int:
        return sum(self.signature)

    @property
    def rank(self) -> int:
        if self.kind == "DIII":
            return self.n // 2
        if self.kind == "CI":
            return self.n
        return min(self.p, self.q)

    def text(self) -> str:
        if self.kind in _ONE_PARAM:
            return f"{self.kind}:{self.n}"
        return f"{self.kind}:{self.p},{self.q}"

    def __str__(self) -> str:
        return self.text()

    def with_params(self, p: int, q: int) -> "SymmetricPair":
        if self.kind in _ONE_PARAM:
            return SymmetricPair(self.kind, p, p)
        return SymmetricPair(self.kind, p, q)


def AIII_SL(p, q): return SymmetricPair("AIII_SL", p, q)
def AIII_PGL(p, q): return SymmetricPair("AIII_PGL", p, q)
def BDI(p, q): return SymmetricPair("BDI", p, q)
def CI(n): return SymmetricPair("CI", n, n)
def CII(p, q): return SymmetricPair("CII", p, q)
def DIII(n): return SymmetricPair("DIII", n, n)
def GLGL(p, q): return SymmetricPair("GLGL", p, q)


# ---------------------------------------------------------------------------
# signed Young diagrams

def row_signature(length: int, starts_plus: bool) -> tuple[int, int]:
    big, small = (length + 1) // 2, length // 2
    return (big, small) if starts_plus else (small, big)


@dataclass(frozen=True)
class SignedYoungDiagram:
    """Canonical form: ((length, plus_rows, minus_rows), ...), lengths decreasing."""

    rows: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        merged: dict[int, list[int]] = {}
        for length, a, b in self.rows:
            if length < 1 or a < 0 or b < 0:
                raise ValueError(f"bad row record {(length, a, b)}")
            acc = merged.setdefault(int(length), [0, 0])
            acc[0] += a
            acc[1] += b
        canon = tuple((L, a, b) for L, (a, b) in sorted(merged.items(), reverse=True) if a + b > 0)
        object.__setattr__(self, "rows", canon)

    @classmethod
    def from_rows(cls, rows: Iterable[tuple[int, str]]) -> "SignedYoungDiagram":
        """Build from individual rows given as (length, '+' or '-')."""
        recs = []
        for length, sign in rows:
            if sign not in "+-" or len(sign) != 1:
                raise ValueError(f"bad sign {sign!r}")
            recs.append((length, 1, 0) if sign == "+" else (length, 0, 1))
        return cls(tuple(recs))

    @classmethod
    def parse(cls, text: str) -> "SignedYoungDiagram":
        """Parse the compact text form, e.g. ``3+ 1+ 1-``; ``0`` or empty is the empty diagram."""
        text = text.split("|")[0].strip()
        if text in ("", "0", "()", "empty"):
            return cls()
        rows = []
        for tok in text.replace(",", " ").split():
            if tok[-1] not in "+-":
                raise ValueError(f"bad row token {tok!r}")
            sign = tok[-1]
            body = tok[:-1]
            if "^" in body:
                length, mult = body.split("^")
                rows.extend([(int(length), sign)] * int(mult))
            else:
                rows.append((int(body), sign))
        return cls.from_rows(rows)

    # basic data

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(r[0] for r in self.rows)

    @property
    def plus_counts(self) -> tuple[int, ...]:
        return tuple(r[1] for r in self.rows)

    @property
    def minus_counts(self) -> tuple[int, ...]:
        return tuple(r[2] for r in self.rows)

    @property
    def partition(self) -> Partition:
        out: list[int] = []
        for L, a, b in self.rows:
            out.extend([L] * (a + b))
        return Partition(tuple(out))

    @property
    def size(self) -> int:
        return sum(L * (a + b) for L, a, b in self.rows)

    @property
    def signature(self) -> tuple[int, int]:
        P = Q = 0
        for L, a, b in self.rows:
            x, y = row_signature(L, True)
            P += a * x + b * y
            Q += a * y + b * x
        return (P, Q)

    @property
    def is_empty(self) -> bool:
        return not self.rows

    def all_even(self) -> bool:
        return all(L % 2 == 0 for L in self.lengths)

    def swap(self) -> "SignedYoungDiagram":
        """Exchange the starting sign of every row."""
        return SignedYoungDiagram(tuple((L, b, a) for L, a, b in self.rows))

    def count(self, length: int) -> tuple[int, int]:
        for L, a, b in self.rows:
            if L == length:
                return (a, b)
        return (0, 0)

    def individual_rows(self) -> list[tuple[int, str]]:
        out: list[tuple[int, str]] = []
        for L, a, b in self.rows:
            out.extend([(L, "+")] * a)
            out.extend([(L, "-")] * b)
        return out

    def sort_key(self):
        return (tuple(-x for x in self.partition.parts), self.plus_counts)

    # serialization

    def text(self) -> str:
        if not self.rows:
            return "0"
        return " ".join(f"{L}{s}" for L, s in self.individual_rows())

    def compact(self) -> str:
        """Exponent notation: 3^2+ 1- (multiplicity written only if > 1)."""
        if not self.rows:
            return "0"
        toks = []
        for L, a, b in self.rows:
            for c, s in ((a, "+"), (b, "-")):
                if c:
                    toks.append(f"{L}^{c}{s}" if c > 1 else f"{L}{s}")
        return " ".join(toks)

    def to_json(self) -> dict:
        return {
            "lengths": list(self.lengths),
            "plusCounts": list(self.plus_counts),
            "minusCounts": list(self.minus_counts),
        }

    def __str__(self) -> str:
        return self.compact()


def join_diagrams(a: SignedYoungDiagram, b: SignedYoungDiagram) -> SignedYoungDiagram:
    return SignedYoungDiagram(a.rows + b.rows)


def uniform_diagram(*blocks: tuple[int, int, str]) -> SignedYoungDiagram:
    """Diagram from blocks (length, multiplicity, sign)."""
    return SignedYoungDiagram(tuple((L, c, 0) if s == "+" else (L, 0, c) for L, c, s in blocks))


@dataclass(frozen=True)
class OrbitLabel:
    diagram: SignedYoungDiagram
    decoration: Optional[str] = None

    def __post_init__(self):
        if self.decoration not in (None, "I", "II"):
            raise ValueError(f"bad decoration {self.decoration!r}")
        if self.decoration is not None and not (self.diagram.rows and self.diagram.all_even()):
            raise ValueError("decoration only applies to very even diagrams")

    def text(self) -> str:
        t = self.diagram.text()
        return t if self.decoration is None else f"{t} | decor={self.decoration}"

    def to_json(self) -> dict:
        d = self.diagram.to_json()
        d["decoration"] = self.decoration
        return d

    @classmethod
    def parse(cls, text: str) -> "OrbitLabel":
        dec = None
        if "|" in text:
            tail = text.split("|", 1)[1].strip()
            if tail.startswith("decor="):
                dec = tail[len("decor="):].strip() or None
        return cls(SignedYoungDiagram.parse(text), dec)

    def __str__(self) -> str:
        return self.text()

    def sort_key(self):
        return (self.diagram.sort_key(), self.decoration or "")


# ---------------------------------------------------------------------------
# enumeration

def _sign_choices(part: tuple[int, ...]) -> Iterator[SignedYoungDiagram]:
    mult: dict[int, int] = {}
    for x in part:
        mult[x] = mult.get(x, 0) + 1
    lens = sorted(mult, reverse=True)
    for plus in product(*(range(mult[L] + 1) for L in lens)):
        yield SignedYoungDiagram(tuple((L, a, mult[L] - a) for L, a in zip(lens, plus)))


def _admissible(kind: str, d: SignedYoungDiagram) -> bool:
    for L, a, b in d.rows:
        odd = L % 2 == 1
        if kind == "BDI":
            if not odd and a != b:
                return False
        elif kind == "CI":
            if odd and a != b:
                return False
        elif kind == "CII":
            if not odd and a != b:
                return False
            if odd and (a % 2 or b % 2):
                return False
        elif kind == "DIII":
            if odd and a != b:
                return False
            if not odd and (a % 2 or b % 2):
                return False
    return True


def is_valid_orbit(pair: SymmetricPair, orbit: OrbitLabel) -> bool:
    return orbit in _syd_set(pair)


@lru_cache(maxsize=None)
def _syd_set(pair: SymmetricPair) -> frozenset:
    return frozenset(enumerate_syd(pair))


@lru_cache(maxsize=None)
def _enumerate(pair: SymmetricPair) -> tuple[OrbitLabel, ...]:
    sig = pair.signature
    kind = pair.kind
    diagrams = []
    for part in partition_tuples(sum(sig)):
        for d in _sign_choices(part):
            if d.signature != sig or not _admissible(kind, d):
                continue
            if kind == "AIII_PGL" and d.rows and d.all_even():
                # the sign swap is the same orbit; keep the smaller one
                if d.swap().plus_counts < d.plus_counts:
                    continue
            diagrams.append(d)
    diagrams.sort(key=lambda d: d.sort_key())
    out: list[OrbitLabel] = []
    for d in diagrams:
        if kind == "BDI" and d.rows and d.all_even():
            out.append(OrbitLabel(d, "I"))
            out.append(OrbitLabel(d, "II"))
        else:
            out.append(OrbitLabel(d))
    return tuple(out)


def enumerate_syd(pair: SymmetricPair) -> list[OrbitLabel]:
    return list(_enumerate(pair))


def canonical_orbit(pair: SymmetricPair, d: SignedYoungDiagram, decoration: Optional[str] = None) -> OrbitLabel:
    """Representative label for d under the identifications of this pair."""
    if pair.kind == "AIII_PGL" and d.rows and d.all_even():
        s = d.swap()
        if s.plus_counts < d.plus_counts:
            d = s
    return OrbitLabel(d, decoration)


def dumps_labels(labels: Sequence[OrbitLabel]) -> str:
    return json.dumps([lab.to_json() for lab in labels], sort_keys=True)
