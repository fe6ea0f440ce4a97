"""Exact truncated power series in one or two variables.

Infinite products are described by `ProductSpec` and expanded up to a
truncation order.  A factor ``(1 +/- u^(a k + b) v^(c k + d))^power`` with
a, c >= 0 can only touch coefficients of degree <= order while its
exponent is <= order, so the product over k is cut at the first k whose
exponent passes the order; every later factor is 1 modulo the truncation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

Number = Union[int, Fraction]


class NonUnitError(ArithmeticError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class TruncatedSeries1:
    """c_0 + c_1 x + ... + c_N x^N, exact rationals."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Number], order: Optional[int] = None):
        cs = [_frac(c) for c in coeffs]
        if order is None:
            order = max(len(cs) - 1, 0)
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = cs

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries1":
        return cls([1], order)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries1":
        return cls([], order)

    @classmethod
    def monomial(cls, exp: int, order: int, c: Number = 1) -> "TruncatedSeries1":
        s = cls.zero(order)
        if exp <= order:
            s.coeffs[exp] = _frac(c)
        return s

    def copy(self) -> "TruncatedSeries1":
        return TruncatedSeries1(list(self.coeffs), self.order)

    def _common(self, other: "TruncatedSeries1") -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries1):
            other = TruncatedSeries1([other], self.order)
        n = self._common(other)
        return TruncatedSeries1([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries1([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries1):
            c = _frac(other)
            return TruncatedSeries1([c * a for a in self.coeffs], self.order)
        n = self._common(other)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(n + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return TruncatedSeries1(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries1":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise NonUnitError("division by non-unit")
        n = self.order
        inv = [Fraction(0)] * (n + 1)
        inv[0] = 1 / c0
        for i in range(1, n + 1):
            s = sum((self.coeffs[j] * inv[i - j] for j in range(1, i + 1)), Fraction(0))
            inv[i] = -s / c0
        return TruncatedSeries1(inv, n)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries1):
            return self * other.inverse()
        return self * (1 / _frac(other))

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = TruncatedSeries1.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def negate_variable(self) -> "TruncatedSeries1":
        """f(x) -> f(-x)."""
        return TruncatedSeries1([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)], self.order)

    def dilate(self, k: int, order: Optional[int] = None) -> "TruncatedSeries1":
        """f(x) -> f(x^k)."""
        order = self.order * k if order is None else order
        out = [Fraction(0)] * (order + 1)
        for i, c in enumerate(self.coeffs):
            if i * k <= order:
                out[i * k] = c
        return TruncatedSeries1(out, order)

    def truncate(self, order: int) -> "TruncatedSeries1":
        return TruncatedSeries1(self.coeffs[: order + 1], min(order, self.order))

    def coefficient(self, i: int) -> Fraction:
        if not 0 <= i <= self.order:
            raise IndexError(f"exponent {i} outside truncation order {self.order}")
        return self.coeffs[i]

    def first_mismatch(self, other: "TruncatedSeries1") -> Optional[int]:
        n = self._common(other)
        for i in range(n + 1):
            if self.coeffs[i] != other.coeffs[i]:
                return i
        return None

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries1):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries1([{shown}{more}], order={self.order})"


class TruncatedSeries2:
    """Sum of c_{i,j} u^i v^j for i <= Nu, j <= Nv."""

    __slots__ = ("orders", "table")

    def __init__(self, orders: tuple[int, int], table=None):
        nu, nv = orders
        self.orders = (nu, nv)
        t = [[Fraction(0)] * (nv + 1) for _ in range(nu + 1)]
        if table is not None:
            for i, row in enumerate(table[: nu + 1]):
                for j, c in enumerate(row[: nv + 1]):
                    t[i][j] = _frac(c)
        self.table = t

    @classmethod
    def one(cls, orders):
        s = cls(orders)
        s.table[0][0] = Fraction(1)
        return s

    def copy(self):
        return TruncatedSeries2(self.orders, self.table)

    def __add__(self, other: "TruncatedSeries2"):
        nu = min(self.orders[0], other.orders[0])
        nv = min(self.orders[1], other.orders[1])
        return TruncatedSeries2((nu, nv), [[self.table[i][j] + other.table[i][j] for j in range(nv + 1)] for i in range(nu + 1)])

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries2):
            c = _frac(other)
            return TruncatedSeries2(self.orders, [[c * x for x in row] for row in self.table])
        nu = min(self.orders[0], other.orders[0])
        nv = min(self.orders[1], other.orders[1])
        out = TruncatedSeries2((nu, nv))
        a, b, t = self.table, other.table, out.table
        nz = [(i, j, b[i][j]) for i in range(nu + 1) for j in range(nv + 1) if b[i][j]]
        for i in range(nu + 1):
            for j in range(nv + 1):
                x = a[i][j]
                if not x:
                    continue
                for k, l, y in nz:
                    if i + k <= nu and j + l <= nv:
                        t[i + k][j + l] += x * y
        return out

    __rmul__ = __mul__

    def coefficient(self, i: int, j: int) -> Fraction:
        if not (0 <= i <= self.orders[0] and 0 <= j <= self.orders[1]):
            raise IndexError(f"exponent ({i},{j}) outside truncation orders {self.orders}")
        return self.table[i][j]

    def diagonal(self, k: int) -> TruncatedSeries1:
        """Sum_p c_{p+k,p} x^p, as far as the table reaches."""
        n = min(self.orders[0] - k, self.orders[1])
        return TruncatedSeries1([self.table[p + k][p] for p in range(n + 1)], n)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries2):
            return NotImplemented
        return self.orders == other.orders and self.table == other.table


# ---------------------------------------------------------------------------
# product specifications

@dataclass(frozen=True)
class Factor:
    """prod_{k=start}^{stop} (1 + sign * u^(a k + b) v^(c k + d))^power."""

    u: tuple[int, int]
    v: tuple[int, int] = (0, 0)
    sign: int = 1
    power: int = 1
    start: int = 1
    stop: Optional[int] = None

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.u[0] < 0 or self.v[0] < 0:
            raise ValueError("exponent slopes must be nonnegative")
        if self.stop is None and self.u[0] == 0 and self.v[0] == 0:
            raise ValueError("infinite product with constant exponent")


@dataclass(frozen=True)
class ProductSpec:
    factors: tuple[Factor, ...] = ()
    scalar: Fraction = Fraction(1)
    prefactor: tuple[int, int] = (0, 0)
    variables: int = 1

    def __mul__(self, other: "ProductSpec") -> "ProductSpec":
        return ProductSpec(
            self.factors + other.factors,
            _frac(self.scalar) * _frac(other.scalar),
            (self.prefactor[0] + other.prefactor[0], self.prefactor[1] + other.prefactor[1]),
            max(self.variables, other.variables),
        )


def _apply1(c: list, e: int, sign: int, power: int, n: int) -> Fraction:
    """Multiply coefficient list in place by (1 + sign x^e)^power; returns scalar for e == 0."""
    if e == 0:
        base = Fraction(1 + sign)
        if power < 0 and base == 0:
            raise NonUnitError("division by non-unit")
        return base ** power
    if e > n:
        return Fraction(1)
    if power > 0:
        for _ in range(power):
            for i in range(n, e - 1, -1):
                if c[i - e]:
                    c[i] += sign * c[i - e]
    else:
        for _ in range(-power):
            for i in range(e, n + 1):
                if c[i - e]:
                    c[i] -= sign * c[i - e]
    return Fraction(1)


def _apply2(t: list, eu: int, ev: int, sign: int, power: int, nu: int, nv: int) -> Fraction:
    if eu == 0 and ev == 0:
        base = Fraction(1 + sign)
        if power < 0 and base == 0:
            raise NonUnitError("division by non-unit")
        return base ** power
    if eu > nu or ev > nv:
        return Fraction(1)
    if power > 0:
        for _ in range(power):
            for i in range(nu, eu - 1, -1):
                for j in range(nv, ev - 1, -1):
                    if t[i - eu][j - ev]:
                        t[i][j] += sign * t[i - eu][j - ev]
    else:
        for _ in range(-power):
            for i in range(eu, nu + 1):
                for j in range(ev, nv + 1):
                    if t[i - eu][j - ev]:
                        t[i][j] -= sign * t[i - eu][j - ev]
    return Fraction(1)


def _k_range(f: Factor, limits: tuple[int, ...]):
    k = f.start
    while f.stop is None or k <= f.stop:
        eu = f.u[0] * k + f.u[1]
        ev = f.v[0] * k + f.v[1]
        if eu < 0 or ev < 0:
            raise ValueError("negative exponent in factor")
        if f.stop is None and (eu > limits[0] or (len(limits) > 1 and ev > limits[1])):
            break
        yield eu, ev
        k += 1


def expand(spec: ProductSpec, order) -> Union[TruncatedSeries1, TruncatedSeries2]:
    """Expand spec exactly; order is an int (one variable) or a pair (two variables)."""
    scalar = _frac(spec.scalar)
    if spec.variables == 1:
        n = int(order)
        c = [Fraction(0)] * (n + 1)
        c[0] = Fraction(1)
        for f in spec.factors:
            if f.v != (0, 0):
                raise ValueError("second variable in a one-variable spec")
            for eu, _ in _k_range(f, (n,)):
                scalar *= _apply1(c, eu, f.sign, f.power, n)
        s = TruncatedSeries1(c, n) * scalar
        if spec.prefactor[0]:
            s = TruncatedSeries1.monomial(spec.prefactor[0], n) * s
        return s
    nu, nv = order
    t = [[Fraction(0)] * (nv + 1) for _ in range(nu + 1)]
    t[0][0] = Fraction(1)
    for f in spec.factors:
        for eu, ev in _k_range(f, (nu, nv)):
            scalar *= _apply2(t, eu, ev, f.sign, f.power, nu, nv)
    out = TruncatedSeries2((nu, nv), t) * scalar
    a, b = spec.prefactor
    if a or b:
        sh = TruncatedSeries2((nu, nv))
        for i in range(nu + 1 - a):
            for j in range(nv + 1 - b):
                sh.table[i + a][j + b] = out.table[i][j]
        out = sh
    return out


def coefficient(series, *exps: int) -> Fraction:
    return series.coefficient(*exps)


# small constructors -----------------------------------------------------------

def prod(*factors: Factor, scalar: Number = 1, prefactor: int = 0) -> ProductSpec:
    return ProductSpec(tuple(factors), _frac(scalar), (prefactor, 0), 1)


def qpoch(a_exp: int, step: int, sign: int = -1, power: int = 1, count: Optional[int] = None) -> Factor:
    """(c x^a; x^step)_count with c = -sign, i.e. prod_i (1 + sign x^(a + i step)).

    count=None gives the infinite product.
    """
    stop = None if count is None else count - 1
    return Factor((step, a_exp), sign=sign, power=power, start=0, stop=stop)


def one_var(spec_factors: Sequence[Factor], order: int, scalar: Number = 1, prefactor: int = 0) -> TruncatedSeries1:
    return expand(prod(*spec_factors, scalar=scalar, prefactor=prefactor), order)
