"""Exact arithmetic in cyclotomic fields Q(zeta_L).

A scalar is stored as a rational polynomial in zeta_L reduced modulo the
L-th cyclotomic polynomial, with L always the *minimal* conductor of the
value.  Two scalars are therefore equal iff their (conductor, coefficient
map) pairs are equal, zero is the empty map, and all rationals are kept in
lowest terms by ``fractions.Fraction``.

Mixed-conductor arithmetic lifts both operands into Q(zeta_lcm) and reduces
the result back down, so roots of unity of any order can be combined freely
("the field is enlarged on demand").
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

# All conductors in the intended workloads are small (orders <= 30 in the
# classification tables); the bound only guards against runaway lcm growth.
CONDUCTOR_LIMIT = 256

RationalLike = Union[int, Fraction]
ScalarLike = Union["Cyclo", int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    phi = n
    for p in _prime_factors(n):
        phi -= phi // p
    return phi


def _poly_divmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    # dense coefficient lists, lowest degree first; den must be monic-led
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    quo = [_ZERO] * max(1, len(num) - dd)
    while len(num) - 1 >= dd:
        c = num[-1] / lead
        shift = len(num) - 1 - dd
        quo[shift] = c
        for i, dc in enumerate(den):
            num[shift + i] -= c * dc
        while num and num[-1] == 0:
            num.pop()
        if not num:
            break
    return quo, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n > CONDUCTOR_LIMIT:
        raise ValueError(f"conductor {n} exceeds CONDUCTOR_LIMIT={CONDUCTOR_LIMIT}")
    poly = [_ZERO] * (n + 1)
    poly[0] = Fraction(-1)
    poly[n] = _ONE
    for d in _divisors(n):
        if d == n:
            continue
        quo, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
        assert not rem, f"Phi_{d} does not divide x^{n}-1"
        poly = quo
    return tuple(poly)


def _reduce_mod_phi(L: int, raw: dict[int, Fraction]) -> dict[int, Fraction]:
    """Reduce a zeta_L-polynomial with arbitrary integer exponents."""
    folded: dict[int, Fraction] = {}
    for e, c in raw.items():
        if c == 0:
            continue
        e %= L
        folded[e] = folded.get(e, _ZERO) + c
    phi = euler_phi(L)
    if all(e < phi for e in folded):
        return {e: c for e, c in folded.items() if c != 0}
    dense = [_ZERO] * L
    for e, c in folded.items():
        dense[e] = c
    _, rem = _poly_divmod(dense, list(cyclotomic_polynomial(L)))
    return {e: c for e, c in enumerate(rem) if c != 0}


@lru_cache(maxsize=None)
def _descent_solver(L: int, p: int):
    """RREF data for testing membership of Q(zeta_{L/p}) inside Q(zeta_L)."""
    d = L // p
    cols = []
    for j in range(euler_phi(d)):
        cols.append(_reduce_mod_phi(L, {(p * j) % L: _ONE}))
    basis: list[tuple[int, dict[int, Fraction], dict[int, Fraction]]] = []
    for j, col in enumerate(cols):
        col = dict(col)
        coord = {j: _ONE}
        for piv, bcol, bcoord in basis:
            c = col.get(piv)
            if c:
                for e, v in bcol.items():
                    col[e] = col.get(e, _ZERO) - c * v
                    if col[e] == 0:
                        del col[e]
                for e, v in bcoord.items():
                    coord[e] = coord.get(e, _ZERO) - c * v
                    if coord[e] == 0:
                        del coord[e]
        assert col, "embedded basis vectors must stay independent"
        piv = min(col)
        inv = 1 / col[piv]
        col = {e: v * inv for e, v in col.items()}
        coord = {e: v * inv for e, v in coord.items()}
        for opiv, ocol, ocoord in basis:
            c = ocol.get(piv)
            if c:
                for e, v in col.items():
                    ocol[e] = ocol.get(e, _ZERO) - c * v
                    if ocol[e] == 0:
                        del ocol[e]
                for e, v in coord.items():
                    ocoord[e] = ocoord.get(e, _ZERO) - c * v
                    if ocoord[e] == 0:
                        del ocoord[e]
        basis.append((piv, col, coord))
    return tuple(basis)


def _try_descend(L: int, p: int, coeffs: dict[int, Fraction]) -> Optional[dict[int, Fraction]]:
    res = dict(coeffs)
    coord: dict[int, Fraction] = {}
    for piv, col, cvec in _descent_solver(L, p):
        c = res.get(piv)
        if not c:
            continue
        for e, v in col.items():
            res[e] = res.get(e, _ZERO) - c * v
            if res[e] == 0:
                del res[e]
        for e, v in cvec.items():
            coord[e] = coord.get(e, _ZERO) + c * v
            if coord[e] == 0:
                del coord[e]
    if res:
        return None
    return coord


def _canonicalize(L: int, coeffs: dict[int, Fraction]) -> tuple[int, dict[int, Fraction]]:
    coeffs = {e: c for e, c in coeffs.items() if c != 0}
    while True:
        if not coeffs or set(coeffs) == {0}:
            return 1, coeffs
        if L % 4 == 2:
            # Q(zeta_{2m}) = Q(zeta_m) for odd m: zeta_{2m} = -zeta_m^{(m+1)/2}
            m = L // 2
            half = (m + 1) // 2
            raw: dict[int, Fraction] = {}
            for e, c in coeffs.items():
                ee = (e * half) % m
                raw[ee] = raw.get(ee, _ZERO) + (c if e % 2 == 0 else -c)
            L, coeffs = m, _reduce_mod_phi(m, raw)
            continue
        for p in _prime_factors(L):
            if L // p == 1:
                continue
            down = _try_descend(L, p, coeffs)
            if down is not None:
                L, coeffs = L // p, down
                break
        else:
            return L, coeffs


class Cyclo:
    """An element of the cyclotomic closure of Q, in canonical form."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: dict[int, Fraction], *, _canonical: bool = False):
        if not _canonical:
            coeffs = _reduce_mod_phi(conductor, {e: Fraction(c) for e, c in coeffs.items()})
            conductor, coeffs = _canonicalize(conductor, coeffs)
        self.conductor = conductor
        self.coeffs = coeffs
        self._hash = None

    @staticmethod
    def from_rational(r: RationalLike) -> "Cyclo":
        r = Fraction(r)
        return Cyclo(1, {0: r} if r else {}, _canonical=True)

    @staticmethod
    def zero() -> "Cyclo":
        return _CYCLO_ZERO

    @staticmethod
    def one() -> "Cyclo":
        return _CYCLO_ONE

    @staticmethod
    def promote(value: ScalarLike) -> "Cyclo":
        if isinstance(value, Cyclo):
            return value
        if isinstance(value, (int, Fraction)):
            return Cyclo.from_rational(value)
        raise TypeError(f"cannot interpret {value!r} as a field scalar")

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_rational(self) -> bool:
        return self.conductor == 1

    def as_fraction(self) -> Fraction:
        if self.conductor != 1:
            raise ValueError(f"{self} is not rational")
        return self.coeffs.get(0, _ZERO)

    # -- arithmetic ------------------------------------------------------

    def _lift(self, L: int) -> dict[int, Fraction]:
        step = L // self.conductor
        return _reduce_mod_phi(L, {e * step: c for e, c in self.coeffs.items()})

    def __add__(self, other: ScalarLike) -> "Cyclo":
        other = Cyclo.promote(other)
        L = math.lcm(self.conductor, other.conductor)
        a = self._lift(L) if L != self.conductor else dict(self.coeffs)
        b = other._lift(L) if L != other.conductor else other.coeffs
        for e, c in b.items():
            a[e] = a.get(e, _ZERO) + c
            if a[e] == 0:
                del a[e]
        return Cyclo(*_canonicalize(L, a), _canonical=True)

    __radd__ = __add__

    def __neg__(self) -> "Cyclo":
        return Cyclo(self.conductor, {e: -c for e, c in self.coeffs.items()}, _canonical=True)

    def __sub__(self, other: ScalarLike) -> "Cyclo":
        return self + (-Cyclo.promote(other))

    def __rsub__(self, other: ScalarLike) -> "Cyclo":
        return Cyclo.promote(other) + (-self)

    def __mul__(self, other: ScalarLike) -> "Cyclo":
        other = Cyclo.promote(other)
        if self.conductor == 1:
            r = self.coeffs.get(0, _ZERO)
            if not r:
                return _CYCLO_ZERO
            return Cyclo(other.conductor, {e: c * r for e, c in other.coeffs.items()}, _canonical=True)
        if other.conductor == 1:
            return other * self
        L = math.lcm(self.conductor, other.conductor)
        a = self._lift(L)
        b = other._lift(L)
        raw: dict[int, Fraction] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = (e1 + e2) % L
                raw[e] = raw.get(e, _ZERO) + c1 * c2
        return Cyclo(*_canonicalize(L, _reduce_mod_phi(L, raw)), _canonical=True)

    __rmul__ = __mul__

    def inv(self) -> "Cyclo":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.conductor == 1:
            return Cyclo.from_rational(1 / self.coeffs[0])
        L = self.conductor
        phi = list(cyclotomic_polynomial(L))
        a = [_ZERO] * euler_phi(L)
        for e, c in self.coeffs.items():
            a[e] = c
        # extended Euclid in Q[x]: u*a + v*phi = gcd = const
        r0, r1 = phi, a
        s0: list[Fraction] = [_ZERO]
        s1: list[Fraction] = [_ONE]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                break
            quo, rem = _poly_divmod(r0, r1)
            s2 = list(s0)
            ln = len(quo) + len(s1) - 1
            while len(s2) < ln:
                s2.append(_ZERO)
            for i, qc in enumerate(quo):
                if qc == 0:
                    continue
                for j, sc in enumerate(s1):
                    s2[i + j] -= qc * sc
            r0, r1 = r1, rem
            s0, s1 = s1, s2
        c = r1[0]
        inv_coeffs = {e: v / c for e, v in enumerate(s1) if v != 0}
        return Cyclo(L, inv_coeffs)

    def __truediv__(self, other: ScalarLike) -> "Cyclo":
        return self * Cyclo.promote(other).inv()

    def __rtruediv__(self, other: ScalarLike) -> "Cyclo":
        return Cyclo.promote(other) * self.inv()

    def __pow__(self, n: int) -> "Cyclo":
        if n < 0:
            return self.inv() ** (-n)
        result = _CYCLO_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- comparison ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclo.from_rational(other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.conductor, tuple(sorted(self.coeffs.items()))))
        return self._hash

    # -- display ---------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            base = f"zeta({self.conductor},{e})" if e else None
            if base is None:
                coef = str(c)
            elif c == 1:
                coef = base
            elif c == -1:
                coef = f"-{base}"
            elif c.denominator == 1:
                coef = f"{c}*{base}"
            else:
                coef = f"({c})*{base}"
            parts.append(coef)
        out = parts[0]
        for part in parts[1:]:
            out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return out

    def __repr__(self) -> str:
        return f"Cyclo({self})"


_CYCLO_ZERO = Cyclo(1, {}, _canonical=True)
_CYCLO_ONE = Cyclo(1, {0: _ONE}, _canonical=True)


@lru_cache(maxsize=None)
def make_root(L: int, k: int) -> Cyclo:
    """The root of unity zeta_L^k as a canonical field scalar."""
    if L < 1:
        raise ValueError("order must be a positive integer")
    return Cyclo(L, {k % L: _ONE})


def order_of(a: ScalarLike) -> Optional[int]:
    """Multiplicative order of ``a`` if it is a root of unity, else None."""
    a = Cyclo.promote(a)
    if a.is_zero():
        raise ValueError("0 has no multiplicative order")
    if a == _CYCLO_ONE:
        return 1
    # the roots of unity inside Q(zeta_c) form the cyclic group of order lcm(2, c)
    bound = math.lcm(2, a.conductor)
    if a ** bound != _CYCLO_ONE:
        return None
    for d in _divisors(bound):
        if a ** d == _CYCLO_ONE:
            return d
    return bound


def is_primitive_pth_root(a: ScalarLike, p: int) -> bool:
    """True iff ``a`` is a primitive p-th root of unity."""
    a = Cyclo.promote(a)
    if a.is_zero():
        return False
    return order_of(a) == p


@lru_cache(maxsize=None)
def qbinom(w: int, j: int, q: Cyclo) -> Cyclo:
    """Gaussian binomial coefficient by the division-free Pascal recurrence.

    C(w,j)_q = C(w-1,j-1)_q + q^j * C(w-1,j)_q, valid at roots of unity.
    """
    if j < 0 or j > w:
        raise ValueError(f"binomial index j={j} outside 0..{w}")
    q = Cyclo.promote(q)
    if j == 0 or j == w:
        return _CYCLO_ONE
    return qbinom(w - 1, j - 1, q) + (q ** j) * qbinom(w - 1, j, q)


def _int_nth_root(x: int, n: int) -> Optional[int]:
    if x < 0:
        return None
    if x in (0, 1):
        return x
    r = round(x ** (1.0 / n))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** n == x:
            return cand
    return None


def nth_root_in_cyclotomics(value: ScalarLike, p: int) -> Optional[Cyclo]:
    """A gamma with gamma**p == value, searched inside cyclotomic fields.

    Handles roots of unity and rational-times-root-of-unity values whose
    rational part is a perfect power.  Returns None when no such gamma is
    found (the caller reports the witness as unavailable in the coefficient
    field).
    """
    value = Cyclo.promote(value)
    if p < 1:
        raise ValueError("root index must be positive")
    if value.is_zero():
        return _CYCLO_ZERO
    n = order_of(value)
    if n is not None:
        for k in range(n):
            if math.gcd(k, n) == 1 or (k == 0 and n == 1):
                if value == make_root(n, k):
                    return make_root(n * p, k)
        raise AssertionError("root of unity must match one primitive power")
    n0 = math.lcm(2, value.conductor)
    big = value ** n0
    if not big.is_rational():
        return None
    r = big.as_fraction()
    total = p * n0
    num = _int_nth_root(abs(r.numerator), total)
    den = _int_nth_root(r.denominator, total)
    if num is None or den is None:
        return None
    rho = Cyclo.from_rational(Fraction(num, den))
    order = 2 * total
    if order > CONDUCTOR_LIMIT:
        return None
    for j in range(order):
        cand = rho * make_root(order, j)
        if cand ** p == value:
            return cand
    return None


class RootOfUnity:
    """zeta_n^k in lowest terms: integer-only arithmetic for table sweeps."""

    __slots__ = ("order", "exponent")

    def __init__(self, order: int, exponent: int):
        if order < 1:
            raise ValueError("order must be positive")
        exponent %= order
        g = math.gcd(order, exponent)
        if exponent == 0:
            order, exponent = 1, 0
        else:
            order, exponent = order // g, exponent // g
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "exponent", exponent)

    def __setattr__(self, *args):
        raise AttributeError("RootOfUnity is immutable")

    @staticmethod
    def one() -> "RootOfUnity":
        return RootOfUnity(1, 0)

    @staticmethod
    def minus_one() -> "RootOfUnity":
        return RootOfUnity(2, 1)

    @staticmethod
    def from_cyclo(z: ScalarLike) -> "RootOfUnity":
        z = Cyclo.promote(z)
        n = order_of(z)
        if n is None:
            raise ValueError(f"{z} is not a root of unity")
        for k in range(n):
            if (math.gcd(k, n) == 1 or n == 1) and z == make_root(n, k):
                return RootOfUnity(n, k)
        raise AssertionError("unreachable: order was certified")

    def to_cyclo(self) -> Cyclo:
        return make_root(self.order, self.exponent)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        n = math.lcm(self.order, other.order)
        return RootOfUnity(n, self.exponent * (n // self.order) + other.exponent * (n // other.order))

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.order, self.exponent * k)

    def inv(self) -> "RootOfUnity":
        return RootOfUnity(self.order, -self.exponent)

    def __neg__(self) -> "RootOfUnity":
        return self * RootOfUnity.minus_one()

    def is_one(self) -> bool:
        return self.order == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return self.order == other.order and self.exponent == other.exponent

    def __hash__(self) -> int:
        return hash((self.order, self.exponent))

    def __repr__(self) -> str:
        return f"RootOfUnity({self.order},{self.exponent})"
