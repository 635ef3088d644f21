"""Exact arithmetic in cyclotomic fields Q(xi_N), xi_N = e^(2 pi i / N).

Values are stored as length-N coefficient vectors over the power basis
1, xi, ..., xi^(N-1), reduced to canonical form modulo the N-th cyclotomic
polynomial, so equality of values is equality of vectors (after lifting to
a common order).  All coefficients are ints or Fractions.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

import mpmath

Scalar = int | Fraction

_ORDER_CACHE: dict[int, tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]] = {}
_ORDER_LOCK = threading.RLock()  # reentrant: computing Phi_n recurses into divisors


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Quotient and remainder of integer polynomials, den monic."""
    num = list(num)
    dd = len(den) - 1
    quot = [0] * max(len(num) - dd, 1)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - dd] = c
        for j, dj in enumerate(den):
            num[i - dd + j] -= c * dj
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    # x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    poly = [0] * (n + 1)
    poly[0], poly[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, list(_order_data(d)[0]))
            if rem != [0]:
                raise AssertionError(f"cyclotomic division left a remainder at n={n}, d={d}")
    return tuple(poly)


def _order_data(n: int) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """(Phi_n coefficients, reduction rows for x^j, deg <= j < n), cached."""
    data = _ORDER_CACHE.get(n)
    if data is not None:
        return data
    with _ORDER_LOCK:
        data = _ORDER_CACHE.get(n)
        if data is not None:
            return data
        phi = cyclotomic_polynomial(n)
        deg = len(phi) - 1
        rows: list[tuple[int, ...]] = []
        if deg < n:
            row = [-c for c in phi[:deg]]  # x^deg mod Phi_n
            rows.append(tuple(row))
            for _ in range(deg + 1, n):
                top = row[-1]
                row = [0] + row[:-1]
                if top:
                    for i in range(deg):
                        row[i] -= top * phi[i]
                rows.append(tuple(row))
        data = (phi, tuple(rows))
        _ORDER_CACHE[n] = data
        return data


def _norm_scalar(x) -> Scalar:
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(x, int):
        return int(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact coefficient")


def _mobius(n: int) -> int:
    result = 1
    f = 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            result = -result
        f += 1
    if n > 1:
        result = -result
    return result


def _euler_phi(n: int) -> int:
    result = n
    f = 2
    m = n
    while f * f <= m:
        if m % f == 0:
            while m % f == 0:
                m //= f
            result -= result // f
        f += 1
    if m > 1:
        result -= result // m
    return result


class CyclotomicNumber:
    """An element of Q(xi_N) in canonical reduced form."""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs, *, _canonical: bool = False):
        if order < 1:
            raise ValueError(f"order must be >= 1, got {order}")
        self._order = order
        if _canonical:
            self._coeffs = coeffs
            return
        vec = [_norm_scalar(c) for c in coeffs]
        if len(vec) > order:
            raise ValueError(f"coefficient vector longer than order {order}")
        vec += [0] * (order - len(vec))
        self._coeffs = self._reduce(order, vec)

    @staticmethod
    def _reduce(order: int, vec: list[Scalar]) -> tuple[Scalar, ...]:
        phi, rows = _order_data(order)
        deg = len(phi) - 1
        for j in range(order - 1, deg - 1, -1):
            c = vec[j]
            if c:
                vec[j] = 0
                row = rows[j - deg]
                for i in range(deg):
                    if row[i]:
                        vec[i] = _norm_scalar(vec[i] + c * row[i])
        return tuple(vec[i] if not isinstance(vec[i], Fraction) or vec[i].denominator != 1
                     else int(vec[i]) for i in range(order))

    # --- constructors ----------------------------------------------------

    @classmethod
    def from_rational(cls, value, order: int = 1) -> CyclotomicNumber:
        vec = [0] * order
        vec[0] = _norm_scalar(Fraction(value))
        return cls(order, vec)

    @classmethod
    def zero(cls, order: int = 1) -> CyclotomicNumber:
        return cls(order, (0,) * order, _canonical=True)

    # --- basic accessors -------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[Scalar, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def __bool__(self) -> bool:
        return any(self._coeffs)

    def is_rational(self) -> bool:
        return not any(self._coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._coeffs[0])

    # --- order management -------------------------------------------------

    def lift(self, order: int) -> CyclotomicNumber:
        """Re-express in Q(xi_order); order must be a multiple of self.order."""
        if order == self._order:
            return self
        if order % self._order != 0:
            raise ValueError(f"cannot lift order {self._order} into order {order}")
        step = order // self._order
        vec: list[Scalar] = [0] * order
        for j, c in enumerate(self._coeffs):
            if c:
                vec[j * step] = c
        return CyclotomicNumber(order, vec)

    @staticmethod
    def _common(x: CyclotomicNumber, y: CyclotomicNumber):
        if x._order == y._order:
            return x, y
        n = math.lcm(x._order, y._order)
        return x.lift(n), y.lift(n)

    def _coerce(self, other) -> CyclotomicNumber | None:
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(other, 1)
        return None

    # --- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._common(self, o)
        vec = [_norm_scalar(x + y) for x, y in zip(a._coeffs, b._coeffs)]
        return CyclotomicNumber(a._order, tuple(vec), _canonical=True)

    __radd__ = __add__

    def __neg__(self) -> CyclotomicNumber:
        return CyclotomicNumber(self._order, tuple(-c for c in self._coeffs), _canonical=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational():
            r = o._coeffs[0]
            return CyclotomicNumber(
                self._order, tuple(_norm_scalar(c * r) for c in self._coeffs), _canonical=True
            )
        if self.is_rational():
            r = self._coeffs[0]
            return CyclotomicNumber(
                o._order, tuple(_norm_scalar(c * r) for c in o._coeffs), _canonical=True
            )
        a, b = self._common(self, o)
        n = a._order
        vec: list[Scalar] = [0] * n
        if all(type(c) is int for c in a._coeffs) and all(type(c) is int for c in b._coeffs):
            # integer convolution without per-entry normalization
            for i, ci in enumerate(a._coeffs):
                if ci:
                    for j, cj in enumerate(b._coeffs):
                        if cj:
                            k = i + j
                            if k >= n:
                                k -= n
                            vec[k] += ci * cj
        else:
            for i, ci in enumerate(a._coeffs):
                if not ci:
                    continue
                for j, cj in enumerate(b._coeffs):
                    if cj:
                        k = i + j
                        if k >= n:
                            k -= n
                        vec[k] = _norm_scalar(vec[k] + ci * cj)
        return CyclotomicNumber(n, self._reduce(n, vec), _canonical=True)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> CyclotomicNumber:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CyclotomicNumber.from_rational(1, self._order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> CyclotomicNumber:
        """Multiplicative inverse, via the extended Euclidean algorithm mod Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic division by zero")
        if self.is_rational():
            return CyclotomicNumber.from_rational(1 / Fraction(self._coeffs[0]), self._order)
        phi = [Fraction(c) for c in _order_data(self._order)[0]]
        deg = len(phi) - 1
        f = [Fraction(c) for c in self._coeffs[:deg]]
        while len(f) > 1 and f[-1] == 0:
            f.pop()
        # extended Euclid: u * f == gcd (mod phi); gcd is a nonzero constant
        r0, r1 = phi, f
        u0, u1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            u0, u1 = u1, _frac_poly_sub(u0, _frac_poly_mul(q, u1))
        if len(r0) != 1:
            raise ZeroDivisionError("element is a zero divisor (not a unit)")
        inv_const = 1 / r0[0]
        vec = [c * inv_const for c in u0]
        return CyclotomicNumber(self._order, vec)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # --- field automorphisms ----------------------------------------------

    def conjugate(self) -> CyclotomicNumber:
        """Complex conjugation: the field map xi_N -> xi_N^(-1)."""
        return self.galois(-1)

    def galois(self, a: int) -> CyclotomicNumber:
        """The map xi_N -> xi_N^a for a coprime to N (coefficient permutation)."""
        n = self._order
        if math.gcd(a % n, n) != 1:
            raise ValueError(f"exponent {a} is not coprime to the order {n}")
        vec: list[Scalar] = [0] * n
        for j, c in enumerate(self._coeffs):
            if c:
                k = (j * a) % n
                vec[k] = _norm_scalar(vec[k] + c)
        return CyclotomicNumber(n, vec)

    # --- comparisons --------------------------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._order == o._order:
            return self._coeffs == o._coeffs
        a, b = self._common(self, o)
        return a._coeffs == b._coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self._coeffs[0]))
        # normalized trace Tr(x)/phi(N) is independent of the ambient order
        n = self._order
        tr = Fraction(0)
        for j, c in enumerate(self._coeffs):
            if c:
                m = n // math.gcd(j, n)
                tr += Fraction(c) * _mobius(m) / _euler_phi(m)
        return hash(("cyclotomic", tr))

    # --- numeric embedding ---------------------------------------------------

    def embed(self, precision: int = 53) -> mpmath.mpc:
        """Numeric value under xi_N -> e^(2 pi i / N) at the given precision."""
        return embed_complex(self, precision)

    # --- display ---------------------------------------------------------------

    def __repr__(self) -> str:
        if self.is_rational():
            return str(self._coeffs[0])
        terms = []
        for j, c in enumerate(self._coeffs):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                unit = f"zeta{self._order}" if j == 1 else f"zeta{self._order}^{j}"
                if c == 1:
                    terms.append(unit)
                elif c == -1:
                    terms.append(f"-{unit}")
                else:
                    terms.append(f"{c}*{unit}")
        return " + ".join(terms).replace("+ -", "- ")


def _frac_poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    quot = [Fraction(0)] * max(len(num) - dd, 1)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        c /= lead
        quot[i - dd] = c
        for j, dj in enumerate(den):
            num[i - dd + j] -= c * dj
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


def _frac_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _frac_poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def root_of_unity(order: int, exponent: int = 1) -> CyclotomicNumber:
    """Canonical form of xi_order^exponent."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    e = exponent % order
    vec = [0] * order
    vec[e] = 1
    return CyclotomicNumber(order, vec)


def conjugate(x: CyclotomicNumber) -> CyclotomicNumber:
    return x.conjugate()


def embed_complex(x, precision: int = 53) -> mpmath.mpc:
    """Complex value of a CyclotomicNumber (or exact scalar) at `precision` bits."""
    if precision < 53:
        raise ValueError(f"precision must be >= 53 bits, got {precision}")
    with mpmath.workprec(precision):
        if isinstance(x, int):
            return mpmath.mpc(x)
        if isinstance(x, Fraction):
            return mpmath.mpc(mpmath.mpf(x.numerator) / x.denominator)
        total = mpmath.mpc(0)
        n = x.order
        for j, c in enumerate(x.coeffs):
            if c:
                cf = mpmath.mpf(c) if isinstance(c, int) else mpmath.mpf(c.numerator) / c.denominator
                total += cf * mpmath.expjpi(mpmath.mpf(2 * j) / n)
        return total
