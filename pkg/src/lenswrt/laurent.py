"""Laurent polynomials in one variable with exact coefficients.

Coefficients are ints, Fractions, or CyclotomicNumbers (numeric
coefficients are tolerated only for interpolation output).  No zero
coefficient is ever stored.  RationalFunction provides the fraction
field needed for kernel computations.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

from .cyclotomic import CyclotomicNumber, embed_complex


def _simplify_coeff(c):
    if isinstance(c, CyclotomicNumber):
        if c.is_rational():
            r = c.rational_value()
            return int(r) if r.denominator == 1 else r
        return c
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, (int, float, complex)):
        return c
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def coeff_div(a, b):
    """Exact coefficient quotient a / b in Q or Q(xi_N)."""
    if isinstance(a, CyclotomicNumber) or isinstance(b, CyclotomicNumber):
        if not isinstance(a, CyclotomicNumber):
            a = CyclotomicNumber.from_rational(a)
        return _simplify_coeff(a / b)
    return _simplify_coeff(Fraction(a) / Fraction(b))


def coeff_inv(b):
    """Multiplicative inverse of a coefficient."""
    if isinstance(b, CyclotomicNumber):
        return _simplify_coeff(b.inverse())
    return _simplify_coeff(1 / Fraction(b))


def coeff_conj(c):
    if isinstance(c, CyclotomicNumber):
        return c.conjugate()
    return c


class LaurentPoly:
    """Map from integer exponents to exact coefficients, zero terms dropped."""

    __slots__ = ("_var", "_terms")

    def __init__(self, var: str, terms=None):
        self._var = var
        clean: dict[int, object] = {}
        if terms:
            for e, c in terms.items():
                c = _simplify_coeff(c)
                if c:
                    clean[int(e)] = c
        self._terms = clean

    # --- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, var: str) -> LaurentPoly:
        return cls(var)

    @classmethod
    def one(cls, var: str) -> LaurentPoly:
        return cls(var, {0: 1})

    @classmethod
    def monomial(cls, var: str, exponent: int, coeff=1) -> LaurentPoly:
        return cls(var, {exponent: coeff})

    # --- accessors ----------------------------------------------------------

    @property
    def var(self) -> str:
        return self._var

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, exponent: int):
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def trailing_coeff(self):
        return self._terms[self.valuation()]

    def leading_coeff(self):
        return self._terms[self.degree()]

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    # --- arithmetic -----------------------------------------------------------

    def _check_var(self, other: LaurentPoly):
        if self._var != other._var and self._terms and other._terms:
            raise ValueError(f"variable mismatch: {self._var} vs {other._var}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = LaurentPoly(self._var, {0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_var(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = _simplify_coeff(out.get(e, 0) + c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        result = LaurentPoly.__new__(LaurentPoly)
        result._var = self._var if self._terms or not other._terms else other._var
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        result = LaurentPoly.__new__(LaurentPoly)
        result._var = self._var
        result._terms = {e: -c for e, c in self._terms.items()}
        return result

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = LaurentPoly(self._var, {0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_var(other)
        out: dict[int, object] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = _simplify_coeff(out.get(e, 0) + c1 * c2)
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        result = LaurentPoly.__new__(LaurentPoly)
        result._var = self._var
        result._terms = out
        return result

    __rmul__ = __mul__

    def scale(self, c) -> LaurentPoly:
        c = _simplify_coeff(c)
        if not c:
            return LaurentPoly(self._var)
        out = {}
        for e, v in self._terms.items():
            s = _simplify_coeff(v * c)
            if s:
                out[e] = s
        result = LaurentPoly.__new__(LaurentPoly)
        result._var = self._var
        result._terms = out
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by var^k."""
        result = LaurentPoly.__new__(LaurentPoly)
        result._var = self._var
        result._terms = {e + k: c for e, c in self._terms.items()}
        return result

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers only for monomials; use shift")
        result = LaurentPoly.one(self._var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj_coeffs(self) -> LaurentPoly:
        """Coefficient-wise complex conjugation (exponents untouched)."""
        return LaurentPoly(self._var, {e: coeff_conj(c) for e, c in self._terms.items()})

    def map_coeffs(self, fn) -> LaurentPoly:
        return LaurentPoly(self._var, {e: fn(c) for e, c in self._terms.items()})

    def subst_signed_power(self, p: int, new_var: str) -> LaurentPoly:
        """Substitute var -> -(new_var)^p, e.g. A -> -z^p."""
        return LaurentPoly(
            new_var, {p * e: (c if e % 2 == 0 else -c) for e, c in self._terms.items()}
        )

    # --- exact division -----------------------------------------------------

    def divexact(self, other: LaurentPoly) -> LaurentPoly:
        """Exact quotient in the Laurent ring; raises if division leaves a remainder."""
        if other.is_zero():
            raise ZeroDivisionError("Laurent division by zero")
        if self.is_zero():
            return LaurentPoly(self._var)
        self._check_var(other)
        quot, rem = _poly_divmod(self, other)
        if not rem.is_zero():
            raise ArithmeticError("division is not exact")
        return quot

    def __call__(self, z):
        """Evaluate at a numeric point (float/complex/mpmath)."""
        total = mpmath.mpc(0)
        for e, c in self._terms.items():
            cv = embed_complex(c) if isinstance(c, (int, Fraction, CyclotomicNumber)) else mpmath.mpc(c)
            total += cv * mpmath.mpc(z) ** e
        return total

    def eval_at_unit_root(self, numerator: int, denominator: int, precision: int = 53):
        """Value at e^(2 pi i numerator / denominator), exponents reduced first."""
        with mpmath.workprec(precision):
            total = mpmath.mpc(0)
            for e, c in self._terms.items():
                cv = (
                    embed_complex(c, precision)
                    if isinstance(c, (int, Fraction, CyclotomicNumber))
                    else mpmath.mpc(c)
                )
                arg = (e * numerator) % denominator
                total += cv * mpmath.expjpi(mpmath.mpf(2 * arg) / denominator)
            return total

    # --- comparisons ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = LaurentPoly(self._var, {0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self._terms and other._terms and self._var != other._var:
            return False
        if set(self._terms) != set(other._terms):
            return False
        return all(other._terms[e] == c for e, c in self._terms.items())

    __hash__ = None

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                parts.append(f"({c})")
            elif e == 1:
                parts.append(f"({c})*{self._var}")
            else:
                parts.append(f"({c})*{self._var}^{e}")
        return " + ".join(parts)


def _poly_divmod(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Division of num by den allowing monomial units: num = quot * den + rem."""
    var = num.var
    if num.is_zero():
        return LaurentPoly(var), LaurentPoly(var)
    nshift = num.valuation()
    dshift = den.valuation()
    n = {e - nshift: c for e, c in num._terms.items()}
    d = {e - dshift: c for e, c in den._terms.items()}
    ddeg = max(d)
    dlead_inv = coeff_inv(d[ddeg])  # hoisted: one field inversion per division
    quot: dict[int, object] = {}
    while n:
        ndeg = max(n)
        if ndeg < ddeg:
            break
        c = _simplify_coeff(n[ndeg] * dlead_inv)
        quot[ndeg - ddeg] = c
        for e, dc in d.items():
            tgt = ndeg - ddeg + e
            s = _simplify_coeff(n.get(tgt, 0) - c * dc)
            if s:
                n[tgt] = s
            else:
                n.pop(tgt, None)
    q = LaurentPoly(var, quot).shift(nshift - dshift)
    r = LaurentPoly(var, n).shift(nshift)
    return q, r


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic valuation-0 gcd of the polynomial parts (a unit times any common divisor)."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    var = a.var if a else b.var
    r0, r1 = a, b
    while not r1.is_zero():
        _, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
    r0 = r0.shift(-r0.valuation())
    return r0.scale(coeff_div(1, r0.leading_coeff()))


class RationalFunction:
    """Quotient of Laurent polynomials, reduced, denominator monic with valuation 0."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.one(num.var)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num = LaurentPoly(num.var)
            self.den = LaurentPoly.one(num.var)
            return
        g = laurent_gcd(num, den)
        if not (g.is_constant() and g.coeff(0) == 1):
            num = num.divexact(g)
            den = den.divexact(g)
        # move the denominator's unit part (lead coeff and monomial) into num
        shift = den.valuation()
        lead = den.leading_coeff()
        den = den.shift(-shift).scale(coeff_div(1, lead))
        num = num.shift(-shift).scale(coeff_div(1, lead))
        self.num = num
        self.den = den

    @classmethod
    def from_scalar(cls, c, var: str) -> RationalFunction:
        return cls(LaurentPoly(var, {0: c}))

    @property
    def var(self) -> str:
        return self.num.var if self.num else self.den.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den == LaurentPoly.one(self.den.var)

    def as_polynomial(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self!r} is not a Laurent polynomial")
        return self.num

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = RationalFunction.__new__(RationalFunction)
        r.num = -self.num
        r.den = self.den
        return r

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return RationalFunction.from_scalar(other, self.var)
        return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None

    def __repr__(self) -> str:
        if self.is_polynomial():
            return repr(self.num)
        return f"({self.num!r}) / ({self.den!r})"
