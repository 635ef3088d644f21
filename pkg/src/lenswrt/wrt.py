"""The p-family of Laurent polynomials computing sqrt(r) * w_r(L(p,q), -).

For r = k (mod p) the invariant of the colored meridian mu_c is
f(p,q,c,k) evaluated at e^(2 pi i / 4pr), where f has the shape

    sign * (i / sqrt(2p)) * z^(12 p s(q,p) + q(c^2+2c))
         * (G_+ z^(2(c+1)) - G_- z^(-2(c+1)))

with sign = (-1)^(c+1) and G_+- generalized Gauss sums in Z[xi_p].
jeffrey_oracle evaluates the same invariant along an independent route
(a direct double sum with the framing correction phi), deliberately in
floating point, for cross-validation.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .gauss import g_pm
from .laurent import LaurentPoly
from .numtheory import SL2Word, dedekind_sum, mod_inverse, rademacher_phi, sl2_expand, _validate_pq
from .skein import SkeinElement


class LensSpace:
    """Validated surgery data (p, q) with the derived quantities used throughout.

    d = q* mod p, b = (qd - 1)/p (so qd - bp = 1), dedekind = s(q, p), and
    phi is the framing-correction integer of the gluing matrix.
    """

    __slots__ = ("p", "q", "d", "b", "dedekind", "phi")

    def __init__(self, p: int, q: int):
        _validate_pq(p, q)
        self.p = p
        self.q = q
        self.d = mod_inverse(q, p)
        self.b = (q * self.d - 1) // p
        self.dedekind = dedekind_sum(q, p)
        self.phi = rademacher_phi(p, q)
        if (6 * p * self.dedekind).denominator != 1:
            raise AssertionError(f"6 p s(q,p) is not an integer at ({p}, {q})")

    def sl2_word(self) -> SL2Word:
        """The continued-fraction factorization of the gluing matrix."""
        return sl2_expand(self.p, self.q)

    def __repr__(self) -> str:
        return f"LensSpace({self.p}, {self.q})"

    def __eq__(self, other) -> bool:
        return isinstance(other, LensSpace) and (self.p, self.q) == (other.p, other.q)

    def __hash__(self):
        return hash((self.p, self.q))


@dataclass(frozen=True)
class FPolynomial:
    """prefactor_sign * (i / sqrt(2p)) * body(z), body over Q(xi_p).

    The scalar i / sqrt(2p) is kept symbolic; it is only multiplied in by
    the numeric evaluators.
    """

    p: int
    prefactor_sign: int
    body: LaurentPoly

    def __post_init__(self):
        if self.prefactor_sign not in (1, -1):
            raise ValueError(f"prefactor sign must be +-1, got {self.prefactor_sign}")

    @property
    def signed_body(self) -> LaurentPoly:
        """body with the (-1)^(c+1) sign folded in; the full value divided by i/sqrt(2p)."""
        return self.body if self.prefactor_sign == 1 else -self.body

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def evaluate(self, numerator: int, denominator: int, precision: int = 53) -> mpmath.mpc:
        """Full value (scale included) at z = e^(2 pi i numerator/denominator)."""
        with mpmath.workprec(precision):
            val = self.body.eval_at_unit_root(numerator, denominator, precision)
            scale = mpmath.mpc(0, self.prefactor_sign) / mpmath.sqrt(2 * self.p)
            return scale * val

    def __eq__(self, other) -> bool:
        if not isinstance(other, FPolynomial):
            return NotImplemented
        return self.p == other.p and self.signed_body == other.signed_body


_F_CACHE: dict[tuple[int, int, int, int], FPolynomial] = {}
_F_LOCK = threading.Lock()


def f_poly(space: LensSpace, c: int, k: int) -> FPolynomial:
    """The Laurent polynomial attached to (L(p,q), mu_c) on the class r = k mod p.

    Cached by (p, q, c, k); repeated calls return the same object.
    """
    p, q = space.p, space.q
    if not 0 <= k < p:
        raise ValueError(f"k must lie in [0, {p}), got {k}")
    key = (p, q, c, k)
    cached = _F_CACHE.get(key)
    if cached is not None:
        return cached
    base = Fraction(12 * p) * space.dedekind + q * (c * c + 2 * c)
    if base.denominator != 1:
        raise AssertionError(f"non-integer exponent 12 p s + q(c^2+2c) at {key}")
    e0 = int(base)
    gp = g_pm(p, q, c, k, +1)
    gm = g_pm(p, q, c, k, -1)
    off = 2 * (c + 1)
    body = LaurentPoly("z", {e0 + off: gp}) - LaurentPoly("z", {e0 - off: gm})
    sign = -1 if c % 2 == 0 else 1  # (-1)^(c+1)
    result = FPolynomial(p=p, prefactor_sign=sign, body=body)
    with _F_LOCK:
        return _F_CACHE.setdefault(key, result)


def f_link(space: LensSpace, element: SkeinElement, k: int) -> FPolynomial:
    """sum_c f(p,q,c,k) C_c(-z^p) for a skein element with coefficients C_c(A)."""
    if element.p != space.p:
        raise ValueError(f"skein element of order {element.p} in L({space.p},{space.q})")
    total = LaurentPoly("z")
    for c, coeff in enumerate(element.coeffs):
        if coeff.is_zero():
            continue
        fp = f_poly(space, c, k)
        total = total + fp.signed_body * coeff.subst_signed_power(space.p, "z")
    return FPolynomial(p=space.p, prefactor_sign=1, body=total)


def eval_meridian(space: LensSpace, c: int, r: int, precision: int = 53) -> mpmath.mpc:
    """w_r(L(p,q), mu_c): the f-polynomial route, divided by sqrt(r)."""
    if r < 2:
        raise ValueError(f"level parameter r must be >= 2, got {r}")
    fp = f_poly(space, c, r % space.p)
    with mpmath.workprec(precision):
        return fp.evaluate(1, 4 * space.p * r, precision) / mpmath.sqrt(r)


def eval_link(space: LensSpace, element: SkeinElement, r: int, precision: int = 53) -> mpmath.mpc:
    """w_r(L(p,q), J) for a skein element J, through its f-polynomials."""
    if r < 2:
        raise ValueError(f"level parameter r must be >= 2, got {r}")
    fp = f_link(space, element, r % space.p)
    with mpmath.workprec(precision):
        return fp.evaluate(1, 4 * space.p * r, precision) / mpmath.sqrt(r)


def eval_z_combination(space: LensSpace, components, r: int, precision: int = 53) -> mpmath.mpc:
    """w_r of sum_c v_c(z) mu_c for z-rational-function coordinates v_c.

    Used for classes of the extended skein module (e.g. kernel vectors);
    each component is evaluated at z = e^(2 pi i / 4pr).
    """
    if r < 2:
        raise ValueError(f"level parameter r must be >= 2, got {r}")
    with mpmath.workprec(precision):
        total = mpmath.mpc(0)
        denom = 4 * space.p * r
        for c, comp in enumerate(components):
            if isinstance(comp, LaurentPoly):
                num_val, den_val = comp, None
            else:
                num_val, den_val = comp.num, comp.den
            if num_val.is_zero():
                continue
            weight = num_val.eval_at_unit_root(1, denom, precision)
            if den_val is not None and not den_val == LaurentPoly.one("z"):
                weight /= den_val.eval_at_unit_root(1, denom, precision)
            total += weight * eval_meridian(space, c, r, precision)
        return total


def jeffrey_oracle(space: LensSpace, c: int, r: int, precision: int = 53) -> mpmath.mpc:
    """w_r(L(p,q), mu_c) by the direct double sum with framing correction.

    Independent of the f-polynomial machinery: all roots of unity are
    evaluated as complex exponentials at the requested precision.  The
    underlying sum computes the invariant of (-1)^(l-1) mu_(l-1) with
    l = c + 1; the result is converted to plain mu_c.
    """
    if r < 2:
        raise ValueError(f"level parameter r must be >= 2, got {r}")
    p, q, b, phi = space.p, space.q, space.b, space.phi
    l = c + 1
    with mpmath.workprec(precision):
        def unit(num: int, den: int) -> mpmath.mpc:
            return mpmath.expjpi(mpmath.mpf(2 * (num % den)) / den)

        total = mpmath.mpc(0)
        big = 4 * r * p * q
        for n in range(1, p + 1):
            g = l + 2 * r * n
            total += unit((q * g + 1) ** 2, big) - unit((q * g - 1) ** 2, big)
        value = mpmath.mpc(0, -1) / mpmath.sqrt(2 * r * p)
        value *= unit(-phi, 4 * r) * unit(b, 4 * r * q) * total
        if c % 2 == 1:
            value = -value
        return value
