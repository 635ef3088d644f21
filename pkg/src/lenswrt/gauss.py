"""Generalized Gauss sums over Z/p, exactly, in Q(xi_p).

gauss_sum sums xi_p^(a n^2 + b n) directly; gauss_closed_form evaluates
the same sums through Jacobi-symbol formulas in the cases where such
formulas exist (a multiple of p; p an odd prime; p twice an odd prime),
expressed entirely inside Z[xi_p] by writing eps(p) sqrt(p) as the
quadratic sum gauss_sum(p, 1, 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cyclotomic import CyclotomicNumber, root_of_unity
from .errors import UnsupportedCase
from .numtheory import is_prime, jacobi_symbol, mod_inverse


@dataclass(frozen=True)
class GaussSumSpec:
    """Parameters (p, a, b) of sum_{n=0}^{p-1} xi_p^(a n^2 + b n), reduced mod p."""

    p: int
    a: int
    b: int

    def __post_init__(self):
        if self.p < 2:
            raise ValueError(f"modulus must be >= 2, got {self.p}")
        object.__setattr__(self, "a", self.a % self.p)
        object.__setattr__(self, "b", self.b % self.p)


def gauss_sum(spec, a: int | None = None, b: int | None = None) -> CyclotomicNumber:
    """Direct summation of sum_{n=0}^{p-1} xi_p^(a n^2 + b n).

    Accepts either a GaussSumSpec or the three integers (p, a, b).
    """
    if not isinstance(spec, GaussSumSpec):
        spec = GaussSumSpec(spec, a, b)
    p_, a_, b_ = spec.p, spec.a, spec.b
    counts = [0] * p_
    for n in range(p_):
        counts[(a_ * n * n + b_ * n) % p_] += 1
    return CyclotomicNumber(p_, counts)


def g_pm(p: int, q: int, c: int, k: int, sign: int) -> CyclotomicNumber:
    """G_sign(p, q, c, k) = gauss_sum(p, qk, qc + q + sign), sign in {+1, -1}."""
    if math.gcd(q, p) != 1:
        raise ValueError(f"(q, p) must be coprime, got ({q}, {p})")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return gauss_sum(GaussSumSpec(p, q * k, q * c + q + sign))


def vanishes_mod4(p: int, c: int) -> bool:
    """True iff p = 0 mod 4 and c odd, which forces both G_+- sums to vanish."""
    return p % 4 == 0 and c % 2 == 1


def gauss_closed_form(spec: GaussSumSpec) -> CyclotomicNumber:
    """Closed-form value of gauss_sum(spec), exact in Z[xi_p].

    Supported: a = 0 mod p for any p; p an odd prime; p twice an odd prime.
    Raises UnsupportedCase otherwise.
    """
    p, a, b = spec.p, spec.a, spec.b
    if a == 0:
        # geometric sum
        if b == 0:
            return CyclotomicNumber.from_rational(p, p)
        return CyclotomicNumber.zero(p)
    if is_prime(p) and p % 2 == 1:
        return _odd_prime_closed_form(p, a, b).lift(p)
    if p % 2 == 0 and is_prime(p // 2) and p // 2 % 2 == 1:
        s = p // 2
        if (a + b) % 2 == 1:
            # terms at n and n + s cancel in pairs
            return CyclotomicNumber.zero(p)
        half = mod_inverse(2, s)
        inner = GaussSumSpec(s, a * half, b * half)
        if inner.a == 0:
            val = gauss_closed_form(inner)
        else:
            val = _odd_prime_closed_form(s, inner.a, inner.b)
        return (2 * val).lift(p)
    raise UnsupportedCase(f"no closed form implemented for p = {p} with a != 0 mod p")


def _odd_prime_closed_form(p: int, a: int, b: int) -> CyclotomicNumber:
    """(a/p) xi_p^(-b^2 (4a)^*) gauss_sum(p, 1, 0), by completing the square."""
    a %= p
    b %= p
    if a == 0:
        if b == 0:
            return CyclotomicNumber.from_rational(p, p)
        return CyclotomicNumber.zero(p)
    quarter = mod_inverse(4 * a, p)
    phase = root_of_unity(p, -b * b * quarter)
    return jacobi_symbol(a, p) * phase * gauss_sum(GaussSumSpec(p, 1, 0))
