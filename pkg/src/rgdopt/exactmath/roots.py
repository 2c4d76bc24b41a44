"""Certified real-root work: Sturm chains, isolation, and sign certificates on rays."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Optional

from .poly import IntPolynomial, Number, rem_positive, square_free_decomposition, square_free_part


class IndeterminateRoots(ValueError):
    """Raised for the zero polynomial, whose root set is all of R."""


@dataclass(frozen=True)
class RootInterval:
    """Open interval (lo, hi) holding exactly one real root; endpoints are never roots."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x: Number) -> bool:
        return self.lo < x < self.hi


def sturm_chain(f: IntPolynomial) -> list[IntPolynomial]:
    """f, f', then negated remainders scaled by positive constants only."""
    chain = [f, f.derivative()]
    while chain[-1].degree > 0:
        r = rem_positive(chain[-2], chain[-1])
        if r.is_zero():
            break
        chain.append(-r)
    return chain


def _variations(signs: list[int]) -> int:
    count = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def _variations_at(chain: list[IntPolynomial], x: Number) -> int:
    return _variations([p.sign_at(x) for p in chain])


def _variations_at_pos_inf(chain: list[IntPolynomial]) -> int:
    return _variations([p.sign_at_infinity() for p in chain])


def _variations_at_neg_inf(chain: list[IntPolynomial]) -> int:
    return _variations([p.sign_at_neg_infinity() for p in chain])


def cauchy_bound(f: IntPolynomial) -> int:
    """An integer B with every real root strictly inside (-B, B)."""
    lc = abs(f.leading)
    top = max((abs(c) for c in f.coeffs[:-1]), default=0)
    return 1 + -(-top // lc) + 1


def count_distinct_real_roots(f: IntPolynomial, lo: Optional[Number] = None, hi: Optional[Number] = None) -> int:
    """Distinct real roots in (lo, hi]; ``None`` means the corresponding infinity."""
    if f.is_zero():
        raise IndeterminateRoots("indeterminate roots")
    g = square_free_part(f)
    if g.degree <= 0:
        return 0
    chain = sturm_chain(g)
    v_lo = _variations_at_neg_inf(chain) if lo is None else _variations_at(chain, lo)
    v_hi = _variations_at_pos_inf(chain) if hi is None else _variations_at(chain, hi)
    return v_lo - v_hi


def _split_point(g: IntPolynomial, lo: Fraction, hi: Fraction) -> Fraction:
    """A point strictly between lo and hi that is not a root of g; prefers the midpoint."""
    span = hi - lo
    den = 2
    while True:
        for num in range(1, den):
            if den % 2 == 0 and num % 2 == 0 and den > 2:
                continue
            m = lo + span * Fraction(num, den)
            if g(m) != 0:
                return m
        den += 1


def _isolate_square_free(g: IntPolynomial) -> list[RootInterval]:
    chain = sturm_chain(g)
    bound = Fraction(cauchy_bound(g))
    lo, hi = -bound, bound
    out: list[RootInterval] = []
    stack = [(lo, hi, _variations_at(chain, lo), _variations_at(chain, hi))]
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        if n == 1:
            out.append(RootInterval(a, b))
            continue
        m = _split_point(g, a, b)
        vm = _variations_at(chain, m)
        stack.append((m, b, vm, vb))
        stack.append((a, m, va, vm))
    out.sort(key=lambda iv: iv.lo)
    return out


def isolate_real_roots(p: IntPolynomial) -> list[RootInterval]:
    """Disjoint isolating intervals for the distinct real roots of ``p``, ascending."""
    if p.is_zero():
        raise IndeterminateRoots("indeterminate roots")
    g = square_free_part(p)
    if g.degree <= 0:
        return []
    return _isolate_square_free(g)


def refine_root(p: IntPolynomial, iv: RootInterval, width: Number) -> RootInterval:
    """Shrink an isolating interval of ``p`` until it is no wider than ``width``."""
    g = square_free_part(p)
    lo, hi = iv.lo, iv.hi
    s_lo = g.sign_at(lo)
    while hi - lo > width:
        m = _split_point(g, lo, hi)
        s_m = g.sign_at(m)
        if s_m == s_lo:
            lo = m
        else:
            hi = m
    return RootInterval(lo, hi)


def _ceil_of_root(g: IntPolynomial, iv: RootInterval) -> int:
    """ceil(r) for the unique root r of square-free g inside ``iv``."""
    lo, hi = iv.lo, iv.hi
    s_lo = g.sign_at(lo)
    while True:
        n = floor(lo) + 1
        if n >= hi:
            # no integer strictly inside (lo, hi): r lies in (floor(lo), floor(lo) + 1]
            return n
        val = g(n)
        if val == 0:
            return n
        s_n = (val > 0) - (val < 0)
        if s_n == s_lo:
            lo = Fraction(n)
        else:
            hi = Fraction(n)


def sign_change_polynomial(p: IntPolynomial) -> IntPolynomial:
    """Product of the odd-multiplicity square-free factors of ``p``.

    Its real roots are exactly the points where ``p`` changes sign.
    """
    out = IntPolynomial((1,))
    for factor, mult in square_free_decomposition(p):
        if mult % 2 == 1:
            out = out * factor
    return out


def min_int_nonneg_on_ray(p: IntPolynomial) -> Optional[int]:
    """Smallest integer m >= 0 with p(x) >= 0 for every real x >= m.

    Returns ``None`` when no such m exists (negative leading coefficient).
    Roots of even multiplicity only touch zero and do not count against p.
    """
    if p.is_zero():
        raise IndeterminateRoots("indeterminate roots")
    if p.leading < 0:
        return None
    if all(c >= 0 for c in p.coeffs):
        return 0
    odd = sign_change_polynomial(p)
    if odd.degree <= 0:
        return 0
    roots = _isolate_square_free(odd)
    if not roots:
        return 0
    top = roots[-1]
    if top.hi <= 0:
        return 0
    return max(0, _ceil_of_root(odd, top))


def decimal_string(q: Fraction, digits: int = 7, rounding: str = "half-up") -> str:
    """Render a rational with ``digits`` decimals by exact long division.

    ``rounding`` is ``"half-up"`` (away from zero on ties) or ``"truncate"``.
    """
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    sign = "-" if q < 0 else ""
    q = abs(q)
    scale = 10**digits
    num = q.numerator * scale
    whole, rem = divmod(num, q.denominator)
    if rounding == "half-up":
        if 2 * rem >= q.denominator:
            whole += 1
    elif rounding != "truncate":
        raise ValueError(f"unknown rounding mode {rounding!r}")
    int_part, frac_part = divmod(whole, scale)
    if whole == 0:
        sign = ""
    if digits == 0:
        return f"{sign}{int_part}"
    return f"{sign}{int_part}.{frac_part:0{digits}d}"
