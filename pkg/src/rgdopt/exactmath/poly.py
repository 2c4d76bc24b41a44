"""Dense univariate polynomials over the integers.

Coefficients are stored low degree first, so ``IntPolynomial((1, 3, 1))`` is
``x**2 + 3*x + 1``.  Python ints are arbitrary precision and rationals are
``fractions.Fraction``; nothing in here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class IntPolynomial:
    """Immutable integer polynomial; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer coefficient {c}")
                c = c.numerator
            cs.append(int(c))
        object.__setattr__(self, "coeffs", _trim(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    def __reduce__(self):
        return (IntPolynomial, (self.coeffs,))

    # construction helpers
    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    # basic properties
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic
    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise ValueError("negative power")
        result = IntPolynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x: Number) -> Number:
        """Horner evaluation; ints stay ints, Fractions give Fractions."""
        if isinstance(x, Fraction) and x.denominator != 1:
            # Homogenised Horner keeps everything integral until one division.
            num, den = x.numerator, x.denominator
            acc = 0
            scale = 1
            for c in reversed(self.coeffs):
                acc = acc * num + c * scale
                scale *= den
            # acc / den**deg
            return Fraction(acc, scale // den) if self.coeffs else Fraction(0)
        if isinstance(x, Fraction):
            x = x.numerator
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Number) -> int:
        val = self(x)
        return (val > 0) - (val < 0)

    def sign_at_infinity(self) -> int:
        lc = self.leading
        return (lc > 0) - (lc < 0)

    def sign_at_neg_infinity(self) -> int:
        s = self.sign_at_infinity()
        return s if self.degree % 2 == 0 else -s

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide out the content, keeping the sign of the leading coefficient."""
        g = self.content()
        if g in (0, 1):
            return self
        return IntPolynomial(c // g for c in self.coeffs)

    def shift(self, a: int) -> "IntPolynomial":
        """Taylor shift: the polynomial q(x) = p(x + a)."""
        cs = list(self.coeffs)
        n = len(cs)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                cs[j] += a * cs[j + 1]
        return IntPolynomial(cs)

    def leading_nonzero_sign(self) -> int:
        return self.sign_at_infinity()


def divmod_rational(a: IntPolynomial, b: IntPolynomial) -> tuple[list[Fraction], list[Fraction]]:
    """Long division over Q.  Returns (quotient, remainder) coefficient lists."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in a.coeffs]
    db = b.degree
    lb = b.leading
    if a.degree < db:
        return [], rem
    quot = [Fraction(0)] * (a.degree - db + 1)
    for i in range(a.degree - db, -1, -1):
        coef = rem[i + db] / lb
        quot[i] = coef
        if coef:
            for j, cb in enumerate(b.coeffs):
                rem[i + j] -= coef * cb
    rem = rem[:db]
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def _integral_positive_multiple(cs: Sequence[Fraction]) -> IntPolynomial:
    """Clear denominators with a positive factor and make the result primitive."""
    den = 1
    for c in cs:
        d = c.denominator
        den = den * d // gcd(den, d)
    return IntPolynomial(int(c * den) for c in cs).primitive()


def rem_positive(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """A positive rational multiple of ``a mod b``, as a primitive integer polynomial."""
    _, r = divmod_rational(a, b)
    return _integral_positive_multiple(r)


def exact_quotient(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """``a / b`` when b divides a and the quotient is integral."""
    q, r = divmod_rational(a, b)
    if r:
        raise ValueError("division leaves a remainder")
    return IntPolynomial(q)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient (zero if both are zero)."""
    a, b = a.primitive(), b.primitive()
    while b:
        a, b = b, rem_positive(a, b)
    if a.is_zero():
        return a
    a = a.primitive()
    return -a if a.leading < 0 else a


def _qtrim(cs: list[Fraction]) -> list[Fraction]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _qmonic(cs: list[Fraction]) -> list[Fraction]:
    lc = cs[-1]
    return [c / lc for c in cs]


def _qdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], rem
    quot = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        coef = rem[i + db] / b[-1]
        quot[i] = coef
        if coef:
            for j, cb in enumerate(b):
                rem[i + j] -= coef * cb
    return quot, _qtrim(rem[:db])


def _qgcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        a, b = b, _qdivmod(a, b)[1]
    return _qmonic(a) if a else a


def _qderiv(a: list[Fraction]) -> list[Fraction]:
    return _qtrim([i * c for i, c in enumerate(a)][1:])


def _qsub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _qtrim([Fraction(c) for c in out])


def square_free_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm over Q.

    Returns ``[(f, i), ...]`` with each f primitive, square-free, positive
    leading coefficient and pairwise coprime, such that ``p`` equals
    ``c * prod(f ** i)`` for a nonzero rational ``c``.  Only factors of
    positive degree are listed.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free decomposition")
    if p.degree <= 0:
        return []
    f = _qmonic([Fraction(c) for c in p.coeffs])
    df = _qderiv(f)
    a = _qgcd(f, df)
    b = _qdivmod(f, a)[0]
    c = _qdivmod(df, a)[0]
    d = _qsub(c, _qderiv(b))
    out = []
    i = 1
    while len(b) > 1:
        g = _qgcd(b, d)
        if len(g) > 1:
            out.append((_integral_positive_multiple(g), i))
        b = _qdivmod(b, g)[0]
        c = _qdivmod(d, g)[0]
        d = _qsub(c, _qderiv(b))
        i += 1
    return out


def square_free_part(p: IntPolynomial) -> IntPolynomial:
    """Primitive square-free part with positive leading coefficient."""
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free part")
    p = p.primitive()
    if p.degree <= 0:
        return IntPolynomial((1,))
    g = poly_gcd(p, p.derivative())
    q = exact_quotient(p, g).primitive()
    return -q if q.leading < 0 else q
