"""Square integer matrices, Berkowitz characteristic polynomials, Bareiss determinants."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .poly import IntPolynomial, Number


class IntMatrix:
    """Immutable n x n integer matrix stored as a tuple of row tuples."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(c) for c in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    def __reduce__(self):
        return (IntMatrix, (self.rows,))

    @classmethod
    def identity(cls, n: int, scale: int = 1) -> "IntMatrix":
        return cls([[scale if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "IntMatrix":
        return cls([[0] * n for _ in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * a for a in row] for row in self.rows])

    def is_symmetric(self) -> bool:
        n = self.n
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i))

    def minor(self, drop: int) -> "IntMatrix":
        """Delete row and column ``drop``."""
        return IntMatrix(
            [[a for j, a in enumerate(row) if j != drop] for i, row in enumerate(self.rows) if i != drop]
        )


def char_poly(m: IntMatrix) -> IntPolynomial:
    """det(x*I - m) by Berkowitz's division-free algorithm.

    Works row by row on the leading principal submatrices; each step multiplies
    the running coefficient vector by a lower-triangular Toeplitz matrix built
    from the new row, column and diagonal entry.  Only ring operations are
    used, so the coefficients never leave Z.
    """
    a = m.rows
    n = m.n
    # coefficients, highest degree first
    p = [1]
    for r in range(n):
        # leading (r+1)x(r+1) block: previous block A, column C, row R, corner a_rr
        col = [a[i][r] for i in range(r)]
        row = a[r][:r]
        t = [1, -a[r][r]]
        vec = col
        for _ in range(r):
            t.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(a[i][j] * vec[j] for j in range(r)) for i in range(r)]
        # p_new = Toeplitz(t) (size (r+2) x (r+1)) @ p
        new = [0] * (r + 2)
        for i in range(r + 2):
            acc = 0
            for j in range(min(i, r) + 1):
                if j < len(p):
                    acc += t[i - j] * p[j]
            new[i] = acc
        p = new
    return IntPolynomial(reversed(p))


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free Gaussian elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def det_at(m: IntMatrix, x: Number) -> Number:
    """det(x*I - m) evaluated at a single rational point, without polynomials."""
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    n = m.n
    scaled = [[(num if i == j else 0) - den * m.rows[i][j] for j in range(n)] for i in range(n)]
    d = bareiss_det(scaled)
    if den == 1:
        return d
    return Fraction(d, den**n)
