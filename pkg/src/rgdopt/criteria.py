"""A- and D-criterion objects for a candidate concurrence graph T.

For the augmented Laplacian (delta + v*x) I - T - x J the nontrivial
eigenvalues are v*x + psi_i, where psi_1..psi_{v-1} are the nontrivial
Laplacian eigenvalues of T.  Everything here is expressed through the
elementary symmetric functions S_j of the psi_i, read off the characteristic
polynomial of delta*I - T, so no eigenvalue is ever computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .exactmath import IntMatrix, IntPolynomial, char_poly, decimal_string
from .graphgen import RegularGraph


class CriterionError(ValueError):
    pass


@dataclass(frozen=True)
class SymVector:
    """(S_0, ..., S_{v-1}) of the nontrivial Laplacian eigenvalues of a graph on v vertices."""

    v: int
    s: tuple[int, ...]

    def __post_init__(self):
        if len(self.s) != self.v:
            raise CriterionError(f"expected {self.v} symmetric functions, got {len(self.s)}")
        if self.s[0] != 1:
            raise CriterionError("S_0 must be 1")
        if any(x <= 0 for x in self.s):
            raise CriterionError("all S_j must be positive (source graph must be connected)")

    @cached_property
    def d_poly(self) -> IntPolynomial:
        return d_poly(self)

    @cached_property
    def d_derivative(self) -> IntPolynomial:
        return self.d_poly.derivative()

    @property
    def spanning_trees(self) -> int:
        """Matrix-Tree theorem: S_{v-1} = v * t(T)."""
        q, r = divmod(self.s[-1], self.v)
        if r:
            raise CriterionError("S_{v-1} is not divisible by v")
        return q


@dataclass(frozen=True)
class CriterionValue:
    x: int
    d_value: int
    a_value: Fraction

    def a_decimal(self, digits: int = 7) -> str:
        return decimal_string(self.a_value, digits)


def sym_vector_from_laplacian(lap: IntMatrix) -> SymVector:
    """Symmetric functions of the nontrivial eigenvalues of a connected graph Laplacian."""
    v = lap.n
    chi = char_poly(lap)
    if chi[0] != 0:
        raise CriterionError("graph not regular/connected as claimed: Laplacian is nonsingular")
    # chi = sum_j (-1)^j S_j x^(v-j); psi_v = 0 removes S_v
    s = tuple((-1) ** j * chi[v - j] for j in range(v))
    if any(x <= 0 for x in s):
        raise CriterionError("graph not regular/connected as claimed: some S_j is not positive")
    return SymVector(v, s)


def sym_vector(g: RegularGraph) -> SymVector:
    return sym_vector_from_laplacian(g.laplacian())


def d_poly(s: SymVector) -> IntPolynomial:
    """D(x) = sum_j (v x)^(v-1-j) S_j, the product of the nontrivial eigenvalues."""
    v = s.v
    coeffs = [0] * v
    for j, sj in enumerate(s.s):
        e = v - 1 - j
        coeffs[e] = v**e * sj
    return IntPolynomial(coeffs)


def d_derivative_closed_form(s: SymVector) -> IntPolynomial:
    """D'(x) from the identity sum_l S_{j;l} = (v-1-j) S_j:

    v * sum_{j<=v-2} (v x)^(v-2-j) (v-1-j) S_j.
    """
    v = s.v
    coeffs = [0] * max(v - 1, 0)
    for j in range(v - 1):
        e = v - 2 - j
        coeffs[e] = v * v**e * (v - 1 - j) * s.s[j]
    return IntPolynomial(coeffs)


def d_value(s: SymVector, x: int) -> int:
    return s.d_poly(x)


def a_value(s: SymVector, x: int) -> Fraction:
    """Harmonic mean of the nontrivial eigenvalues: v(v-1) D(x) / D'(x)."""
    if x < 0:
        raise CriterionError("x must be nonnegative")
    den = s.d_derivative(x)
    if den == 0:
        raise CriterionError("D'(x) vanished; source graph cannot be connected")
    return Fraction(s.v * (s.v - 1) * s.d_poly(x), den)


def criterion_value(s: SymVector, x: int) -> CriterionValue:
    return CriterionValue(x, d_value(s, x), a_value(s, x))


def _same_v(sa: SymVector, sb: SymVector) -> None:
    if sa.v != sb.v:
        raise CriterionError(f"cannot compare graphs on {sa.v} and {sb.v} vertices")


def a_comparison_poly(sa: SymVector, sb: SymVector) -> IntPolynomial:
    """D_a D'_b - D_b D'_a; its sign at x >= 0 is the sign of A_a(x) - A_b(x)."""
    _same_v(sa, sb)
    return sa.d_poly * sb.d_derivative - sb.d_poly * sa.d_derivative


def d_comparison_poly(sa: SymVector, sb: SymVector) -> IntPolynomial:
    """D_a - D_b (degree at most v-2)."""
    _same_v(sa, sb)
    return sa.d_poly - sb.d_poly


def comparison_poly(sa: SymVector, sb: SymVector, criterion: str) -> IntPolynomial:
    if criterion == "a":
        return a_comparison_poly(sa, sb)
    if criterion == "d":
        return d_comparison_poly(sa, sb)
    raise ValueError(f"unknown criterion {criterion!r}; use 'a' or 'd'")


def laplacian_at(adj: Sequence[int], delta: int, x: int) -> IntMatrix:
    """(delta + v x) I - T - x J as an integer matrix."""
    v = len(adj)
    return IntMatrix(
        [
            [(delta + v * x - x) if i == j else -x - ((adj[i] >> j) & 1) for j in range(v)]
            for i in range(v)
        ]
    )
