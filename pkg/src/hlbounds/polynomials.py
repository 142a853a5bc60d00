"""Complex homogeneous polynomials in sparse multi-index form.

A polynomial of degree m in n variables is a map from multi-indices alpha
(non-negative integer n-tuples with entries summing to m) to complex
coefficients.  The witness families used for lower bounds have one to three
terms regardless of m, so storage is sparse and terms are kept sorted
lexicographically for reproducible evaluation order.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

from .errors import DomainError, InputError

MultiIndex = Tuple[int, ...]
TermMap = Union[Mapping[MultiIndex, complex], Iterable[Tuple[MultiIndex, complex]]]


def _ipow(z: complex, k: int) -> complex:
    """z**k for k >= 0 by repeated squaring."""
    result = complex(1.0)
    base = z
    while k:
        if k & 1:
            result *= base
        base *= base
        k >>= 1
    return result


def multi_indices(dimension: int, degree: int) -> Iterator[MultiIndex]:
    """All multi-indices of the given degree, in ascending lexicographic order."""
    if dimension == 1:
        yield (degree,)
        return
    for head in range(degree + 1):
        for tail in multi_indices(dimension - 1, degree - head):
            yield (head,) + tail


@dataclass(frozen=True)
class HomogeneousPolynomial:
    """Immutable sparse homogeneous polynomial with complex coefficients.

    ``terms`` holds (multi-index, coefficient) pairs sorted lexicographically;
    zero coefficients are never stored, so the zero polynomial is the empty
    tuple.  Construct through :meth:`from_terms`, which validates and
    canonicalizes arbitrary input.
    """

    dimension: int
    degree: int
    terms: Tuple[Tuple[MultiIndex, complex], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise InputError(f"dimension must be >= 1, got {self.dimension}")
        if self.degree < 1:
            raise InputError(f"degree must be >= 1, got {self.degree}")

    @classmethod
    def from_terms(
        cls, dimension: int, degree: int, terms: TermMap
    ) -> "HomogeneousPolynomial":
        items = terms.items() if isinstance(terms, Mapping) else terms
        seen: dict[MultiIndex, complex] = {}
        for alpha, coeff in items:
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != dimension:
                raise InputError(
                    f"multi-index {alpha} has length {len(alpha)}, "
                    f"expected {dimension}"
                )
            if any(a < 0 for a in alpha):
                raise InputError(f"multi-index {alpha} has negative entries")
            if sum(alpha) != degree:
                raise InputError(
                    f"multi-index {alpha} has degree {sum(alpha)}, "
                    f"expected {degree}"
                )
            if alpha in seen:
                raise InputError(f"duplicate multi-index {alpha}")
            coeff = complex(coeff)
            if not (math.isfinite(coeff.real) and math.isfinite(coeff.imag)):
                raise InputError(f"non-finite coefficient at {alpha}")
            if coeff != 0:
                seen[alpha] = coeff
        ordered = tuple(sorted(seen.items()))
        return cls(dimension=dimension, degree=degree, terms=ordered)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, alpha: Sequence[int]) -> complex:
        alpha = tuple(int(a) for a in alpha)
        for beta, coeff in self.terms:
            if beta == alpha:
                return coeff
        return 0j

    def scaled(self, factor: complex) -> "HomogeneousPolynomial":
        return HomogeneousPolynomial.from_terms(
            self.dimension,
            self.degree,
            ((alpha, factor * coeff) for alpha, coeff in self.terms),
        )

    def permuted(self, order: Sequence[int]) -> "HomogeneousPolynomial":
        """Relabel variables: new variable j is old variable order[j]."""
        if sorted(order) != list(range(self.dimension)):
            raise DomainError(f"{order!r} is not a permutation of the variables")
        return HomogeneousPolynomial.from_terms(
            self.dimension,
            self.degree,
            (
                (tuple(alpha[order[j]] for j in range(self.dimension)), coeff)
                for alpha, coeff in self.terms
            ),
        )

    def _check_point(self, z: Sequence[complex]) -> None:
        if len(z) != self.dimension:
            raise DomainError(
                f"point has dimension {len(z)}, polynomial has {self.dimension}"
            )

    def evaluate(self, z: Sequence[complex]) -> complex:
        """Sum of coeff * z**alpha over the stored terms, in stored order."""
        self._check_point(z)
        total = 0j
        for alpha, coeff in self.terms:
            monomial = coeff
            for j, a in enumerate(alpha):
                if a:
                    monomial *= _ipow(complex(z[j]), a)
            total += monomial
        return total

    def __call__(self, z: Sequence[complex]) -> complex:
        return self.evaluate(z)

    def gradient(self, z: Sequence[complex]) -> Tuple[complex, ...]:
        """Holomorphic gradient (d/dz_1, ..., d/dz_n) at z.

        Division-free: each partial recomputes the complementary monomial, so
        coordinates at zero are handled exactly.
        """
        self._check_point(z)
        grad = [0j] * self.dimension
        for alpha, coeff in self.terms:
            for j, a in enumerate(alpha):
                if a == 0:
                    continue
                partial = coeff * a * _ipow(complex(z[j]), a - 1)
                for k, b in enumerate(alpha):
                    if k != j and b:
                        partial *= _ipow(complex(z[k]), b)
                grad[j] += partial
        return tuple(grad)

    def coefficient_norm(self, rho: float) -> float:
        """(sum |a_alpha|^rho)^(1/rho); 0 for the zero polynomial."""
        rho = float(rho)
        if not rho >= 1.0:
            raise DomainError(f"coefficient norm needs rho >= 1, got {rho}")
        if not self.terms:
            return 0.0
        total = math.fsum(abs(coeff) ** rho for _, coeff in self.terms)
        return total ** (1.0 / rho)


def witness_quadratic(c: float) -> HomogeneousPolynomial:
    """The two-variable quadratic z1^2 - z2^2 + c*z1*z2."""
    return HomogeneousPolynomial.from_terms(
        2, 2, {(2, 0): 1.0, (0, 2): -1.0, (1, 1): complex(c)}
    )


def witness_padded_quadratic(m: int, c: float) -> HomogeneousPolynomial:
    """z3*...*zm * (z1^2 - z2^2 + c*z1*z2), degree m in m variables.

    For m = 2 the padding product is empty and this is witness_quadratic.
    """
    if m < 2:
        raise DomainError(f"padded quadratic needs m >= 2, got {m}")
    pad = (1,) * (m - 2)
    return HomogeneousPolynomial.from_terms(
        m,
        m,
        {
            (2, 0) + pad: 1.0,
            (0, 2) + pad: -1.0,
            (1, 1) + pad: complex(c),
        },
    )


def witness_product(m: int) -> HomogeneousPolynomial:
    """The product monomial z1*...*zm, degree m in m variables."""
    if m < 2:
        raise DomainError(f"product witness needs m >= 2, got {m}")
    return HomogeneousPolynomial.from_terms(m, m, {(1,) * m: 1.0})


@dataclass(frozen=True)
class Witness:
    """Descriptor of a witness-family member with a known closed-form norm.

    family 'product' is the monomial z1*...*zm (c is ignored and must stay 0);
    family 'quadratic' is the padded quadratic with free parameter c.
    """

    family: str
    m: int
    c: float = 0.0

    def __post_init__(self) -> None:
        if self.family not in ("product", "quadratic"):
            raise DomainError(f"unknown witness family {self.family!r}")
        if self.m < 2:
            raise DomainError(f"witness degree must be >= 2, got {self.m}")
        if self.family == "product" and self.c != 0.0:
            raise DomainError("the product family has no c parameter")

    def polynomial(self) -> HomogeneousPolynomial:
        if self.family == "product":
            return witness_product(self.m)
        return witness_padded_quadratic(self.m, self.c)

    def label(self) -> str:
        if self.family == "product":
            return f"product[m={self.m}]"
        return f"quadratic[m={self.m},c={self.c:g}]"


def phase(theta: float) -> complex:
    """Unit complex number e^(i*theta)."""
    return cmath.exp(1j * theta)
