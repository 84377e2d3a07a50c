"""
Univariate polynomials over GF(q) with Hasse (hyper-) derivatives.

The j-th hyperderivative is the coefficient of z^j in f(x + z):

    ∂^j f(x) = Σ_k binom(k, j) f_k x^(k-j)

with the binomials reduced mod p. It coincides with f^(j) / j! whenever j < p
and stays meaningful when j ≥ p.

Ring arithmetic is delegated to galois.Poly; coefficients are kept in
ascending order.
"""

import math
from typing import Iterable, List, Sequence, Tuple, Union

import galois
import numpy as np

from src.custom_exceptions import FieldMismatchError, ParseError
from src.field import FieldSpec, binom_residue, field_of, field_powers

NEG_INF = -math.inf
INF = math.inf

Degree = Union[int, float]


class Polynomial:
    """
    Immutable polynomial with coefficients stored lowest degree first and
    trailing zeros trimmed. The zero polynomial has no coefficients and
    degree ``NEG_INF``.
    """

    __slots__ = ("_field", "_coeffs")

    def __init__(self, field: FieldSpec, coeffs: Union[galois.FieldArray, Sequence[int]]):
        GF = field.GF
        if isinstance(coeffs, galois.FieldArray):
            if type(coeffs) is not GF:
                raise FieldMismatchError(str(field), str(field_of(coeffs)))
            arr = coeffs.reshape(-1).copy()
        else:
            arr = field.array(list(coeffs)).reshape(-1)
        nonzero = np.flatnonzero(arr.view(np.ndarray))
        length = int(nonzero[-1]) + 1 if nonzero.size else 0
        self._field = field
        self._coeffs = arr[:length]

    # constructors

    @classmethod
    def zero(cls, field: FieldSpec) -> "Polynomial":
        return cls(field, [])

    @classmethod
    def constant(cls, field: FieldSpec, c: Union[int, galois.FieldArray]) -> "Polynomial":
        return cls(field, [int(c)])

    @classmethod
    def monomial(cls, field: FieldSpec, m: int, c: Union[int, galois.FieldArray] = 1) -> "Polynomial":
        """c * x^m."""
        return cls(field, [0] * m + [int(c)])

    @classmethod
    def linear_root(cls, field: FieldSpec, u: Union[int, galois.FieldArray]) -> "Polynomial":
        """x - u."""
        GF = field.GF
        return cls(field, GF([int(-GF(int(u))), 1]))

    # accessors

    @property
    def field(self) -> FieldSpec:
        return self._field

    @property
    def coeffs(self) -> galois.FieldArray:
        return self._coeffs.copy()

    @property
    def degree(self) -> Degree:
        return len(self._coeffs) - 1 if len(self._coeffs) else NEG_INF

    def is_zero(self) -> bool:
        return len(self._coeffs) == 0

    def coefficient(self, k: int) -> galois.FieldArray:
        GF = self._field.GF
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else GF(0)

    def leading_coefficient(self) -> galois.FieldArray:
        return self.coefficient(len(self._coeffs) - 1)

    def to_ints(self) -> List[int]:
        return [int(c) for c in self._coeffs.view(np.ndarray)]

    def padded(self, length: int) -> galois.FieldArray:
        """Coefficients zero-padded (or truncated) to ``length``."""
        out = self._field.GF.Zeros(length)
        n = min(length, len(self._coeffs))
        out[:n] = self._coeffs[:n]
        return out

    # arithmetic, delegated to galois.Poly

    def as_galois(self) -> galois.Poly:
        if self.is_zero():
            return galois.Poly.Zero(self._field.GF)
        return galois.Poly(self._coeffs, order="asc")

    @classmethod
    def from_galois(cls, field: FieldSpec, P: galois.Poly) -> "Polynomial":
        return cls(field, P.coeffs[::-1])

    def _check(self, other: "Polynomial") -> None:
        if other._field != self._field:
            raise FieldMismatchError(str(self._field), str(other._field))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial.from_galois(self._field, self.as_galois() + other.as_galois())

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial.from_galois(self._field, self.as_galois() - other.as_galois())

    def __neg__(self) -> "Polynomial":
        return Polynomial(self._field, -self._coeffs)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial.from_galois(self._field, self.as_galois() * other.as_galois())

    def scale(self, c: galois.FieldArray) -> "Polynomial":
        """Scalar multiple c * f."""
        return Polynomial(self._field, self._coeffs * self._field.GF(int(c)))

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative polynomial power")
        if k == 0:
            return Polynomial.constant(self._field, 1)
        return Polynomial.from_galois(self._field, self.as_galois() ** k)

    def __call__(self, u: Union[int, galois.FieldArray]) -> galois.FieldArray:
        GF = self._field.GF
        if self.is_zero():
            return GF(0)
        return GF(int(self.as_galois()(GF(int(u)))))

    def divmod_linear(self, u: Union[int, galois.FieldArray]) -> Tuple["Polynomial", galois.FieldArray]:
        """Division by (x - u): returns (quotient, remainder)."""
        GF = self._field.GF
        if self.is_zero():
            return self, GF(0)
        quotient, remainder = divmod(self.as_galois(), self.linear_root(self._field, u).as_galois())
        return Polynomial.from_galois(self._field, quotient), GF(int(remainder.coeffs[-1]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._field == other._field and self.to_ints() == other.to_ints()

    def __hash__(self) -> int:
        return hash((self._field, tuple(self.to_ints())))

    def __repr__(self) -> str:
        return f"Polynomial(GF({self._field.q}), {self.to_ints()})"


def product(polys: Iterable[Polynomial], field: FieldSpec) -> Polynomial:
    result = Polynomial.constant(field, 1)
    for f in polys:
        result = result * f
    return result


def hyperderivative(f: Polynomial, j: int) -> Polynomial:
    """∂^j f; the zero polynomial when j > deg f."""
    if j < 0:
        raise ValueError("hyperderivative order must be non-negative")
    n = len(f._coeffs)
    if j >= n:
        return Polynomial.zero(f.field)
    p = f.field.p
    binoms = f.field.GF([binom_residue(k, j, p) for k in range(j, n)])
    return Polynomial(f.field, binoms * f._coeffs[j:])


def jet_matrix(field: FieldSpec, u: galois.FieldArray, s: int, n: int) -> galois.FieldArray:
    """
    s x n matrix with entry (i, k) = binom(k, i) u^(k-i), zero when k < i.
    Column k is the s-jet of x^k at u.
    """
    GF = field.GF
    powers = field_powers(u, n)
    i = np.arange(s).reshape(-1, 1)
    k = np.arange(n).reshape(1, -1)
    binoms = GF(np.array([[binom_residue(kk, ii, field.p) for kk in range(n)]
                          for ii in range(s)], dtype=np.int64).reshape(s, n))
    return binoms * powers[np.maximum(k - i, 0)]


def jet(f: Polynomial, u: Union[int, galois.FieldArray], s: int) -> galois.FieldArray:
    """(∂^0 f(u), ..., ∂^{s-1} f(u)); entries beyond deg f are zero."""
    GF = f.field.GF
    if f.is_zero() or s == 0:
        return GF.Zeros(s)
    n = len(f._coeffs)
    mat = jet_matrix(f.field, GF(int(u)), s, n)
    return (mat @ f._coeffs.reshape(-1, 1)).reshape(-1)


def taylor_coeffs(f: Polynomial, u: Union[int, galois.FieldArray]) -> galois.FieldArray:
    """
    Coefficients of f around u: f(x) = Σ_j ∂^j f(u) (x - u)^j, for
    j = 0 .. deg f. Empty for the zero polynomial.
    """
    return jet(f, u, len(f._coeffs))


def vanishing_order(f: Polynomial, u: Union[int, galois.FieldArray]) -> Degree:
    """Smallest m with ∂^m f(u) != 0; ``INF`` for the zero polynomial."""
    if f.is_zero():
        return INF
    values = taylor_coeffs(f, u).view(np.ndarray)
    return int(np.flatnonzero(values)[0])


def vanishing_order_by_division(f: Polynomial, u: Union[int, galois.FieldArray]) -> Degree:
    """Number of (x - u) factors of f, counted by repeated synthetic division."""
    if f.is_zero():
        return INF
    count = 0
    while True:
        quotient, remainder = f.divmod_linear(u)
        if int(remainder) != 0:
            return count
        f = quotient
        count += 1


def scale_substitute(f: Polynomial, c: Union[int, galois.FieldArray]) -> Polynomial:
    """x ↦ c·x: the polynomial with coefficients f_k c^k."""
    if f.is_zero():
        return f
    powers = field_powers(f.field.GF(int(c)), len(f._coeffs))
    return Polynomial(f.field, f._coeffs * powers)


def parse_poly(text: str, field: FieldSpec) -> Polynomial:
    """Parse ascending coefficients: ``"1,2,3"`` or ``"1 2 3"`` means 1 + 2x + 3x²."""
    tokens = text.replace(",", " ").split()
    try:
        ints = [int(tok) for tok in tokens]
    except ValueError as e:
        raise ParseError("polynomial", str(e))
    if any(not 0 <= v < field.q for v in ints):
        raise ParseError("polynomial", f"coefficients must lie in [0, {field.q})")
    return Polynomial(field, ints)


def format_poly(f: Polynomial) -> str:
    return ",".join(str(c) for c in f.to_ints()) if not f.is_zero() else "0"
