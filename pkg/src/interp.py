"""
Hermite interpolation basis and duality of GHRS codes.

For distinct points α_1..α_r and jet length s, every polynomial of degree at
most rs - 1 is determined by its s-jets at the points. The basis H′_{i,j}
has jets that are unit vectors, so Ev_{α,V}(H′_{i,j} / v_ij) is the
elementary matrix E_{i,j}.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import galois
import numpy as np

from src.custom_exceptions import (
    DegenerateSystemError,
    DegreeTooHighError,
    DimensionMismatchError,
    DuplicatePointsError,
    HypothesisViolationError,
    VerificationError,
    ZeroMultiplierError,
)
from src.field import FieldSpec, field_of, inverse
from src.ghrs import GHRSCode, evaluate_any_degree, raw_generator_matrix
from src.logging_config import get_logger, with_context
from src.matspace import (
    MatrixGF,
    devectorize,
    elementary_matrix,
    null_space_rref,
    rank,
    row_space_equal,
)
from src.poly import Polynomial, jet, product

logger = get_logger(__name__)

PolyGrid = List[List[Polynomial]]


@dataclass(frozen=True, eq=False)
class InterpolationBasis:
    """
    ``L[j]`` are the Hermite-Lagrange polynomials, ``H[i][j] = (x - α_j)^i L_j``,
    ``M[j]`` the s×s unit lower triangular jet matrix of the H[·][j] at α_j and
    ``Hprime[i][j]`` the corrected basis, all 0-based.
    """

    field: FieldSpec
    alpha: galois.FieldArray
    s: int
    L: List[Polynomial]
    H: PolyGrid
    M: List[MatrixGF]
    Hprime: PolyGrid

    @property
    def r(self) -> int:
        return int(self.alpha.size)


@dataclass
class DualityReport:
    """Outcome of checking that GHRS(α, W, rs - t - 1) is the dual of GHRS(α, V, t - 1)."""

    t: int
    W: MatrixGF
    orthogonal: bool
    first_violation: Optional[Tuple[int, int]]
    v_dimension: int
    w_dimension: int
    dimensions_ok: bool
    row_space_equal: bool
    w_all_nonzero: bool

    @property
    def passed(self) -> bool:
        return self.orthogonal and self.dimensions_ok and self.row_space_equal


@dataclass
class ConvolutionDualityReport:
    """Outcome of checking the jet-convolution description of the dual code."""

    t: int
    dual_dimension: int
    orthogonal: bool
    row_space_equal: bool

    @property
    def passed(self) -> bool:
        return self.orthogonal and self.row_space_equal


def _check_points(alpha: galois.FieldArray) -> None:
    points = alpha.view(np.ndarray).tolist()
    if len(set(points)) != len(points):
        raise DuplicatePointsError(points)


def _unit_lower_inverse(M: MatrixGF) -> MatrixGF:
    """Inverse of a unit lower triangular matrix by forward substitution."""
    GF = type(M)
    n = M.shape[0]
    X = GF.Identity(n)
    for i in range(1, n):
        acc = X[i].copy()
        for k in range(i):
            if int(M[i, k]) != 0:
                acc = acc - M[i, k] * X[k]
        X[i] = acc
    return X


@with_context
def build_basis(alpha: galois.FieldArray, s: int) -> InterpolationBasis:
    """
    Construct L_j, H_{i,j}, M^{(j)} and H′_{i,j} and verify their defining
    identities.

    Raises:
        DuplicatePointsError: when the points are not distinct
        VerificationError: when an identity fails
    """
    _check_points(alpha)
    if s < 1:
        raise HypothesisViolationError("jet length s must be at least 1")
    field = field_of(alpha)
    GF = field.GF
    r = int(alpha.size)

    L: List[Polynomial] = []
    for j in range(r):
        others = [l for l in range(r) if l != j]
        numerator = product(
            (Polynomial.linear_root(field, alpha[l]) for l in others), field) ** s
        denominator = GF(1)
        for l in others:
            denominator = denominator * (alpha[j] - alpha[l]) ** s
        L.append(numerator.scale(inverse(denominator)))

    H: PolyGrid = [
        [Polynomial.linear_root(field, alpha[j]) ** i * L[j] for j in range(r)]
        for i in range(s)
    ]

    M: List[MatrixGF] = []
    Hprime: PolyGrid = [[Polynomial.zero(field)] * r for _ in range(s)]
    for j in range(r):
        Mj = GF.Zeros((s, s))
        for k in range(s):
            Mj[:, k] = jet(H[k][j], alpha[j], s)
        M.append(Mj)
        Minv = _unit_lower_inverse(Mj)
        # H'_k takes column k of M^{-1}, so that the jets of H'_k are e_k
        for k in range(s):
            combo = Polynomial.zero(field)
            for i in range(k, s):
                coef = Minv[i, k]
                if int(coef) != 0:
                    combo = combo + H[i][j].scale(coef)
            Hprime[k][j] = combo

    basis = InterpolationBasis(field, alpha.copy(), s, L, H, M, Hprime)
    _verify_basis(basis)
    logger.debug("Interpolation basis built", context={"q": field.q, "r": r, "s": s})
    return basis


def _verify_basis(basis: InterpolationBasis) -> None:
    field, alpha, s, r = basis.field, basis.alpha, basis.s, basis.r
    GF = field.GF
    for j, Lj in enumerate(basis.L):
        if Lj.degree != s * (r - 1):
            raise VerificationError(f"deg L_{j + 1} = {Lj.degree}, expected {s * (r - 1)}")
        for m in range(r):
            if int(Lj(alpha[m])) != int(j == m):
                raise VerificationError(f"L_{j + 1}(α_{m + 1}) is not δ")
    for j, Mj in enumerate(basis.M):
        ints = Mj.view(np.ndarray)
        if np.any(np.triu(ints, 1)) or np.any(np.diag(ints) != 1):
            raise VerificationError(f"M^({j + 1}) is not unit lower triangular")
    for i in range(s):
        for j in range(r):
            for l in range(r):
                expected = GF.Zeros(s)
                if l == j:
                    expected[i] = 1
                got = jet(basis.Hprime[i][j], alpha[l], s)
                if not np.array_equal(got.view(np.ndarray), expected.view(np.ndarray)):
                    raise VerificationError(
                        f"jet of H'_({i},{j + 1}) at α_{l + 1} is not a unit vector"
                    )


def expand(basis: InterpolationBasis, f: Polynomial) -> MatrixGF:
    """Coefficients c_{i,j} = ∂^i f(α_j) with f = Σ c_{i,j} H′_{i,j}."""
    limit = basis.r * basis.s - 1
    if not f.is_zero() and f.degree > limit:
        raise DegreeTooHighError(int(f.degree), limit)
    C = basis.field.GF.Zeros((basis.s, basis.r))
    for j in range(basis.r):
        C[:, j] = jet(f, basis.alpha[j], basis.s)
    return C


def reconstruct(basis: InterpolationBasis, C: MatrixGF) -> Polynomial:
    """Σ_{i,j} c_{i,j} H′_{i,j}."""
    if C.shape != (basis.s, basis.r):
        raise DimensionMismatchError((basis.s, basis.r), C.shape)
    total = Polynomial.zero(basis.field)
    for i in range(basis.s):
        for j in range(basis.r):
            if int(C[i, j]) != 0:
                total = total + basis.Hprime[i][j].scale(C[i, j])
    return total


def _require_nonzero(V: MatrixGF) -> None:
    zeros = np.argwhere(V.view(np.ndarray) == 0)
    if zeros.size:
        i, j = zeros[0]
        raise ZeroMultiplierError(int(i) + 1, int(j) + 1)


def standard_basis_images(basis: InterpolationBasis, V: MatrixGF) -> List[List[MatrixGF]]:
    """
    Ev_{α,V}(H′_{i,j} / v_{i,j}) for every (i, j), each checked against the
    elementary matrix E_{i,j}.
    """
    if V.shape != (basis.s, basis.r):
        raise DimensionMismatchError((basis.s, basis.r), V.shape)
    _require_nonzero(V)
    code = GHRSCode(basis.field, basis.alpha, V, basis.r * basis.s)
    images: List[List[MatrixGF]] = []
    for i in range(basis.s):
        row = []
        for j in range(basis.r):
            image = evaluate_any_degree(code, basis.Hprime[i][j].scale(inverse(V[i, j])))
            target = elementary_matrix(basis.field, basis.s, basis.r, i + 1, j + 1)
            if not np.array_equal(image.view(np.ndarray), target.view(np.ndarray)):
                raise VerificationError(f"Ev(H'_({i},{j + 1}) / v) is not E_({i + 1},{j + 1})")
            row.append(image)
        images.append(row)
    return images


def dual_multiplier(alpha: galois.FieldArray, V: MatrixGF) -> MatrixGF:
    """
    The s×r matrix W spanning the dual of GHRS(α, V, rs - 2), normalised so
    that its first nonzero entry in row-major order is 1.

    Raises:
        DegenerateSystemError: when the null space is not one-dimensional
    """
    _check_points(alpha)
    s, r = V.shape
    if r * s < 2:
        raise HypothesisViolationError("rs must be at least 2")
    field = field_of(alpha)
    G = raw_generator_matrix(GHRSCode(field, alpha, V, r * s - 1))
    N = null_space_rref(G)
    if N.shape[0] != 1:
        raise DegenerateSystemError(1, N.shape[0])
    return devectorize(N[0], s, r)


@with_context
def verify_duality(alpha: galois.FieldArray, V: MatrixGF, t: int) -> DualityReport:
    """
    Check that GHRS(α, W, rs - t - 1) equals the dual of GHRS(α, V, t - 1):
    pairwise orthogonality of monomial images, complementary dimensions, and
    equality of the W-code with the null space of the V-code generator.
    Failures are reported, not raised.
    """
    s, r = V.shape
    if not 1 <= t <= r * s - 1:
        raise HypothesisViolationError(f"t must lie in [1, {r * s - 1}]")
    field = field_of(alpha)
    W = dual_multiplier(alpha, V)
    G_V = raw_generator_matrix(GHRSCode(field, alpha, V, t))
    G_W = raw_generator_matrix(GHRSCode(field, alpha, W, r * s - t))
    pairing = (G_V @ G_W.T).view(np.ndarray)
    violations = np.argwhere(pairing != 0)
    first = None if violations.size == 0 else (int(violations[0][0]), int(violations[0][1]))
    v_dim, w_dim = rank(G_V), rank(G_W)
    report = DualityReport(
        t=t,
        W=W,
        orthogonal=first is None,
        first_violation=first,
        v_dimension=v_dim,
        w_dimension=w_dim,
        dimensions_ok=v_dim + w_dim == r * s,
        row_space_equal=row_space_equal(G_W, null_space_rref(G_V)),
        w_all_nonzero=bool(np.all(W.view(np.ndarray) != 0)),
    )
    logger.info(
        "Pointwise duality checked",
        context={"t": t, "passed": report.passed, "first_violation": first},
    )
    return report


def dual_evaluate(alpha: galois.FieldArray, V: MatrixGF, W: MatrixGF,
                  g: Polynomial) -> MatrixGF:
    """
    Jet-convolution dual codeword of g:

        B(g)_{a,j} = v_{a,j}^{-1} Σ_{b=0}^{s-1-a} v_{a+b,j} w_{a+b,j} ∂^b g(α_j)

    The Leibniz rule for hyperderivatives makes dot(Ev_V(f), B(g)) vanish
    whenever deg f + deg g <= rs - 2.
    """
    _require_nonzero(V)
    s, r = V.shape
    field = field_of(alpha)
    C = V * W
    B = field.GF.Zeros((s, r))
    for j in range(r):
        g_jet = jet(g, alpha[j], s)
        for a in range(s):
            acc = np.add.reduce(C[a:, j] * g_jet[: s - a])
            B[a, j] = acc / V[a, j]
    return B


@with_context
def verify_convolution_duality(alpha: galois.FieldArray, V: MatrixGF,
                               t: int) -> ConvolutionDualityReport:
    """
    Check that {B(g) : deg g <= rs - t - 1} spans the dual of GHRS(α, V, t - 1).
    """
    s, r = V.shape
    if not 1 <= t <= r * s - 1:
        raise HypothesisViolationError(f"t must lie in [1, {r * s - 1}]")
    field = field_of(alpha)
    W = dual_multiplier(alpha, V)
    G_V = raw_generator_matrix(GHRSCode(field, alpha, V, t))
    rows = [
        dual_evaluate(alpha, V, W, Polynomial.monomial(field, m)).reshape(1, -1)
        for m in range(r * s - t)
    ]
    D = np.vstack(rows)
    orthogonal = not np.any((G_V @ D.T).view(np.ndarray))
    report = ConvolutionDualityReport(
        t=t,
        dual_dimension=rank(D),
        orthogonal=orthogonal,
        row_space_equal=row_space_equal(D, null_space_rref(G_V)),
    )
    logger.info("Convolution duality checked", context={"t": t, "passed": report.passed})
    return report
