"""
Quasi-cyclic GHRS codes.

With α of multiplicative order r, points u_j = α^{j-1} and multipliers
v_ij = seed_i · α^{(i-1)(j-1)}, the code is closed under the right cyclic
shift of columns: Ev(f) shifted equals Ev(g) with g(x) = f(x / α).
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import galois
import numpy as np

from src.custom_exceptions import (
    BudgetExceededError,
    HypothesisViolationError,
    OrderMismatchError,
    ParseError,
    VerificationError,
    ZeroSeedError,
)
from src.field import FieldSpec, format_field_spec, inverse, parse_field_spec
from src.ghrs import (
    DEFAULT_BUDGET,
    GHRSCode,
    evaluate,
    mds_check,
    raw_generator_matrix,
)
from src.ldpc import LDPCCondition, ldpc_condition
from src.logging_config import get_logger
from src.matspace import MatrixGF, rank
from src.poly import Polynomial, scale_substitute

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class QCSpec:
    """α of multiplicative order r plus a nonzero seed of length s."""

    field: FieldSpec
    alpha: galois.FieldArray
    r: int
    seed: galois.FieldArray

    def __post_init__(self) -> None:
        a = int(self.alpha)
        if a == 0:
            raise OrderMismatchError(a, self.r, None)
        order = int(self.alpha.multiplicative_order())
        if order != self.r:
            raise OrderMismatchError(a, self.r, order)
        zeros = np.flatnonzero(self.seed.view(np.ndarray) == 0)
        if zeros.size:
            raise ZeroSeedError(int(zeros[0]) + 1)

    @property
    def s(self) -> int:
        return int(self.seed.size)


def qc_code(spec: QCSpec, t: int) -> GHRSCode:
    """GHRS code with u_j = α^{j-1} and v_ij = seed_i α^{(i-1)(j-1)}."""
    GF = spec.field.GF
    r, s = spec.r, spec.s
    points = GF.Ones(r)
    for j in range(1, r):
        points[j] = points[j - 1] * spec.alpha
    V = GF.Zeros((s, r))
    for i in range(s):
        for j in range(r):
            V[i, j] = spec.seed[i] * spec.alpha ** (i * j)
    return GHRSCode(spec.field, points, V, t)


def column_shift(A: MatrixGF, ell: int = 1) -> MatrixGF:
    """Rotate the columns of A right by ell."""
    r = A.shape[1]
    return A[:, (np.arange(r) - ell) % r]


def cyclic_shift_vector(c: galois.FieldArray, ell: int) -> galois.FieldArray:
    """T^ell on F_q^N: (c_{N-ell}, ..., c_{N-1}, c_0, ..., c_{N-ell-1})."""
    N = c.size
    return c[(np.arange(N) - ell) % N]


def is_quasi_cyclic(code: GHRSCode) -> bool:
    """
    Closure of the code under one right column shift, tested on the images
    of the monomial basis. In column-major order this is closure of the
    vectorised code under T^s, s being the column length.
    """
    G = raw_generator_matrix(code)
    words = G.reshape(code.t, code.s, code.r)
    shifted = words[:, :, (np.arange(code.r) - 1) % code.r].reshape(code.t, -1)
    base_rank = rank(G)
    if rank(np.vstack([G, shifted])) == base_rank:
        return True
    for m in range(code.t):
        if rank(np.vstack([G, shifted[m:m + 1]])) != base_rank:
            logger.debug("Shift leaves the code", context={"monomial": m})
            break
    return False


def _shift_root(code: GHRSCode) -> galois.FieldArray:
    GF = code.field.GF
    if code.r == 1:
        return GF(1)
    return code.alpha[1]


def shift_witness(code: GHRSCode, f: Polynomial) -> Polynomial:
    """
    g(x) = f(x / α) with Ev(g) equal to Ev(f) shifted right by one column.

    Raises:
        VerificationError: when the shifted word is not Ev(g)
    """
    g = scale_substitute(f, inverse(_shift_root(code)))
    lhs = evaluate(code, g)
    rhs = column_shift(evaluate(code, f), 1)
    if not np.array_equal(lhs.view(np.ndarray), rhs.view(np.ndarray)):
        raise VerificationError("Ev(f(x/α)) differs from the shifted codeword")
    return g


def validate_qc_multiplier(alpha: galois.FieldArray, V: MatrixGF) -> bool:
    """
    True when v_ij = v_{i,j-1} α^{i-1} for all i and j (indices mod r), the
    ratio condition behind closure under the column shift.
    """
    s, r = V.shape
    for i in range(s):
        step = alpha ** i
        for j in range(r):
            if V[i, j] != V[i, (j - 1) % r] * step:
                return False
    return True


@dataclass
class PropertyProfile:
    """MDS, LDPC and QC status of one code."""

    is_mds: Optional[bool]
    distance: Optional[int]
    condition: Optional[LDPCCondition]
    quasi_cyclic: bool


def property_profile(code: GHRSCode, budget: int = DEFAULT_BUDGET,
                     jobs: int = 1) -> PropertyProfile:
    """Fields that cannot be decided (budget, hypotheses) are left as None."""
    is_mds: Optional[bool] = None
    distance: Optional[int] = None
    try:
        report = mds_check(code, budget, jobs)
        is_mds, distance = report.is_mds, report.distance
    except BudgetExceededError as e:
        logger.info("Skipping MDS check", context={"reason": e.message})
    try:
        condition: Optional[LDPCCondition] = ldpc_condition(code.r, code.s, code.t)
    except HypothesisViolationError:
        condition = None
    return PropertyProfile(is_mds, distance, condition, is_quasi_cyclic(code))


def parse_qc_spec(text: str) -> Tuple[QCSpec, int]:
    """
    Parse ``"q, r, alpha, s, seed: v1,...,vs, t"``. An extension field is
    written with space-separated modulus coefficients, e.g. ``"2^2:1 1 1"``.
    """
    head, sep, tail = text.partition("seed:")
    if not sep:
        raise ParseError("qc spec", "missing 'seed:'")
    parts = [p.strip() for p in head.split(",") if p.strip()]
    if len(parts) != 4:
        raise ParseError("qc spec", "expected 'q, r, alpha, s,' before 'seed:'")
    field = parse_field_spec(parts[0])
    try:
        r, alpha, s = int(parts[1]), int(parts[2]), int(parts[3])
        values = [int(p) for p in tail.replace(",", " ").split()]
    except ValueError as e:
        raise ParseError("qc spec", str(e))
    if len(values) != s + 1:
        raise ParseError("qc spec", f"expected {s} seed values and t")
    seed, t = values[:s], values[s]
    if not 0 <= alpha < field.q or any(not 0 <= v < field.q for v in seed):
        raise ParseError("qc spec", f"elements must lie in [0, {field.q})")
    return QCSpec(field, field.element(alpha), r, field.array(seed)), t


def format_qc_spec(spec: QCSpec, t: int) -> str:
    q_text = format_field_spec(spec.field).replace(",", " ")
    seed = ",".join(str(int(v)) for v in spec.seed.view(np.ndarray))
    return f"{q_text}, {spec.r}, {int(spec.alpha)}, {spec.s}, seed: {seed}, {t}\n"

