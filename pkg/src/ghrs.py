"""
Generalized Hermite Reed-Solomon (GHRS) codes in Mat_{s×r}(F_q).

A codeword is the matrix Ev(f) with entry (i, j) = v_ij · ∂^{i-1} f(α_j) for
a polynomial f of degree at most t - 1.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from typing import List, NewType, Optional, Sequence

import galois
import numpy as np

from src.custom_exceptions import (
    BudgetExceededError,
    DegreeTooHighError,
    DimensionMismatchError,
    DuplicatePointsError,
    InputError,
    ParseError,
    VerificationError,
)
from src.field import FieldSpec, format_field_spec, parse_field_spec
from src.logging_config import get_logger, with_context
from src.matspace import (
    MatrixGF,
    VectorOrder,
    format_matrix,
    forward_echelon,
    in_row_space,
    null_space_rref,
    nrt_weights_batch,
    parse_matrix_lines,
    rank,
    rref,
    vectorize,
)
from src.poly import Polynomial, jet, jet_matrix

logger = get_logger(__name__)

NRTWeight = NewType("NRTWeight", int)

DEFAULT_BUDGET = 10 ** 6


class GeneratorForm(str, Enum):
    RAW = "raw"
    RREF = "rref"
    FORWARD = "forward"


@dataclass(frozen=True, eq=False)
class GHRSCode:
    """
    GHRS(α, V, t - 1): evaluation points ``alpha`` (length r, distinct),
    multiplier ``V`` (s×r) and message length ``t`` (polynomials of degree
    at most t - 1).
    """

    field: FieldSpec
    alpha: galois.FieldArray
    V: MatrixGF
    t: int

    def __post_init__(self) -> None:
        GF = self.field.GF
        if type(self.alpha) is not GF or type(self.V) is not GF:
            raise InputError("alpha and V must be arrays over the code's field")
        if self.alpha.ndim != 1 or self.V.ndim != 2:
            raise DimensionMismatchError((self.V.shape[-1],), self.alpha.shape)
        if self.V.shape[1] != self.alpha.size:
            raise DimensionMismatchError((self.V.shape[0], self.alpha.size), self.V.shape)
        points = self.alpha.view(np.ndarray).tolist()
        if len(set(points)) != len(points):
            raise DuplicatePointsError(points)
        if self.alpha.size < 1 or self.V.shape[0] < 1:
            raise InputError("a code needs r >= 1 and s >= 1")
        if not 1 <= self.t <= self.n:
            raise InputError(f"t must lie in [1, {self.n}], got {self.t}")

    @classmethod
    def from_ints(cls, field: FieldSpec, alpha: Sequence[int],
                  V: Sequence[Sequence[int]], t: int) -> "GHRSCode":
        return cls(field, field.array(list(alpha)), field.array([list(row) for row in V]), t)

    @classmethod
    def nrt_reed_solomon(cls, field: FieldSpec, alpha: Sequence[int], s: int,
                         t: int) -> "GHRSCode":
        """Classical NRT Reed-Solomon code: V is all ones. s = 1 is plain RS."""
        return cls(field, field.array(list(alpha)), field.GF.Ones((s, len(alpha))), t)

    @property
    def r(self) -> int:
        return int(self.alpha.size)

    @property
    def s(self) -> int:
        return int(self.V.shape[0])

    @property
    def n(self) -> int:
        """Ambient dimension rs."""
        return self.r * self.s

    @property
    def all_nonzero(self) -> bool:
        return bool(np.all(self.V.view(np.ndarray) != 0))

    def with_t(self, t: int) -> "GHRSCode":
        return GHRSCode(self.field, self.alpha, self.V, t)

    def with_multiplier(self, V: MatrixGF) -> "GHRSCode":
        return GHRSCode(self.field, self.alpha, V, self.t)


@dataclass(frozen=True, eq=False)
class JetBlock:
    """Column j of a codeword: the s-jet of f at α_j scaled by column j of V."""

    j: int
    point: galois.FieldArray
    values: galois.FieldArray


@dataclass
class MDSReport:
    dimension: int
    distance: int
    singleton_defect: int
    is_mds: bool
    hypothesis_satisfied: bool
    notes: List[str] = dataclass_field(default_factory=list)


def _check_degree(code: GHRSCode, f: Polynomial, limit: Optional[int] = None) -> None:
    bound = code.t - 1 if limit is None else limit
    if not f.is_zero() and f.degree > bound:
        raise DegreeTooHighError(int(f.degree), bound)


def jet_block(code: GHRSCode, f: Polynomial, j: int) -> JetBlock:
    """JetBlock for the 0-based column j."""
    point = code.alpha[j]
    return JetBlock(j, point, code.V[:, j] * jet(f, point, code.s))


def evaluate(code: GHRSCode, f: Polynomial) -> MatrixGF:
    """Ev_{α,V}(f); deg f must not exceed t - 1."""
    _check_degree(code, f)
    return _evaluate_unchecked(code, f)


def _evaluate_unchecked(code: GHRSCode, f: Polynomial) -> MatrixGF:
    GF = code.field.GF
    out = GF.Zeros((code.s, code.r))
    for j in range(code.r):
        out[:, j] = jet_block(code, f, j).values
    return out


def evaluate_any_degree(code: GHRSCode, f: Polynomial) -> MatrixGF:
    """Ev_{α,V}(f) for any f of degree at most rs - 1."""
    _check_degree(code, f, code.n - 1)
    return _evaluate_unchecked(code, f)


def raw_generator_matrix(code: GHRSCode,
                         order: VectorOrder = VectorOrder.ROW_MAJOR) -> MatrixGF:
    """t × rs matrix whose m-th row is vec(Ev(x^m))."""
    GF = code.field.GF
    words = GF.Zeros((code.t, code.s, code.r))
    for j in range(code.r):
        block = jet_matrix(code.field, GF(int(code.alpha[j])), code.s, code.t)
        words[:, :, j] = (code.V[:, j].reshape(-1, 1) * block).T
    if VectorOrder(order) is VectorOrder.ROW_MAJOR:
        return words.reshape(code.t, -1)
    return np.transpose(words, (0, 2, 1)).reshape(code.t, -1)



@with_context
def generator_matrix(code: GHRSCode, order: VectorOrder = VectorOrder.ROW_MAJOR,
                     form: GeneratorForm = GeneratorForm.RREF) -> MatrixGF:
    """
    Generator matrix of the code in the requested form.

    ``raw`` stacks vec(Ev(x^m)), ``rref`` is its reduced row echelon form and
    ``forward`` stops after forward elimination.
    """
    form = GeneratorForm(form)
    G = raw_generator_matrix(code, order)
    if form is GeneratorForm.RAW:
        return G
    if form is GeneratorForm.FORWARD:
        return forward_echelon(G)
    G, _ = rref(G)
    return G


@with_context
def parity_check_matrix(code: GHRSCode,
                        order: VectorOrder = VectorOrder.ROW_MAJOR) -> MatrixGF:
    """RREF basis of the null space of the generator, (rs - t) × rs."""
    return null_space_rref(raw_generator_matrix(code, order))


def contains(code: GHRSCode, A: MatrixGF) -> bool:
    """Membership of the s×r matrix A in the code."""
    if A.shape != (code.s, code.r):
        raise DimensionMismatchError((code.s, code.r), A.shape)
    return in_row_space(raw_generator_matrix(code), vectorize(A))


def enumerate_messages(q: int, t: int, projective: bool = True) -> np.ndarray:
    """
    Nonzero coefficient vectors (f_0, ..., f_{t-1}) in lexicographic order as
    an integer array. With ``projective`` only vectors whose first nonzero
    entry is 1 are kept, one per class of nonzero scalar multiples.
    """
    grid = np.indices((q,) * t, dtype=np.int64).reshape(t, -1).T
    grid = grid[np.any(grid != 0, axis=1)]
    if projective:
        first = np.argmax(grid != 0, axis=1)
        grid = grid[grid[np.arange(grid.shape[0]), first] == 1]
    return grid


def capped_vanishing_orders(code: GHRSCode, coeff_rows: galois.FieldArray) -> np.ndarray:
    """
    min(ν_f(α_j), s) for each message row and each point, shape (N, r). The
    count of leading zeros of the unscaled s-jet at α_j equals min(ν, s).
    """
    plain = GHRSCode(code.field, code.alpha, code.field.GF.Ones((code.s, code.r)), code.t)
    jets = (coeff_rows @ raw_generator_matrix(plain)).view(np.ndarray)
    blocks = jets.reshape(-1, code.s, code.r) != 0
    first = np.argmax(blocks, axis=1)
    return np.where(blocks.any(axis=1), first, code.s)


def _chunk_min_weight(code: GHRSCode, G: MatrixGF, messages: np.ndarray,
                      cross_check: bool) -> int:
    GF = code.field.GF
    coeffs = GF(messages)
    words = (coeffs @ G).view(np.ndarray).reshape(-1, code.s, code.r)
    weights = nrt_weights_batch(words)
    if cross_check:
        formula = code.n - capped_vanishing_orders(code, coeffs).sum(axis=1)
        if not np.array_equal(weights, formula):
            bad = int(np.flatnonzero(weights != formula)[0])
            raise VerificationError(
                f"NRT weight {int(weights[bad])} disagrees with rs - Σ min(ν, s) "
                f"= {int(formula[bad])} for message {messages[bad].tolist()}"
            )
    positive = weights[weights > 0]
    return int(positive.min()) if positive.size else code.n + 1


@with_context
def min_distance_exhaustive(code: GHRSCode, budget: int = DEFAULT_BUDGET,
                            jobs: int = 1, projective: bool = True) -> NRTWeight:
    """
    Minimum NRT weight over the nonzero codewords, by enumerating every
    message polynomial. Scalar multiples share a weight, so ``projective``
    enumeration gives the same minimum.

    Raises:
        BudgetExceededError: when q^t exceeds ``budget``
    """
    size = code.field.q ** code.t
    if size > budget:
        raise BudgetExceededError(size, budget)
    G = raw_generator_matrix(code)
    messages = enumerate_messages(code.field.q, code.t, projective)
    jobs = max(1, int(jobs))
    chunks = [c for c in np.array_split(messages, jobs) if c.size]
    cross_check = code.all_nonzero
    if jobs == 1 or len(chunks) == 1:
        results = [_chunk_min_weight(code, G, c, cross_check) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(
                lambda c: _chunk_min_weight(code, G, c, cross_check), chunks))
    distance = min(results) if results else code.n + 1
    logger.info(
        "Exhaustive minimum distance computed",
        context={"q": code.field.q, "t": code.t, "messages": int(messages.shape[0]),
                 "distance": distance, "jobs": jobs},
    )
    return NRTWeight(distance)


def mds_check(code: GHRSCode, budget: int = DEFAULT_BUDGET, jobs: int = 1,
              projective: bool = True) -> MDSReport:
    """
    Dimension, exhaustive distance and Singleton defect (rs + 1) - (k + d).
    A zero entry in V is reported rather than rejected.
    """
    G = raw_generator_matrix(code)
    dimension = rank(G)
    notes: List[str] = []
    hypothesis = code.all_nonzero
    if dimension != code.t:
        if hypothesis:
            raise VerificationError(
                f"Evaluation map is not injective: rank {dimension} < t = {code.t}"
            )
        notes.append(f"evaluation map has rank {dimension} < t = {code.t}")
    if not hypothesis:
        notes.append("V has zero entries; MDS is checked, not implied")
    distance = int(min_distance_exhaustive(code, budget, jobs, projective))
    defect = code.n + 1 - (dimension + distance)
    return MDSReport(dimension, distance, defect, defect == 0, hypothesis, notes)


# code file text format


def parse_code_file(text: str) -> GHRSCode:
    """
    Parse a code description::

        17
        alpha: 3,2,7
        t: 3
        7 3 17
        8 9 10
        ...

    The first line is a field spec (optionally prefixed ``field:``); the V
    block uses the matrix text format. ``#`` starts a comment.
    """
    lines = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append(stripped)
    if len(lines) < 4:
        raise ParseError("code file", "expected field, alpha, t and a V block")
    field_text = lines[0]
    if field_text.lower().startswith("field:"):
        field_text = field_text.split(":", 1)[1]
    field = parse_field_spec(field_text)
    alpha_key, _, alpha_text = lines[1].partition(":")
    t_key, _, t_text = lines[2].partition(":")
    if alpha_key.strip().lower() != "alpha" or t_key.strip().lower() != "t":
        raise ParseError("code file", "expected 'alpha:' then 't:' lines", 2)
    try:
        alpha = [int(tok) for tok in alpha_text.replace(",", " ").split()]
        t = int(t_text)
    except ValueError as e:
        raise ParseError("code file", str(e), 2)
    if any(not 0 <= a < field.q for a in alpha):
        raise ParseError("code file", f"alpha entries must lie in [0, {field.q})", 2)
    V = parse_matrix_lines(lines[3:], field, offset=3)
    return GHRSCode(field, field.array(alpha), V, t)


def format_code_file(code: GHRSCode) -> str:
    alpha = ",".join(str(int(a)) for a in code.alpha.view(np.ndarray))
    header = f"{format_field_spec(code.field)}\nalpha: {alpha}\nt: {code.t}\n"
    return header + format_matrix(code.V)
