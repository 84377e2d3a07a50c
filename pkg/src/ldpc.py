"""
Sparsity of GHRS generator and parity-check matrices, the LDPC conditions on
(r, s, t), and Tanner graph export.
"""

from dataclasses import dataclass, field as dataclass_field
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import galois
import networkx as nx
import numpy as np

from src.custom_exceptions import CaseOutOfRangeError, HypothesisViolationError, ParseError
from src.ghrs import GHRSCode, raw_generator_matrix
from src.logging_config import get_logger
from src.matspace import MatrixGF, forward_echelon

logger = get_logger(__name__)


class LDPCCondition(str, Enum):
    COND1 = "cond1"
    COND2 = "cond2"
    NONE = "none"


class ExportFormat(str, Enum):
    ALIST = "alist"
    DOT = "dot"


def format_percent(fraction: Fraction) -> str:
    """Percentage with two decimals, rounding half up."""
    value = Decimal(fraction.numerator) * 100 / Decimal(fraction.denominator)
    return f"{value.quantize(Decimal('0.01'), rounding=ROUND_HALF_UP)}%"


@dataclass(frozen=True)
class SparsityReport:
    total: int
    zeros: int
    row_weights: Tuple[int, ...]
    col_weights: Tuple[int, ...]

    @property
    def nonzeros(self) -> int:
        return self.total - self.zeros

    @property
    def zero_fraction(self) -> Fraction:
        return Fraction(self.zeros, self.total) if self.total else Fraction(0)

    @property
    def percent(self) -> str:
        return format_percent(self.zero_fraction)

    @property
    def max_row_weight(self) -> int:
        return max(self.row_weights, default=0)

    @property
    def max_col_weight(self) -> int:
        return max(self.col_weights, default=0)

    @property
    def is_sparse(self) -> bool:
        """Strictly more zero than nonzero entries."""
        return self.zeros > self.nonzeros


def sparsity_report(M: MatrixGF) -> SparsityReport:
    nonzero = M.view(np.ndarray) != 0
    return SparsityReport(
        total=int(nonzero.size),
        zeros=int(nonzero.size - nonzero.sum()),
        row_weights=tuple(int(w) for w in nonzero.sum(axis=1)),
        col_weights=tuple(int(w) for w in nonzero.sum(axis=0)),
    )


def zero_lower_bound(r: int, s: int, t: int) -> int:
    """
    Guaranteed zero count of the forward-echelon generator of
    GHRS(α, V, t - 1) with V all nonzero.

    Case 1 (2 <= s <= t):  rt - r(r+1)/2 + r s(s-1)/2
    Case 2 (1 < t < s):    rt(s-t) + rt - r(r+1)/2 + r t(t-1)/2
    """
    if 2 <= s <= t:
        return r * t - r * (r + 1) // 2 + r * s * (s - 1) // 2
    if 1 < t < s:
        return r * t * (s - t) + r * t - r * (r + 1) // 2 + r * t * (t - 1) // 2
    raise CaseOutOfRangeError(r, s, t)


def zero_lower_bound_condensed(r: int, s: int, t: int) -> int:
    """
    The condensed Case 2 expression rst - rt²/2 - rt/2 - r(r+1)/2 as commonly
    printed. It undercounts the uncondensed bound by exactly rt.
    """
    if not 1 < t < s:
        raise CaseOutOfRangeError(r, s, t)
    return r * s * t - (r * t * t + r * t) // 2 - r * (r + 1) // 2


def ldpc_condition(r: int, s: int, t: int) -> LDPCCondition:
    """
    Cond1: t = s and r + 1 <= s.  Cond2: st >= t² + t + r + 1.
    Requires r, s, t >= 2 and t <= rs - 1.
    """
    if min(r, s, t) < 2 or t > r * s - 1:
        raise HypothesisViolationError(
            f"need r, s, t >= 2 and t <= rs - 1, got r={r}, s={s}, t={t}")
    if t == s and r + 1 <= s:
        return LDPCCondition.COND1
    if s * t >= t * t + t + r + 1:
        return LDPCCondition.COND2
    return LDPCCondition.NONE


@dataclass
class SparsityCertificate:
    r: int
    s: int
    t: int
    condition: LDPCCondition
    echelon: SparsityReport
    bound: Optional[int]
    notes: List[str] = dataclass_field(default_factory=list)

    @property
    def bound_holds(self) -> bool:
        return self.bound is None or self.echelon.zeros >= self.bound

    @property
    def half_density(self) -> bool:
        """At least half of the entries are zero."""
        return 2 * self.echelon.zeros >= self.echelon.total

    @property
    def certified(self) -> bool:
        """An LDPC condition applies and zeros strictly outnumber nonzeros."""
        return self.condition is not LDPCCondition.NONE and self.echelon.is_sparse


def sparsity_certificate(code: GHRSCode) -> SparsityCertificate:
    """
    Forward-echelon generator zero count against ``zero_lower_bound``, with
    the LDPC condition of (r, s, t).

    Under Cond1 with s = r + 1 the bound equals rst/2 exactly. Such a
    generator has as many zeros as nonzeros: ``half_density`` holds but the
    certificate is withheld and a note records it.
    """
    r, s, t = code.r, code.s, code.t
    condition = ldpc_condition(r, s, t)
    echelon = sparsity_report(forward_echelon(raw_generator_matrix(code)))
    notes: List[str] = []
    try:
        bound: Optional[int] = zero_lower_bound(r, s, t)
    except CaseOutOfRangeError:
        bound = None
        notes.append("no zero-count case applies")
    cert = SparsityCertificate(r, s, t, condition, echelon, bound, notes)
    if code.all_nonzero and not cert.bound_holds:
        notes.append(f"zero count {echelon.zeros} below bound {bound}")
        logger.warning("Zero lower bound violated",
                       context={"r": r, "s": s, "t": t, "zeros": echelon.zeros,
                                "bound": bound})
    if condition is not LDPCCondition.NONE and not cert.echelon.is_sparse:
        if cert.half_density:
            notes.append("condition holds, not strictly sparse")
        else:
            notes.append("condition holds but fewer than half of the entries are zero")
    if not code.all_nonzero:
        notes.append("V has zero entries; the bound assumes nonzero V")
    return cert


@dataclass
class WeightProfile:
    row_weights: Tuple[int, ...]
    col_weights: Tuple[int, ...]
    row_histogram: Dict[int, int]
    col_histogram: Dict[int, int]
    column_bound: Optional[int]
    columns_over_bound: Tuple[int, ...]

    @property
    def max_row_weight(self) -> int:
        return max(self.row_weights, default=0)

    @property
    def max_col_weight(self) -> int:
        return max(self.col_weights, default=0)


def _histogram(weights: Tuple[int, ...]) -> Dict[int, int]:
    values, counts = np.unique(np.asarray(weights, dtype=np.int64), return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


def measured_weights(H: MatrixGF, column_bound: Optional[int] = None) -> WeightProfile:
    """
    Row and column weights of H. Columns heavier than ``column_bound``
    (1-based indices) are listed rather than raised.
    """
    report = sparsity_report(H)
    over: Tuple[int, ...] = ()
    if column_bound is not None:
        over = tuple(j + 1 for j, w in enumerate(report.col_weights) if w > column_bound)
    return WeightProfile(
        row_weights=report.row_weights,
        col_weights=report.col_weights,
        row_histogram=_histogram(report.row_weights),
        col_histogram=_histogram(report.col_weights),
        column_bound=column_bound,
        columns_over_bound=over,
    )


# Tanner graphs


def variable_node(j: int) -> str:
    return f"v{j}"


def check_node(i: int) -> str:
    return f"c{i}"


@dataclass(frozen=True, eq=False)
class TannerGraph:
    """
    Bipartite graph of an m × n parity-check matrix: check c_i points to
    variable v_j (1-based) when H[i, j] != 0, the edge carrying that entry
    as ``val``.
    """

    n: int
    m: int
    graph: nx.DiGraph

    def edges(self) -> List[Tuple[int, int]]:
        """(check, variable) pairs, 1-based, sorted."""
        return sorted(
            (int(c[1:]), int(v[1:])) for c, v in self.graph.edges()
        )

    def variables_of_check(self, i: int) -> List[int]:
        return sorted(int(v[1:]) for v in self.graph.successors(check_node(i)))

    def checks_of_variable(self, j: int) -> List[int]:
        return sorted(int(c[1:]) for c in self.graph.predecessors(variable_node(j)))


def tanner_graph(H: MatrixGF) -> TannerGraph:
    m, n = H.shape
    graph = nx.DiGraph()
    graph.add_nodes_from((variable_node(j), {"bipartite": 0}) for j in range(1, n + 1))
    graph.add_nodes_from((check_node(i), {"bipartite": 1}) for i in range(1, m + 1))
    ints = H.view(np.ndarray)
    for row, col in zip(*np.nonzero(ints)):
        graph.add_edge(check_node(int(row) + 1), variable_node(int(col) + 1),
                       val=int(ints[row, col]))
    if isinstance(H, galois.FieldArray):
        graph.graph["order"] = type(H).order
    return TannerGraph(n, m, graph)


def _padded(indices: List[int], width: int) -> str:
    return " ".join(str(x) for x in indices + [0] * (width - len(indices)))


def to_alist(tg: TannerGraph) -> str:
    """
    alist text: "n m", "max_col max_row", column weights, row weights, then n
    lines of check indices and m lines of variable indices, 1-based and
    zero-padded to the maximum weight.
    """
    checks_per_var = [tg.checks_of_variable(j) for j in range(1, tg.n + 1)]
    vars_per_check = [tg.variables_of_check(i) for i in range(1, tg.m + 1)]
    max_col = max((len(c) for c in checks_per_var), default=0)
    max_row = max((len(v) for v in vars_per_check), default=0)
    lines = [
        f"{tg.n} {tg.m}",
        f"{max_col} {max_row}",
        " ".join(str(len(c)) for c in checks_per_var),
        " ".join(str(len(v)) for v in vars_per_check),
    ]
    lines.extend(_padded(c, max_col) for c in checks_per_var)
    lines.extend(_padded(v, max_row) for v in vars_per_check)
    return "\n".join(lines) + "\n"


def to_dot(tg: TannerGraph) -> str:
    lines = ["graph tanner {", "  node [shape=circle];"]
    lines.extend(f"  {variable_node(j)};" for j in range(1, tg.n + 1))
    lines.append("  node [shape=box];")
    lines.extend(f"  {check_node(i)};" for i in range(1, tg.m + 1))
    lines.extend(f"  {check_node(c)} -- {variable_node(v)};" for c, v in tg.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_graph(tg: TannerGraph, fmt: ExportFormat = ExportFormat.ALIST) -> str:
    if ExportFormat(fmt) is ExportFormat.ALIST:
        return to_alist(tg)
    return to_dot(tg)


def parse_alist(text: str) -> TannerGraph:
    """Inverse of ``to_alist``; edge values are not part of the format and read as 1."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines = lines[:-1]

    def ints(k: int) -> List[int]:
        try:
            return [int(tok) for tok in lines[k].split()]
        except (IndexError, ValueError):
            raise ParseError("alist", "malformed line", k + 1)

    header = ints(0)
    if len(header) != 2:
        raise ParseError("alist", "expected 'n m'", 1)
    n, m = header
    col_weights, row_weights = ints(2), ints(3)
    if len(col_weights) != n or len(row_weights) != m:
        raise ParseError("alist", "weight lines do not match n and m", 3)
    if len(lines) != 4 + n + m:
        raise ParseError("alist", f"expected {4 + n + m} lines, found {len(lines)}")
    graph = nx.DiGraph()
    graph.add_nodes_from((variable_node(j), {"bipartite": 0}) for j in range(1, n + 1))
    graph.add_nodes_from((check_node(i), {"bipartite": 1}) for i in range(1, m + 1))
    for j in range(n):
        entries = [x for x in ints(4 + j) if x != 0]
        if len(entries) != col_weights[j]:
            raise ParseError("alist", "column weight mismatch", 5 + j)
        for i in entries:
            graph.add_edge(check_node(i), variable_node(j + 1), val=1)
    for i in range(m):
        entries = [x for x in ints(4 + n + i) if x != 0]
        if len(entries) != row_weights[i]:
            raise ParseError("alist", "row weight mismatch", 5 + n + i)
        if sorted(int(v[1:]) for v in graph.successors(check_node(i + 1))) != sorted(entries):
            raise ParseError("alist", "check and variable lists disagree", 5 + n + i)
    return TannerGraph(n, m, graph)
