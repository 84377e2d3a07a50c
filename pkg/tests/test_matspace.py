import unittest

import numpy as np

from src.custom_exceptions import DimensionMismatchError, FieldMismatchError, ParseError
from src.field import FieldSpec
from src.matspace import (
    VectorOrder,
    devectorize,
    dot,
    elementary_matrix,
    format_matrix,
    forward_echelon,
    in_row_space,
    null_space_rref,
    nrt_column_weight,
    nrt_distance,
    nrt_weight,
    nrt_weights_batch,
    parse_matrix,
    rank,
    row_space_basis,
    row_space_equal,
    rref,
    trace_dot,
    vectorize,
)


class TestElimination(unittest.TestCase):
    """Test RREF, forward echelon form, rank and null spaces."""

    def setUp(self):
        """Set up test fixtures."""
        self.field = FieldSpec(7)
        self.GF = self.field.GF
        self.rng = np.random.default_rng(1)

    def random_matrix(self, m, n):
        return self.GF(self.rng.integers(0, 7, size=(m, n)))

    def test_rref_shape(self):
        """Pivots are ones, pivot columns are unit vectors and zero rows sit last."""
        for _ in range(40):
            M = self.random_matrix(int(self.rng.integers(1, 6)), int(self.rng.integers(1, 8)))
            R, pivots = rref(M)
            self.assertEqual(len(pivots), rank(M))
            self.assertEqual(pivots, sorted(pivots))
            for i, col in enumerate(pivots):
                column = [0] * R.shape[0]
                column[i] = 1
                self.assertEqual(R[:, col].tolist(), column)
            self.assertFalse(np.any(R[len(pivots):].view(np.ndarray)))
            self.assertTrue(row_space_equal(R, M))

    def test_forward_echelon_spans_same_rows(self):
        for _ in range(40):
            M = self.random_matrix(int(self.rng.integers(1, 6)), int(self.rng.integers(1, 8)))
            E = forward_echelon(M)
            self.assertEqual(rref(E)[0].tolist(), rref(M)[0].tolist())

    def test_empty_inputs(self):
        empty = self.GF.Zeros((0, 3))
        R, pivots = rref(empty)
        self.assertEqual((R.shape, pivots), ((0, 3), []))
        self.assertEqual(rank(empty), 0)
        self.assertEqual(null_space_rref(empty).tolist(), self.GF.Identity(3).tolist())

    def test_rank_deficient(self):
        M = self.field.array([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
        R, pivots = rref(M)
        self.assertEqual(pivots, [0, 2])
        self.assertEqual(rank(M), 2)
        self.assertEqual(R[2].tolist(), [0, 0, 0])

    def test_forward_echelon_keeps_first_row(self):
        """Test that rows are never normalised or reduced upwards."""
        M = self.field.array([[3, 1, 2], [6, 5, 0], [1, 1, 1]])
        E = forward_echelon(M)
        self.assertEqual(E[0].tolist(), [3, 1, 2])
        self.assertEqual(int(E[1, 0]), 0)
        self.assertEqual(int(E[2, 0]), 0)
        self.assertEqual(rank(E), rank(M))

    def test_null_space(self):
        for _ in range(30):
            M = self.random_matrix(3, 6)
            N = null_space_rref(M)
            self.assertEqual(N.shape, (6 - rank(M), 6))
            self.assertFalse(np.any((M @ N.T).view(np.ndarray)))
            self.assertEqual(N.tolist(), rref(N)[0].tolist())

    def test_null_space_of_invertible_matrix(self):
        N = null_space_rref(self.GF.Identity(4))
        self.assertEqual(N.shape, (0, 4))

    def test_row_space_helpers(self):
        A = self.field.array([[1, 2, 0], [0, 1, 1]])
        B = self.field.array([[1, 3, 1], [2, 4, 0]])
        self.assertTrue(row_space_equal(A, B))
        self.assertEqual(row_space_basis(A).shape, (2, 3))
        self.assertTrue(in_row_space(A, self.field.array([2, 5, 1])))
        self.assertFalse(in_row_space(A, self.field.array([0, 0, 1])))

    def test_row_space_shape_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            row_space_equal(self.GF.Ones((2, 3)), self.GF.Ones((2, 4)))


class TestNRTMetric(unittest.TestCase):
    """Test NRT weights and distances."""

    def setUp(self):
        """Set up test fixtures."""
        self.field = FieldSpec(5)

    def test_column_weight_example(self):
        """The first nonzero entry at row 4 of 8 gives weight 5."""
        col = self.field.array([0, 0, 0, 1, 0, 1, 1, 0])
        self.assertEqual(nrt_column_weight(col), 5)
        self.assertEqual(nrt_column_weight(self.field.GF.Zeros(8)), 0)

    def test_matrix_weight(self):
        A = self.field.array([[0, 1, 0], [2, 0, 0], [0, 3, 0]])
        # columns: first nonzero at rows 2, 1 and none
        self.assertEqual(nrt_weight(A), 2 + 3 + 0)

    def test_batch_weights(self):
        blocks = np.array([
            [[0, 0], [0, 1]],
            [[1, 0], [0, 0]],
            [[0, 0], [0, 0]],
        ])
        self.assertEqual(nrt_weights_batch(blocks).tolist(), [1, 2, 0])

    def test_distance_is_a_metric(self):
        rng = np.random.default_rng(2)
        GF = self.field.GF
        for _ in range(30):
            A, B, C = (GF(rng.integers(0, 5, size=(4, 3))) for _ in range(3))
            self.assertEqual(nrt_distance(A, B), nrt_distance(B, A))
            self.assertEqual(nrt_distance(A, A), 0)
            self.assertLessEqual(nrt_distance(A, C), nrt_distance(A, B) + nrt_distance(B, C))

    def test_weight_is_smallest_ideal_size(self):
        """
        The weight is the size of the smallest down-set of the column chains
        containing the support: a nonzero entry in row i of a column brings in
        rows i..s of that column.
        """
        rng = np.random.default_rng(8)
        GF = self.field.GF
        for _ in range(200):
            s, r = int(rng.integers(1, 7)), int(rng.integers(1, 5))
            mask = rng.random((s, r)) < 0.3
            A = GF(rng.integers(1, 5, size=(s, r)) * mask)
            ideal = set()
            for i, j in zip(*np.nonzero(A.view(np.ndarray))):
                ideal.update((k, int(j)) for k in range(int(i), s))
            self.assertEqual(nrt_weight(A), len(ideal))

    def test_metric_axioms_exhaustively(self):
        """
        Definiteness, scaling invariance and the triangle inequality over all
        matrices with s·r ≤ 6 over GF(2) and s·r ≤ 4 over GF(3). Distances are
        translation invariant, so the triangle inequality reduces to
        w(x + y) ≤ w(x) + w(y).
        """
        shapes = {2: [(s, r) for s in range(1, 7) for r in range(1, 7) if s * r <= 6],
                  3: [(s, r) for s in range(1, 5) for r in range(1, 5) if s * r <= 4]}
        for q, grid in shapes.items():
            GF = FieldSpec(q).GF
            for s, r in grid:
                every = np.indices((q,) * (s * r)).reshape(s * r, -1).T.reshape(-1, s, r)
                X = GF(every)
                w = nrt_weights_batch(every)
                self.assertEqual(int(np.count_nonzero(w == 0)), 1)
                self.assertEqual(int(w[0]), 0)
                sums = (X[:, np.newaxis] + X[np.newaxis, :]).view(np.ndarray)
                w_sum = nrt_weights_batch(sums.reshape(-1, s, r)).reshape(len(w), len(w))
                self.assertTrue(np.all(w_sum <= w[:, np.newaxis] + w[np.newaxis, :]), (q, s, r))
                for c in range(2, q):
                    scaled = (X * GF(c)).view(np.ndarray)
                    self.assertEqual(nrt_weights_batch(scaled).tolist(), w.tolist())

    def test_distance_shape_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            nrt_distance(self.field.GF.Zeros((2, 2)), self.field.GF.Zeros((2, 3)))


class TestVectorisation(unittest.TestCase):
    """Test vectorisation, inner products and elementary matrices."""

    def setUp(self):
        """Set up test fixtures."""
        self.field = FieldSpec(11)
        self.A = self.field.array([[1, 2, 3], [4, 5, 6]])

    def test_orders(self):
        self.assertEqual(vectorize(self.A).tolist(), [1, 2, 3, 4, 5, 6])
        self.assertEqual(vectorize(self.A, VectorOrder.COL_MAJOR).tolist(), [1, 4, 2, 5, 3, 6])
        self.assertEqual(vectorize(self.A, "col").tolist(), [1, 4, 2, 5, 3, 6])

    def test_devectorize(self):
        v = vectorize(self.A, VectorOrder.COL_MAJOR)
        self.assertEqual(devectorize(v, 2, 3, VectorOrder.COL_MAJOR).tolist(), self.A.tolist())
        with self.assertRaises(DimensionMismatchError):
            devectorize(v, 3, 3)

    def test_dot_equals_trace_dot(self):
        rng = np.random.default_rng(4)
        GF = self.field.GF
        for _ in range(20):
            A, B = GF(rng.integers(0, 11, size=(3, 4))), GF(rng.integers(0, 11, size=(3, 4)))
            self.assertEqual(int(dot(A, B)), int(trace_dot(A, B)))
            self.assertEqual(int(dot(A, B)), int(vectorize(A) @ vectorize(B)))

    def test_dot_rejects_other_field(self):
        with self.assertRaises(FieldMismatchError):
            dot(self.A, FieldSpec(13).array([[1, 2, 3], [4, 5, 6]]))

    def test_elementary_matrix(self):
        E = elementary_matrix(self.field, 2, 3, 2, 3)
        self.assertEqual(E.tolist(), [[0, 0, 0], [0, 0, 1]])


class TestMatrixText(unittest.TestCase):
    """Test the matrix text format."""

    def setUp(self):
        """Set up test fixtures."""
        self.field = FieldSpec(7)

    def test_format(self):
        M = self.field.array([[1, 0, 6], [2, 3, 4]])
        self.assertEqual(format_matrix(M), "2 3 7\n1 0 6\n2 3 4\n")

    def test_parse(self):
        M = parse_matrix("2 2 7\n1 2\n\n3 4\n", self.field)
        self.assertEqual(M.tolist(), [[1, 2], [3, 4]])

    def test_parse_errors(self):
        with self.assertRaises(ParseError):
            parse_matrix("", self.field)
        with self.assertRaises(ParseError):
            parse_matrix("2 2 5\n1 2\n3 4\n", self.field)
        with self.assertRaises(ParseError):
            parse_matrix("2 2 7\n1 2\n3\n", self.field)
        with self.assertRaises(ParseError):
            parse_matrix("1 2 7\n1 9\n", self.field)
        with self.assertRaises(ParseError):
            parse_matrix("2 2 7\n1 2\n", self.field)
