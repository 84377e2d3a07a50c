import itertools
import math
import unittest
from unittest.mock import patch

import galois

from src.custom_exceptions import (
    DivisionByZeroError,
    FieldMismatchError,
    InvalidFieldSpecError,
)
from src.field import (
    FieldSpec,
    binom_mod_p,
    binom_residue,
    element_vector,
    field_arith,
    field_of,
    field_powers,
    format_field_spec,
    inverse,
    is_irreducible_modulus,
    lucas_binom_mod_p,
    parse_field_spec,
    smallest_irreducible,
)


class TestFieldSpec(unittest.TestCase):
    """Test construction and validation of field descriptions."""

    def test_prime_field(self):
        """Test a prime field and its elements."""
        spec = FieldSpec(17)
        self.assertEqual(spec.q, 17)
        self.assertEqual(int(spec.element(5) * spec.element(7)), 35 % 17)
        self.assertIs(spec.GF, galois.GF(17))

    def test_extension_field_multiplication(self):
        """Test GF(4) built from x^2 + x + 1."""
        spec = FieldSpec(2, 2, (1, 1, 1))
        x = spec.element(2)
        # x * x = x + 1
        self.assertEqual(int(x * x), 3)
        self.assertEqual(int(x * spec.element(3)), 1)

    def test_rejects_composite_characteristic(self):
        """Test that a non-prime p is rejected."""
        with self.assertRaises(InvalidFieldSpecError):
            FieldSpec(4)

    def test_rejects_reducible_modulus(self):
        """Test that x^2 + 1 over GF(2) is rejected."""
        with self.assertRaises(InvalidFieldSpecError):
            FieldSpec(2, 2, (1, 0, 1))

    @patch("src.field.logger")
    def test_reducible_modulus_is_logged(self, mock_logger):
        with self.assertRaises(InvalidFieldSpecError):
            FieldSpec(3, 2, (2, 0, 1))
        mock_logger.debug.assert_called_once()
        context = mock_logger.debug.call_args.kwargs["context"]
        self.assertEqual(context["modulus"], [2, 0, 1])

    def test_rejects_huge_field(self):
        """Test the upper limit on q."""
        with self.assertRaises(InvalidFieldSpecError):
            parse_field_spec("2^17")

    def test_element_out_of_range(self):
        """Test that element values outside [0, q) are rejected."""
        with self.assertRaises(InvalidFieldSpecError):
            FieldSpec(5).element(5)
        with self.assertRaises(InvalidFieldSpecError):
            FieldSpec(5).array([[1, 2], [3, 7]])


class TestFieldSpecText(unittest.TestCase):
    """Test parsing and formatting of field specs."""

    def test_parse_prime(self):
        self.assertEqual(parse_field_spec(" 17 "), FieldSpec(17))

    def test_parse_power_uses_smallest_irreducible(self):
        """Test that 'p^e' picks the lexicographically smallest modulus."""
        spec = parse_field_spec("2^3")
        self.assertEqual(spec.modulus, (1, 1, 0, 1))
        self.assertEqual(smallest_irreducible(2, 3), (1, 1, 0, 1))

    def test_parse_explicit_modulus(self):
        """Test commas and spaces as coefficient separators."""
        self.assertEqual(parse_field_spec("2^2:1,1,1"), FieldSpec(2, 2, (1, 1, 1)))
        self.assertEqual(parse_field_spec("3^2:1 0 1"), FieldSpec(3, 2, (1, 0, 1)))

    def test_parse_garbage(self):
        with self.assertRaises(InvalidFieldSpecError):
            parse_field_spec("seventeen")

    def test_format(self):
        self.assertEqual(format_field_spec(FieldSpec(7)), "7")
        self.assertEqual(format_field_spec(FieldSpec(2, 2, (1, 1, 1))), "2^2:1,1,1")

    def test_field_of_recovers_spec(self):
        """Test field_of on prime and extension field arrays."""
        spec = parse_field_spec("2^3")
        self.assertEqual(field_of(spec.array([1, 2, 3])), spec)
        self.assertEqual(field_of(FieldSpec(11).element(4)), FieldSpec(11))


class TestIrreducibility(unittest.TestCase):
    """Test the brute-force irreducibility check."""

    def test_degree_two_over_gf2(self):
        self.assertTrue(is_irreducible_modulus(2, (1, 1, 1)))
        self.assertFalse(is_irreducible_modulus(2, (1, 0, 1)))
        self.assertFalse(is_irreducible_modulus(2, (0, 1, 1)))

    def test_degree_two_over_gf3(self):
        """x^2 + 1 is irreducible mod 3 since -1 is not a square."""
        self.assertTrue(is_irreducible_modulus(3, (1, 0, 1)))
        self.assertFalse(is_irreducible_modulus(3, (2, 0, 1)))

    def test_agrees_with_galois(self):
        """Test every monic cubic over GF(3) against galois."""
        GF3 = galois.GF(3)
        for c0 in range(3):
            for c1 in range(3):
                for c2 in range(3):
                    coeffs = (c0, c1, c2, 1)
                    poly = galois.Poly(list(reversed(coeffs)), field=GF3)
                    self.assertEqual(
                        is_irreducible_modulus(3, coeffs), poly.is_irreducible(), coeffs
                    )


class TestFieldArithmetic(unittest.TestCase):
    """Test element-level helpers."""

    def setUp(self):
        """Set up test fixtures."""
        self.spec = FieldSpec(7)

    def test_field_arith_operations(self):
        a, b = self.spec.element(3), self.spec.element(5)
        self.assertEqual(int(field_arith(a, b, "+")), 1)
        self.assertEqual(int(field_arith(a, b, "-")), 5)
        self.assertEqual(int(field_arith(a, b, "*")), 1)
        self.assertEqual(int(field_arith(a, b, "/") * b), 3)

    def test_field_arith_named_operations(self):
        a, b = self.spec.element(3), self.spec.element(5)
        for name, symbol in (("add", "+"), ("sub", "-"), ("mul", "*"), ("div", "/")):
            self.assertEqual(int(field_arith(a, b, name)), int(field_arith(a, b, symbol)))
        with self.assertRaises(DivisionByZeroError):
            field_arith(a, self.spec.element(0), "div")
        with self.assertRaises(ValueError):
            field_arith(a, b, "pow")

    def test_frobenius(self):
        """(a + b)^p = a^p + b^p for every pair, in prime and extension fields."""
        for spec in (FieldSpec(5), FieldSpec(2, 3, (1, 1, 0, 1)), parse_field_spec("3^2")):
            GF = spec.GF
            a = GF.elements.reshape(-1, 1)
            b = GF.elements.reshape(1, -1)
            lhs = (a + b) ** spec.p
            rhs = a ** spec.p + b ** spec.p
            self.assertEqual(lhs.tolist(), rhs.tolist(), str(spec))

    def test_field_mismatch(self):
        """Test that operands from different fields are rejected."""
        with self.assertRaises(FieldMismatchError):
            field_arith(self.spec.element(1), FieldSpec(5).element(1), "+")

    def test_division_by_zero(self):
        """Test that division by zero raises a ZeroDivisionError subclass."""
        with self.assertRaises(DivisionByZeroError):
            field_arith(self.spec.element(1), self.spec.element(0), "/")
        with self.assertRaises(ZeroDivisionError):
            inverse(self.spec.element(0))

    def test_inverse(self):
        for value in range(1, 7):
            x = self.spec.element(value)
            self.assertEqual(int(x * inverse(x)), 1)

    def test_element_vector(self):
        """Test the coefficient vector of an extension field element."""
        spec = FieldSpec(2, 2, (1, 1, 1))
        self.assertEqual(element_vector(spec.element(3)), (1, 1))
        self.assertEqual(element_vector(spec.element(2)), (0, 1))
        self.assertEqual(element_vector(FieldSpec(13).element(9)), (9,))

    def test_field_powers(self):
        """Test that x^0 = 1 even for x = 0."""
        self.assertEqual(field_powers(self.spec.element(3), 4).tolist(), [1, 3, 2, 6])
        self.assertEqual(field_powers(self.spec.element(0), 3).tolist(), [1, 0, 0])


class TestBinomials(unittest.TestCase):
    """Test binomial coefficients reduced mod p."""

    def test_pascal_matches_lucas(self):
        """Test the Pascal-row cache against Lucas' theorem."""
        for p in (2, 3, 5, 7):
            for n in range(40):
                for a in range(n + 1):
                    self.assertEqual(binom_residue(n, a, p), lucas_binom_mod_p(n, a, p))

    def test_pascal_matches_math_comb(self):
        """Exhaustive up to n = 64 against exact integer binomials."""
        for p in (2, 3, 5, 7, 11, 13):
            for n in range(65):
                for a in range(n + 1):
                    exact = math.comb(n, a) % p
                    self.assertEqual(binom_residue(n, a, p), exact, (n, a, p))
                    self.assertEqual(lucas_binom_mod_p(n, a, p), exact, (n, a, p))

    def test_pascal_identity(self):
        for p in (2, 3, 5):
            for n, a in itertools.product(range(1, 65), range(1, 65)):
                self.assertEqual(
                    binom_residue(n, a, p),
                    (binom_residue(n - 1, a - 1, p) + binom_residue(n - 1, a, p)) % p,
                )

    def test_out_of_range(self):
        self.assertEqual(binom_residue(3, 5, 7), 0)
        self.assertEqual(lucas_binom_mod_p(3, -1, 7), 0)
        self.assertEqual(int(binom_mod_p(2, 3, 5)), 0)

    def test_binom_mod_p_is_field_element(self):
        value = binom_mod_p(4, 2, 5)
        self.assertIs(type(value), galois.GF(5))
        self.assertEqual(int(value), 1)
