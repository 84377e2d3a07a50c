"""
Finite field layer.

Field elements are ``galois`` FieldArray scalars. For a prime field the
integer representation is the residue in [0, p); for GF(p^e) it is the
base-p reading of the coefficient vector of the element modulo the field's
irreducible polynomial.
"""

import itertools
import math
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple, Type

import galois
import numpy as np

from src.custom_exceptions import (
    DivisionByZeroError,
    FieldMismatchError,
    InvalidFieldSpecError,
)
from src.logging_config import get_logger

logger = get_logger(__name__)

MAX_FIELD_ORDER = 2 ** 16

FieldElement = galois.FieldArray


@dataclass(frozen=True)
class FieldSpec:
    """
    Description of GF(q), q = p^e.

    ``modulus`` holds the coefficients of the monic irreducible polynomial,
    lowest degree first, and is empty for prime fields.
    """

    p: int
    e: int = 1
    modulus: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        label = format_field_spec(self)
        if self.p < 2 or not galois.is_prime(self.p):
            raise InvalidFieldSpecError(label, f"{self.p} is not prime")
        if self.e < 1:
            raise InvalidFieldSpecError(label, "extension degree must be at least 1")
        if self.p ** self.e > MAX_FIELD_ORDER:
            raise InvalidFieldSpecError(label, f"q exceeds {MAX_FIELD_ORDER}")
        if self.e == 1:
            if self.modulus:
                raise InvalidFieldSpecError(label, "prime fields take no modulus")
            return
        if len(self.modulus) != self.e + 1 or self.modulus[-1] != 1:
            raise InvalidFieldSpecError(
                label, f"modulus must be monic of degree {self.e}"
            )
        if any(not 0 <= c < self.p for c in self.modulus):
            raise InvalidFieldSpecError(label, "modulus coefficients must lie in [0, p)")
        if not is_irreducible_modulus(self.p, self.modulus):
            logger.debug("Rejected reducible modulus",
                         context={"p": self.p, "e": self.e, "modulus": list(self.modulus)})
            raise InvalidFieldSpecError(label, "modulus is reducible")

    @property
    def q(self) -> int:
        return self.p ** self.e

    @property
    def GF(self) -> Type[galois.FieldArray]:
        """The ``galois`` field class for this spec."""
        return _field_class(self.p, self.e, self.modulus)

    def element(self, value: int) -> galois.FieldArray:
        """The element whose integer representation is ``value``."""
        if not 0 <= int(value) < self.q:
            raise InvalidFieldSpecError(
                format_field_spec(self), f"element {value} outside [0, {self.q})"
            )
        return self.GF(int(value))

    def array(self, values: object) -> galois.FieldArray:
        """Field array from nested integer sequences."""
        ints = np.asarray(values, dtype=np.int64)
        if ints.size and (ints.min() < 0 or ints.max() >= self.q):
            raise InvalidFieldSpecError(
                format_field_spec(self), f"array entries outside [0, {self.q})"
            )
        return self.GF(ints)

    def __str__(self) -> str:
        return format_field_spec(self)


@lru_cache(maxsize=None)
def _field_class(p: int, e: int, modulus: Tuple[int, ...]) -> Type[galois.FieldArray]:
    if e == 1:
        return galois.GF(p)
    poly = galois.Poly(list(reversed(modulus)), field=galois.GF(p))
    return galois.GF(p ** e, irreducible_poly=poly)


def is_irreducible_modulus(p: int, coeffs: Sequence[int]) -> bool:
    """
    Brute-force irreducibility test: trial division by every monic polynomial
    of degree 1 .. e // 2 over GF(p). ``coeffs`` is lowest degree first.
    """
    e = len(coeffs) - 1
    if e < 1 or coeffs[-1] % p == 0:
        return False
    GFp = galois.GF(p)
    candidate = galois.Poly([c % p for c in reversed(coeffs)], field=GFp)
    for degree in range(1, e // 2 + 1):
        for tail in itertools.product(range(p), repeat=degree):
            divisor = galois.Poly([1, *tail], field=GFp)
            if int(candidate % divisor) == 0:
                return False
    return True


def smallest_irreducible(p: int, e: int) -> Tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e, low-to-high."""
    poly = galois.irreducible_poly(p, e, method="min")
    return tuple(int(c) for c in reversed(poly.coeffs.tolist()))


def parse_field_spec(text: str) -> FieldSpec:
    """
    Parse ``"17"``, ``"2^3"`` or ``"2^2:1,1,1"`` (modulus low-to-high, commas or
    spaces).
    """
    raw = text.strip()
    head, _, tail = raw.partition(":")
    try:
        if "^" in head:
            p_text, e_text = head.split("^", 1)
            p, e = int(p_text), int(e_text)
        else:
            p, e = int(head), 1
        modulus = tuple(int(tok) for tok in tail.replace(",", " ").split())
    except ValueError:
        raise InvalidFieldSpecError(raw, "expected 'p', 'p^e' or 'p^e:c0,...,ce'")
    if e > 1 and not modulus:
        if p < 2 or not galois.is_prime(p) or p ** e > MAX_FIELD_ORDER:
            # FieldSpec produces the detailed message
            return FieldSpec(p, e, (0,) * e + (1,))
        modulus = smallest_irreducible(p, e)
    return FieldSpec(p, e, modulus)


def format_field_spec(spec: FieldSpec) -> str:
    if spec.e == 1:
        return str(spec.p)
    if not spec.modulus:
        return f"{spec.p}^{spec.e}"
    return f"{spec.p}^{spec.e}:" + ",".join(str(c) for c in spec.modulus)


def field_of(x: galois.FieldArray) -> FieldSpec:
    """Recover the FieldSpec of a field element or array."""
    GF = type(x)
    p, e = int(GF.characteristic), int(GF.degree)
    if e == 1:
        return FieldSpec(p)
    modulus = tuple(int(c) for c in reversed(GF.irreducible_poly.coeffs.tolist()))
    return FieldSpec(p, e, modulus)


_FIELD_OPS = {
    "+": "add", "add": "add",
    "-": "sub", "sub": "sub",
    "*": "mul", "mul": "mul",
    "/": "div", "div": "div",
}


def field_arith(a: galois.FieldArray, b: galois.FieldArray, op: str) -> galois.FieldArray:
    """
    Apply ``op`` to two elements of the same field. ``op`` is ``add``,
    ``sub``, ``mul`` or ``div``, or the matching symbol.
    """
    if type(a) is not type(b):
        raise FieldMismatchError(str(field_of(a)), str(field_of(b)))
    name = _FIELD_OPS.get(op)
    if name == "add":
        return a + b
    if name == "sub":
        return a - b
    if name == "mul":
        return a * b
    if name == "div":
        if int(b) == 0:
            raise DivisionByZeroError()
        return a / b
    raise ValueError(f"Unknown field operation {op!r}")


def inverse(a: galois.FieldArray) -> galois.FieldArray:
    if int(a) == 0:
        raise DivisionByZeroError("field inversion")
    return a ** -1


def element_vector(x: galois.FieldArray) -> Tuple[int, ...]:
    """Coefficient vector of an element over GF(p), lowest degree first."""
    GF = type(x)
    p, e = int(GF.characteristic), int(GF.degree)
    value = int(x)
    digits = []
    for _ in range(e):
        value, digit = divmod(value, p)
        digits.append(digit)
    return tuple(digits)


def field_powers(x: galois.FieldArray, n: int) -> galois.FieldArray:
    """(x^0, x^1, ..., x^{n-1}) with x^0 = 1 for every x."""
    GF = type(x)
    out = GF.Ones(n)
    for k in range(1, n):
        out[k] = out[k - 1] * x
    return out


_PASCAL_ROWS: Dict[int, List[Tuple[int, ...]]] = {}
_PASCAL_LOCK = threading.Lock()


def _pascal_row(n: int, p: int) -> Tuple[int, ...]:
    with _PASCAL_LOCK:
        rows = _PASCAL_ROWS.setdefault(p, [(1,)])
        while len(rows) <= n:
            prev = rows[-1]
            rows.append(
                tuple((a + b) % p for a, b in zip((0,) + prev, prev + (0,)))
            )
        return rows[n]


def binom_residue(n: int, a: int, p: int) -> int:
    """binom(n, a) mod p from the Pascal recurrence reduced mod p."""
    if a < 0 or n < 0 or a > n:
        return 0
    return _pascal_row(n, p)[a]


def binom_mod_p(n: int, a: int, p: int) -> galois.FieldArray:
    """binom(n, a) as an element of the prime field GF(p); zero when a > n."""
    return galois.GF(p)(binom_residue(n, a, p))


def lucas_binom_mod_p(n: int, a: int, p: int) -> int:
    """binom(n, a) mod p via Lucas' theorem on base-p digits."""
    if a < 0 or n < 0 or a > n:
        return 0
    result = 1
    while n or a:
        n, n_digit = divmod(n, p)
        a, a_digit = divmod(a, p)
        if a_digit > n_digit:
            return 0
        result = result * math.comb(n_digit, a_digit) % p
    return result
