"""Exact scalar arithmetic over prime fields F_p and the rationals.

Values are kept in canonical form throughout: prime-field elements as
integers in [0, p), rationals as fully reduced ``fractions.Fraction``
(positive denominator, arbitrary precision).  A field object owns the
arithmetic; ``FpElement`` wraps a value together with its field for
operator-style scalar work.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction

from .errors import MixedFieldsError

MAX_MODULUS = 1 << 62

# Sufficient witness set for a deterministic Miller-Rabin test of every
# n < 3.3 * 10^24, which covers the whole admissible modulus range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

#: Seed used by every randomized entry point when the caller does not pass one.
DEFAULT_SEED = 101


def is_prime(n: int) -> bool:
    """Deterministic primality check, exact for all n below 2^62."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class SeededRng:
    """Deterministic random stream with reproducible substreams.

    Backed by ``random.Random`` (the Mersenne Twister).  ``split(i)``
    derives an independent child stream by hashing ``"<seed>/<i>"``
    through SHA-256 and seeding a fresh generator with the first eight
    bytes, so per-trial streams reproduce regardless of how much the
    parent stream was consumed.
    """

    __slots__ = ("seed", "_rng")

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._rng = random.Random(self.seed)

    def randrange(self, n: int) -> int:
        return self._rng.randrange(n)

    def split(self, index: int) -> "SeededRng":
        digest = hashlib.sha256(f"{self.seed}/{index}".encode()).digest()
        return SeededRng(int.from_bytes(digest[:8], "big"))

    def __repr__(self):
        return f"SeededRng({self.seed})"


class PrimeField:
    """The field F_p for a prime 2 < p < 2^62.

    Elements are canonical integers in [0, p).  The methods operate on
    raw integers; ``element`` wraps one into an ``FpElement``.
    """

    __slots__ = ("p",)

    zero = 0
    one = 1
    is_prime_field = True

    def __init__(self, p: int):
        p = int(p)
        if not 2 < p < MAX_MODULUS:
            raise ValueError(f"modulus must satisfy 2 < p < 2^62, got {p}")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def coerce(self, v) -> int:
        """Canonical representative in [0, p) of an int, Fraction, or FpElement."""
        if isinstance(v, int):
            return v % self.p
        if isinstance(v, FpElement):
            if v.field.p != self.p:
                raise MixedFieldsError(
                    f"element of F_{v.field.p} used where F_{self.p} expected"
                )
            return v.value
        if isinstance(v, Fraction):
            den = v.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(
                    f"denominator {v.denominator} is not invertible mod {self.p}"
                )
            return v.numerator * pow(den, -1, self.p) % self.p
        raise MixedFieldsError(f"cannot treat {type(v).__name__} as an element of F_{self.p}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, e: int):
        return pow(a, e, self.p)  # negative e inverts, raising on zero base

    def sample(self, rng: SeededRng) -> int:
        """Uniform element of [0, p); advances the stream."""
        return rng.randrange(self.p)

    # Bulk row operations used by the linear algebra and fitting layers.
    def row_sub_scaled(self, row, f, pivot_row):
        p = self.p
        return [(a - f * b) % p for a, b in zip(row, pivot_row)]

    def row_scale(self, row, f):
        p = self.p
        return [a * f % p for a in row]

    def parse(self, text: str) -> int:
        return int(text) % self.p

    def format(self, v) -> str:
        return str(v)

    def element(self, v) -> "FpElement":
        return FpElement(self, v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __str__(self):
        return f"F_{self.p}"


class RationalField:
    """The rational numbers, with values stored as reduced Fractions."""

    __slots__ = ()

    zero = Fraction(0)
    one = Fraction(1)
    is_prime_field = False

    def coerce(self, v) -> Fraction:
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        raise MixedFieldsError(f"cannot treat {type(v).__name__} as a rational number")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return Fraction(1) / a

    def pow(self, a, e: int):
        return a ** e

    def sample(self, rng):
        raise TypeError("uniform sampling needs a finite field")

    def row_sub_scaled(self, row, f, pivot_row):
        return [a - f * b for a, b in zip(row, pivot_row)]

    def row_scale(self, row, f):
        return [a * f for a in row]

    def parse(self, text: str) -> Fraction:
        return Fraction(text)

    def format(self, v) -> str:
        return str(v)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "QQ"


#: The rationals; a single shared instance.
QQ = RationalField()


class FpElement:
    """A prime-field scalar that knows its modulus.

    Arithmetic accepts another FpElement over the same field, or a plain
    int (which embeds canonically).  Combining elements of different
    fields, or mixing with rationals, raises ``MixedFieldsError``.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: PrimeField, value):
        self.field = field
        self.value = field.coerce(value)

    def _unwrap(self, other):
        if isinstance(other, FpElement):
            if other.field.p != self.field.p:
                raise MixedFieldsError(
                    f"cannot combine elements of F_{self.field.p} and F_{other.field.p}"
                )
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        if isinstance(other, Fraction):
            raise MixedFieldsError("cannot combine a prime-field element with a rational")
        return None

    def __add__(self, other):
        v = self._unwrap(other)
        if v is None:
            return NotImplemented
        return FpElement(self.field, self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._unwrap(other)
        if v is None:
            return NotImplemented
        return FpElement(self.field, self.value - v)

    def __rsub__(self, other):
        v = self._unwrap(other)
        if v is None:
            return NotImplemented
        return FpElement(self.field, v - self.value)

    def __mul__(self, other):
        v = self._unwrap(other)
        if v is None:
            return NotImplemented
        return FpElement(self.field, self.value * v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._unwrap(other)
        if v is None:
            return NotImplemented
        return FpElement(self.field, self.value * self.field.inv(v))

    def __rtruediv__(self, other):
        v = self._unwrap(other)
        if v is None:
            return NotImplemented
        return FpElement(self.field, v * self.field.inv(self.value))

    def __neg__(self):
        return FpElement(self.field, -self.value)

    def __pow__(self, e: int):
        return FpElement(self.field, self.field.pow(self.value, e))

    def inv(self) -> "FpElement":
        return FpElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return other.field.p == self.field.p and other.value == self.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FpElement({self.value} mod {self.field.p})"
