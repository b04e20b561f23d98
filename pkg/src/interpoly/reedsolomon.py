"""Single-error detect/correct protocol built on Lagrange interpolation.

A message of n prime-field values becomes the coefficients of a
polynomial f of degree n-1; the codeword is the list of values of f at
the fixed nodes 0, 1, ..., n+k-1.  With k=1 extra value a single
substituted pair is detectable (the pairs no longer lie on any degree
n-1 polynomial); with k=2 it is correctable by refitting with each pair
left out in turn.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    AmbiguousDecodeError,
    DetectedError,
    FieldTooSmallError,
    InsufficientRedundancyError,
)
from .fields import PrimeField
from .fitting import lagrange_fit
from .polynomials import Polynomial


@dataclass(frozen=True)
class Message:
    """Coefficients p_1..p_n in F_p, leading coefficient first (may be 0)."""

    field: PrimeField
    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(self.field.coerce(c) for c in self.coefficients)
        if len(coeffs) < 1:
            raise ValueError("message needs at least one value")
        object.__setattr__(self, "coefficients", coeffs)

    def __len__(self):
        return len(self.coefficients)


@dataclass(frozen=True)
class Codeword:
    """Evaluation pairs of the message polynomial at nodes 0..n+k-1."""

    field: PrimeField
    message_length: int
    redundancy: int
    pairs: tuple

    def __post_init__(self):
        n, k = self.message_length, self.redundancy
        if n < 1:
            raise ValueError("message length must be at least 1")
        if k not in (0, 1, 2):
            raise ValueError(f"redundancy must be 0, 1 or 2, got {k}")
        if self.field.p <= n + k:
            raise FieldTooSmallError(
                f"need p > {n + k} distinct nodes, field has only {self.field.p} elements"
            )
        pairs = tuple(
            (self.field.coerce(x), self.field.coerce(y)) for x, y in self.pairs
        )
        if len(pairs) != n + k:
            raise ValueError(f"expected {n + k} pairs, got {len(pairs)}")
        if len({x for x, _ in pairs}) != len(pairs):
            raise ValueError("evaluation nodes must be distinct")
        object.__setattr__(self, "pairs", pairs)

    def to_json_obj(self) -> dict:
        return {
            "n": self.message_length,
            "k": self.redundancy,
            "p": self.field.p,
            "pairs": [[str(x), str(y)] for x, y in self.pairs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Codeword":
        field = PrimeField(int(obj["p"]))
        pairs = tuple((field.parse(x), field.parse(y)) for x, y in obj["pairs"])
        return cls(field, int(obj["n"]), int(obj["k"]), pairs)

    @classmethod
    def from_json(cls, text: str) -> "Codeword":
        return cls.from_json_obj(json.loads(text))


def _eval_message_poly(field: PrimeField, coeffs, x):
    acc = field.zero
    for c in coeffs:
        acc = field.add(field.mul(acc, x), c)
    return acc


def rs_encode(message: Message, redundancy: int) -> Codeword:
    """Evaluate the message polynomial at the nodes 0..n+k-1."""
    field = message.field
    n = len(message)
    pairs = tuple(
        (x, _eval_message_poly(field, message.coefficients, x)) for x in range(n + redundancy)
    )
    return Codeword(field, n, redundancy, pairs)


def _fit_consistent(pairs, n: int, field) -> Polynomial | None:
    """Degree <= n-1 polynomial through all pairs, or None if there is none."""
    f = lagrange_fit(pairs[:n], field)
    for x, y in pairs[n:]:
        if f.evaluate((x,)) != y:
            return None
    return f


def rs_detect(codeword: Codeword) -> bool:
    """True when all pairs lie on one degree <= n-1 polynomial (no error seen)."""
    if codeword.redundancy < 1:
        raise InsufficientRedundancyError("detection needs at least one extra value")
    return _fit_consistent(codeword.pairs, codeword.message_length, codeword.field) is not None


def _message_from_poly(f: Polynomial, n: int, field) -> Message:
    # Coefficients read off the fit, zero-padded at the high-degree end.
    coeffs = tuple(f.coefficient((n - 1 - i,)) for i in range(n))
    return Message(field, coeffs)


def rs_decode(codeword: Codeword) -> Message:
    """Recover the message, correcting one substituted value when k = 2.

    Raises DetectedError if the codeword is inconsistent beyond repair
    for its redundancy level, and AmbiguousDecodeError if the omission
    search finds more than one plausible polynomial.
    """
    field = codeword.field
    n = codeword.message_length
    k = codeword.redundancy
    pairs = codeword.pairs
    if k == 0:
        return _message_from_poly(lagrange_fit(pairs, field), n, field)
    whole = _fit_consistent(pairs, n, field)
    if whole is not None:
        return _message_from_poly(whole, n, field)
    if k == 1:
        raise DetectedError("codeword is inconsistent; one extra value only detects")
    candidates: list[Polynomial] = []
    for omit in range(n + k):
        rest = pairs[:omit] + pairs[omit + 1 :]
        f = _fit_consistent(rest, n, field)
        if f is not None and f not in candidates:
            candidates.append(f)
    if not candidates:
        raise DetectedError("no single substitution explains the codeword")
    if len(candidates) > 1:
        raise AmbiguousDecodeError(
            f"{len(candidates)} distinct polynomials each explain the codeword"
        )
    return _message_from_poly(candidates[0], n, field)


def rs_corrupt(codeword: Codeword, index: int, new_y) -> tuple[Codeword, bool]:
    """Replace the value at one position; returns (codeword, changed flag)."""
    if not 0 <= index < len(codeword.pairs):
        raise IndexError(f"index {index} out of range for {len(codeword.pairs)} pairs")
    field = codeword.field
    y = field.coerce(new_y)
    x, old = codeword.pairs[index]
    pairs = codeword.pairs[:index] + ((x, y),) + codeword.pairs[index + 1 :]
    corrupted = Codeword(field, codeword.message_length, codeword.redundancy, pairs)
    return corrupted, y != old
