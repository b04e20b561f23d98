"""Sparse multivariate polynomials with a canonical graded-lex term order.

A monomial is an exponent tuple, one entry per variable; its total degree
is the sum.  Polynomials map exponent tuples to nonzero coefficients in a
single field.  Serialization (string form, JSON) always lists terms in
graded lexicographic order: higher total degree first, ties broken
lexicographically in the declared variable order (x, y, z, ...).
"""

from __future__ import annotations

import itertools

from .errors import DimensionMismatchError

_VAR_NAMES = "xyzw"


def grlex_key(exponents):
    """Sort key putting monomials in graded-lex order (descending)."""
    return (-sum(exponents), tuple(-e for e in exponents))


def monomial_basis(num_vars: int, max_degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of total degree <= max_degree, graded-lex ordered.

    The count is C(num_vars + max_degree, max_degree).
    """
    if num_vars < 1:
        raise ValueError("need at least one variable")
    if max_degree < 0:
        raise ValueError("degree must be non-negative")
    exps = [
        e
        for e in itertools.product(range(max_degree + 1), repeat=num_vars)
        if sum(e) <= max_degree
    ]
    exps.sort(key=grlex_key)
    return exps


def var_name(index: int, num_vars: int) -> str:
    if num_vars <= len(_VAR_NAMES):
        return _VAR_NAMES[index]
    return f"x{index}"


class Polynomial:
    """A sparse polynomial over one field; zero coefficients are never stored."""

    __slots__ = ("num_vars", "field", "terms")

    def __init__(self, num_vars: int, terms, field):
        if num_vars < 1:
            raise ValueError("need at least one variable")
        items = terms.items() if isinstance(terms, dict) else terms
        clean: dict[tuple[int, ...], object] = {}
        zero = field.zero
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != num_vars:
                raise DimensionMismatchError(
                    f"monomial {exps} has {len(exps)} exponents, expected {num_vars}"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = field.coerce(coeff)
            if exps in clean:
                c = field.add(clean[exps], c)
            clean[exps] = c
        self.num_vars = num_vars
        self.field = field
        self.terms = {e: c for e, c in clean.items() if c != zero}

    @classmethod
    def _trusted(cls, num_vars: int, terms: dict, field) -> "Polynomial":
        # Internal: terms must already be canonical (tuple keys of the right
        # length, coerced nonzero coefficients).
        self = object.__new__(cls)
        self.num_vars = num_vars
        self.field = field
        self.terms = terms
        return self

    @classmethod
    def zero(cls, num_vars: int, field) -> "Polynomial":
        return cls(num_vars, {}, field)

    @classmethod
    def constant(cls, num_vars: int, value, field) -> "Polynomial":
        return cls(num_vars, {(0,) * num_vars: value}, field)

    @classmethod
    def monomial(cls, num_vars: int, exponents, field, coeff=1) -> "Polynomial":
        return cls(num_vars, {tuple(exponents): coeff}, field)

    @classmethod
    def variable(cls, num_vars: int, index: int, field) -> "Polynomial":
        exps = [0] * num_vars
        exps[index] = 1
        return cls.monomial(num_vars, exps, field)

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        return [(e, self.terms[e]) for e in sorted(self.terms, key=grlex_key)]

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), self.field.zero)

    def _require_compatible(self, other: "Polynomial"):
        if other.num_vars != self.num_vars:
            raise DimensionMismatchError("polynomials have different variable counts")
        if other.field != self.field:
            from .errors import MixedFieldsError

            raise MixedFieldsError("polynomials live over different fields")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial(
                self.num_vars,
                list(self.terms.items()) + [((0,) * self.num_vars, other)],
                self.field,
            )
        self._require_compatible(other)
        merged = dict(self.terms)
        f = self.field
        for e, c in other.terms.items():
            merged[e] = f.add(merged[e], c) if e in merged else c
        return Polynomial(self.num_vars, merged, f)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return Polynomial(self.num_vars, {e: f.neg(c) for e, c in self.terms.items()}, f)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return self + (-self.field.coerce(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        f = self.field
        if not isinstance(other, Polynomial):
            c = f.coerce(other)
            return Polynomial(
                self.num_vars, {e: f.mul(v, c) for e, v in self.terms.items()}, f
            )
        self._require_compatible(other)
        prod: dict[tuple[int, ...], object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = f.mul(c1, c2)
                prod[e] = f.add(prod[e], c) if e in prod else c
        return Polynomial(self.num_vars, prod, f)

    __rmul__ = __mul__

    def evaluate(self, point):
        """Exact value at a point given as one coordinate per variable."""
        if len(point) != self.num_vars:
            raise DimensionMismatchError(
                f"point has {len(point)} coordinates, expected {self.num_vars}"
            )
        f = self.field
        coords = [f.coerce(x) for x in point]
        if self.num_vars == 1 and f.is_prime_field and self.terms:
            # Horner pass over the dense coefficient range; faster than
            # per-term exponentiation for the low degrees seen in fitting.
            deg = max(e for (e,) in self.terms)
            if deg <= 1024:
                p = f.p
                x = coords[0]
                terms = self.terms
                acc = 0
                for e in range(deg, -1, -1):
                    acc = (acc * x + terms.get((e,), 0)) % p
                return acc
        total = f.zero
        for exps, coeff in self.terms.items():
            v = coeff
            for x, e in zip(coords, exps):
                if e:
                    v = f.mul(v, f.pow(x, e))
            total = f.add(total, v)
        return total

    def map_into(self, field) -> "Polynomial":
        """The same polynomial with coefficients carried into another field."""
        if field == self.field:
            return self
        return Polynomial(self.num_vars, {e: field.coerce(c) for e, c in self.terms.items()}, field)

    def to_json_obj(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "terms": [
                {"exponents": list(e), "coeff": self.field.format(c)}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: dict, field) -> "Polynomial":
        return cls(
            int(obj["num_vars"]),
            [(t["exponents"], field.parse(t["coeff"])) for t in obj["terms"]],
            field,
        )

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.num_vars == self.num_vars
            and other.field == self.field
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.num_vars, tuple(sorted(self.terms.items()))))

    def _format_term(self, exps, coeff) -> str:
        factors = [
            var_name(i, self.num_vars) + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(exps)
            if e > 0
        ]
        cs = self.field.format(coeff)
        if not factors:
            return cs
        if cs == "1":
            return "*".join(factors)
        if cs == "-1":
            return "-" + "*".join(factors)
        return cs + "*" + "*".join(factors)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(self._format_term(e, c) for e, c in self.sorted_terms())

    def __repr__(self):
        return f"Polynomial({self})"
