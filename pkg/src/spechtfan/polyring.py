"""Sparse multivariate polynomials over exact coefficients.

Monomials are dense exponent tuples indexed by variable (entry i-1 is the
exponent of x_i). The lex order attached to a VariableOrder compares the
exponent of the largest variable first, so a monomial beats another as soon
as it carries more of a bigger variable. Polynomial coefficients are exact
integers throughout the public constructors; the division layer in
`oracle` feeds Fractions through the same class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .combinatorics import VariableOrder

__all__ = [
    "Monomial",
    "Polynomial",
    "WeightVector",
    "lex_key",
    "lex_compare",
    "leading_monomial",
    "leading_coefficient",
    "leading_term",
    "initial_form",
]

Coefficient = Union[int, Fraction]
Exponents = tuple[int, ...]


@dataclass(frozen=True)
class Monomial:
    """A power product stored as its exponent tuple."""

    exps: Exponents

    def __post_init__(self) -> None:
        exps = tuple(int(e) for e in self.exps)
        if any(e < 0 for e in exps):
            raise ValueError(f"exponents must be nonnegative: {exps}")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, n: int, i: int) -> "Monomial":
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        return cls(tuple(1 if j == i else 0 for j in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.exps)

    def degree(self) -> int:
        return sum(self.exps)

    def is_one(self) -> bool:
        return all(e == 0 for e in self.exps)

    def divides(self, other: "Monomial") -> bool:
        if self.n != other.n:
            raise ValueError("monomials live in different rings")
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.n != other.n:
            raise ValueError("monomials live in different rings")
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def to_json(self) -> list[int]:
        return list(self.exps)

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exps, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"


def lex_key(exps: Exponents, order: VariableOrder):
    """Sort key realizing the lex order: exponents read from largest variable down."""
    return tuple(exps[i] for i in order.desc0)


def lex_compare(a: Monomial, b: Monomial, order: VariableOrder) -> int:
    """-1, 0, or 1 as a is below, equal to, or above b in the order's lex sense."""
    if a.n != b.n or a.n != order.n:
        raise ValueError("monomials and order must agree on the number of variables")
    ka = lex_key(a.exps, order)
    kb = lex_key(b.exps, order)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def _normalize_coeff(c: Coefficient) -> Coefficient:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
        raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")
    return c


class Polynomial:
    """Immutable-by-convention sparse polynomial; term map from exponents to coefficient."""

    __slots__ = ("n", "_terms")

    def __init__(
        self,
        n: int,
        terms: Union[Mapping[Exponents, Coefficient], Iterable[tuple[Exponents, Coefficient]], None] = None,
    ) -> None:
        self.n = int(n)
        if self.n < 1:
            raise ValueError("polynomial ring needs at least one variable")
        clean: dict[Exponents, Coefficient] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.n:
                raise ValueError(f"exponent tuple {exps} does not have {self.n} entries")
            if any(e < 0 for e in exps):
                raise ValueError(f"exponents must be nonnegative: {exps}")
            acc = clean.get(exps, 0) + coeff
            if acc == 0:
                clean.pop(exps, None)
            else:
                clean[exps] = _normalize_coeff(acc)
        self._terms = clean

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c: Coefficient) -> "Polynomial":
        return cls(n, {(0,) * n: c})

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls.constant(n, 1)

    @classmethod
    def variable(cls, n: int, i: int) -> "Polynomial":
        return cls(n, {Monomial.variable(n, i).exps: 1})

    @classmethod
    def difference(cls, n: int, i: int, j: int) -> "Polynomial":
        """x_i - x_j."""
        if i == j:
            raise ValueError("difference needs two distinct variables")
        return cls.variable(n, i) - cls.variable(n, j)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> Iterator[tuple[Exponents, Coefficient]]:
        """Raw unordered view of the term map."""
        return iter(self._terms.items())

    def terms(self) -> list[tuple[Monomial, Coefficient]]:
        """Terms sorted descending in the identity lex order, for stable output."""
        ordered = sorted(self._terms.items(), key=lambda kv: tuple(reversed(kv[0])), reverse=True)
        return [(Monomial(e), c) for e, c in ordered]

    def coefficient(self, monomial: Union[Monomial, Exponents]) -> Coefficient:
        exps = monomial.exps if isinstance(monomial, Monomial) else tuple(monomial)
        return self._terms.get(exps, 0)

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(e) for e in self._terms)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("polynomials live in different rings")
        out = dict(self._terms)
        for e, c in other._terms.items():
            acc = out.get(e, 0) + c
            if acc == 0:
                out.pop(e, None)
            else:
                out[e] = _normalize_coeff(acc)
        return self._wrap(self.n, out)

    def __neg__(self) -> "Polynomial":
        return self._wrap(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", Coefficient]) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial.zero(self.n)
            return self._wrap(self.n, {e: _normalize_coeff(c * other) for e, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("polynomials live in different rings")
        out: dict[Exponents, Coefficient] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple(a + b for a, b in zip(ea, eb))
                acc = out.get(e, 0) + ca * cb
                if acc == 0:
                    out.pop(e, None)
                else:
                    out[e] = acc
        return self._wrap(self.n, {e: _normalize_coeff(c) for e, c in out.items()})

    def __rmul__(self, other: Coefficient) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    __hash__ = None  # mutable dict inside; never hash

    @classmethod
    def _wrap(cls, n: int, terms: dict[Exponents, Coefficient]) -> "Polynomial":
        p = cls.__new__(cls)
        p.n = n
        p._terms = terms
        return p

    def to_json(self) -> list[dict]:
        return [{"coeff": str(c), "exps": list(m.exps)} for m, c in self.terms()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for m, c in self.terms():
            sign = "-" if (c < 0) else "+"
            mag = -c if c < 0 else c
            body = str(m) if mag == 1 and not m.is_one() else (
                f"{mag}*{m}" if not m.is_one() else f"{mag}")
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def leading_monomial(f: Polynomial, order: VariableOrder) -> Monomial:
    """The lex-largest monomial of a nonzero polynomial."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no leading monomial")
    if f.n != order.n:
        raise ValueError("polynomial and order must agree on the number of variables")
    best = max((e for e, _ in f.items()), key=lambda e: lex_key(e, order))
    return Monomial(best)


def leading_coefficient(f: Polynomial, order: VariableOrder) -> Coefficient:
    return f.coefficient(leading_monomial(f, order))


def leading_term(f: Polynomial, order: VariableOrder) -> tuple[Monomial, Coefficient]:
    m = leading_monomial(f, order)
    return m, f.coefficient(m)


@dataclass(frozen=True)
class WeightVector:
    """A rational weight per variable, used to take initial forms."""

    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))

    @classmethod
    def of(cls, values: Iterable) -> "WeightVector":
        return cls(tuple(Fraction(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.weights)

    def dot(self, exps: Exponents) -> Fraction:
        return sum((w * e for w, e in zip(self.weights, exps)), Fraction(0))

    def __str__(self) -> str:
        return ",".join(str(w) for w in self.weights)


def initial_form(f: Polynomial, w: WeightVector) -> Polynomial:
    """The subsum of terms whose w-weight is maximal. Keeps coefficients."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no initial form")
    if f.n != w.n:
        raise ValueError("polynomial and weight vector must agree on the number of variables")
    weighted = [(w.dot(e), e, c) for e, c in f.items()]
    top = max(t[0] for t in weighted)
    return Polynomial(f.n, {e: c for t, e, c in weighted if t == top})
