"""Specht polynomials and their initial monomial ideals.

The generator attached to a tableau is the product of within-column
differences. For a column-standard tableau its lex leading monomial can be
read off without expanding anything: the entry sitting in row d contributes
exponent d-1 to its variable. Initial ideals are assembled from those
closed-form monomials alone; polynomial expansion is reserved for the
generating systems handed to the division-algorithm layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .combinatorics import (
    Partition,
    Tableau,
    VariableOrder,
    dominated_partitions,
    is_column_standard,
    min_gap_k,
    standard_tableaux,
)
from .polyring import Monomial, Polynomial

__all__ = [
    "MonomialIdeal",
    "SpechtSystem",
    "SignCheckResult",
    "GapAuditEntry",
    "GapAuditReport",
    "specht_polynomial",
    "closed_form_initial_monomial",
    "transposition_sign_check",
    "lex_groebner_generators",
    "universal_groebner_generators",
    "minimalize",
    "initial_ideal",
    "gap_condition_audit",
]


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal held by its minimal generators, sorted by exponent tuple."""

    n: int
    min_gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        gens = tuple(self.min_gens)
        if not gens:
            raise ValueError("a monomial ideal here always has at least one generator")
        exps = [g.exps for g in gens]
        if any(g.n != self.n for g in gens):
            raise ValueError("generators must all live in the ambient ring")
        if any(a >= b for a, b in zip(exps, exps[1:])):
            raise ValueError("generators must be strictly sorted by exponent tuple")
        object.__setattr__(self, "min_gens", gens)

    def contains(self, m: Monomial) -> bool:
        """Monomial membership: some generator divides m."""
        return any(g.divides(m) for g in self.min_gens)

    def to_json(self) -> dict:
        return {"n": self.n, "min_gens": [list(g.exps) for g in self.min_gens]}

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.min_gens) + ">"


def minimalize(gens) -> MonomialIdeal:
    """Drop every monomial strictly divisible by another; sort what is left.

    The surviving set is the unique minimal generating set of the ideal the
    input generates.
    """
    pool = [g if isinstance(g, Monomial) else Monomial(tuple(g)) for g in gens]
    if not pool:
        raise ValueError("cannot minimalize an empty generating set")
    n = pool[0].n
    if any(g.n != n for g in pool):
        raise ValueError("generators must all live in the ambient ring")
    unique = sorted({g.exps for g in pool}, key=lambda e: (sum(e), e))
    kept: list[tuple[int, ...]] = []
    for e in unique:
        if not any(all(a <= b for a, b in zip(f, e)) for f in kept):
            kept.append(e)
    kept.sort()
    return MonomialIdeal(n, tuple(Monomial(e) for e in kept))


def specht_polynomial(t: Tableau) -> Polynomial:
    """Product over all columns of (x_a - x_b) for each pair with a above b.

    A single-row tableau has no such pairs and yields the constant 1; a
    single column yields the full pairwise-difference product of its
    entries.
    """
    n = t.n
    out = Polynomial.one(n)
    for col in t.columns():
        for a, b in combinations(col, 2):
            out = out * Polynomial.difference(n, a, b)
    return out


def closed_form_initial_monomial(t: Tableau, order: VariableOrder) -> Monomial:
    """Leading monomial of the column product, read from row positions.

    Valid only for column-standard fillings: there each difference factor
    (x_a - x_b) with a above b has x_b as its larger variable, so the
    product's leading monomial collects, for the entry in row d, the
    exponent d-1 on its variable.
    """
    if t.n != order.n:
        raise ValueError("tableau and order must agree on the number of variables")
    if not is_column_standard(t, order):
        raise ValueError(f"tableau {t} is not column standard for order {order}")
    exps = [0] * t.n
    for r0, row in enumerate(t.rows):
        for entry in row:
            exps[entry - 1] = r0
    return Monomial(tuple(exps))


@dataclass(frozen=True)
class SignCheckResult:
    """Outcome of swapping two same-column entries of a tableau."""

    tableau: Tableau
    swapped_tableau: Tableau
    polynomial: Polynomial
    swapped_polynomial: Polynomial
    negation_holds: bool


def transposition_sign_check(t: Tableau, i: int, j: int) -> SignCheckResult:
    """Swap entries i and j (same column) and test that the generator flips sign."""
    if t.column_of(i) != t.column_of(j):
        raise ValueError(f"entries {i} and {j} are not in the same column of {t}")
    swapped = t.with_entries_swapped(i, j)
    f = specht_polynomial(t)
    g = specht_polynomial(swapped)
    return SignCheckResult(t, swapped, f, g, g == -f)


@dataclass(frozen=True)
class SpechtSystem:
    """A generating system: (tableau, expanded polynomial) pairs under one order."""

    partition: Partition
    order: VariableOrder
    generators: tuple[tuple[Tableau, Polynomial], ...]

    def polynomials(self) -> list[Polynomial]:
        return [f for _, f in self.generators]

    def validate(self) -> None:
        """Recheck the construction invariants; used by tests, not hot paths."""
        for t, f in self.generators:
            if specht_polynomial(t) != f:
                raise AssertionError(f"stored polynomial for {t} is not its column product")


def _generating_tableaux(lam: Partition, order: VariableOrder, same_first_part: bool):
    if lam.m < 2:
        raise ValueError("a single-row shape generates the unit ideal; nothing to do")
    if lam.n != order.n:
        raise ValueError("partition and order must agree on n")
    for mu in dominated_partitions(lam, same_first_part=same_first_part):
        yield from standard_tableaux(mu, order)


def lex_groebner_generators(lam: Partition, order: VariableOrder) -> SpechtSystem:
    """Standard tableaux of dominated shapes sharing lam's first part, expanded."""
    gens = tuple(
        (t, specht_polynomial(t))
        for t in _generating_tableaux(lam, order, same_first_part=True)
    )
    return SpechtSystem(lam, order, gens)


def universal_groebner_generators(lam: Partition, order: VariableOrder) -> SpechtSystem:
    """Standard tableaux of every dominated shape, expanded.

    A superset of the lex system; stays a Groebner basis under every
    variable order.
    """
    gens = tuple(
        (t, specht_polynomial(t))
        for t in _generating_tableaux(lam, order, same_first_part=False)
    )
    return SpechtSystem(lam, order, gens)


def initial_ideal(lam: Partition, order: VariableOrder) -> MonomialIdeal:
    """Minimal generators of the lex initial ideal, via closed-form monomials only."""
    monos = [
        closed_form_initial_monomial(t, order)
        for t in _generating_tableaux(lam, order, same_first_part=True)
    ]
    return minimalize(monos)


@dataclass(frozen=True)
class GapAuditEntry:
    """One minimal generator with its witness tableau and the row-gap verdict."""

    monomial: Monomial
    shape: Partition
    tableau: Tableau
    row_of_largest: int
    gap_ok: bool
    neighbor_ok: bool
    neighbor_rank: int | None


@dataclass(frozen=True)
class GapAuditReport:
    partition: Partition
    order: VariableOrder
    k: int
    entries: tuple[GapAuditEntry, ...]
    violations: tuple[GapAuditEntry, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def gap_condition_audit(lam: Partition, order: VariableOrder) -> GapAuditReport:
    """Audit every minimal generator against the row-gap constraints.

    For each minimal generator the first witnessing standard tableau is
    located by scanning dominated shapes in dominance-descending order.
    When the largest variable sits in row j >= 2 of the witness, the shape
    must satisfy mu_{j-1} - mu_j >= k and the entry directly above must
    rank below n - k in the order.
    """
    k = min_gap_k(lam)
    ideal = initial_ideal(lam, order)
    n = lam.n
    largest = order.largest
    shapes = dominated_partitions(lam)
    entries: list[GapAuditEntry] = []
    violations: list[GapAuditEntry] = []
    for gen in ideal.min_gens:
        witness: tuple[Partition, Tableau] | None = None
        for mu in shapes:
            for t in standard_tableaux(mu, order):
                if closed_form_initial_monomial(t, order) == gen:
                    witness = (mu, t)
                    break
            if witness:
                break
        if witness is None:
            raise AssertionError(f"no witness tableau for minimal generator {gen}")
        mu, t = witness
        j = t.row_of(largest)
        if j == 1:
            entry = GapAuditEntry(gen, mu, t, j, True, True, None)
        else:
            gap_ok = mu.part(j - 1) - mu.part(j) >= k
            above = t.rows[j - 2][mu.part(j) - 1]
            rank = order.rank_of(above)
            entry = GapAuditEntry(gen, mu, t, j, gap_ok, rank < n - k, rank)
        entries.append(entry)
        if not (entry.gap_ok and entry.neighbor_ok):
            violations.append(entry)
    return GapAuditReport(lam, order, k, tuple(entries), tuple(violations))
