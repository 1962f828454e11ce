"""Initial ideals across all variable orders: counting, classes, and checks.

The fan of a shape is enumerated by computing the identity-order minimal
generators once and permuting their exponent tuples for every sigma.
Divisibility between monomials is preserved by any coordinate permutation,
so the permuted sets are again minimal; the direct per-sigma route stays
available through specht.initial_ideal and the two are compared in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice, permutations
from math import factorial
from multiprocessing import Pool

from .combinatorics import (
    Partition,
    VariableOrder,
    hat,
    min_gap_k,
    prefix_standardization,
    standard_tableaux,
)
from .errors import CapacityError
from .polyring import Monomial
from .specht import MonomialIdeal, initial_ideal

__all__ = [
    "DEFAULT_ENUMERATION_LIMIT",
    "DegreeStatistic",
    "MonotonicityPair",
    "MonotonicityReport",
    "FanSummary",
    "EliminationIdentityReport",
    "degree_statistic",
    "monotonicity_check",
    "theorem_count",
    "order_class_predictor",
    "enumerate_fan",
    "elimination_identity_check",
]

DEFAULT_ENUMERATION_LIMIT = 8


@dataclass(frozen=True)
class DegreeStatistic:
    """Per-variable total degree across the initial monomials of one shape."""

    partition: Partition
    order: VariableOrder
    values: tuple[int, ...]

    def value_of(self, variable: int) -> int:
        return self.values[variable - 1]


def degree_statistic(lam: Partition, order: VariableOrder) -> DegreeStatistic:
    """Sum of initial-monomial exponents of each variable over STab(lam)."""
    if lam.n != order.n:
        raise ValueError("partition and order must agree on n")
    values = [0] * lam.n
    for t in standard_tableaux(lam, order):
        for r0, row in enumerate(t.rows):
            for entry in row:
                values[entry - 1] += r0
    return DegreeStatistic(lam, order, tuple(values))


@dataclass(frozen=True)
class MonotonicityPair:
    position: int
    lower_variable: int
    upper_variable: int
    lower_value: int
    upper_value: int
    strict: bool
    witness: bool

    @property
    def ok(self) -> bool:
        return self.lower_value <= self.upper_value and self.strict == self.witness


@dataclass(frozen=True)
class MonotonicityReport:
    partition: Partition
    order: VariableOrder
    values: tuple[int, ...]
    pairs: tuple[MonotonicityPair, ...]
    failures: tuple[MonotonicityPair, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def monotonicity_check(lam: Partition, order: VariableOrder) -> MonotonicityReport:
    """Degrees must weakly increase along the order, strictly exactly when
    some standard tableau of the shape puts the two variables in one column."""
    stat = degree_statistic(lam, order)
    tabs = standard_tableaux(lam, order)
    pairs = []
    failures = []
    for i in range(1, lam.n):
        a = order.sigma[i - 1]
        b = order.sigma[i]
        da = stat.value_of(a)
        db = stat.value_of(b)
        witness = any(t.column_of(a) == t.column_of(b) for t in tabs)
        pair = MonotonicityPair(i, a, b, da, db, da < db, witness)
        pairs.append(pair)
        if not pair.ok:
            failures.append(pair)
    return MonotonicityReport(lam, order, stat.values, tuple(pairs), tuple(failures))


def theorem_count(lam: Partition) -> int:
    """Predicted number of distinct initial ideals: n! / (k+1)!."""
    return factorial(lam.n) // factorial(min_gap_k(lam) + 1)


def order_class_predictor(lam: Partition, sigma: VariableOrder, tau: VariableOrder) -> bool:
    """Whether two orders should share an initial ideal.

    True exactly when the orders agree position-by-position up to n-k-1 and
    agree as sets on the last k+1 positions.
    """
    n = lam.n
    if sigma.n != n or tau.n != n:
        raise ValueError("orders must match the partition's n")
    k = min_gap_k(lam)
    head = n - k - 1
    if sigma.sigma[:head] != tau.sigma[:head]:
        return False
    return set(sigma.sigma[head:]) == set(tau.sigma[head:])


@dataclass
class FanSummary:
    """The ideal-to-orders grouping over all n! variable orders."""

    partition: Partition
    k: int
    total_orders: int
    distinct_count: int
    classes: dict[MonomialIdeal, tuple[VariableOrder, ...]]

    def representative(self, ideal: MonomialIdeal) -> VariableOrder:
        """Lexicographically smallest order in the class."""
        return self.classes[ideal][0]

    def order_to_ideal(self) -> dict[tuple[int, ...], MonomialIdeal]:
        out = {}
        for ideal, orders in self.classes.items():
            for o in orders:
                out[o.sigma] = ideal
        return out

    def to_json(self) -> dict:
        return {
            "lambda": list(self.partition.parts),
            "n": self.partition.n,
            "k": self.k,
            "total_orders": self.total_orders,
            "distinct_count": self.distinct_count,
            "classes": [
                {
                    "ideal": ideal.to_json(),
                    "size": len(orders),
                    "representative": list(orders[0].sigma),
                }
                for ideal, orders in self.classes.items()
            ],
        }


def _grouped_keys(base_exps, n, perms):
    groups: dict[tuple, list[tuple[int, ...]]] = {}
    for sigma in perms:
        inv0 = [0] * n
        for a0, v in enumerate(sigma):
            inv0[v - 1] = a0
        key = tuple(sorted(tuple(map(e.__getitem__, inv0)) for e in base_exps))
        groups.setdefault(key, []).append(sigma)
    return groups


def _fan_worker(args):
    base_exps, n, start, stop = args
    perms = islice(permutations(range(1, n + 1)), start, stop)
    return _grouped_keys(base_exps, n, perms)


def enumerate_fan(lam: Partition, limit: int = DEFAULT_ENUMERATION_LIMIT, jobs: int = 1) -> FanSummary:
    """Group all n! variable orders by their initial ideal.

    Brute force over the symmetric group; refuses n beyond `limit`. With
    jobs > 1 the order loop is split into contiguous chunks handled by a
    process pool and merged in chunk order, so results are identical to the
    serial run.
    """
    n = lam.n
    if lam.m < 2:
        raise ValueError("fan enumeration needs a shape with at least two rows")
    if n > limit:
        raise CapacityError(f"n={n} exceeds the enumeration limit {limit}")
    base = initial_ideal(lam, VariableOrder.identity(n))
    base_exps = tuple(m.exps for m in base.min_gens)
    total = factorial(n)
    if jobs > 1 and total >= 120:
        chunk = (total + jobs - 1) // jobs
        tasks = [
            (base_exps, n, start, min(start + chunk, total))
            for start in range(0, total, chunk)
        ]
        groups: dict[tuple, list[tuple[int, ...]]] = {}
        with Pool(processes=jobs) as pool:
            for part in pool.map(_fan_worker, tasks):
                for key, sigmas in part.items():
                    groups.setdefault(key, []).extend(sigmas)
    else:
        groups = _grouped_keys(base_exps, n, permutations(range(1, n + 1)))
    classes: dict[MonomialIdeal, tuple[VariableOrder, ...]] = {}
    for key in sorted(groups):
        ideal = MonomialIdeal(n, tuple(Monomial(e) for e in key))
        classes[ideal] = tuple(VariableOrder(s) for s in sorted(groups[key]))
    return FanSummary(
        partition=lam,
        k=min_gap_k(lam),
        total_orders=total,
        distinct_count=len(classes),
        classes=classes,
    )


@dataclass(frozen=True)
class EliminationIdentityReport:
    """Monomial-level elimination comparison for one order."""

    partition: Partition
    order: VariableOrder
    hat_partition: Partition | None
    skipped: bool
    lhs: tuple[Monomial, ...]
    rhs: tuple[Monomial, ...]
    equal: bool

    @property
    def passed(self) -> bool:
        return self.skipped or self.equal


def elimination_identity_check(lam: Partition, order: VariableOrder) -> EliminationIdentityReport:
    """Generators free of the largest variable must match the shrunken shape's ideal.

    The right side is computed for hat(lam) in the inner order on the
    surviving n-1 variables and embedded back into the ambient ring; for
    monomial ideals this filtering is an exact intersection with the
    subring.
    """
    if lam.parts[0] < 2 or lam.m < 2:
        raise ValueError("elimination needs a first part >= 2 and a second row")
    lhat = hat(lam)
    if lhat.m < 2:
        return EliminationIdentityReport(lam, order, lhat, True, (), (), True)
    n = lam.n
    inner, removed, asc = prefix_standardization(order)
    lhs = tuple(
        m for m in initial_ideal(lam, order).min_gens if m.exps[removed - 1] == 0
    )
    rhs = []
    for m in initial_ideal(lhat, inner).min_gens:
        exps = [0] * n
        for r0, v in enumerate(asc):
            exps[v - 1] = m.exps[r0]
        rhs.append(Monomial(tuple(exps)))
    rhs_sorted = tuple(sorted(rhs, key=lambda m: m.exps))
    equal = tuple(m.exps for m in lhs) == tuple(m.exps for m in rhs_sorted)
    return EliminationIdentityReport(lam, order, lhat, False, lhs, rhs_sorted, equal)
