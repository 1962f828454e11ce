"""The full property suite behind the verify command.

Every sampled check derives its own random stream from the run seed, the
check name, and the instance, so single rows can be reproduced in isolation
and whole runs are byte-stable.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations
from math import factorial

from .combinatorics import (
    Partition,
    VariableOrder,
    enumerate_partitions,
    min_gap_k,
    sample_orders,
    standard_tableaux,
)
from .errors import TheoremViolationError
from .fan import (
    elimination_identity_check,
    enumerate_fan,
    monotonicity_check,
    order_class_predictor,
    theorem_count,
)
from .oracle import (
    DEFAULT_ORACLE_LIMIT,
    certify_groebner,
    elimination_polynomial_check,
    marked_basis,
)
from .polyring import WeightVector, leading_monomial
from .polytope import (
    BraidCone,
    PointSet,
    braid_refinement_check,
    cone_membership,
    edge_direction_violations,
    interior_sample,
    pnk_vertices,
    vertex_ideal_bijection,
    weight_initial_ideal,
)
from .reporting import CheckRow
from .specht import (
    closed_form_initial_monomial,
    gap_condition_audit,
    initial_ideal,
    lex_groebner_generators,
    minimalize,
    specht_polynomial,
    universal_groebner_generators,
)

__all__ = ["run_verification", "SKIP_GROUPS"]

SKIP_GROUPS = ("fan", "oracle", "polytope")

CLOSED_FORM_N = 6
PREDICTOR_EXHAUSTIVE_N = 5
PREDICTOR_SAMPLES = 100_000
POLYTOPE_N = 6
CONE_N = 5
EDGE_N = 6


def _rng(seed: int, check: str, instance: str) -> random.Random:
    return random.Random(f"{seed}|{check}|{instance}")


def _sigma_text(orders) -> str:
    return ",".join("".join(str(v) for v in o.sigma) for o in orders)


def run_verification(n_max: int, seed: int = 2024, skip=(), jobs: int = 1) -> list[CheckRow]:
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if n_max > 7:
        raise ValueError("n_max beyond 7 is not supported by the enumeration limits")
    unknown = set(skip) - set(SKIP_GROUPS)
    if unknown:
        raise ValueError(f"unknown skip groups: {sorted(unknown)}")
    skip = frozenset(skip)
    rows: list[CheckRow] = []
    for n in range(2, n_max + 1):
        for lam in enumerate_partitions(n):
            rows.extend(_partition_rows(lam, seed, skip, jobs))
        if "polytope" not in skip:
            rows.extend(_per_n_polytope_rows(n, seed))
    return rows


def _partition_rows(lam: Partition, seed: int, skip, jobs: int) -> list[CheckRow]:
    rows: list[CheckRow] = []
    n = lam.n
    ideal_shaped = lam.m >= 2

    if n <= CLOSED_FORM_N:
        rows.append(_closed_form_row(lam, seed))
    rows.append(_monotonicity_row(lam, seed))
    if ideal_shaped:
        rows.append(_gap_audit_row(lam, seed))

    if "fan" not in skip and ideal_shaped:
        fan = enumerate_fan(lam, jobs=jobs)
        rows.append(_count_row(lam, fan))
        if lam.has_repeated_part():
            rows.append(_repeated_part_row(lam, fan))
        rows.append(_predictor_row(lam, fan, seed))
        if lam.parts[0] >= 2:
            rows.append(_elimination_monomial_row(lam, seed))

    if "oracle" not in skip and ideal_shaped and n <= DEFAULT_ORACLE_LIMIT:
        rows.append(_oracle_row(lam, seed, universal=False))
        rows.append(_oracle_row(lam, seed, universal=True))
        if lam.parts[0] >= 2:
            rows.append(_elimination_poly_row(lam, seed))

    if "polytope" not in skip and ideal_shaped:
        if n <= POLYTOPE_N:
            rows.append(_bijection_row(lam))
        if n <= CONE_N:
            rows.append(_braid_row(lam))
            rows.append(_cone_class_row(lam, seed))
    return rows


def _closed_form_row(lam: Partition, seed: int) -> CheckRow:
    orders = sample_orders(lam.n, 20, _rng(seed, "closed-form", str(lam)))
    ok = True
    detail = ""
    for order in orders:
        for t in standard_tableaux(lam, order):
            want = closed_form_initial_monomial(t, order)
            got = leading_monomial(specht_polynomial(t), order)
            if want != got:
                ok = False
                detail = f"tableau {t} under {order}"
                break
        if not ok:
            break
    return CheckRow("closed-form", f"lambda={lam} sigmas={_sigma_text(orders)}", ok, detail)


def _monotonicity_row(lam: Partition, seed: int) -> CheckRow:
    orders = sample_orders(lam.n, 10, _rng(seed, "monotonicity", str(lam)))
    bad = [o for o in orders if not monotonicity_check(lam, o).passed]
    return CheckRow(
        "monotonicity",
        f"lambda={lam} sigmas={_sigma_text(orders)}",
        not bad,
        f"failed under {bad[0]}" if bad else "",
    )


def _gap_audit_row(lam: Partition, seed: int) -> CheckRow:
    orders = sample_orders(lam.n, 10, _rng(seed, "gap-audit", str(lam)))
    bad = [o for o in orders if not gap_condition_audit(lam, o).passed]
    return CheckRow(
        "gap-audit",
        f"lambda={lam} sigmas={_sigma_text(orders)}",
        not bad,
        f"failed under {bad[0]}" if bad else "",
    )


def _count_row(lam: Partition, fan) -> CheckRow:
    want = theorem_count(lam)
    size = factorial(min_gap_k(lam) + 1)
    ok = fan.distinct_count == want and all(
        len(orders) == size for orders in fan.classes.values()
    )
    return CheckRow(
        "count",
        f"lambda={lam}",
        ok,
        f"theorem={want} brute={fan.distinct_count} class_size={size}",
    )


def _repeated_part_row(lam: Partition, fan) -> CheckRow:
    ok = fan.distinct_count == factorial(lam.n) and all(
        len(orders) == 1 for orders in fan.classes.values()
    )
    return CheckRow("repeated-part", f"lambda={lam}", ok)


def _predictor_row(lam: Partition, fan, seed: int) -> CheckRow:
    n = lam.n
    lookup = fan.order_to_ideal()
    sigmas = sorted(lookup)
    mismatches = 0
    if n <= PREDICTOR_EXHAUSTIVE_N:
        checked = 0
        for a in sigmas:
            oa = VariableOrder(a)
            ia = lookup[a]
            for b in sigmas:
                checked += 1
                if order_class_predictor(lam, oa, VariableOrder(b)) != (ia is lookup[b]):
                    mismatches += 1
        instance = f"lambda={lam} pairs={checked} exhaustive"
    else:
        rng = _rng(seed, "class-predictor", str(lam))
        checked = PREDICTOR_SAMPLES
        for _ in range(checked):
            a = sigmas[rng.randrange(len(sigmas))]
            b = sigmas[rng.randrange(len(sigmas))]
            if order_class_predictor(lam, VariableOrder(a), VariableOrder(b)) != (
                lookup[a] is lookup[b]
            ):
                mismatches += 1
        instance = f"lambda={lam} pairs={checked} seed={seed}|class-predictor|{lam}"
    return CheckRow("class-predictor", instance, mismatches == 0, f"mismatches={mismatches}")


def _elimination_monomial_row(lam: Partition, seed: int) -> CheckRow:
    orders = sample_orders(lam.n, 10, _rng(seed, "elimination-monomial", str(lam)))
    bad = [o for o in orders if not elimination_identity_check(lam, o).passed]
    return CheckRow(
        "elimination-monomial",
        f"lambda={lam} sigmas={_sigma_text(orders)}",
        not bad,
        f"failed under {bad[0]}" if bad else "",
    )


def _oracle_row(lam: Partition, seed: int, universal: bool) -> CheckRow:
    name = "oracle-universal" if universal else "oracle-lex"
    generate = universal_groebner_generators if universal else lex_groebner_generators
    orders = sample_orders(lam.n, 10, _rng(seed, name, str(lam)))
    ok = True
    detail = ""
    for order in orders:
        basis = marked_basis(generate(lam, order).polynomials(), order)
        cert = certify_groebner(basis)
        if not cert.passed:
            ok = False
            detail = f"{len(cert.failures)} nonzero remainders under {order}"
            break
        if not universal:
            agreed = minimalize([m for _, m in basis.elements]) == initial_ideal(lam, order)
            if not agreed:
                ok = False
                detail = f"marks disagree with closed form under {order}"
                break
    return CheckRow(name, f"lambda={lam} sigmas={_sigma_text(orders)}", ok, detail)


def _elimination_poly_row(lam: Partition, seed: int) -> CheckRow:
    orders = sample_orders(lam.n, 5, _rng(seed, "elimination-poly", str(lam)))
    ok = True
    detail = ""
    for order in orders:
        report = elimination_polynomial_check(lam, order)
        if not report.passed:
            ok = False
            detail = report.failures[0] if report.failures else "basis certification failed"
            break
    return CheckRow("elimination-poly", f"lambda={lam} sigmas={_sigma_text(orders)}", ok, detail)


def _bijection_row(lam: Partition) -> CheckRow:
    try:
        mapping = vertex_ideal_bijection(lam)
    except TheoremViolationError as exc:
        return CheckRow("state-polytope", f"lambda={lam}", False, str(exc))
    points = PointSet(tuple(mapping))
    dim = points.affine_dimension()
    ok = len(mapping) == theorem_count(lam) and dim == lam.n - 1
    return CheckRow(
        "state-polytope",
        f"lambda={lam}",
        ok,
        f"vertices={len(mapping)} dim={dim}",
    )


def _braid_row(lam: Partition) -> CheckRow:
    report = braid_refinement_check(lam)
    return CheckRow(
        "braid-refinement",
        f"lambda={lam} orders={report.orders_checked}",
        report.passed,
        report.failures[0] if report.failures else "",
    )


def _cone_class_row(lam: Partition, seed: int) -> CheckRow:
    n = lam.n
    k = min_gap_k(lam)
    rng = _rng(seed, "cone-classes", str(lam))
    pairs = [
        (VariableOrder(tuple(rng.sample(range(1, n + 1), n))),
         VariableOrder(tuple(rng.sample(range(1, n + 1), n))))
        for _ in range(10)
    ]
    ok = True
    detail = ""
    for sigma, tau in pairs:
        cs = BraidCone(sigma, k)
        ct = BraidCone(tau, k)
        ws = interior_sample(cs, seed)
        wt = interior_sample(ct, seed)
        same = order_class_predictor(lam, sigma, tau)
        if cone_membership(ws, ct) != same or cone_membership(wt, cs) != same:
            ok = False
            detail = f"membership mismatch for {sigma} vs {tau}"
            break
        if not cone_membership(ws, cs) or not cone_membership(wt, ct):
            ok = False
            detail = f"interior sample escaped its own cone for {sigma} or {tau}"
            break
        if same:
            ia = weight_initial_ideal(lam, sigma, ws)
            ib = weight_initial_ideal(lam, tau, wt)
            if ia != ib or ia != initial_ideal(lam, sigma):
                ok = False
                detail = f"weight ideals disagree for {sigma} vs {tau}"
                break
    return CheckRow(
        "cone-classes",
        f"lambda={lam} pairs=10 seed={seed}|cone-classes|{lam}",
        ok,
        detail,
    )


def _per_n_polytope_rows(n: int, seed: int) -> list[CheckRow]:
    rows = []
    for k in range(0, n - 1):
        ps = pnk_vertices(n, k)
        want = factorial(n) // factorial(k + 1)
        want_sum = (n - k - 1) * (n - k) // 2 + (k + 1) * (n - k)
        ok = (
            len(ps) == want
            and ps.coordinate_sum() == want_sum
            and ps.affine_dimension() == n - 1
        )
        detail = f"points={len(ps)} sum={ps.coordinate_sum()} dim={ps.affine_dimension()}"
        if n <= EDGE_N:
            bad = edge_direction_violations(ps)
            ok = ok and not bad
            detail += f" edge_violations={len(bad)}"
        rows.append(CheckRow("pnk", f"n={n} k={k}", ok, detail))
    if n >= 2:
        ps = pnk_vertices(n, n - 2)
        ok = len(ps) == n and ps.affine_dimension() == n - 1
        rows.append(CheckRow("simplex", f"n={n}", ok, f"points={len(ps)}"))
    if n <= CONE_N:
        rows.append(_coverage_row(n, seed))
    return rows


def _coverage_row(n: int, seed: int) -> CheckRow:
    rng = _rng(seed, "cone-coverage", str(n))
    cones = [BraidCone(VariableOrder(p), 0) for p in permutations(range(1, n + 1))]
    misses = 0
    for _ in range(20):
        w = WeightVector.of([Fraction(rng.randrange(-64, 65), 8) for _ in range(n)])
        if not any(cone_membership(w, c) for c in cones):
            misses += 1
    return CheckRow(
        "cone-coverage",
        f"n={n} k=0 points=20 seed={seed}|cone-coverage|{n}",
        misses == 0,
        f"misses={misses}",
    )
