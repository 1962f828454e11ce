"""Independent reference implementations the tests compare against.

Nothing here may call back into the closed-form or fast-path code under
test for the quantity it cross-checks.
"""

from fractions import Fraction
from itertools import combinations, permutations

import sympy

from spechtfan.combinatorics import Partition, Tableau, VariableOrder
from spechtfan.polyring import Polynomial
from spechtfan.specht import initial_ideal


def brute_standard_tableaux(shape: Partition, order: VariableOrder) -> list[Tableau]:
    """Filter every bijective filling for row and column growth under the order."""
    n = shape.n
    cells = [(r, c) for r, part in enumerate(shape.parts) for c in range(part)]
    out = []
    for perm in permutations(range(1, n + 1)):
        grid = [[0] * part for part in shape.parts]
        for (r, c), v in zip(cells, perm):
            grid[r][c] = v
        ok = True
        for r, row in enumerate(grid):
            for c in range(len(row)):
                if c + 1 < len(row) and order.rank_of(row[c]) > order.rank_of(row[c + 1]):
                    ok = False
                if r + 1 < len(grid) and c < len(grid[r + 1]):
                    if order.rank_of(row[c]) > order.rank_of(grid[r + 1][c]):
                        ok = False
        if ok:
            out.append(Tableau(tuple(tuple(row) for row in grid)))
    return out


def partition_count(n: int) -> int:
    """Classic coin-style DP, nothing shared with the recursive enumerator."""
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


def sympy_vars(n: int):
    return sympy.symbols(f"x1:{n + 1}")


def specht_expr(t: Tableau):
    xs = sympy_vars(t.n)
    expr = sympy.Integer(1)
    for col in t.columns():
        for a, b in combinations(col, 2):
            expr *= xs[a - 1] - xs[b - 1]
    return sympy.expand(expr)


def poly_to_sympy(f: Polynomial):
    xs = sympy_vars(f.n)
    expr = sympy.Integer(0)
    for exps, c in f.items():
        term = sympy.Rational(c) if isinstance(c, Fraction) else sympy.Integer(c)
        for x, e in zip(xs, exps):
            if e:
                term *= x**e
        expr += term
    return sympy.expand(expr)


def sympy_lm_exps(expr, order: VariableOrder) -> tuple[int, ...]:
    """Positional exponent tuple of the lex leading monomial, by sympy.

    sympy's lex compares the first generator's exponent first, so listing
    the variables largest first reproduces the library's convention.
    """
    n = order.n
    xs = sympy_vars(n)
    gens = [xs[order.sigma[i] - 1] for i in range(n - 1, -1, -1)]
    poly = sympy.Poly(expr, *gens)
    mono = poly.LT()[0]
    exps = [0] * n
    for g_exp, i in zip(mono.exponents, range(n - 1, -1, -1)):
        exps[order.sigma[i] - 1] = g_exp
    return tuple(exps)


def naive_minimalize(exps_list) -> frozenset:
    gens = set(exps_list)
    return frozenset(
        e
        for e in gens
        if not any(d != e and all(a >= b for a, b in zip(e, d)) for d in gens)
    )


def expansion_initial_ideal(lam: Partition, order: VariableOrder) -> frozenset:
    """Initial ideal min-gen exponents from scratch: sympy expansion and
    leading terms of the same-first-part generator set, naively minimalized."""
    from spechtfan.specht import lex_groebner_generators

    exps = []
    for t, _ in lex_groebner_generators(lam, order).generators:
        exps.append(sympy_lm_exps(specht_expr(t), order))
    return naive_minimalize(exps)


def brute_fan(lam: Partition) -> dict:
    """Group orders by initial_ideal computed one order at a time."""
    groups: dict = {}
    for sigma in permutations(range(1, lam.n + 1)):
        ideal = initial_ideal(lam, VariableOrder(sigma))
        groups.setdefault(ideal, []).append(sigma)
    return {ideal: tuple(sorted(sigmas)) for ideal, sigmas in groups.items()}


def _solve_affine(sub, target):
    """Unique barycentric coordinates of target in the affine hull of sub,
    or None when sub is affinely dependent or target is outside the hull's
    affine span."""
    m = len(sub)
    dim = len(target)
    mat = [[q[j] for q in sub] + [target[j]] for j in range(dim)]
    mat.append([Fraction(1)] * m + [Fraction(1)])
    r = 0
    for c in range(m):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            return None
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        r += 1
    for i in range(r, len(mat)):
        if mat[i][m]:
            return None
    return [mat[i][m] for i in range(m)]


def in_hull_exact(p, points) -> bool:
    """Exact convex-hull membership by Caratheodory enumeration.

    Complete: p lies in the hull iff some affinely independent subset of at
    most dim+1 points carries it with nonnegative unique coordinates.
    Intended for small point sets only.
    """
    pts = [tuple(Fraction(c) for c in q) for q in points]
    target = tuple(Fraction(c) for c in p)
    for size in range(1, len(target) + 2):
        for sub in combinations(pts, size):
            sol = _solve_affine(sub, target)
            if sol is not None and all(t >= 0 for t in sol):
                return True
    return False
