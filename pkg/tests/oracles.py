"""Independent brute-force oracles.

Everything here re-derives results straight from the definitions with plain
nested loops and stays deliberately ignorant of the library's level-set,
bitmask and closure shortcuts.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from gammah.core import GammaHemiring, ProductStructure
from gammah.fuzzy import FuzzySubset

ZERO = Fraction(0)


def h_equal(mon, lhs: int, rhs: int) -> bool:
    """x + u + z == v + z for some z, by direct scan."""
    add = mon.add
    return any(add[lhs][z] == add[rhs][z] for z in range(mon.n))


def naive_generalized_h_product(
    ps: ProductStructure, mu: FuzzySubset, theta: FuzzySubset, max_terms: int | None = None
) -> FuzzySubset:
    """Enumerate decompositions with up to max_terms product terms per side."""
    mon = ps.carrier
    n = mon.n
    limit = max_terms if max_terms is not None else n
    # A "term" is one product p drawn from pair_products(a, b); remember the
    # membership floor min(mu(a), theta(b)) it contributes.
    term_options = []
    for a in range(n):
        for b in range(n):
            floor = min(mu.values[a], theta.values[b])
            for p in ps.pair_products[a][b]:
                term_options.append((p, floor))
    sides = []  # (sum, floor) for every sequence of 1..limit terms
    for k in range(1, limit + 1):
        for combo in itertools.product(term_options, repeat=k):
            total = mon.add_all(p for p, _ in combo)
            floor = min(f for _, f in combo)
            sides.append((total, floor))
    best = [ZERO] * n
    add = mon.add
    for u, fu in sides:
        for v, fv in sides:
            floor = min(fu, fv)
            if floor == ZERO:
                continue
            for x in range(n):
                if floor > best[x] and h_equal(mon, add[x][u], v):
                    best[x] = floor
    return FuzzySubset(mon, tuple(best))


def naive_simple_h_product(ps: ProductStructure, mu: FuzzySubset, theta: FuzzySubset) -> FuzzySubset:
    return naive_generalized_h_product(ps, mu, theta, max_terms=1)


def brute_operator(g: GammaHemiring, side: str):
    """All maps realized by formal sums with <= |S| terms, then a fixpoint
    closure under pointwise addition and composition.

    Returns (maps, has_identity, has_strong_identity).
    """
    n = g.S.n
    act = g.action
    add = g.S.add

    def one_term(x, ga):
        if side == "left":
            return tuple(act[x][ga][a] for a in range(n))
        return tuple(act[a][ga][x] for a in range(n))

    generators = [one_term(x, ga) for x in range(n) for ga in range(g.Gamma.n)]
    identity = tuple(range(n))
    strong = identity in generators

    def plus(t1, t2):
        return tuple(add[a][b] for a, b in zip(t1, t2))

    maps = set()
    for k in range(1, n + 1):
        for combo in itertools.product(generators, repeat=k):
            total = combo[0]
            for t in combo[1:]:
                total = plus(total, t)
            maps.add(total)
    changed = True
    while changed:
        changed = False
        current = sorted(maps)
        for t1 in current:
            for t2 in current:
                for cand in (
                    plus(t1, t2),
                    tuple(t1[v] for v in t2) if side == "left" else tuple(t2[v] for v in t1),
                ):
                    if cand not in maps:
                        maps.add(cand)
                        changed = True
    return maps, identity in maps, strong


def brute_h_ideals(ps: ProductStructure, sidedness: str = "two-sided") -> list[tuple[int, ...]]:
    """All sided h-ideals by filtering every nonempty subset directly."""
    mon = ps.carrier
    n = mon.n
    add = mon.add
    out = []
    for bits in range(1, 1 << n):
        members = {i for i in range(n) if bits >> i & 1}
        if mon.zero not in members:
            continue
        if any(add[a][b] not in members for a in members for b in members):
            continue
        ok = True
        if sidedness in ("two-sided", "left"):
            ok = all(
                p in members
                for x in range(n)
                for a in members
                for p in ps.pair_products[x][a]
            )
        if ok and sidedness in ("two-sided", "right"):
            ok = all(
                p in members
                for a in members
                for x in range(n)
                for p in ps.pair_products[a][x]
            )
        if ok:
            for x in range(n):
                if x in members:
                    continue
                if any(
                    add[add[x][a]][z] == add[b][z]
                    for a in members
                    for b in members
                    for z in range(n)
                ):
                    ok = False
                    break
        if ok:
            out.append(tuple(sorted(members)))
    out.sort(key=lambda t: (len(t), t))
    return out


def closure_subsets_h_ideals(ps: ProductStructure) -> list[tuple[int, ...]]:
    """The {h_closure(A) : A subset of carrier} route, using the library closure."""
    from gammah.ideals import h_closure, is_h_ideal

    n = ps.carrier.n
    seen = set()
    for bits in range(1, 1 << n):
        members = [i for i in range(n) if bits >> i & 1]
        closed = h_closure(ps, members)
        assert is_h_ideal(ps, closed).holds
        seen.add(closed.indices())
    return sorted(seen, key=lambda t: (len(t), t))


def naive_is_fuzzy_h_ideal(
    ps: ProductStructure, values: tuple[Fraction, ...], sidedness: str, require_top: bool
) -> bool:
    """Definition checked with plain quadruple loops."""
    mon = ps.carrier
    n = mon.n
    add = mon.add
    if all(v == 0 for v in values):
        return False
    if require_top and values[mon.zero] != 1:
        return False
    for x in range(n):
        for y in range(n):
            if values[add[x][y]] < min(values[x], values[y]):
                return False
    for x in range(n):
        for y in range(n):
            for p in ps.pair_products[x][y]:
                if sidedness in ("two-sided", "left") and values[p] < values[y]:
                    return False
                if sidedness in ("two-sided", "right") and values[p] < values[x]:
                    return False
    for x in range(n):
        for a in range(n):
            for b in range(n):
                if values[x] >= min(values[a], values[b]):
                    continue
                if any(add[add[x][a]][z] == add[b][z] for z in range(n)):
                    return False
    return True


def brute_fuzzy_family(
    ps: ProductStructure, grid, sidedness: str = "two-sided"
) -> list[tuple[Fraction, ...]]:
    vals = [Fraction(v) for v in grid]
    mon = ps.carrier
    out = []
    for combo in itertools.product(vals, repeat=mon.n):
        if combo[mon.zero] != 1:
            continue
        if naive_is_fuzzy_h_ideal(ps, combo, sidedness, require_top=True):
            out.append(combo)
    return sorted(out)
