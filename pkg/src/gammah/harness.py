"""Catalog of correspondence identities run as executable property checks.

Every check enumerates the finite families it quantifies over (grid-valued
fuzzy h-ideal families, crisp h-ideal lattices) and asserts its identity
exactly; missing hypotheses (unities) give `assumption-unmet`, never a pass.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import correspondence as corr
from .core import FiniteMonoid, ProductStructure, validate_gamma_hemiring, validate_hemiring
from .correspondence import CorrespondenceContext
from .fuzzy import (
    FuzzySubset,
    cartesian,
    characteristic,
    equals,
    fuzzy_sum,
    generalized_h_product,
    intersect,
    is_subset,
    unit_rational,
)
from .ideals import (
    LEFT,
    RIGHT,
    TWO_SIDED,
    CapacityError,
    FuzzyHIdealFamily,
    enumerate_fuzzy_h_bi_ideals,
    enumerate_fuzzy_h_ideals,
    enumerate_fuzzy_h_quasi_ideals,
    enumerate_h_ideals,
    is_fuzzy_h_bi_ideal,
    is_fuzzy_h_ideal,
    is_fuzzy_h_quasi_ideal,
    is_prime_fuzzy_h_ideal,
    is_semiprime_fuzzy_h_ideal,
    simple_h_product_cached,
)
from .operators import FormalSum, formal_product, realize

PASS = "pass"
FAIL = "fail"
UNMET = "assumption-unmet"


@dataclass(frozen=True)
class PropertyResult:
    check_id: str
    status: str
    witness: dict | None
    elapsed: float

    def to_json_dict(self, with_timings: bool = False) -> dict:
        return {
            "id": self.check_id,
            "status": self.status,
            "witness": self.witness,
            "ms": int(self.elapsed * 1000) if with_timings else 0,
        }


@dataclass(frozen=True)
class SuiteReport:
    structure: str
    grid: tuple[Fraction, ...]
    results: tuple[PropertyResult, ...]
    overall: str

    def to_json_dict(self, with_timings: bool = False) -> dict:
        return {
            "structure": self.structure,
            "grid": [str(v) for v in self.grid],
            "results": [r.to_json_dict(with_timings) for r in self.results],
            "overall": self.overall,
        }

    def to_json(self, with_timings: bool = False) -> str:
        return json.dumps(self.to_json_dict(with_timings), indent=2)


def _vals(mu: FuzzySubset) -> list[str]:
    return [str(v) for v in mu.values]


def _first_diff(f1: FuzzySubset, f2: FuzzySubset) -> int | None:
    for i, (a, b) in enumerate(zip(f1.values, f2.values)):
        if a != b:
            return i
    return None


def _diff_witness(context: dict, lhs: FuzzySubset, rhs: FuzzySubset) -> dict | None:
    i = _first_diff(lhs, rhs)
    if i is None:
        return None
    out = dict(context)
    out.update(
        {
            "point": lhs.carrier.elements[i],
            "lhs": str(lhs.values[i]),
            "rhs": str(rhs.values[i]),
        }
    )
    return out


def _pair_hemiring_ps(op, mon: FiniteMonoid) -> ProductStructure:
    """Componentwise product of an operator hemiring with itself."""
    n = op.n
    mul = op.mul
    pp = tuple(
        tuple(
            (mul[i1][j1] * n + mul[i2][j2],)
            for j1 in range(n)
            for j2 in range(n)
        )
        for i1 in range(n)
        for i2 in range(n)
    )
    return ProductStructure(mon, pp)


class _Families:
    """Lazy per-run cache of all enumerated families and product structures."""

    def __init__(self, ctx: CorrespondenceContext, grid: tuple[Fraction, ...]):
        self.ctx = ctx
        self.grid = grid
        self._cache: dict = {}

    def ps(self, which: str) -> ProductStructure:
        ctx = self.ctx
        fixed = {"S": ctx.s_ps, "L": ctx.l_ps, "R": ctx.r_ps, "SxS": ctx.sxs_ps}
        if which in fixed:
            return fixed[which]
        if which == "LxL":
            return self._cache.setdefault(
                "ps:LxL", _pair_hemiring_ps(ctx.L, ctx.lxl_monoid)
            )
        if which == "RxR":
            return self._cache.setdefault(
                "ps:RxR", _pair_hemiring_ps(ctx.R, ctx.rxr_monoid)
            )
        raise ValueError(f"unknown carrier {which!r}")

    def fuzzy(self, which: str, sidedness: str = TWO_SIDED) -> FuzzyHIdealFamily:
        key = ("fuzzy", which, sidedness)
        if key not in self._cache:
            self._cache[key] = enumerate_fuzzy_h_ideals(self.ps(which), self.grid, sidedness)
        return self._cache[key]

    def crisp(self, which: str, sidedness: str = TWO_SIDED):
        key = ("crisp", which, sidedness)
        if key not in self._cache:
            self._cache[key] = enumerate_h_ideals(self.ps(which), sidedness)
        return self._cache[key]

    def bi(self, which: str) -> tuple[FuzzySubset, ...]:
        # Direct filtering when the candidate space fits; otherwise fall back
        # to the fuzzy h-ideal family, whose members are bi-ideals.
        key = ("bi", which)
        if key not in self._cache:
            try:
                self._cache[key] = enumerate_fuzzy_h_bi_ideals(self.ps(which), self.grid)
            except CapacityError:
                members = self.fuzzy(which).members
                ps = self.ps(which)
                self._cache[key] = tuple(
                    m for m in members if is_fuzzy_h_bi_ideal(ps, m).holds
                )
        return self._cache[key]

    def quasi(self, which: str) -> tuple[FuzzySubset, ...]:
        key = ("quasi", which)
        if key not in self._cache:
            try:
                self._cache[key] = enumerate_fuzzy_h_quasi_ideals(self.ps(which), self.grid)
            except CapacityError:
                members = self.fuzzy(which).members
                ps = self.ps(which)
                self._cache[key] = tuple(
                    m for m in members if is_fuzzy_h_quasi_ideal(ps, m).holds
                )
        return self._cache[key]

    def primes(self, which: str, semi: bool = False) -> tuple[FuzzySubset, ...]:
        key = ("primes", which, semi)
        if key not in self._cache:
            fam = self.fuzzy(which)
            check = is_semiprime_fuzzy_h_ideal if semi else is_prime_fuzzy_h_ideal
            ps = self.ps(which)
            self._cache[key] = tuple(
                z for z in fam.members if check(ps, z, fam).holds
            )
        return self._cache[key]


# --- section 2: machinery sanity -------------------------------------------


def _check_axioms(ctx, fams):
    rep = validate_gamma_hemiring(ctx.G)
    if not rep.valid:
        law, w = rep.violations[0]
        return {"table": "action", "law": law, "witness": list(w)}
    for tag, op in (("L", ctx.L), ("R", ctx.R)):
        rep = validate_hemiring(op.hemiring())
        if not rep.valid:
            law, w = rep.violations[0]
            return {"table": tag, "law": law, "witness": list(w)}
    return None


def _check_embed_additive(ctx, fams):
    g = ctx.G
    for tag, op, table in (("L", ctx.L, ctx.left_embed), ("R", ctx.R, ctx.right_embed)):
        for x in range(g.S.n):
            for y in range(g.S.n):
                xy = g.S.add[x][y]
                for ga in range(g.Gamma.n):
                    if op.add[table[x][ga]][table[y][ga]] != table[xy][ga]:
                        return {
                            "side": tag,
                            "x": g.S.elements[x],
                            "y": g.S.elements[y],
                            "gamma": g.Gamma.elements[ga],
                        }
    return None


def _short_sums(g, side):
    pairs = [
        (x, ga) if side == "left" else (ga, x)
        for x in range(g.S.n)
        for ga in range(g.Gamma.n)
    ]
    sums = [FormalSum(side, (p,)) for p in pairs]
    sums += [FormalSum(side, (p, q)) for p in pairs for q in pairs]
    return sums


def _check_mul_law(ctx, fams):
    g = ctx.G
    for op in (ctx.L, ctx.R):
        sums = _short_sums(g, op.side)
        tables = [realize(g, f).table for f in sums]
        for i, f1 in enumerate(sums):
            k1 = op._index[tables[i]]
            for j, f2 in enumerate(sums):
                k2 = op._index[tables[j]]
                via_table = op.maps[op.mul[k1][k2]].table
                via_sum = realize(g, formal_product(g, f1, f2)).table
                if via_table != via_sum:
                    return {
                        "side": op.side,
                        "f1": [list(t) for t in f1.terms],
                        "f2": [list(t) for t in f2.terms],
                    }
    return None


def _check_oplus(ctx, fams):
    members = fams.fuzzy("S").members
    for a, b in itertools.combinations_with_replacement(members, 2):
        if not equals(fuzzy_sum(a, b), fuzzy_sum(b, a)):
            return {"law": "commutative", "a": _vals(a), "b": _vals(b)}
    for a, b, c in itertools.combinations_with_replacement(members, 3):
        if not equals(fuzzy_sum(fuzzy_sum(a, b), c), fuzzy_sum(a, fuzzy_sum(b, c))):
            return {"law": "associative", "a": _vals(a), "b": _vals(b), "c": _vals(c)}
    return None


def _check_gamma_subset(ctx, fams):
    members = fams.fuzzy("S").members
    ps = ctx.s_ps
    for a in members:
        for b in members:
            simple = simple_h_product_cached(ps, a, b)
            if not is_subset(simple, generalized_h_product(ps, a, b)):
                return {"mu": _vals(a), "nu": _vals(b)}
    return None


# --- section 3 ---------------------------------------------------------------


def _check_intersection_commutes(ctx, fams):
    members = fams.fuzzy("L").members
    for group in itertools.chain(
        itertools.combinations_with_replacement(members, 2),
        itertools.combinations_with_replacement(members, 3),
    ):
        lhs = corr.plus(ctx, group[0])
        meet = group[0]
        for m in group[1:]:
            lhs = intersect(lhs, corr.plus(ctx, m))
            meet = intersect(meet, m)
        w = _diff_witness({"members": [_vals(m) for m in group]}, lhs, corr.plus(ctx, meet))
        if w:
            return w
    return None


def _check_plus_preserves(ctx, fams):
    for mu in fams.fuzzy("L").members:
        res = is_fuzzy_h_ideal(ctx.s_ps, corr.plus(ctx, mu), TWO_SIDED, require_top=True)
        if not res.holds:
            return {"member": _vals(mu), "condition": res.condition, "inner": res.witness or {}}
    return None


def _sided_transfer(ctx, fams, source, target, mapper):
    for sid in (TWO_SIDED, LEFT, RIGHT):
        for mu in fams.fuzzy(source, sid).members:
            res = is_fuzzy_h_ideal(fams.ps(target), mapper(ctx, mu), sid, require_top=True)
            if not res.holds:
                return {
                    "sidedness": sid,
                    "member": _vals(mu),
                    "condition": res.condition,
                    "inner": res.witness or {},
                }
    return None


def _check_plus_prime_preserves(ctx, fams):
    return _sided_transfer(ctx, fams, "S", "L", corr.plus_prime)


def _check_star_preserves(ctx, fams):
    return _sided_transfer(ctx, fams, "R", "S", corr.star)


def _check_star_prime_preserves(ctx, fams):
    return _sided_transfer(ctx, fams, "S", "R", corr.star_prime)


def _roundtrip(ctx, fams, fwd, bwd, src, dst):
    for sigma in fams.fuzzy(src).members:
        w = _diff_witness({"member": _vals(sigma)}, bwd(ctx, fwd(ctx, sigma)), sigma)
        if w:
            return w
    for mu in fams.fuzzy(dst).members:
        w = _diff_witness({"member": _vals(mu)}, fwd(ctx, bwd(ctx, mu)), mu)
        if w:
            return w
    return None


def _monotone(ctx, fams, fwd, bwd, src, dst):
    src_members = fams.fuzzy(src).members
    for s1 in src_members:
        for s2 in src_members:
            if is_subset(s1, s2) and not is_subset(fwd(ctx, s1), fwd(ctx, s2)):
                return {"direction": "forward", "m1": _vals(s1), "m2": _vals(s2)}
    dst_members = fams.fuzzy(dst).members
    for m1 in dst_members:
        for m2 in dst_members:
            if is_subset(m1, m2) and not is_subset(bwd(ctx, m1), bwd(ctx, m2)):
                return {"direction": "backward", "m1": _vals(m1), "m2": _vals(m2)}
    return None


def _lattice_ops(ctx, fams, fwd, src):
    members = fams.fuzzy(src).members
    for s1, s2 in itertools.combinations_with_replacement(members, 2):
        ctx_w = {"m1": _vals(s1), "m2": _vals(s2)}
        w = _diff_witness(
            {**ctx_w, "op": "sum"},
            fwd(ctx, fuzzy_sum(s1, s2)),
            fuzzy_sum(fwd(ctx, s1), fwd(ctx, s2)),
        )
        if w:
            return w
        w = _diff_witness(
            {**ctx_w, "op": "intersection"},
            fwd(ctx, intersect(s1, s2)),
            intersect(fwd(ctx, s1), fwd(ctx, s2)),
        )
        if w:
            return w
    return None


def _check_left_iso_roundtrip(ctx, fams):
    return _roundtrip(ctx, fams, corr.plus_prime, corr.plus, "S", "L")


def _check_left_iso_monotone(ctx, fams):
    return _monotone(ctx, fams, corr.plus_prime, corr.plus, "S", "L")


def _check_left_iso_lattice(ctx, fams):
    return _lattice_ops(ctx, fams, corr.plus_prime, "S")


def _check_right_iso(ctx, fams):
    w = _roundtrip(ctx, fams, corr.star_prime, corr.star, "S", "R")
    if w:
        return {"part": "roundtrip", **w}
    w = _monotone(ctx, fams, corr.star_prime, corr.star, "S", "R")
    if w:
        return {"part": "monotone", **w}
    w = _lattice_ops(ctx, fams, corr.star_prime, "S")
    if w:
        return {"part": "lattice", **w}
    return None


def _check_complete_lattices(ctx, fams):
    for which, sid in (("L", LEFT), ("L", RIGHT), ("R", LEFT), ("R", RIGHT)):
        fam = fams.fuzzy(which, sid)
        index = {m.values for m in fam.members}
        for a, b in itertools.combinations_with_replacement(fam.members, 2):
            meet = intersect(a, b)
            if meet.values not in index:
                return {"carrier": which, "sidedness": sid, "op": "intersection",
                        "a": _vals(a), "b": _vals(b), "result": _vals(meet)}
            join = fuzzy_sum(a, b)
            if join.values not in index:
                return {"carrier": which, "sidedness": sid, "op": "sum",
                        "a": _vals(a), "b": _vals(b), "result": _vals(join)}
    return None


def _indicator_square(ctx, fams, which, fuzzy_map, crisp_map, src_monoid, dst_monoid):
    for sid in (TWO_SIDED, LEFT, RIGHT):
        for ideal in fams.crisp(which, sid):
            lhs = fuzzy_map(ctx, characteristic(src_monoid, ideal.indices()))
            rhs = characteristic(dst_monoid, crisp_map(ctx, ideal).indices())
            w = _diff_witness({"sidedness": sid, "ideal": list(ideal.labels())}, lhs, rhs)
            if w:
                return w
    return None


def _check_indicator_plus_prime(ctx, fams):
    return _indicator_square(
        ctx, fams, "S", corr.plus_prime, corr.crisp_plus_prime, ctx.s_monoid, ctx.l_monoid
    )


def _check_indicator_plus(ctx, fams):
    return _indicator_square(
        ctx, fams, "L", corr.plus, corr.crisp_plus, ctx.l_monoid, ctx.s_monoid
    )


def _check_indicator_star_prime(ctx, fams):
    return _indicator_square(
        ctx, fams, "S", corr.star_prime, corr.crisp_star_prime, ctx.s_monoid, ctx.r_monoid
    )


def _check_indicator_star(ctx, fams):
    return _indicator_square(
        ctx, fams, "R", corr.star, corr.crisp_star, ctx.r_monoid, ctx.s_monoid
    )


def _crisp_lattice_bijection(ctx, fams, which):
    fwd, bwd = (
        (corr.crisp_plus_prime, corr.crisp_plus)
        if which == "L"
        else (corr.crisp_star_prime, corr.crisp_star)
    )
    s_ideals = fams.crisp("S")
    o_ideals = fams.crisp(which)
    images = [fwd(ctx, i) for i in s_ideals]
    if sorted(i.mask for i in images) != sorted(i.mask for i in o_ideals):
        return {
            "reason": "not-onto-or-not-injective",
            "source-count": len(s_ideals),
            "image-count": len({i.mask for i in images}),
            "target-count": len(o_ideals),
        }
    for ideal, image in zip(s_ideals, images):
        back = bwd(ctx, image)
        if back.mask != ideal.mask:
            return {
                "reason": "inverse-mismatch",
                "ideal": list(ideal.labels()),
                "image": list(image.labels()),
                "back": list(back.labels()),
            }
    for i1, im1 in zip(s_ideals, images):
        for i2, im2 in zip(s_ideals, images):
            if i1.mask | i2.mask == i2.mask and im1.mask | im2.mask != im2.mask:
                return {
                    "reason": "not-inclusion-preserving",
                    "smaller": list(i1.labels()),
                    "larger": list(i2.labels()),
                }
            if im1.mask | im2.mask == im2.mask and i1.mask | i2.mask != i2.mask:
                return {
                    "reason": "inverse-not-inclusion-preserving",
                    "smaller": list(im1.labels()),
                    "larger": list(im2.labels()),
                }
    return None


def _check_crisp_left_iso(ctx, fams):
    return _crisp_lattice_bijection(ctx, fams, "L")


def _check_crisp_right_iso(ctx, fams):
    return _crisp_lattice_bijection(ctx, fams, "R")


def _composition(ctx, fams, product_fn):
    members = fams.fuzzy("S").members
    for side, mapper, ps in (
        ("L", corr.plus_prime, ctx.l_ps),
        ("R", corr.star_prime, ctx.r_ps),
    ):
        for mu in members:
            for nu in members:
                lhs = mapper(ctx, product_fn(ctx.s_ps, mu, nu))
                rhs = product_fn(ps, mapper(ctx, mu), mapper(ctx, nu))
                w = _diff_witness(
                    {"operator": side, "mu": _vals(mu), "nu": _vals(nu)}, lhs, rhs
                )
                if w:
                    return w
    return None


def _check_composition(ctx, fams):
    return _composition(ctx, fams, generalized_h_product)


def _check_simple_composition(ctx, fams):
    return _composition(ctx, fams, simple_h_product_cached)


def _check_prime_forward(ctx, fams):
    for semi in (False, True):
        check = is_semiprime_fuzzy_h_ideal if semi else is_prime_fuzzy_h_ideal
        for zeta in fams.primes("S", semi):
            for which, mapper in (("L", corr.plus_prime), ("R", corr.star_prime)):
                res = check(fams.ps(which), mapper(ctx, zeta), fams.fuzzy(which))
                if not res.holds:
                    return {
                        "kind": "semiprime" if semi else "prime",
                        "operator": which,
                        "zeta": _vals(zeta),
                        "condition": res.condition,
                        "inner": res.witness or {},
                    }
    return None


def _check_prime_backward(ctx, fams):
    fam_s = fams.fuzzy("S")
    for semi in (False, True):
        check = is_semiprime_fuzzy_h_ideal if semi else is_prime_fuzzy_h_ideal
        for which, mapper in (("L", corr.plus), ("R", corr.star)):
            for zeta in fams.primes(which, semi):
                res = check(ctx.s_ps, mapper(ctx, zeta), fam_s)
                if not res.holds:
                    return {
                        "kind": "semiprime" if semi else "prime",
                        "operator": which,
                        "zeta": _vals(zeta),
                        "condition": res.condition,
                        "inner": res.witness or {},
                    }
    return None


def _check_bi_forward(ctx, fams):
    for mu in fams.bi("S"):
        for which, mapper in (("L", corr.plus_prime), ("R", corr.star_prime)):
            res = is_fuzzy_h_bi_ideal(fams.ps(which), mapper(ctx, mu))
            if not res.holds:
                return {
                    "operator": which,
                    "member": _vals(mu),
                    "condition": res.condition,
                    "inner": res.witness or {},
                }
    return None


def _check_bi_backward(ctx, fams):
    for which, mapper in (("L", corr.plus), ("R", corr.star)):
        for mu in fams.bi(which):
            res = is_fuzzy_h_bi_ideal(ctx.s_ps, mapper(ctx, mu))
            if not res.holds:
                return {
                    "operator": which,
                    "member": _vals(mu),
                    "condition": res.condition,
                    "inner": res.witness or {},
                }
    return None


def _check_quasi_forward(ctx, fams):
    for mu in fams.quasi("S"):
        for which, mapper in (("L", corr.plus_prime), ("R", corr.star_prime)):
            res = is_fuzzy_h_quasi_ideal(fams.ps(which), mapper(ctx, mu))
            if not res.holds:
                return {
                    "operator": which,
                    "member": _vals(mu),
                    "condition": res.condition,
                    "inner": res.witness or {},
                }
    return None


def _check_quasi_backward(ctx, fams):
    for which, mapper in (("L", corr.plus), ("R", corr.star)):
        for mu in fams.quasi(which):
            res = is_fuzzy_h_quasi_ideal(ctx.s_ps, mapper(ctx, mu))
            if not res.holds:
                return {
                    "operator": which,
                    "member": _vals(mu),
                    "condition": res.condition,
                    "inner": res.witness or {},
                }
    return None


# --- section 4 ---------------------------------------------------------------


def _check_coproduct(ctx, fams):
    members = fams.fuzzy("S").members
    pairs = [(m1, m2, cartesian(m1, m2)) for m1 in members for m2 in members]
    for mu, mu2, left in pairs:
        for nu, nu2, right in pairs:
            lhs = simple_h_product_cached(ctx.sxs_ps, left, right)
            rhs = cartesian(
                simple_h_product_cached(ctx.s_ps, mu, nu),
                simple_h_product_cached(ctx.s_ps, mu2, nu2),
            )
            w = _diff_witness(
                {"mu": _vals(mu), "mu'": _vals(mu2), "nu": _vals(nu), "nu'": _vals(nu2)},
                lhs,
                rhs,
            )
            if w:
                return w
    return None


def _check_product_commutes_plain(ctx, fams):
    for which, mapper, pmap in (
        ("R", corr.star, corr.product_star),
        ("L", corr.plus, corr.product_plus),
    ):
        members = fams.fuzzy(which).members
        for mu in members:
            for sigma in members:
                lhs = pmap(ctx, cartesian(mu, sigma))
                rhs = cartesian(mapper(ctx, mu), mapper(ctx, sigma))
                w = _diff_witness(
                    {"operator": which, "mu": _vals(mu), "sigma": _vals(sigma)}, lhs, rhs
                )
                if w:
                    return w
    return None


def _check_product_commutes_prime(ctx, fams):
    members = fams.fuzzy("S").members
    for which, mapper, pmap in (
        ("R", corr.star_prime, corr.product_star_prime),
        ("L", corr.plus_prime, corr.product_plus_prime),
    ):
        for mu in members:
            for sigma in members:
                lhs = pmap(ctx, cartesian(mu, sigma))
                rhs = cartesian(mapper(ctx, mu), mapper(ctx, sigma))
                w = _diff_witness(
                    {"operator": which, "mu": _vals(mu), "sigma": _vals(sigma)}, lhs, rhs
                )
                if w:
                    return w
    return None


def _check_product_h_ideal(ctx, fams):
    for which, mapper, target in (
        ("R", corr.star, "SxS"),
        ("L", corr.plus, "SxS"),
    ):
        members = fams.fuzzy(which).members
        for mu in members:
            for sigma in members:
                prod = cartesian(mapper(ctx, mu), mapper(ctx, sigma))
                res = is_fuzzy_h_ideal(fams.ps(target), prod, TWO_SIDED, require_top=True)
                if not res.holds:
                    return {
                        "operator": which,
                        "mu": _vals(mu),
                        "sigma": _vals(sigma),
                        "condition": res.condition,
                        "inner": res.witness or {},
                    }
    members = fams.fuzzy("S").members
    for which, mapper in (("RxR", corr.star_prime), ("LxL", corr.plus_prime)):
        for mu in members:
            for sigma in members:
                prod = cartesian(mapper(ctx, mu), mapper(ctx, sigma))
                res = is_fuzzy_h_ideal(fams.ps(which), prod, TWO_SIDED, require_top=True)
                if not res.holds:
                    return {
                        "target": which,
                        "mu": _vals(mu),
                        "sigma": _vals(sigma),
                        "condition": res.condition,
                        "inner": res.witness or {},
                    }
    return None


def _check_product_prime(ctx, fams):
    for semi in (False, True):
        check = is_semiprime_fuzzy_h_ideal if semi else is_prime_fuzzy_h_ideal
        for which, mapper in (("R", corr.star), ("L", corr.plus)):
            primes = fams.primes(which, semi)
            for mu in primes:
                for sigma in primes:
                    prod = cartesian(mapper(ctx, mu), mapper(ctx, sigma))
                    res = check(ctx.sxs_ps, prod, fams.fuzzy("SxS"))
                    if not res.holds:
                        return {
                            "kind": "semiprime" if semi else "prime",
                            "operator": which,
                            "mu": _vals(mu),
                            "sigma": _vals(sigma),
                            "condition": res.condition,
                            "inner": res.witness or {},
                        }
        primes = fams.primes("S", semi)
        for target, mapper in (("RxR", corr.star_prime), ("LxL", corr.plus_prime)):
            for mu in primes:
                for sigma in primes:
                    prod = cartesian(mapper(ctx, mu), mapper(ctx, sigma))
                    res = check(fams.ps(target), prod, fams.fuzzy(target))
                    if not res.holds:
                        return {
                            "kind": "semiprime" if semi else "prime",
                            "target": target,
                            "mu": _vals(mu),
                            "sigma": _vals(sigma),
                            "condition": res.condition,
                            "inner": res.witness or {},
                        }
    return None


def _check_product_roundtrip(ctx, fams):
    s_members = fams.fuzzy("S").members
    for mu in s_members:
        for sigma in s_members:
            image = cartesian(corr.star_prime(ctx, mu), corr.star_prime(ctx, sigma))
            w = _diff_witness(
                {"direction": "S", "mu": _vals(mu), "sigma": _vals(sigma)},
                corr.product_star(ctx, image),
                cartesian(mu, sigma),
            )
            if w:
                return w
    r_members = fams.fuzzy("R").members
    for mu in r_members:
        for sigma in r_members:
            image = cartesian(corr.star(ctx, mu), corr.star(ctx, sigma))
            w = _diff_witness(
                {"direction": "R", "mu": _vals(mu), "sigma": _vals(sigma)},
                corr.product_star_prime(ctx, image),
                cartesian(mu, sigma),
            )
            if w:
                return w
    pairs = [(m1, m2, cartesian(m1, m2)) for m1 in s_members for m2 in s_members]
    for mu1, s1, c1 in pairs:
        im1 = cartesian(corr.star_prime(ctx, mu1), corr.star_prime(ctx, s1))
        for mu2, s2, c2 in pairs:
            if is_subset(c1, c2):
                im2 = cartesian(corr.star_prime(ctx, mu2), corr.star_prime(ctx, s2))
                if not is_subset(im1, im2):
                    return {
                        "reason": "not-inclusion-preserving",
                        "smaller": [_vals(mu1), _vals(s1)],
                        "larger": [_vals(mu2), _vals(s2)],
                    }
    return None


@dataclass(frozen=True)
class CatalogEntry:
    check_id: str
    suite: str
    needs: tuple[str, ...]
    fn: Callable


CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry("S2-axioms", "section2", (), _check_axioms),
    CatalogEntry("S2-embed-additive", "section2", (), _check_embed_additive),
    CatalogEntry("S2-mul-law", "section2", (), _check_mul_law),
    CatalogEntry("S2-oplus", "section2", (), _check_oplus),
    CatalogEntry("S2-gamma-subset", "section2", (), _check_gamma_subset),
    CatalogEntry("L3.3", "section3", (), _check_intersection_commutes),
    CatalogEntry("P3.4", "section3", (), _check_plus_preserves),
    CatalogEntry("P3.5", "section3", (), _check_plus_prime_preserves),
    CatalogEntry("P3.6", "section3", (), _check_star_preserves),
    CatalogEntry("P3.7", "section3", (), _check_star_prime_preserves),
    CatalogEntry(
        "T3.8-roundtrip", "section3", ("left unity", "right unity"), _check_left_iso_roundtrip
    ),
    CatalogEntry("T3.8-monotone", "section3", (), _check_left_iso_monotone),
    CatalogEntry("T3.8-lattice", "section3", (), _check_left_iso_lattice),
    CatalogEntry("T3.9", "section3", ("left unity", "right unity"), _check_right_iso),
    CatalogEntry("C3.10", "section3", (), _check_complete_lattices),
    CatalogEntry("L3.11", "section3", (), _check_indicator_plus_prime),
    CatalogEntry("L3.12", "section3", (), _check_indicator_plus),
    CatalogEntry("L3.13", "section3", (), _check_indicator_star_prime),
    CatalogEntry("L3.14", "section3", (), _check_indicator_star),
    CatalogEntry("T3.15", "section3", ("left unity", "right unity"), _check_crisp_left_iso),
    CatalogEntry("T3.16", "section3", ("left unity", "right unity"), _check_crisp_right_iso),
    CatalogEntry("P-comp", "section3", (), _check_composition),
    CatalogEntry("R-gamma", "section3", (), _check_simple_composition),
    CatalogEntry("P-prime-fwd", "section3", (), _check_prime_forward),
    CatalogEntry("P-prime-bwd", "section3", (), _check_prime_backward),
    CatalogEntry("P-bi-fwd", "section3", (), _check_bi_forward),
    CatalogEntry("P-bi-bwd", "section3", (), _check_bi_backward),
    CatalogEntry("P-quasi-fwd", "section3", (), _check_quasi_forward),
    CatalogEntry("P-quasi-bwd", "section3", (), _check_quasi_backward),
    CatalogEntry("S4-coprod", "section4", (), _check_coproduct),
    CatalogEntry("S4-commute-star", "section4", (), _check_product_commutes_plain),
    CatalogEntry("S4-commute-starprime", "section4", (), _check_product_commutes_prime),
    CatalogEntry("S4-hideal", "section4", (), _check_product_h_ideal),
    CatalogEntry("S4-prime", "section4", (), _check_product_prime),
    CatalogEntry(
        "T-cores2", "section4", ("strong left unity", "right unity"), _check_product_roundtrip
    ),
)

_BY_ID = {entry.check_id: entry for entry in CATALOG}

SUITES = ("all", "section2", "section3", "section4")


def _missing_hypothesis(ctx: CorrespondenceContext, needs: tuple[str, ...]) -> str | None:
    for need in needs:
        if need == "left unity" and ctx.left_unity is None:
            return need
        if need == "right unity" and ctx.right_unity is None:
            return need
        if need == "strong left unity" and (
            ctx.left_unity is None or not ctx.left_unity.strong
        ):
            return need
    return None


def run_check(
    check_id: str,
    ctx: CorrespondenceContext,
    grid,
    fams: "_Families | None" = None,
) -> PropertyResult:
    """Run one catalog check against a context at the given value grid."""
    if check_id not in _BY_ID:
        raise ValueError(f"unknown check id {check_id!r}")
    entry = _BY_ID[check_id]
    grid = tuple(unit_rational(v) for v in grid)
    if fams is None:
        fams = _Families(ctx, grid)
    start = time.perf_counter()
    missing = _missing_hypothesis(ctx, entry.needs)
    if missing is not None:
        return PropertyResult(check_id, UNMET, {"missing": missing}, time.perf_counter() - start)
    witness = entry.fn(ctx, fams)
    elapsed = time.perf_counter() - start
    if witness is None:
        return PropertyResult(check_id, PASS, None, elapsed)
    return PropertyResult(check_id, FAIL, witness, elapsed)


def run_suite(ctx: CorrespondenceContext, grid, suite: str = "all") -> SuiteReport:
    """Run every catalog check in the suite, in catalog order."""
    if suite not in SUITES:
        raise ValueError(f"suite must be one of {SUITES}")
    grid = tuple(unit_rational(v) for v in grid)
    fams = _Families(ctx, grid)
    results = []
    for entry in CATALOG:
        if suite != "all" and entry.suite != suite:
            continue
        results.append(run_check(entry.check_id, ctx, grid, fams))
    overall = PASS if all(r.status != FAIL for r in results) else FAIL
    return SuiteReport(ctx.G.name, grid, tuple(results), overall)
