"""Transfer maps between fuzzy subsets of S and of its operator hemirings.

All infima become minima over the finite carriers.  The maps on operator
elements evaluate on the induced action maps, which makes well-definedness on
congruence classes automatic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    FiniteMonoid,
    GammaHemiring,
    ProductStructure,
    as_product_structure,
    product,
    product_monoid,
)
from .fuzzy import FuzzySubset
from .ideals import CrispSubset, crisp_from_mask
from .operators import (
    LEFT,
    RIGHT,
    OperatorHemiring,
    Unity,
    build_operator,
    embed,
    find_unity,
    hemiring_as_product_structure,
)
from .fuzzy import additive_closure_mask


@dataclass
class CorrespondenceContext:
    """A structure together with its operator hemirings and product carriers."""

    G: GammaHemiring
    L: OperatorHemiring
    R: OperatorHemiring
    left_unity: Unity | None
    right_unity: Unity | None
    s_monoid: FiniteMonoid
    l_monoid: FiniteMonoid
    r_monoid: FiniteMonoid
    s_ps: ProductStructure
    l_ps: ProductStructure
    r_ps: ProductStructure
    GxG: GammaHemiring
    sxs_monoid: FiniteMonoid
    sxs_ps: ProductStructure
    lxl_monoid: FiniteMonoid
    rxr_monoid: FiniteMonoid
    left_embed: tuple[tuple[int, ...], ...] = field(repr=False, default=())
    right_embed: tuple[tuple[int, ...], ...] = field(repr=False, default=())


def _named(g: GammaHemiring) -> GammaHemiring:
    # Carriers need stable names so product carriers built from them compare
    # equal wherever they are constructed (context vs. cartesian()).
    s, gam = g.S, g.Gamma
    if s.name and gam.name:
        return g
    if not s.name:
        s = FiniteMonoid(s.elements, s.zero, s.add, f"{g.name}:S")
    if not gam.name:
        gam = FiniteMonoid(gam.elements, gam.zero, gam.add, f"{g.name}:Gamma")
    return GammaHemiring(g.name, s, gam, g.action)


def build_context(g: GammaHemiring, cap: int | None = None) -> CorrespondenceContext:
    g = _named(g)
    left = build_operator(g, LEFT, cap)
    right = build_operator(g, RIGHT, cap)
    s_ps = as_product_structure(g)
    gxg = product(g, g)
    sxs_ps = as_product_structure(gxg)
    lm = left.monoid()
    rm = right.monoid()
    return CorrespondenceContext(
        G=g,
        L=left,
        R=right,
        left_unity=find_unity(g, left),
        right_unity=find_unity(g, right),
        s_monoid=s_ps.carrier,
        l_monoid=lm,
        r_monoid=rm,
        s_ps=s_ps,
        l_ps=hemiring_as_product_structure(left),
        r_ps=hemiring_as_product_structure(right),
        GxG=gxg,
        sxs_monoid=sxs_ps.carrier,
        sxs_ps=sxs_ps,
        lxl_monoid=product_monoid(lm, lm),
        rxr_monoid=product_monoid(rm, rm),
        left_embed=tuple(
            tuple(embed(g, left, x, ga) for ga in range(g.Gamma.n)) for x in range(g.S.n)
        ),
        right_embed=tuple(
            tuple(embed(g, right, x, ga) for ga in range(g.Gamma.n)) for x in range(g.S.n)
        ),
    )


def _expect(mu: FuzzySubset, carrier: FiniteMonoid, what: str) -> None:
    if mu.carrier != carrier:
        raise ValueError(f"expected a fuzzy subset over {what}")


def plus(ctx: CorrespondenceContext, mu: FuzzySubset) -> FuzzySubset:
    """Over S: x -> min over gamma of mu([x,gamma])."""
    _expect(mu, ctx.l_monoid, "L")
    values = tuple(
        min(mu.values[ctx.left_embed[x][ga]] for ga in range(ctx.G.Gamma.n))
        for x in range(ctx.G.S.n)
    )
    return FuzzySubset(ctx.s_monoid, values)


def plus_prime(ctx: CorrespondenceContext, sigma: FuzzySubset) -> FuzzySubset:
    """Over L: class of f -> min over s of sigma(f(s))."""
    _expect(sigma, ctx.s_monoid, "S")
    values = tuple(
        min(sigma.values[m.table[s]] for s in range(ctx.G.S.n)) for m in ctx.L.maps
    )
    return FuzzySubset(ctx.l_monoid, values)


def star(ctx: CorrespondenceContext, delta: FuzzySubset) -> FuzzySubset:
    """Over S: x -> min over gamma of delta([gamma,x])."""
    _expect(delta, ctx.r_monoid, "R")
    values = tuple(
        min(delta.values[ctx.right_embed[x][ga]] for ga in range(ctx.G.Gamma.n))
        for x in range(ctx.G.S.n)
    )
    return FuzzySubset(ctx.s_monoid, values)


def star_prime(ctx: CorrespondenceContext, eta: FuzzySubset) -> FuzzySubset:
    """Over R: class of f -> min over s of eta(f(s))."""
    _expect(eta, ctx.s_monoid, "S")
    values = tuple(
        min(eta.values[m.table[s]] for s in range(ctx.G.S.n)) for m in ctx.R.maps
    )
    return FuzzySubset(ctx.r_monoid, values)


def crisp_plus(ctx: CorrespondenceContext, p: CrispSubset) -> CrispSubset:
    """{a in S : [a,gamma] in P for every gamma}."""
    if p.carrier != ctx.l_monoid:
        raise ValueError("expected a subset of L")
    mask = 0
    for x in range(ctx.G.S.n):
        if all(p.members[ctx.left_embed[x][ga]] for ga in range(ctx.G.Gamma.n)):
            mask |= 1 << x
    return crisp_from_mask(ctx.s_monoid, mask)


def crisp_star(ctx: CorrespondenceContext, p: CrispSubset) -> CrispSubset:
    if p.carrier != ctx.r_monoid:
        raise ValueError("expected a subset of R")
    mask = 0
    for x in range(ctx.G.S.n):
        if all(p.members[ctx.right_embed[x][ga]] for ga in range(ctx.G.Gamma.n)):
            mask |= 1 << x
    return crisp_from_mask(ctx.s_monoid, mask)


def _image_sum_mask(ctx: CorrespondenceContext, table: tuple[int, ...]) -> int:
    # All finite sums of values of the map: additive closure of its image.
    image = 0
    for v in table:
        image |= 1 << v
    return additive_closure_mask(ctx.s_monoid, image)


def crisp_plus_prime(ctx: CorrespondenceContext, q: CrispSubset) -> CrispSubset:
    """{class of f in L : every finite sum of values of f lands in Q}."""
    if q.carrier != ctx.s_monoid:
        raise ValueError("expected a subset of S")
    qmask = q.mask
    mask = 0
    for k, m in enumerate(ctx.L.maps):
        if not _image_sum_mask(ctx, m.table) & ~qmask:
            mask |= 1 << k
    return crisp_from_mask(ctx.l_monoid, mask)


def crisp_star_prime(ctx: CorrespondenceContext, q: CrispSubset) -> CrispSubset:
    if q.carrier != ctx.s_monoid:
        raise ValueError("expected a subset of S")
    qmask = q.mask
    mask = 0
    for k, m in enumerate(ctx.R.maps):
        if not _image_sum_mask(ctx, m.table) & ~qmask:
            mask |= 1 << k
    return crisp_from_mask(ctx.r_monoid, mask)


def product_plus(ctx: CorrespondenceContext, phi: FuzzySubset) -> FuzzySubset:
    """Over SxS: (x,y) -> min over (alpha,beta) of phi([x,alpha],[y,beta])."""
    _expect(phi, ctx.lxl_monoid, "LxL")
    ns, ng, nl = ctx.G.S.n, ctx.G.Gamma.n, ctx.L.n
    values = []
    for x in range(ns):
        for y in range(ns):
            values.append(
                min(
                    phi.values[ctx.left_embed[x][a] * nl + ctx.left_embed[y][b]]
                    for a in range(ng)
                    for b in range(ng)
                )
            )
    return FuzzySubset(ctx.sxs_monoid, tuple(values))


def product_star(ctx: CorrespondenceContext, phi: FuzzySubset) -> FuzzySubset:
    """Over SxS: (x,y) -> min over (alpha,beta) of phi([alpha,x],[beta,y])."""
    _expect(phi, ctx.rxr_monoid, "RxR")
    ns, ng, nr = ctx.G.S.n, ctx.G.Gamma.n, ctx.R.n
    values = []
    for x in range(ns):
        for y in range(ns):
            values.append(
                min(
                    phi.values[ctx.right_embed[x][a] * nr + ctx.right_embed[y][b]]
                    for a in range(ng)
                    for b in range(ng)
                )
            )
    return FuzzySubset(ctx.sxs_monoid, tuple(values))


def product_plus_prime(ctx: CorrespondenceContext, phi: FuzzySubset) -> FuzzySubset:
    """Over LxL: (f,g) -> min over independent (s1,s2) of phi(f(s1), g(s2))."""
    _expect(phi, ctx.sxs_monoid, "SxS")
    ns, nl = ctx.G.S.n, ctx.L.n
    values = []
    for m1 in ctx.L.maps:
        for m2 in ctx.L.maps:
            values.append(
                min(
                    phi.values[m1.table[s1] * ns + m2.table[s2]]
                    for s1 in range(ns)
                    for s2 in range(ns)
                )
            )
    return FuzzySubset(ctx.lxl_monoid, tuple(values))


def product_star_prime(ctx: CorrespondenceContext, phi: FuzzySubset) -> FuzzySubset:
    """Over RxR: (f,g) -> min over independent (s1,s2) of phi(f(s1), g(s2))."""
    _expect(phi, ctx.sxs_monoid, "SxS")
    ns = ctx.G.S.n
    values = []
    for m1 in ctx.R.maps:
        for m2 in ctx.R.maps:
            values.append(
                min(
                    phi.values[m1.table[s1] * ns + m2.table[s2]]
                    for s1 in range(ns)
                    for s2 in range(ns)
                )
            )
    return FuzzySubset(ctx.rxr_monoid, tuple(values))
