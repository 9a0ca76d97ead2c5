import itertools
from fractions import Fraction

import pytest

from gammah.correspondence import (
    crisp_plus,
    crisp_plus_prime,
    crisp_star_prime,
    plus,
    plus_prime,
    product_plus,
    product_plus_prime,
    product_star,
    product_star_prime,
    star,
    star_prime,
)
from gammah.fuzzy import (
    cartesian,
    characteristic,
    constant,
    equals,
    intersect,
    make_fuzzy,
)
from gammah.ideals import crisp, enumerate_fuzzy_h_ideals, enumerate_h_ideals
from gammah.operators import FormalSum, realize, rho_equivalent

GRID = ("0", "1/2", "1")


class TestPlusAndStar:
    def test_plus_takes_min_over_embeddings(self, ctx_z2):
        mu = make_fuzzy(ctx_z2.l_monoid, ["1", "1/3"])  # zero map, identity
        out = plus(ctx_z2, mu)
        assert out.values == (Fraction(1), Fraction(1, 3))

    def test_plus_of_top_is_top(self, ctx_z2):
        assert plus(ctx_z2, constant(ctx_z2.l_monoid, 1)).values == (1, 1)

    def test_star_mirrors_plus_on_commutative(self, ctx_z2):
        delta = make_fuzzy(ctx_z2.r_monoid, ["1", "1/3"])
        assert star(ctx_z2, delta).values == (Fraction(1), Fraction(1, 3))

    def test_carrier_mismatch(self, ctx_z2):
        with pytest.raises(ValueError):
            plus(ctx_z2, constant(ctx_z2.s_monoid, 1))


class TestPlusPrimeAndStarPrime:
    def test_plus_prime_values(self, ctx_z2):
        sigma = make_fuzzy(ctx_z2.s_monoid, ["1", "1/3"])
        out = plus_prime(ctx_z2, sigma)
        by_label = dict(zip(out.carrier.elements, out.values))
        zero_label = f"op{ctx_z2.L.zero}"
        assert by_label[zero_label] == 1
        assert set(out.values) == {Fraction(1), Fraction(1, 3)}

    def test_chi_zero_maps_to_chi_zero_map(self, ctx_z2):
        sigma = characteristic(ctx_z2.s_monoid, [0])
        out = plus_prime(ctx_z2, sigma)
        expected = characteristic(ctx_z2.l_monoid, [ctx_z2.L.zero])
        assert equals(out, expected)

    def test_top_maps_to_top(self, ctx_z2):
        assert set(plus_prime(ctx_z2, constant(ctx_z2.s_monoid, 1)).values) == {Fraction(1)}
        assert set(star_prime(ctx_z2, constant(ctx_z2.s_monoid, 1)).values) == {Fraction(1)}

    def test_well_defined_on_congruence_classes(self, ctx_z2):
        # evaluate through two congruent formal sums and compare directly
        g = ctx_z2.G
        sigma = make_fuzzy(ctx_z2.s_monoid, ["1", "1/2"])
        f1 = FormalSum("left", ((1, 1), (1, 1)))
        f2 = FormalSum("left", ((0, 0),))
        assert rho_equivalent(g, f1, f2)

        def by_formal_sum(f):
            table = realize(g, f).table
            return min(sigma.values[table[s]] for s in range(g.S.n))

        assert by_formal_sum(f1) == by_formal_sum(f2)


class TestCrispMaps:
    def test_crisp_plus_of_zero_map(self, ctx_z2):
        p = crisp(ctx_z2.l_monoid, [ctx_z2.L.zero])
        assert crisp_plus(ctx_z2, p).indices() == (0,)

    def test_crisp_plus_of_all(self, ctx_z2):
        p = crisp(ctx_z2.l_monoid, range(ctx_z2.L.n))
        assert crisp_plus(ctx_z2, p).indices() == (0, 1)

    def test_crisp_plus_of_empty(self, ctx_z2):
        p = crisp(ctx_z2.l_monoid, [])
        assert crisp_plus(ctx_z2, p).indices() == ()

    def test_crisp_plus_prime_examples(self, ctx_z2):
        q0 = crisp(ctx_z2.s_monoid, [0])
        assert crisp_plus_prime(ctx_z2, q0).indices() == (ctx_z2.L.zero,)
        qs = crisp(ctx_z2.s_monoid, [0, 1])
        assert crisp_plus_prime(ctx_z2, qs).indices() == tuple(range(ctx_z2.L.n))

    def test_z4_even_transfers_to_even_maps(self, ctx_z4):
        q = crisp(ctx_z4.s_monoid, [0, 2])
        image = crisp_plus_prime(ctx_z4, q)
        tables = {ctx_z4.L.maps[k].table for k in image.indices()}
        assert tables == {(0, 0, 0, 0), (0, 2, 0, 2)}
        assert crisp_star_prime(ctx_z4, q).size() == 2

    def test_indicator_squares_on_z4(self, ctx_z4):
        for ideal in enumerate_h_ideals(ctx_z4.s_ps):
            chi = characteristic(ctx_z4.s_monoid, ideal.indices())
            assert equals(
                plus_prime(ctx_z4, chi),
                characteristic(ctx_z4.l_monoid, crisp_plus_prime(ctx_z4, ideal).indices()),
            )
            assert equals(
                star_prime(ctx_z4, chi),
                characteristic(ctx_z4.r_monoid, crisp_star_prime(ctx_z4, ideal).indices()),
            )


class TestRoundTrips:
    def test_left_roundtrip_on_z2_family(self, ctx_z2):
        fam = enumerate_fuzzy_h_ideals(ctx_z2.s_ps, GRID)
        for sigma in fam.members:
            assert equals(plus(ctx_z2, plus_prime(ctx_z2, sigma)), sigma)

    def test_right_roundtrip_on_z4_family(self, ctx_z4):
        fam = enumerate_fuzzy_h_ideals(ctx_z4.s_ps, GRID)
        for sigma in fam.members:
            assert equals(star(ctx_z4, star_prime(ctx_z4, sigma)), sigma)

    def test_operator_side_roundtrip(self, ctx_z4):
        fam = enumerate_fuzzy_h_ideals(ctx_z4.l_ps, GRID)
        for mu in fam.members:
            assert equals(plus_prime(ctx_z4, plus(ctx_z4, mu)), mu)

    def test_lattice_operations_preserved(self, ctx_z4):
        fam = enumerate_fuzzy_h_ideals(ctx_z4.s_ps, GRID)
        for s1, s2 in itertools.combinations(fam.members, 2):
            assert equals(
                plus_prime(ctx_z4, intersect(s1, s2)),
                intersect(plus_prime(ctx_z4, s1), plus_prime(ctx_z4, s2)),
            )


class TestProductMaps:
    def test_commutes_with_cartesian(self, ctx_z2):
        mu = make_fuzzy(ctx_z2.s_monoid, ["1", "1/2"])
        sigma = make_fuzzy(ctx_z2.s_monoid, ["1", "3/4"])
        lhs = product_plus_prime(ctx_z2, cartesian(mu, sigma))
        rhs = cartesian(plus_prime(ctx_z2, mu), plus_prime(ctx_z2, sigma))
        assert equals(lhs, rhs)
        lhs = product_star_prime(ctx_z2, cartesian(mu, sigma))
        rhs = cartesian(star_prime(ctx_z2, mu), star_prime(ctx_z2, sigma))
        assert equals(lhs, rhs)

    def test_plus_prime_pair_value_is_min(self, ctx_z2):
        mu = make_fuzzy(ctx_z2.s_monoid, ["1", "1/2"])
        sigma = make_fuzzy(ctx_z2.s_monoid, ["1", "3/4"])
        out = product_plus_prime(ctx_z2, cartesian(mu, sigma))
        one = next(k for k, m in enumerate(ctx_z2.L.maps) if m.table == (0, 1))
        pair_label = f"(op{one},op{one})"
        assert out.values[out.carrier.index_of(pair_label)] == Fraction(1, 2)

    def test_top_transfers_to_top(self, ctx_z2):
        top = constant(ctx_z2.lxl_monoid, 1)
        assert set(product_plus(ctx_z2, top).values) == {Fraction(1)}

    def test_product_star_of_cartesian(self, ctx_z2):
        mu = make_fuzzy(ctx_z2.r_monoid, ["1", "1/2"])
        sigma = make_fuzzy(ctx_z2.r_monoid, ["1", "0"])
        lhs = product_star(ctx_z2, cartesian(mu, sigma))
        rhs = cartesian(star(ctx_z2, mu), star(ctx_z2, sigma))
        assert equals(lhs, rhs)

    def test_carrier_checks(self, ctx_z2):
        with pytest.raises(ValueError):
            product_plus(ctx_z2, constant(ctx_z2.rxr_monoid, 1))
        with pytest.raises(ValueError):
            product_plus_prime(ctx_z2, constant(ctx_z2.s_monoid, 1))


class TestContext:
    def test_unities_recorded(self, ctx_z2, ctx_zero_action):
        assert ctx_z2.left_unity is not None and ctx_z2.left_unity.strong
        assert ctx_z2.right_unity is not None
        assert ctx_zero_action.left_unity is None
        assert ctx_zero_action.right_unity is None

    def test_product_carriers_align_with_cartesian(self, ctx_z2):
        mu = constant(ctx_z2.s_monoid, 1)
        assert cartesian(mu, mu).carrier == ctx_z2.sxs_monoid
        lmu = constant(ctx_z2.l_monoid, 1)
        assert cartesian(lmu, lmu).carrier == ctx_z2.lxl_monoid

    def test_embedding_tables_match_embed(self, ctx_z4):
        from gammah.operators import embed

        g = ctx_z4.G
        for x in range(g.S.n):
            for ga in range(g.Gamma.n):
                assert ctx_z4.left_embed[x][ga] == embed(g, ctx_z4.L, x, ga)
                assert ctx_z4.right_embed[x][ga] == embed(g, ctx_z4.R, x, ga)
