import pytest

from ppring.cyclo import Cyclotomic
from ppring.grp import (Permutation, Subgroup, alternating, cyclic, dihedral,
                        promote, quotient, subgroup_closure, symmetric, sylow)
from ppring.lattice import subgroup_lattice
from ppring.ppelem import (BadIndex, LinChar, NotPGroup, PPElement,
                           brauer_elt, char_pullback, default_conductor,
                           ind_elt, inf_elt, linear_characters, make_generator,
                           res_elt, tensor_elt)
from ppring.species import (enumerate_pairs, equal_elements, tau_element)


def gen_of(G, p, sub_elems, exps=None, n=None):
    n = default_conductor(G, p) if n is None else n
    L = subgroup_closure(G, sub_elems)
    chi = LinChar.trivial(L, n) if exps is None else LinChar(L, exps, n)
    return make_generator(G, L, chi)


def single(G, p, gen):
    return PPElement.from_generator(p, gen)


class TestLinChar:
    def test_homomorphism_enforced(self):
        G = cyclic(2)
        L = G.full_subgroup()
        flip = next(x for x in G.elements if not x.is_identity())
        with pytest.raises(ValueError):
            LinChar(L, {G.identity: 1, flip: 0}, 2)

    def test_p_elements_killed_automatically(self):
        # a homomorphism into mu_n with n odd must kill elements of order 2
        G = cyclic(6)
        chars = linear_characters(G.full_subgroup(), 3)
        assert len(chars) == 3
        invol = next(x for x in G.elements if x.order() == 2)
        assert all(chi.value(invol) == 0 for chi in chars)

    def test_character_counts(self):
        assert len(linear_characters(cyclic(6).full_subgroup(), 6)) == 6
        assert len(linear_characters(symmetric(3).full_subgroup(), 6)) == 2
        assert len(linear_characters(quernion_free_a4(), 6)) == 3

    def test_conj_moves_domain(self):
        G = symmetric(3)
        L = subgroup_closure(G, [Permutation.from_cycles(3, [(0, 1)])])
        chi = linear_characters(L, 2)[1]
        g = Permutation.from_cycles(3, [(0, 1, 2)])
        moved = chi.conj(g)
        assert moved.domain.element_set == frozenset(x.conj(g) for x in L.elements)
        for x in L.elements:
            assert moved.value(x.conj(g)) == chi.value(x)


def quernion_free_a4():
    return alternating(4).full_subgroup()


class TestCharPullback:
    def test_trivial_index(self):
        G = cyclic(6)
        P = sylow(G, 2)
        s = next(x for x in G.elements if x.order() == 3)
        chi = char_pullback(G, P, s, 0, G.full_subgroup(), 3)
        assert chi.is_trivial()

    def test_identity_pullback_on_c3(self):
        G = cyclic(3)
        P = G.trivial_subgroup()
        s = next(x for x in G.elements if x.order() == 3)
        chi = char_pullback(G, P, s, 1, G.full_subgroup(), 3)
        assert chi.value(s) == 1  # s maps to zeta_3

    def test_c6_mod_c2(self):
        G = cyclic(6)
        P = sylow(G, 2)
        s = next(x for x in G.elements if x.order() == 3)
        chi = char_pullback(G, P, s, 1, G.full_subgroup(), 3)
        invol = next(x for x in G.elements if x.order() == 2)
        assert chi.value(invol) == 0  # kills the involution
        orders = {x: chi.value(x) for x in G.elements}
        assert sorted(orders.values()) == [0, 0, 1, 1, 2, 2]

    def test_bad_index(self):
        G = cyclic(3)
        s = next(x for x in G.elements if x.order() == 3)
        with pytest.raises(BadIndex):
            char_pullback(G, G.trivial_subgroup(), s, 3, G.full_subgroup(), 3)


class TestRestriction:
    def test_full_group_is_identity(self):
        G = symmetric(3)
        x = single(G, 3, gen_of(G, 3, [Permutation.from_cycles(3, [(0, 1, 2)])]))
        assert equal_elements(res_elt(x, G.full_subgroup()), x)

    def test_regular_module_to_trivial_subgroup(self):
        G = cyclic(2)
        x = single(G, 2, gen_of(G, 2, []))
        y = res_elt(x, G.trivial_subgroup())
        (gen, coeff), = y.terms.items()
        assert coeff == Cyclotomic.from_rational(1, 2)
        assert gen.subgroup.order == 1

    def test_s3_transversal_module_to_c3(self):
        G = symmetric(3)
        x = single(G, 3, gen_of(G, 3, [Permutation.from_cycles(3, [(0, 1)])]))
        y = res_elt(x, sylow(G, 3))
        (gen, coeff), = y.terms.items()
        assert gen.subgroup.order == 1
        assert coeff == Cyclotomic.one(2)

    def test_dimension_preserved(self):
        G = symmetric(4)
        p = 2
        n = default_conductor(G, p)
        x = single(G, p, gen_of(G, p, [Permutation.from_cycles(4, [(0, 1, 2)])]))
        H = sylow(G, 2)
        y = res_elt(x, H)
        dim_x = tau_element(enumerate_pairs(G, p)[0], x)
        dim_y = tau_element(enumerate_pairs(promote(H), p)[0], y)
        assert dim_x == dim_y


class TestInduction:
    def test_induction_relabels(self):
        G = symmetric(3)
        C3 = promote(sylow(G, 3))
        chars = linear_characters(C3.full_subgroup(), 2)
        x = PPElement.from_generator(3, make_generator(C3, C3.full_subgroup(), chars[0]))
        y = ind_elt(x, G)
        assert y.group == G
        (gen, coeff), = y.terms.items()
        assert gen.subgroup.order == 3
        assert coeff.is_one()

    def test_transitivity(self):
        G = symmetric(4)
        p = 2
        H = promote(subgroup_closure(G, [Permutation.from_cycles(4, [(0, 1, 2)]),
                                         Permutation.from_cycles(4, [(0, 1)])]))
        K = promote(subgroup_closure(G, [Permutation.from_cycles(4, [(0, 1, 2)])]))
        n = default_conductor(G, p)
        chi = linear_characters(K.full_subgroup(), n)[1]
        x = PPElement.from_generator(p, make_generator(K, K.full_subgroup(), chi))
        via_h = ind_elt(ind_elt(x, H), G)
        direct = ind_elt(x, G)
        assert via_h.terms == direct.terms

    def test_dimension_multiplies_by_index(self):
        G = symmetric(3)
        p = 2
        H = promote(sylow(G, 3))
        x = PPElement.one(H, p, default_conductor(G, p))
        y = ind_elt(x, G)
        dim = tau_element(enumerate_pairs(G, p)[0], y)
        assert dim == Cyclotomic.from_rational(default_conductor(G, p), 2)


class TestInflation:
    def test_trivial_kernel_is_isomorphism_transport(self):
        G = cyclic(3)
        Q = quotient(G, G.trivial_subgroup())
        x = PPElement.one(Q.group, 2, 3)
        y = inf_elt(x, Q)
        assert equal_elements(y, PPElement.one(G, 2, 3))

    def test_inflate_faithful_character_to_c6(self):
        G = cyclic(6)
        P = sylow(G, 2)
        Q = quotient(G, P)
        chi = next(c for c in linear_characters(Q.group.full_subgroup(), 3)
                   if not c.is_trivial())
        x = PPElement.from_generator(
            2, make_generator(Q.group, Q.group.full_subgroup(), chi))
        y = inf_elt(x, Q)
        (gen, _), = y.terms.items()
        assert gen.subgroup.order == 6
        assert not gen.character.is_trivial()
        assert all(gen.character.value(u) == 0 for u in P.elements)

    def test_trivial_generator_inflates_to_trivial(self):
        G = symmetric(3)
        Q = quotient(G, sylow(G, 3))
        x = PPElement.one(Q.group, 3, 2)
        assert equal_elements(inf_elt(x, Q), PPElement.one(G, 3, 2))


class TestTensor:
    def test_one_is_identity(self):
        G = dihedral(8)
        p = 2
        x = single(G, p, gen_of(G, p, [G.elements[1]]))
        assert equal_elements(tensor_elt(PPElement.one(G, p, 1), x), x)

    def test_regular_squared_over_c2(self):
        G = cyclic(2)
        x = single(G, 2, gen_of(G, 2, []))
        y = tensor_elt(x, x)
        (gen, coeff), = y.terms.items()
        assert gen.subgroup.order == 1
        assert coeff == Cyclotomic.from_rational(1, 2)

    def test_characters_multiply_on_c3(self):
        G = cyclic(3)
        chars = linear_characters(G.full_subgroup(), 3)
        xs = [PPElement.from_generator(2, make_generator(G, G.full_subgroup(), c))
              for c in chars]
        prod = tensor_elt(xs[1], xs[2])
        (gen, coeff), = prod.terms.items()
        assert coeff.is_one()
        assert gen.character == chars[1] * chars[2]

    def test_dimension_multiplies(self):
        G = symmetric(3)
        p = 3
        x = single(G, p, gen_of(G, p, [Permutation.from_cycles(3, [(0, 1)])]))
        y = single(G, p, gen_of(G, p, [Permutation.from_cycles(3, [(0, 1, 2)])]))
        dim_pair = enumerate_pairs(G, p)[0]
        dx = tau_element(dim_pair, x).as_rational()
        dy = tau_element(dim_pair, y).as_rational()
        dxy = tau_element(dim_pair, tensor_elt(x, y)).as_rational()
        assert dxy == dx * dy == 6


class TestBrauer:
    def test_trivial_subgroup_unchanged(self):
        G = symmetric(3)
        x = single(G, 3, gen_of(G, 3, [Permutation.from_cycles(3, [(0, 1)])]))
        assert brauer_elt(x, G.trivial_subgroup()) is x

    def test_regular_c2_dies_at_c2(self):
        G = cyclic(2)
        x = single(G, 2, gen_of(G, 2, []))
        y = brauer_elt(x, G.full_subgroup())
        assert y.is_zero_formal()

    def test_s3_at_sylow3_gives_regular_quotient_module(self):
        G = symmetric(3)
        P = sylow(G, 3)
        x = single(G, 3, gen_of(G, 3, list(P.elements)))
        y = brauer_elt(x, P)
        assert y.group.order == 2
        (gen, coeff), = y.terms.items()
        assert gen.subgroup.order == 1  # the regular module of the quotient
        assert coeff.is_one()

    def test_rejects_non_p_subgroup(self):
        G = symmetric(3)
        with pytest.raises(NotPGroup):
            brauer_elt(single(G, 2, gen_of(G, 2, [])), sylow(G, 3))

    def test_matches_fixed_point_functor_on_transitive_sets(self):
        from ppring.burnside import fixed_point_functor, linearize, transitive
        G = symmetric(3)
        p = 3
        n = default_conductor(G, p)
        P = sylow(G, p)
        lat = subgroup_lattice(G)
        for L in lat.class_reps():
            lhs = linearize(fixed_point_functor(P, transitive(G, L)), p, n)
            rhs = brauer_elt(linearize(transitive(G, L), p, n), P)
            assert equal_elements(lhs, rhs)


class TestMackeyCoherence:
    def test_res_ind_matches_manual_double_coset_expansion(self):
        from ppring.grp import double_coset_reps
        G = symmetric(4)
        p = 2
        n = default_conductor(G, p)
        H = subgroup_closure(G, [Permutation.from_cycles(4, [(0, 1, 2)]),
                                 Permutation.from_cycles(4, [(0, 1)])])
        K = sylow(G, 2)
        HH = promote(H)
        chi = linear_characters(
            subgroup_closure(HH, [Permutation.from_cycles(4, [(0, 1, 2)])]), n)[1]
        gen = make_generator(HH, chi.domain, chi)
        x = PPElement.from_generator(p, gen)
        got = res_elt(ind_elt(x, G), K)

        # independent expansion straight from the double-coset formula
        KK = promote(K)
        L = gen.subgroup.reparent(G)
        expected = PPElement.zero(KK, p, n)
        for g in double_coset_reps(G, K, L):
            gi = g.inverse()
            inter = Subgroup(KK,
                             K.element_set & frozenset(y.conj(gi) for y in L.elements),
                             validate=False)
            table = {u: gen.character.value(u.conj(g)) for u in inter.elements}
            chi2 = LinChar(inter, table, n)
            expected = expected + PPElement.from_generator(
                p, make_generator(KK, inter, chi2))
        assert equal_elements(got, expected)


class TestResInfComposite:
    @pytest.mark.parametrize("p,build", [(2, lambda: dihedral(8)),
                                         (2, lambda: cyclic(6)),
                                         (3, lambda: symmetric(3))])
    def test_res_inf_equals_inf_iso_res(self, p, build):
        H = build()
        P = sylow(H, p)
        if not P.is_normal() or P.order == 1:
            pytest.skip("needs a nontrivial normal p-subgroup")
        n = default_conductor(H, p)
        Q = quotient(H, P)
        lat = subgroup_lattice(H)
        for chi in linear_characters(Q.group.full_subgroup(), n):
            x = PPElement.from_generator(
                p, make_generator(Q.group, Q.group.full_subgroup(), chi))
            for L in lat.class_reps():
                lhs = res_elt(inf_elt(x, Q), L)
                # pull back along L -> LP/P directly
                LPbar = Q.project_subgroup(L)
                z = res_elt(x, LPbar)
                LL = promote(L)
                rhs = PPElement.zero(LL, p, n)
                for gen, coeff in z.terms.items():
                    members = gen.subgroup.element_set
                    pre = Subgroup(LL,
                                   [l for l in L.elements if Q.project(l) in members],
                                   validate=False)
                    table = {l: gen.character.value(Q.project(l))
                             for l in pre.elements}
                    chi2 = LinChar(pre, table, n, validate=False)
                    rhs = rhs + PPElement.from_generator(
                        p, make_generator(LL, pre, chi2)).scale(coeff)
                assert equal_elements(lhs, rhs)


class TestPPElementPlumbing:
    def test_zero_coefficients_dropped(self):
        G = cyclic(2)
        gen = gen_of(G, 2, [])
        x = PPElement(G, 2, 1, {gen: Cyclotomic.zero(1)})
        assert x.is_zero_formal()

    def test_mismatched_groups_rejected(self):
        from ppring.ppelem import GroupMismatch
        a = PPElement.one(cyclic(2), 2, 1)
        b = PPElement.one(cyclic(3), 2, 3)
        with pytest.raises((GroupMismatch, Exception)):
            a + b

    def test_json_shape(self):
        G = cyclic(2)
        x = PPElement.one(G, 2, 1)
        (entry,) = x.to_json()
        assert set(entry) == {"subgroup", "character", "coeff"}
        assert entry["coeff"] == {"conductor": 1, "coeffs": ["1"]}
