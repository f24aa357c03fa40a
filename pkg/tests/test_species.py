import random

from ppring.cyclo import Cyclotomic
from ppring.grp import (Permutation, cyclic, dihedral, p_prime_part,
                        symmetric, sylow)
from ppring.ppelem import (LinChar, PPElement, default_conductor,
                           linear_characters, make_generator, tensor_elt)
from ppring.species import (build_pair, enumerate_pairs,
                            equal_elements, pairs_conjugate, species_vector,
                            standard_generators, tau_element, tau_generator)


class TestEnumeratePairs:
    def test_c2_p2(self):
        pairs = enumerate_pairs(cyclic(2), 2)
        assert [(q.P.order, q.s_order) for q in pairs] == [(1, 1), (2, 1)]

    def test_s3_p3(self):
        pairs = enumerate_pairs(symmetric(3), 3)
        assert [(q.P.order, q.s_order) for q in pairs] == \
            [(1, 1), (1, 2), (3, 1), (3, 2)]

    def test_c3_p3(self):
        assert len(enumerate_pairs(cyclic(3), 3)) == 2

    def test_lifts_are_p_prime_normalizing(self):
        import math
        for G, p in [(symmetric(4), 2), (dihedral(12), 2), (dihedral(12), 3)]:
            for q in enumerate_pairs(G, p):
                assert math.gcd(q.lift.order(), p) == 1
                assert frozenset(x.conj(q.lift) for x in q.P.elements) == q.P.element_set

    def test_ses_invariant(self):
        for G, p in [(symmetric(4), 2), (quotient_testcase(), 2)]:
            for q in enumerate_pairs(G, p):
                assert q.stabilizer.order == q.P.order * q.centralizer_order

    def test_deterministic(self):
        a = enumerate_pairs(symmetric(4), 2)
        b = enumerate_pairs(symmetric(4), 2)
        assert a == b
        keys = [q.sort_key() for q in a]
        assert keys == sorted(keys)


def quotient_testcase():
    return dihedral(8)


class TestPairsConjugate:
    def test_reflexive(self):
        q = enumerate_pairs(symmetric(3), 3)[1]
        assert pairs_conjugate(q, q)

    def test_transpositions_conjugate(self):
        G = symmetric(3)
        t1 = Permutation.from_cycles(3, [(0, 1)])
        t2 = Permutation.from_cycles(3, [(1, 2)])
        a = build_pair(G, 3, G.trivial_subgroup(), t1)
        b = build_pair(G, 3, G.trivial_subgroup(), t2)
        assert pairs_conjugate(a, b)

    def test_different_p_order(self):
        G = cyclic(2)
        pairs = enumerate_pairs(G, 2)
        assert not pairs_conjugate(pairs[0], pairs[1])


class TestTauGenerator:
    def test_dimension_at_trivial_pair(self):
        G = symmetric(3)
        p = 3
        n = default_conductor(G, p)
        dim_pair = enumerate_pairs(G, p)[0]
        L = sylow(G, 3)
        gen = make_generator(G, L, LinChar.trivial(L, n))
        assert tau_generator(dim_pair, gen) == Cyclotomic.from_rational(n, 2)

    def test_regular_c2_vector(self):
        G = cyclic(2)
        n = 1
        T = G.trivial_subgroup()
        gen = make_generator(G, T, LinChar.trivial(T, n))
        x = PPElement.from_generator(2, gen)
        vec = species_vector(x)
        assert [v.as_rational() for v in vec.values] == [2, 0]

    def test_transposition_swaps_c3_cosets(self):
        # the transposition swaps the two cosets of C3, so every character
        # of C3 admissible at this conductor gives species value zero
        G = symmetric(3)
        p = 3
        n = default_conductor(G, p)
        pair = enumerate_pairs(G, p)[1]  # (1, transposition)
        L = sylow(G, 3)
        for chi in linear_characters(L, n):
            gen = make_generator(G, L, chi)
            assert tau_generator(pair, gen).is_zero()

    def test_trivial_module_all_ones(self):
        for G, p in [(symmetric(3), 2), (dihedral(8), 2)]:
            one = PPElement.one(G, p, default_conductor(G, p))
            vec = species_vector(one)
            assert all(v.is_one() for v in vec.values)

    def test_zero_vector(self):
        G = symmetric(3)
        vec = species_vector(PPElement.zero(G, 2, default_conductor(G, 2)))
        assert all(v.is_zero() for v in vec.values)


class TestSpeciesProperties:
    def test_multiplicativity_on_random_generator_pairs(self):
        rng = random.Random(7)
        for G, p in [(symmetric(3), 3), (dihedral(8), 2), (cyclic(6), 2)]:
            n = default_conductor(G, p)
            gens = standard_generators(G, p, n)
            pairs = enumerate_pairs(G, p)
            for _ in range(8):
                a = PPElement.from_generator(p, rng.choice(gens))
                b = PPElement.from_generator(p, rng.choice(gens))
                prod = tensor_elt(a, b)
                for q in pairs:
                    assert tau_element(q, prod) == \
                        tau_element(q, a) * tau_element(q, b)

    def test_conjugation_invariance(self):
        G = symmetric(3)
        p = 3
        n = default_conductor(G, p)
        t1 = Permutation.from_cycles(3, [(0, 1)])
        t2 = Permutation.from_cycles(3, [(1, 2)])
        a = build_pair(G, p, G.trivial_subgroup(), t1)
        b = build_pair(G, p, G.trivial_subgroup(), t2)
        for gen in standard_generators(G, p, n):
            assert tau_generator(a, gen) == tau_generator(b, gen)

    def test_lift_independence(self):
        G = dihedral(12)
        p = 2
        n = default_conductor(G, p)
        gens = standard_generators(G, p, n)
        for q in enumerate_pairs(G, p):
            for u in q.P.elements:
                alt = p_prime_part(G, q.lift * u, p)
                if alt == q.lift:
                    continue
                other = build_pair(G, p, q.P, alt)
                for gen in gens[:4]:
                    assert tau_generator(q, gen) == tau_generator(other, gen)

    def test_equal_elements_separates(self):
        G = symmetric(3)
        p = 3
        n = default_conductor(G, p)
        one = PPElement.one(G, p, n)
        L = sylow(G, 3)
        other = PPElement.from_generator(
            p, make_generator(G, L, LinChar.trivial(L, n)))
        assert not equal_elements(one, other)
        assert equal_elements(one, one)


class TestStandardGenerators:
    def test_counts_match_pair_counts(self):
        # the spanning set has at least as many classes as there are species
        for G, p in [(symmetric(3), 3), (dihedral(8), 2), (cyclic(6), 2)]:
            n = default_conductor(G, p)
            gens = standard_generators(G, p, n)
            assert len(gens) >= len(enumerate_pairs(G, p))

    def test_species_matrix_separates_pairs(self):
        # the species are pairwise distinct as linear functionals
        G = symmetric(3)
        p = 3
        n = default_conductor(G, p)
        gens = standard_generators(G, p, n)
        rows = [tuple(tau_generator(q, g) for g in gens)
                for q in enumerate_pairs(G, p)]
        assert len(set(rows)) == len(rows)
