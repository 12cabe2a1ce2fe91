import unittest

from errors import LatticeError
from algebra.ideals import IdealHandle, ideal_equal, initial_ideal
from koszul import verify
from lattices import (
    DistributiveLattice,
    HibiRing,
    Poset,
    certify_covers,
    cogenerated_ideal,
    cogenerated_ideal_literal,
    colon_cover,
    covering_pairs,
    hibi_koszul_filtration,
    hibi_order,
    ideal_name,
    join_meet_ideal,
    lattice_from_poset,
    poset_ideals,
    reduced_family_check,
    upset_filtration,
)

B2 = ('I_', 'I_p1', 'I_p2', 'I_p1_p2')


def boolean(k):
    return lattice_from_poset(Poset.antichain(k))


def chain_lattice(k):
    return lattice_from_poset(Poset.chain(k))


class TestPoset(unittest.TestCase):
    def test_chain(self):
        P = Poset.chain(3)
        self.assertEqual(P.elements, ('p1', 'p2', 'p3'))
        self.assertEqual(P.covers(), [('p1', 'p2'), ('p2', 'p3')])
        self.assertEqual(len(P.ideals()), 4)
        self.assertTrue(P.less('p1', 'p3'))
        self.assertTrue(P.reverse().less('p3', 'p1'))

    def test_redundant_relations_dropped(self):
        P = Poset(['a', 'b', 'c'], [('a', 'b'), ('b', 'c'), ('a', 'c')])
        self.assertEqual(P.covers(), [('a', 'b'), ('b', 'c')])

    def test_antichain_ideals(self):
        ideals = Poset.antichain(3).ideals()
        self.assertEqual(len(ideals), 8)
        self.assertEqual(ideals[0], frozenset())
        self.assertEqual(ideals[-1], frozenset({'p1', 'p2', 'p3'}))

    def test_down_sets(self):
        P = Poset.chain(3)
        self.assertTrue(P.is_down_set({'p1', 'p2'}))
        self.assertFalse(P.is_down_set({'p2'}))

    def test_invalid_posets(self):
        for elements, relations in [
            (['a', 'a'], []),
            (['a', 'b'], [('a', 'b'), ('b', 'a')]),
            (['a'], [('a', 'z')]),
            (['a'], [('a', 'a')]),
            (['1a'], []),
        ]:
            with self.subTest(elements=elements, relations=relations):
                with self.assertRaises(LatticeError):
                    Poset(elements, relations)

    def test_ideal_bound(self):
        with self.assertRaises(LatticeError):
            Poset.chain(7).ideals()

    def test_ideal_name(self):
        self.assertEqual(ideal_name([]), 'I_')
        self.assertEqual(ideal_name(['p2', 'p1']), 'I_p1_p2')

    def test_ideal_name_with_underscores(self):
        self.assertEqual(ideal_name(['a_b', 'c']), 'I_a__b_c')
        self.assertEqual(ideal_name(['a', 'b_c']), 'I_a_b__c')

    def test_underscore_elements_give_distinct_lattice_names(self):
        P = Poset(['a', 'a_b', 'b_c', 'c'])
        L = lattice_from_poset(P)
        self.assertEqual(len(L.elements), 16)
        self.assertEqual(len(set(L.elements)), 16)
        self.assertIn('I_a__b_c', L.elements)
        self.assertIn('I_a_b__c', L.elements)

    def test_lattice_names_are_injective(self):
        for P in (Poset.antichain(3), Poset(['a_', 'b', 'a_b'], [('a_', 'a_b')])):
            with self.subTest(poset=P):
                ideals = P.ideals()
                self.assertEqual(len({ideal_name(ideal) for ideal in ideals}), len(ideals))

    def test_repr_of_rejected_poset(self):
        poset = Poset.__new__(Poset)
        with self.assertRaises(LatticeError):
            poset.__init__(['a', 'b'], [('a', 'b'), ('b', 'a')])
        self.assertEqual(repr(poset), "Poset(['a', 'b'], covers=[])")


class TestLattice(unittest.TestCase):
    def test_boolean_lattice(self):
        L = boolean(2)
        self.assertEqual(L.elements, B2)
        self.assertEqual(L.meet('I_p1', 'I_p2'), 'I_')
        self.assertEqual(L.join('I_p1', 'I_p2'), 'I_p1_p2')
        self.assertEqual((L.bottom, L.top), ('I_', 'I_p1_p2'))
        self.assertEqual(L.incomparable_pairs(), [('I_p1', 'I_p2')])

    def test_not_a_lattice(self):
        with self.assertRaises(LatticeError):
            DistributiveLattice.from_covers(['a', 'b', 'c', 'd'], [('a', 'c'), ('b', 'c'), ('a', 'd'), ('b', 'd')])

    def test_pentagon_is_not_distributive(self):
        with self.assertRaises(LatticeError):
            DistributiveLattice.from_covers(
                ['z', 'a', 'b', 'c', 'u'], [('z', 'a'), ('a', 'c'), ('c', 'u'), ('z', 'b'), ('b', 'u')])

    def test_diamond_is_not_distributive(self):
        with self.assertRaises(LatticeError):
            DistributiveLattice.from_covers(
                ['z', 'a', 'b', 'c', 'u'], [('z', 'a'), ('z', 'b'), ('z', 'c'), ('a', 'u'), ('b', 'u'), ('c', 'u')])

    def test_bounds(self):
        with self.assertRaises(LatticeError):
            lattice_from_poset(Poset.antichain(5))
        with self.assertRaises(LatticeError):
            lattice_from_poset(Poset.antichain(3), lattice_bound=4)

    def test_birkhoff_round_trip(self):
        L = boolean(3)
        irreducibles = L.join_irreducibles()
        self.assertEqual(len(irreducibles), 3)
        self.assertEqual(irreducibles.covers(), [])
        self.assertTrue(L.is_isomorphic(lattice_from_poset(irreducibles)))

    def test_chain_lattice(self):
        L = chain_lattice(2)
        explicit = DistributiveLattice.from_covers(['a', 'b', 'c'], [('a', 'b'), ('b', 'c')])
        self.assertTrue(L.is_isomorphic(explicit))
        self.assertEqual(L.incomparable_pairs(), [])

    def test_reverse(self):
        L = boolean(2).reverse()
        self.assertEqual(L.bottom, 'I_p1_p2')


class TestHibiRing(unittest.TestCase):
    def test_join_meet_ideal(self):
        I = join_meet_ideal(boolean(2))
        self.assertEqual([str(g) for g in I.generators], ['-I_*I_p1_p2 + I_p1*I_p2'])
        self.assertEqual(len(join_meet_ideal(boolean(3)).generators), 9)
        self.assertEqual(len(poset_ideals(boolean(3))), 20)

    def test_initial_ideal_is_incomparable_products(self):
        for L in [boolean(2), boolean(3), chain_lattice(3)]:
            with self.subTest(L=L):
                hibi = HibiRing(L)
                products = IdealHandle(hibi.ring, [hibi.ring.var(a) * hibi.ring.var(b) for a, b in L.incomparable_pairs()])
                self.assertTrue(ideal_equal(initial_ideal(hibi.ideal, hibi.order), products, hibi.order))

    def test_hibi_order_priority(self):
        L = boolean(2)
        self.assertEqual(hibi_order(L).names, B2)
        self.assertEqual(hibi_order(L, ideal=['I_p2']).names[0], 'I_p2')

    def test_cogenerated_ideals(self):
        L = boolean(2)
        self.assertEqual(cogenerated_ideal(L, 'I_p1'), frozenset({'I_', 'I_p2'}))
        self.assertEqual(cogenerated_ideal_literal(L, 'I_p1'), frozenset({'I_', 'I_p1', 'I_p2'}))
        self.assertEqual(cogenerated_ideal(L, 'I_'), frozenset())
        with self.assertRaises(LatticeError):
            cogenerated_ideal(L, 'nope')


class TestCoverColons(unittest.TestCase):
    def setUp(self):
        self.hibi = HibiRing(boolean(2))

    def test_single_covers(self):
        self.assertTrue(colon_cover(self.hibi, [], ['I_']).holds)
        result = colon_cover(self.hibi, ['I_'], ['I_', 'I_p1'])
        self.assertTrue(result.holds)
        self.assertEqual(result.element, 'I_p1')
        self.assertEqual(result.cogenerated, frozenset({'I_', 'I_p2'}))
        self.assertTrue(colon_cover(self.hibi, ['I_'], ['I_', 'I_p1'], use_elimination=True).holds)

    def test_rejects_non_covers(self):
        with self.assertRaises(LatticeError):
            colon_cover(self.hibi, [], ['I_', 'I_p1'])
        with self.assertRaises(LatticeError):
            colon_cover(self.hibi, [], ['I_p1'])
        with self.assertRaises(LatticeError):
            colon_cover(self.hibi, ['I_'], ['I_', 'zz'])

    def test_all_covers(self):
        results = certify_covers(self.hibi)
        self.assertEqual(len(results), 6)
        self.assertTrue(all(r.holds for r in results))
        threaded = certify_covers(self.hibi, workers=3)
        self.assertEqual([r.holds for r in threaded], [r.holds for r in results])

    def test_literal_reading_fails_on_chains(self):
        hibi = HibiRing(chain_lattice(2))
        result = colon_cover(hibi, ['I_'], ['I_', 'I_p1'], cogenerate=cogenerated_ideal_literal)
        self.assertFalse(result.holds)
        self.assertTrue(colon_cover(hibi, ['I_'], ['I_', 'I_p1']).holds)

    def test_covering_pairs(self):
        ideals = poset_ideals(boolean(2))
        pairs = covering_pairs(ideals)
        self.assertIn((frozenset(), frozenset({'I_'})), pairs)
        self.assertTrue(all(len(upper - lower) == 1 for lower, upper in pairs))


class TestHibiFiltrations(unittest.TestCase):
    def test_poset_ideal_filtration(self):
        for L in [boolean(2), chain_lattice(3)]:
            with self.subTest(L=L):
                F = hibi_koszul_filtration(L)
                self.assertEqual(len(F), len(poset_ideals(L)))
                self.assertTrue(verify(F).ok)

    def test_upset_filtration(self):
        self.assertTrue(verify(upset_filtration(boolean(2))).ok)

    def test_reduced_family_check(self):
        L = boolean(2)
        everything = poset_ideals(L)
        self.assertTrue(reduced_family_check(L, everything))
        without_top = [ideal for ideal in everything if len(ideal) != len(L)]
        self.assertFalse(reduced_family_check(L, without_top))
        with self.assertRaises(LatticeError):
            reduced_family_check(L, [['I_p1']])
