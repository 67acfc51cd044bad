from hypothesis import given, settings, strategies as st
from sympy import QQ

from pygraded.model.objects.nc_poly import NCPoly, poly_mul
from pygraded.model.objects.quotient_cache import (
    QuotientCache, build_quotient_cache, normal_form, equal_mod_ideal,
    hilbert, minimal_relation_degrees, presentations_equal)
from pygraded.tests.probe_classes.algebras import (
    probe_presentation, probe_free, probe_commutative_plane,
    probe_quantum_plane, probe_downup)
from pygraded.tests.pygraded_test_case import PyGradedTestCase
from pygraded.utilities import BudgetExceededError, DegreeCapError

DOWNUP_4_4 = build_quotient_cache(probe_downup(4, -4), 6)


def homogeneous_polys(degree):
    words = st.lists(
        st.integers(min_value=0, max_value=1),
        min_size=degree, max_size=degree).map(tuple)
    coefficients = st.integers(min_value=-3, max_value=3)
    return st.dictionaries(words, coefficients, max_size=4).map(NCPoly)


class TestQuotientCache(PyGradedTestCase):

    def setUp(self):
        self.commutative = build_quotient_cache(
            probe_commutative_plane(), 3)

    def test_dims(self):
        self.assertEqual([1, 2, 3, 4], self.commutative.dims())
        self.assertEqual(
            [1, 2, 4, 8], build_quotient_cache(probe_free(), 3).dims())
        self.assertEqual(
            [1, 2, 4, 6, 9, 12],
            build_quotient_cache(probe_downup(2, -1), 5).dims())

    def test_complementary_dims(self):
        for degree in range(7):
            self.assertEqual(
                2 ** degree,
                DOWNUP_4_4.dim(degree) + DOWNUP_4_4.ideal_dim(degree))

    def test_word_index(self):
        self.assertEqual(2, self.commutative.word_to_index((1, 0)))
        self.assertEqual((1, 0), self.commutative.index_to_word(2, 2))
        self.assertEqual(
            [(0, 0), (0, 1), (1, 1)], self.commutative.basis(2))

    def test_normal_form(self):
        yx = NCPoly.word((1, 0))
        self.assertEqual(
            NCPoly.word((0, 1)), normal_form(self.commutative, yx))

        relation = self.commutative.presentation.relations[0]
        self.assertFalse(normal_form(self.commutative, relation))

        x = NCPoly.generator(0)
        self.assertEqual(x, normal_form(DOWNUP_4_4, x))

        for relation in DOWNUP_4_4.presentation.relations:
            self.assertTrue(DOWNUP_4_4.is_zero(relation))

    def test_normal_form_idempotent(self):
        poly = NCPoly({(1, 1, 0, 0): 1, (1, 0, 1, 0): 2})
        once = DOWNUP_4_4.normal_form(poly)
        self.assertEqual(once, DOWNUP_4_4.normal_form(once))

    def test_coordinates(self):
        poly = NCPoly({(1, 0): 3})
        vector = self.commutative.coordinates(poly, 2)
        self.assertEqual([QQ(0), QQ(3), QQ(0)], vector)
        self.assertEqual(
            NCPoly({(0, 1): 3}),
            self.commutative.from_coordinates(vector, 2))

    def test_degree_cap(self):
        with self.assertRaises(DegreeCapError):
            self.commutative.normal_form(NCPoly.word((0, 0, 0, 0)))
        with self.assertRaises(DegreeCapError):
            self.commutative.dim(4)

    def test_budget(self):
        with self.assertRaises(BudgetExceededError):
            QuotientCache(probe_free(), 12, budget=1000)
        with self.assertRaises(ValueError):
            QuotientCache(probe_free(), -1)

    def test_equal_mod_ideal(self):
        xy = NCPoly.word((0, 1))
        yx = NCPoly.word((1, 0))
        self.assertTrue(equal_mod_ideal(self.commutative, xy, yx))
        free = build_quotient_cache(probe_free(), 2)
        self.assertFalse(equal_mod_ideal(free, xy, yx))

        cache = build_quotient_cache(probe_downup(2, -1), 3)
        left = NCPoly.word((0, 0, 1))
        right = NCPoly({(0, 1, 0): 2, (1, 0, 0): -1})
        self.assertTrue(equal_mod_ideal(cache, left, right))
        self.assertEqualModIdeal(cache, left, right)

        with self.assertRaises(ValueError):
            equal_mod_ideal(cache, xy, NCPoly.generator(0))

    def test_hilbert(self):
        self.assertEqual(
            [1, 2, 3, 4, 5], hilbert(probe_quantum_plane(2), 4))
        self.assertEqual([1, 2, 4, 8, 16], hilbert(probe_free(), 4))
        self.assertEqual([1, 2, 4, 6, 9, 12, 16], DOWNUP_4_4.dims())

    def test_minimal_relation_degrees(self):
        self.assertEqual(
            {3: 2}, minimal_relation_degrees(
                DOWNUP_4_4.presentation, 6, cache=DOWNUP_4_4))
        self.assertEqual(
            {2: 1}, minimal_relation_degrees(probe_commutative_plane(), 4))
        self.assertEqual({}, minimal_relation_degrees(probe_free(), 4))
        self.assertEqual(
            {3: 2}, minimal_relation_degrees(probe_downup(2, -1), 5))

    def test_redundant_relation(self):
        presentation = probe_presentation(
            ['x', 'y'], ['x*y - y*x', 'x*x*y - x*y*x'])
        self.assertEqual(
            {2: 1}, minimal_relation_degrees(presentation, 4))

    def test_presentations_equal(self):
        scaled = probe_presentation(['x', 'y'], ['2*x*y - 4*y*x'])
        self.assertTrue(
            presentations_equal(probe_quantum_plane(2), scaled, 4))
        self.assertFalse(
            presentations_equal(
                probe_quantum_plane(2), probe_commutative_plane(), 4))
        self.assertFalse(
            presentations_equal(probe_free(2), probe_free(3), 2))

    @settings(max_examples=30, deadline=None)
    @given(homogeneous_polys(2), homogeneous_polys(3))
    def test_normal_form_multiplicative(self, first, second):
        cache = DOWNUP_4_4
        self.assertEqual(
            cache.normal_form(poly_mul(first, second)),
            cache.normal_form(poly_mul(
                cache.normal_form(first), cache.normal_form(second))))
