from hypothesis import given, settings, strategies as st
from sympy import QQ

from pygraded.io.color_lie_io import load_color_lie
from pygraded.model.objects.nc_poly import NCPoly
from pygraded.model.tools.pbw import EnvelopingAlgebra, pbw_normal_form
from pygraded.tests.fixtures import bad_jacobi_path
from pygraded.tests.probe_classes.color_lie import (
    probe_heisenberg, probe_abelian)
from pygraded.tests.pygraded_test_case import PyGradedTestCase

X, Y, Z = 0, 1, 2

words = st.lists(
    st.integers(min_value=0, max_value=2), min_size=0, max_size=5)


class TestEnvelopingAlgebra(PyGradedTestCase):

    def setUp(self):
        self.algebra = probe_heisenberg(2)
        self.enveloping = EnvelopingAlgebra(self.algebra)

    def test_swap_with_bracket(self):
        self.assertPolyEqual(
            NCPoly({(X, Y): QQ(1, 2), (Z,): QQ(-1, 2)}),
            self.enveloping.normal_form((Y, X)))
        self.assertEqual(
            '1/2*x*y - 1/2*z',
            self.enveloping.format(self.enveloping.normal_form((Y, X))))

    def test_swap_without_bracket(self):
        self.assertPolyEqual(
            NCPoly({(X, Z): QQ(1, 2)}),
            self.enveloping.normal_form((Z, X)))
        self.assertPolyEqual(
            NCPoly({(Y, Z): 2}), self.enveloping.normal_form((Z, Y)))

    def test_sorted_words(self):
        for word in [(), (X,), (X, X, Y), (X, Y, Z, Z)]:
            self.assertPolyEqual(
                NCPoly.word(word), self.enveloping.normal_form(word))
        self.assertTrue(self.enveloping.is_sorted((X, Y, Y, Z)))
        self.assertFalse(self.enveloping.is_sorted((Z, Y)))

    def test_strategy(self):
        with self.assertRaises(ValueError):
            self.enveloping.normal_form((Y, X), strategy='random')
        self.assertPolyEqual(
            NCPoly({(X, Y): QQ(1, 2), (Z,): QQ(-1, 2)}),
            pbw_normal_form(self.algebra, (Y, X), 'rightmost'))

    def test_multiply(self):
        y = NCPoly.word((Y,))
        x = NCPoly.word((X,))
        commutator = (
            self.enveloping.multiply(x, y)
            - self.enveloping.multiply(y, x).scale(2))
        self.assertPolyEqual(NCPoly.word((Z,)), commutator)
        self.assertPolyEqual(
            self.enveloping.reduce(NCPoly({(Y, X): 2})),
            self.enveloping.normal_form((Y, X)).scale(2))

    def test_dims(self):
        self.assertEqual([1, 2, 4, 6, 9, 12], self.enveloping.dims(5))
        self.assertEqual(
            [(X, X), (X, Y), (Y, Y), (Z,)], self.enveloping.monomials(2))
        self.assertEqual(
            [1, 3, 6, 10],
            EnvelopingAlgebra(probe_abelian([2, 2, 2], 3)).dims(3))

    def test_coordinates(self):
        element = self.enveloping.normal_form((Y, X))
        self.assertEqual(
            [0, QQ(1, 2), 0, QQ(-1, 2)],
            self.enveloping.coordinates(element, 2))

    @settings(max_examples=200, deadline=None)
    @given(words)
    def test_confluence(self, word):
        for algebra in (self.algebra, probe_heisenberg(QQ(1, 3))):
            enveloping = EnvelopingAlgebra(algebra)
            self.assertPolyEqual(
                enveloping.normal_form(tuple(word), 'leftmost'),
                enveloping.normal_form(tuple(word), 'rightmost'))

    @settings(max_examples=50, deadline=None)
    @given(words, words)
    def test_associativity(self, first, second):
        left = self.enveloping.normal_form(tuple(first))
        right = self.enveloping.normal_form(tuple(second))
        self.assertPolyEqual(
            self.enveloping.normal_form(tuple(first + second)),
            self.enveloping.multiply(left, right))

    def test_bad_jacobi_is_not_confluent(self):
        algebra = load_color_lie(bad_jacobi_path)
        enveloping = EnvelopingAlgebra(algebra)
        x, y, w = (algebra.names.index(name) for name in 'xyw')
        self.assertNotEqual(
            enveloping.normal_form((w, y, x), 'leftmost'),
            enveloping.normal_form((w, y, x), 'rightmost'))
