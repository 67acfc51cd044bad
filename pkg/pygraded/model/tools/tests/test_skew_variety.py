from itertools import combinations
from unittest import TestCase

from hypothesis import given, settings, strategies as st
from sympy import QQ

from pygraded.io.algebra_io import load_algebra
from pygraded.model.tools.skew_variety import (
    SupportFamily, skew_point_variety, skew_omega, bad_triples,
    check_omega)
from pygraded.tests.fixtures import skew_3_path
from pygraded.tests.probe_classes.algebras import (
    probe_quantum_plane, probe_downup)
from pygraded.utilities import PreconditionError

values = st.sampled_from([QQ(1), QQ(2), QQ(1, 2), QQ(3), QQ(-1)])


def omega_matrix(upper, size):
    omega = [[QQ(1)] * size for _ in range(size)]
    index = 0
    for i in range(size):
        for j in range(i + 1, size):
            value = QQ(upper[index])
            omega[i][j] = value
            omega[j][i] = 1 / value
            index += 1
    return omega


@st.composite
def omegas(draw):
    size = draw(st.integers(min_value=2, max_value=5))
    count = size * (size - 1) // 2
    upper = draw(st.lists(values, min_size=count, max_size=count))
    return omega_matrix(upper, size)


class TestSkewVariety(TestCase):

    def test_commutative(self):
        family = skew_point_variety(omega_matrix([1, 1, 1], 3))
        self.assertEqual([(0, 1, 2)], family.supports)
        self.assertEqual('{0,1,2}', family.format())

    def test_three_lines(self):
        family = skew_point_variety(omega_matrix([2, 2, 2], 3))
        self.assertEqual([(0, 1), (0, 2), (1, 2)], family.supports)
        self.assertEqual('{x,y}, {x,z}, {y,z}', family.format('xyz'))

        self.assertTrue(family.contains([1, 5, 0]))
        self.assertTrue(family.contains([0, 0, 1]))
        self.assertFalse(family.contains([1, 1, 1]))

    def test_consistent_triple(self):
        # omega_01 = 2, omega_12 = 1, omega_02 = 2
        family = skew_point_variety(omega_matrix([2, 2, 1], 3))
        self.assertEqual([(0, 1, 2)], family.supports)

    def test_projective_line(self):
        family = skew_point_variety(omega_matrix([2], 2))
        self.assertEqual(
            SupportFamily([(0, 1)], 2), family)

    def test_malformed_omega(self):
        with self.assertRaises(PreconditionError):
            check_omega([[1, 2], [2, 1]])
        with self.assertRaises(PreconditionError):
            check_omega([[2, 1], [1, 1]])
        with self.assertRaises(PreconditionError):
            check_omega([[1, 2]])
        with self.assertRaises(PreconditionError):
            check_omega([])

    def test_skew_omega(self):
        omega = skew_omega(load_algebra(skew_3_path))
        self.assertEqual(omega_matrix([2, 2, 2], 3), omega)
        self.assertEqual(
            [(0, 1), (0, 2), (1, 2)],
            skew_point_variety(omega).supports)

        self.assertEqual(
            omega_matrix([2], 2), skew_omega(probe_quantum_plane(2)))

        with self.assertRaises(PreconditionError):
            skew_omega(probe_downup(4, -4))

    @settings(max_examples=50, deadline=None)
    @given(omegas())
    def test_brute_force(self, omega):
        family = skew_point_variety(omega)
        size = len(omega)
        bad = [set(triple) for triple in bad_triples(omega)]

        for count in range(1, size + 1):
            for support in combinations(range(size), count):
                admissible = not any(
                    triple <= set(support) for triple in bad)
                covered = any(
                    set(support) <= set(listed) for listed in family)
                self.assertEqual(admissible, covered)

        for listed in family:
            for index in set(range(size)) - set(listed):
                extended = set(listed) | {index}
                self.assertTrue(
                    any(triple <= extended for triple in bad))
