from hypothesis import given, settings, strategies as st
from sympy import QQ

from pygraded.model.core.scalars import RATIONAL_FUNCTION, T
from pygraded.model.objects.heisenberg_witness import HeisenbergWitness
from pygraded.model.objects.nc_poly import NCPoly
from pygraded.model.objects.qv_element import (
    QVElement, qv_product, bold_g)
from pygraded.model.tools.point_geometry import (
    word_coefficient, evaluate, is_truncated_point_module,
    extension_fiber, g_action_scalars, is_g_torsionfree_truncated,
    check_all_or_nothing, torsion_annihilates, x_propagation_check,
    quotient_functor_action, PropagationState, expand_state,
    specialize_state, generic_seed, lambdas_alive)
from pygraded.tests.probe_classes.algebras import (
    probe_quantum_plane, probe_free, probe_downup, probe_presentation)
from pygraded.tests.probe_classes.point_modules import oracle_is_module
from pygraded.tests.pygraded_test_case import PyGradedTestCase
from pygraded.utilities import PreconditionError, BudgetExceededError

X = NCPoly.generator(0)
Y = NCPoly.generator(1)
G = X * Y - (Y * X).scale(2)

coordinates = st.integers(min_value=-2, max_value=2)


@st.composite
def point_sequences(draw, length, ngens=2):
    points = []
    for _ in range(length):
        point = draw(st.lists(coordinates, min_size=ngens, max_size=ngens)
                     .filter(any))
        points.append([QQ(value) for value in point])
    return points


class TestPointGeometry(PyGradedTestCase):

    def setUp(self):
        self.quantum_plane = probe_quantum_plane(2)
        self.downup = probe_downup(4, -4)
        self.free = probe_free(2)

    def test_word_coefficient(self):
        points = [[QQ(1), QQ(2)], [QQ(3), QQ(5)]]
        # x y acts on m_0 by p^(1)_y p^(2)_x
        self.assertEqual(6, word_coefficient((0, 1), points, 0))
        self.assertEqual(5, word_coefficient((1, 0), points, 0))
        self.assertEqual(5, word_coefficient((1,), points, 1))
        self.assertEqual(1, word_coefficient((), points, 0))

    def test_is_truncated_point_module(self):
        self.assertEqual(
            (True, None),
            is_truncated_point_module(
                self.quantum_plane, [[1, 1], [2, 1]]))
        self.assertEqual(
            (False, (0, 0)),
            is_truncated_point_module(
                self.quantum_plane, [[1, 1], [1, 1]]))
        self.assertEqual(
            (True, None),
            is_truncated_point_module(self.downup, [[1, 1]]))
        self.assertEqual(
            (False, (0, 1)),
            is_truncated_point_module(
                self.quantum_plane, [[1, 1], [2, 1], [1, 1]]))

        with self.assertRaises(PreconditionError):
            is_truncated_point_module(self.quantum_plane, [[0, 0]])
        with self.assertRaises(PreconditionError):
            is_truncated_point_module(self.quantum_plane, [[1, 0], [1]])

    def test_quantum_plane_sequence_over_downup(self):
        points = [[1, 1], [2, 1], [4, 1]]
        self.assertTrue(is_truncated_point_module(self.downup, points)[0])

    @settings(max_examples=60, deadline=None)
    @given(point_sequences(3))
    def test_oracle_agreement(self, points):
        for presentation in (self.quantum_plane, self.downup):
            valid, _ = is_truncated_point_module(presentation, points)
            self.assertEqual(
                oracle_is_module(presentation, points), valid)

    def test_extension_fiber(self):
        fiber = extension_fiber(self.quantum_plane, [[1, 1]])
        self.assertEqual(0, fiber.projective_dimension)
        self.assertEqual([[1, QQ(1, 2)]], fiber.points())
        self.assertTrue(fiber.contains([2, 1]))
        self.assertFalse(fiber.contains([1, 1]))

        fiber = extension_fiber(self.free, [[1, 1], [2, 3]])
        self.assertEqual(1, fiber.projective_dimension)
        self.assertEqual([], fiber.rows)

    def test_extension_fiber_downup(self):
        fiber = extension_fiber(self.downup, [[0, 1], [1, 0], [0, 1]])
        self.assertTrue(fiber.empty)
        self.assertEqual(-1, fiber.projective_dimension)

        fiber = extension_fiber(self.downup, [[1, 1], [2, 1]])
        self.assertEqual(0, fiber.projective_dimension)
        self.assertEqual([[1, QQ(1, 4)]], fiber.points())

    @settings(max_examples=40, deadline=None)
    @given(point_sequences(2))
    def test_fiber_contains_extensions(self, points):
        fiber = extension_fiber(self.downup, points)
        for point in fiber.points():
            extended = points + [point]
            self.assertTrue(
                is_truncated_point_module(self.downup, extended)[0])
            self.assertTrue(oracle_is_module(self.downup, extended))

    def test_g_action_scalars(self):
        self.assertEqual(
            [0, 0],
            g_action_scalars(self.downup, G, [[1, 1], [2, 1], [4, 1]]))
        self.assertEqual(
            [1], g_action_scalars(self.downup, G, [[0, 1], [1, 0]]))

        with self.assertRaises(PreconditionError):
            g_action_scalars(self.downup, G, [[0, 1]])
        with self.assertRaises(PreconditionError):
            g_action_scalars(self.downup, G + X, [[0, 1], [1, 0]])

    def test_is_g_torsionfree_truncated(self):
        self.assertTrue(is_g_torsionfree_truncated(
            self.downup, G, [[0, 1], [1, 0]]))
        self.assertFalse(is_g_torsionfree_truncated(
            self.downup, G, [[1, 1], [2, 1]]))

    def test_check_all_or_nothing(self):
        self.assertEqual((True, None), check_all_or_nothing([]))
        self.assertEqual((True, None), check_all_or_nothing([0, 0, 0]))
        self.assertEqual((True, None), check_all_or_nothing([1, -2, 3]))
        self.assertEqual((False, 2), check_all_or_nothing([1, 2, 0]))
        self.assertEqual((False, 1), check_all_or_nothing([0, 5]))

    def test_torsion_annihilates(self):
        self.assertTrue(torsion_annihilates(
            self.downup, G, [[1, 1], [2, 1], [4, 1]]))
        self.assertTrue(torsion_annihilates(
            self.free, G, [[0, 1], [1, 0]]))
        # Over the free algebra g need not act all or nothing
        self.assertFalse(torsion_annihilates(
            self.free, G, [[0, 1], [1, 0], [1, 0]]))

    def test_x_propagation_check(self):
        witness = HeisenbergWitness(G, X, Y, QQ(2))
        # Checked once there are at least 2 deg g - 1 points
        passed, scalars = x_propagation_check(
            self.downup, witness, [[0, 1], [1, 0], [0, 1]])
        self.assertFalse(passed)
        self.assertEqual([0, 1, 0], scalars)

        passed, scalars = x_propagation_check(
            self.downup, witness, [[1, 1], [2, 1], [4, 1]])
        self.assertTrue(passed)
        self.assertEqual([1, 2, 4], scalars)

        passed, scalars = x_propagation_check(
            self.downup, witness, [[0, 1], [1, 0]])
        self.assertIsNone(passed)
        self.assertEqual([], scalars)

    def test_quotient_functor_action(self):
        points = [[0, 1], [1, 0], [0, 1]]
        bold = bold_g(G, 2)
        self.assertEqual(
            [1, -2],
            quotient_functor_action(bold, points, [1, 1]))

        with self.assertRaises(PreconditionError):
            quotient_functor_action(bold, points[:2], [1, 1])
        with self.assertRaises(ValueError):
            quotient_functor_action(bold, points, [1])

    def test_quotient_functor_composition(self):
        points = [[1, 2], [1, -1], [3, 1], [0, 1], [1, 1]]
        bold = bold_g(G, 2)
        corner = QVElement.elementary(
            2, 1, 0, 1, NCPoly.word((0, 0, 1), 3))
        vector = [QQ(2), QQ(-1)]

        for first, second in ((bold, corner), (corner, bold)):
            product = qv_product(first, second)
            direct = quotient_functor_action(product, points, vector)
            inner = quotient_functor_action(second, points, vector)
            composed = quotient_functor_action(
                first, points, inner, block=second.degree)
            self.assertEqual(direct, composed)

    def test_evaluate(self):
        points = [[0, 1], [1, 0], [0, 1]]
        self.assertEqual(1, evaluate(G, points, 0))
        self.assertEqual(-2, evaluate(G, points, 1))


class TestPropagation(PyGradedTestCase):

    def setUp(self):
        self.downup = probe_downup(4, -4)
        self.quantum_plane = probe_quantum_plane(2)

    def test_single_point(self):
        state = PropagationState([[QQ(1), QQ(1)]])
        expansion = expand_state(self.quantum_plane, state)
        self.assertEqual(0, expansion.fiber_dimension)
        self.assertEqual(1, len(expansion.children))
        self.assertEqual(
            [[1, 1], [1, QQ(1, 2)]], expansion.children[0].points)
        self.assertFalse(expansion.sampled)

    def test_line_split(self):
        state = PropagationState([[QQ(1), QQ(0)]])
        expansion = expand_state(self.downup, state)
        self.assertEqual(1, expansion.fiber_dimension)
        point, line = expansion.children
        self.assertEqual('(1:0),(0:1)', point.format())
        self.assertTrue(line.generic)
        self.assertTrue(line.parameter_used)
        self.assertEqual('line', line.kind)
        self.assertEqual('(1:0),(1:(t))', line.format())

    def test_special_values(self):
        t = RATIONAL_FUNCTION.from_sympy(T)
        one = RATIONAL_FUNCTION.one
        state = PropagationState(
            [[one, one], [one, t]], RATIONAL_FUNCTION, True, 'line')
        expansion = expand_state(self.downup, state)

        # The generic fiber is empty, t = 1/2 gives the successor
        # of (1:1) in the quantum plane
        self.assertEqual([], expansion.children)
        self.assertIn(QQ(1, 2), expansion.special_values)
        formats = [special.format() for special in expansion.specials]
        self.assertIn('(1:1),(1:1/2)', formats)
        for special in expansion.specials:
            self.assertFalse(special.generic)

    def test_specialize_state(self):
        t = RATIONAL_FUNCTION.from_sympy(T)
        one = RATIONAL_FUNCTION.one
        state = PropagationState(
            [[one, t], [t, one]], RATIONAL_FUNCTION, True)
        special = specialize_state(state, QQ(0))
        self.assertEqual('(1:0),(0:1)', special.format())
        self.assertEqual('special', special.kind)

        state = PropagationState([[t, t]], RATIONAL_FUNCTION, True)
        self.assertIsNone(specialize_state(state, QQ(0)))

    def test_sampled_fiber(self):
        from numpy.random import default_rng
        free = probe_free(3)
        state = PropagationState([[QQ(1), QQ(0), QQ(0)]])
        expansion = expand_state(
            free, state, rng=default_rng(0), fiber_samples=2)
        self.assertTrue(expansion.sampled)
        self.assertEqual(2, expansion.fiber_dimension)
        self.assertLessEqual(3, len(expansion.children))

        with self.assertRaises(BudgetExceededError):
            expand_state(free, state, max_fiber_dim=1)

    def test_generic_algebra_keeps_parameter(self):
        presentation = probe_presentation(
            ['x', 'y', 'z'], ['x*y - t*y*x'], domain=RATIONAL_FUNCTION)
        state = PropagationState(
            [[RATIONAL_FUNCTION.one] * 3], RATIONAL_FUNCTION)
        expansion = expand_state(presentation, state)
        self.assertEqual([], expansion.special_values)
        self.assertEqual(1, expansion.fiber_dimension)
        self.assertTrue(expansion.sampled)

    def test_generic_seed(self):
        seed = generic_seed(3)
        self.assertEqual('(1:(t):(t^2))', PropagationState(
            [seed], RATIONAL_FUNCTION).format())

    def test_lambdas_alive(self):
        state = PropagationState([[QQ(1), QQ(1)], [QQ(2), QQ(1)]])
        self.assertFalse(lambdas_alive(self.downup, G, state))
        state = PropagationState([[QQ(0), QQ(1)], [QQ(1), QQ(0)]])
        self.assertTrue(lambdas_alive(self.downup, G, state))
        self.assertTrue(lambdas_alive(
            self.downup, G, PropagationState([[QQ(1), QQ(1)]])))
