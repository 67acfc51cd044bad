from unittest import TestCase

from pygraded.model.core.scalars import RATIONAL_FUNCTION
from pygraded.model.objects.nc_poly import NCPoly
from pygraded.model.objects.presentation import Presentation, free_algebra
from pygraded.tests.probe_classes.algebras import (
    probe_downup, probe_commutative_plane)


class TestPresentation(TestCase):

    def setUp(self):
        self.presentation = probe_downup(4, -4)

    def test_init(self):
        self.assertEqual(2, self.presentation.ngens)
        self.assertEqual([3, 3], self.presentation.relation_degrees)
        self.assertEqual(3, self.presentation.max_relation_degree)
        self.assertEqual(2, len(self.presentation.relations_of_degree(3)))
        self.assertEqual([], self.presentation.relations_of_degree(2))

    def test_validation(self):
        with self.assertRaises(ValueError):
            Presentation(['x', 'x'])
        with self.assertRaises(ValueError):
            Presentation([])
        with self.assertRaises(ValueError):
            Presentation(['x', 'y'], [NCPoly.generator(0)])
        with self.assertRaises(ValueError):
            Presentation(
                ['x', 'y'],
                [NCPoly({(0, 1): 1, (0,): 1})])
        with self.assertRaises(ValueError):
            Presentation(['x'], [NCPoly.word((0, 1))])
        with self.assertRaises(ValueError):
            Presentation(['x'], [NCPoly.zero()])

    def test_domain_promotion(self):
        relation = NCPoly(
            {(0, 1): RATIONAL_FUNCTION.one}, RATIONAL_FUNCTION)
        presentation = Presentation(['x', 'y'], [relation])
        self.assertEqual(RATIONAL_FUNCTION, presentation.domain)

    def test_parse_format(self):
        poly = self.presentation.parse('x*y - 2*y*x')
        self.assertEqual('x*y - 2*y*x', self.presentation.format(poly))

    def test_json(self):
        data = self.presentation.to_json()
        self.assertEqual('downup_4_-4', data['name'])
        self.assertEqual(['x', 'y'], data['generators'])
        self.assertEqual('rational', data['field'])
        self.assertEqual(
            ['x*x*y - 4*x*y*x + 4*y*x*x', 'x*y*y - 4*y*x*y + 4*y*y*x'],
            data['relations'])
        self.assertEqual(
            self.presentation, Presentation.from_json(data))

    def test_text(self):
        text = self.presentation.to_text()
        self.assertIn('generators: x, y', text)
        self.assertEqual(self.presentation, Presentation.from_text(text))

    def test_free_algebra(self):
        free = free_algebra(['a', 'b', 'c'])
        self.assertEqual(3, free.ngens)
        self.assertEqual([], free.relations)
        self.assertNotEqual(free, probe_commutative_plane())
