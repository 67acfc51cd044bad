from unittest import TestCase

from pygraded.io.algebra_io import load_algebra
from pygraded.pygraded_runner import GradedRunner
from pygraded.tests.fixtures import downup_4_4_path, heisenberg_2_path
from pygraded.utilities import DegreeCapError


class TestGradedRunner(TestCase):

    def setUp(self):
        self.runner = GradedRunner(cap=4)

    def test_defaults(self):
        runner = GradedRunner()
        self.assertEqual(8, runner.cap)
        self.assertEqual(200000, runner.budget)
        self.assertEqual(100, runner.samples)
        self.assertEqual(0, runner.seed)
        self.assertTrue(runner.generic)
        self.assertFalse(runner.timing)
        self.assertEqual(
            {'generic': True, 'fiber_samples': 3, 'max_fiber_dim': 2},
            runner.sampler_traits)

    def test_rng(self):
        self.assertEqual(
            self.runner.rng().integers(1000),
            self.runner.rng().integers(1000))

    def test_timed(self):
        self.assertEqual(6, self.runner.timed('product', max, 2, 6))
        self.runner.timed('product', max, 2, 6)
        self.assertEqual(['product'], list(self.runner.stage_times))
        self.assertGreaterEqual(self.runner.stage_times['product'], 0)

    def test_build_cache(self):
        presentation = self.runner.load_presentation(downup_4_4_path)
        cache = self.runner.build_cache(presentation)
        self.assertEqual([1, 2, 4, 6, 9], cache.dims())
        self.assertIn('quotient cache', self.runner.stage_times)

        with self.assertRaises(DegreeCapError):
            cache.check_degree(5)

        cache = self.runner.build_cache(presentation, cap=2)
        self.assertEqual([1, 2, 4], cache.dims())

    def test_load_presentation(self):
        enveloping = self.runner.load_presentation(heisenberg_2_path)
        self.assertEqual(2, enveloping.ngens)
        self.assertEqual([3, 3], enveloping.relation_degrees)
        self.assertIn('enveloping presentation', self.runner.stage_times)

        self.assertEqual(
            load_algebra(downup_4_4_path),
            self.runner.load_presentation(downup_4_4_path))
