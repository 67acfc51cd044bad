import logging
import time

from numpy.random import default_rng
from traits.api import HasStrictTraits, Bool, Dict, Float, Int, Str

from pygraded.io.algebra_io import load_algebra
from pygraded.io.color_lie_io import load_color_lie
from pygraded.model.objects.quotient_cache import build_quotient_cache
from pygraded.model.tools.color_presentations import n_l, u_presentation

logger = logging.getLogger(__name__)


class GradedRunner(HasStrictTraits):
    """ Set parameters shared by every PyGraded command """

    #: Degree cap of quotient caches
    cap = Int(8)

    #: Largest number of words handled in a single degree
    budget = Int(200000)

    #: Number of random samples or seeds
    samples = Int(100)

    #: Seed of every random choice
    seed = Int(0)

    #: Toggles the rational function seed and lines through
    #: positive dimensional fibers
    generic = Bool(True)

    #: Number of random points taken from a sampled fiber
    fiber_samples = Int(3)

    #: Largest projective fiber dimension handled by sampling
    max_fiber_dim = Int(2)

    #: Toggles timing output in reports
    timing = Bool(False)

    #: Elapsed seconds per stage
    stage_times = Dict(Str, Float)

    def rng(self):
        """Fresh generator seeded with seed"""
        return default_rng(self.seed)

    @property
    def sampler_traits(self):
        return {
            'generic': self.generic,
            'fiber_samples': self.fiber_samples,
            'max_fiber_dim': self.max_fiber_dim
        }

    def timed(self, stage, func, *args, **kwargs):
        """Call func and record its elapsed time under stage"""
        start = time.time()
        result = func(*args, **kwargs)
        self.stage_times[stage] = (
            self.stage_times.get(stage, 0.0) + time.time() - start)
        return result

    def build_cache(self, presentation, cap=None):
        cap = self.cap if cap is None else cap
        logger.info(
            f"Building quotient cache of {presentation.name or 'A'} "
            f"up to degree {cap}")
        return self.timed(
            'quotient cache', build_quotient_cache, presentation, cap,
            budget=self.budget)

    def load_presentation(self, file_name):
        """Presentation from an algebra file, or the presentation of
        U(L) on its degree one generators from a color Lie file"""
        if file_name.endswith('.cl'):
            algebra = load_color_lie(file_name)
            cap = 2 * n_l(algebra)
            return self.timed(
                'enveloping presentation', u_presentation, algebra,
                cap, budget=self.budget)
        return load_algebra(file_name)
