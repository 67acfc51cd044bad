"""Seeded random walks through extension fibers, and the point set
comparisons and stabilization evidence built on them."""
import logging

import numpy as np
from sympy import QQ
from traits.api import HasStrictTraits, Bool, Instance, Int

from pygraded.model.core.scalars import format_scalar, rational_roots
from pygraded.model.objects.presentation import Presentation
from pygraded.model.objects.run_report import Verdict
from pygraded.model.objects.truncated_point_module import (
    TruncatedPointModule)
from pygraded.utilities import PreconditionError, SamplingError, log_time

from .point_geometry import (
    PropagationState, expand_state, extension_fiber, specialize_state,
    is_truncated_point_module, check_all_or_nothing, g_action_scalars)
from .torsionfree_search import random_point, coordinate_points

logger = logging.getLogger(__name__)


class PointSampler(HasStrictTraits):
    """Draws truncated point modules of a fixed number of points by a
    random walk: every step picks uniformly among the children and the
    special specialisations of the current prefix"""

    #: Algebra to sample from
    presentation = Instance(Presentation)

    #: Numpy random generator shared by every draw
    rng = Instance(np.random.Generator)

    #: Allow generic QQ(t) lines through one dimensional fibers
    generic = Bool(True)

    #: Random combinations drawn from higher dimensional fibers
    fiber_samples = Int(3)

    #: Largest projective fiber dimension handled
    max_fiber_dim = Int(2)

    #: Restarts allowed per requested module
    attempts_per_sample = Int(50)

    def _first_state(self):
        presentation = self.presentation
        ngens = presentation.ngens
        domain = presentation.domain
        draw = self.rng.integers(0, 4)
        if draw == 0:
            points = coordinate_points(ngens, domain)
            point = points[int(self.rng.integers(0, ngens))]
        else:
            point = random_point(self.rng, ngens, domain)
        return PropagationState([point], domain, False, 'seed')

    def _finalize(self, state, avoid):
        """Rational module from a finished walk, or None"""
        if state.generic:
            excluded = set(avoid)
            for point in state.points:
                for value in point:
                    roots, _ = rational_roots(value, state.domain)
                    excluded.update(roots)
            for _ in range(20):
                value = QQ(int(self.rng.integers(-50, 51)))
                if value in excluded:
                    continue
                special = specialize_state(state, value)
                if special is not None:
                    state = special
                    break
            else:
                return None

        valid, _ = is_truncated_point_module(
            self.presentation, state.points)
        if not valid:
            return None
        return TruncatedPointModule(
            self.presentation, state.points, state.domain)

    def walk(self, npoints):
        """One attempt, returning a module or None at a dead end"""
        state = self._first_state()
        special_values = set()
        while state.length < npoints:
            expansion = expand_state(
                self.presentation, state, rng=self.rng,
                fiber_samples=self.fiber_samples,
                max_fiber_dim=self.max_fiber_dim)
            special_values.update(expansion.special_values)
            children = expansion.children
            if not self.generic:
                children = [child for child in children if not child.generic]
            options = expansion.specials + children
            if not options:
                return None
            state = options[int(self.rng.integers(0, len(options)))]
        return self._finalize(state, special_values)

    def sample(self, npoints):
        """Draw one module of npoints points

        Raises
        ------
        SamplingError
            When every attempt ends in an empty fiber
        """
        for _ in range(self.attempts_per_sample):
            module = self.walk(npoints)
            if module is not None:
                return module
        raise SamplingError(
            f"No truncated point module with {npoints} points over "
            f"{self.presentation.name or 'the algebra'} after "
            f"{self.attempts_per_sample} attempts")


def sample_modules(presentation, npoints, count, rng, **traits):
    """Draw count truncated point modules of npoints points"""
    if npoints < 1:
        raise PreconditionError("Point modules need at least one point")
    sampler = PointSampler(presentation=presentation, rng=rng, **traits)
    modules = [sampler.sample(npoints) for _ in range(count)]
    logger.debug(
        f"Sampled {count} modules of {npoints} points over "
        f"{presentation.name}")
    return modules


def _membership(source, target, modules):
    """Modules of source that fail the constraints of target"""
    failures = []
    for module in modules:
        valid, _ = is_truncated_point_module(target, module.points)
        if not valid:
            failures.append(module)
    logger.debug(
        f"{len(failures)} of {len(modules)} modules of {source.name} "
        f"fail over {target.name}")
    return failures


@log_time(message='compare')
def compare_point_sets(first, second, npoints, count, rng, **traits):
    """Sample modules of each algebra and check membership in the other

    Returns
    -------
    verdicts: list of Verdict
        One per direction; failing samples are counted and the first is
        shown
    """
    if first.ngens != second.ngens:
        raise PreconditionError(
            f"Generator counts differ: {first.ngens} and {second.ngens}")

    verdicts = []
    for source, target, label in (
            (first, second, 'first in second'),
            (second, first, 'second in first')):
        modules = sample_modules(source, npoints, count, rng, **traits)
        failures = _membership(source, target, modules)
        detail = f"{len(failures)} of {count} samples outside"
        if failures:
            detail += f", e.g. {failures[0].format()}"
        verdicts.append(Verdict(
            check=f"point modules {label}",
            passed=not failures,
            detail=detail))
    return verdicts


@log_time(message='stabilize')
def stabilization_check(presentation, start, stop, count, rng, **traits):
    """For sampled modules of every length d in [start, stop) count the
    extension fibers by type and check that shifts stay valid

    Returns
    -------
    verdicts: list of Verdict
    counts: dict
        Per length, the number of singleton, empty and positive
        dimensional fibers
    """
    if start < 1 or stop < start:
        raise PreconditionError(
            f"Invalid length range [{start}, {stop})")

    verdicts = []
    counts = {}
    for npoints in range(start, stop):
        singleton = empty = positive = 0
        shift_failures = []
        for module in sample_modules(
                presentation, npoints, count, rng, **traits):
            dimension = extension_fiber(
                presentation, module.points).projective_dimension
            if dimension == 0:
                singleton += 1
            elif dimension < 0:
                empty += 1
            else:
                positive += 1
            if module.length > 1:
                valid, _ = is_truncated_point_module(
                    presentation, module.shift().points)
                if not valid:
                    shift_failures.append(module)

        counts[npoints] = {
            'singleton': singleton, 'empty': empty, 'positive': positive}
        verdicts.append(Verdict(
            check=f"fibers over {npoints} points",
            passed=positive == 0,
            detail=(
                f"{singleton} singleton, {empty} empty, "
                f"{positive} positive dimensional")))
        verdicts.append(Verdict(
            check=f"shifts of {npoints} points",
            passed=not shift_failures,
            detail=(
                f"{count - len(shift_failures)} of {count} valid" + (
                    f", e.g. {shift_failures[0].format()} fails"
                    if shift_failures else ''))))

    return verdicts, counts


def g_action_check(presentation, g, npoints, count, rng, **traits):
    """Sample modules and check that every lambda list is all zero or
    all nonzero

    Returns
    -------
    verdicts: list of Verdict
    torsionfree: int
        Number of samples with nonzero lambdas
    """
    if npoints < g.degree:
        raise PreconditionError(
            f"{npoints} points are fewer than deg g = {g.degree}")

    verdicts = []
    torsionfree = 0
    for module in sample_modules(presentation, npoints, count, rng,
                                 **traits):
        lambdas = g_action_scalars(presentation, g, module.points)
        passed, index = check_all_or_nothing(lambdas)
        if all(lambdas):
            torsionfree += 1
        if not passed:
            verdicts.append(Verdict(
                check=f"all-or-nothing {module.format()}",
                passed=False,
                detail=f"mixed at lambda_{index + g.degree}: " + ', '.join(
                    format_scalar(value, module.domain)
                    for value in lambdas)))

    verdicts.append(Verdict(
        check='all-or-nothing',
        passed=not verdicts,
        detail=(
            f"{count} samples, {torsionfree} torsionfree, "
            f"{count - torsionfree} annihilated")))
    return verdicts, torsionfree
