"""Depth first search for truncated g-torsionfree point modules.

Seeds are the coordinate points, random rational points and the generic
point (1:t:t^2:...). Every prefix is extended through its extension
fiber; branches where some lambda vanishes are pruned. Over QQ(t) the
rational values of t where the constraint rank may drop are branched on
separately, so a line of candidate points is covered by its generic
member and finitely many special members.
"""
import logging

import networkx as nx
import numpy as np
from sympy import QQ
from traits.api import (
    HasStrictTraits, Any, Bool, Dict, Instance, Int, List)

from pygraded.model.core.scalars import (
    RATIONAL, RATIONAL_FUNCTION, format_scalar, to_scalar,
    normalize_projective, random_rational, rational_roots)
from pygraded.model.objects.heisenberg_witness import HeisenbergWitness
from pygraded.model.objects.nc_poly import NCPoly
from pygraded.model.objects.quotient_cache import QuotientCache
from pygraded.model.objects.run_report import Verdict
from pygraded.model.objects.truncated_point_module import (
    TruncatedPointModule)
from pygraded.utilities import (
    PreconditionError, BudgetExceededError, log_time)

from .normal_elements import is_normal, find_heisenberg_witness
from .point_geometry import (
    PropagationState, expand_state, generic_seed, lambdas_alive,
    specialize_state, g_action_scalars, is_truncated_point_module,
    is_g_torsionfree_truncated, x_propagation_check)

logger = logging.getLogger(__name__)

#: Number of special parameter values listed in a summary
SHOWN_SPECIAL_VALUES = 5


def coordinate_points(ngens, domain=RATIONAL):
    points = []
    for index in range(ngens):
        point = [domain.zero] * ngens
        point[index] = domain.one
        points.append(point)
    return points


def random_point(rng, ngens, domain=RATIONAL):
    """Random nonzero rational point, normalised projectively"""
    while True:
        point = [
            to_scalar(random_rational(rng), domain) for _ in range(ngens)]
        if any(point):
            return normalize_projective(point)


def specialization_candidates(limit=40):
    """0, 1, -1, 2, -2, 1/2, -1/2, 3, ... without repetition"""
    values = [QQ(0)]
    size = 1
    while len(values) < limit:
        for numerator in range(1, size + 1):
            for value in (QQ(size, numerator), QQ(numerator, size)):
                for signed in (value, -value):
                    if signed not in values:
                        values.append(signed)
        size += 1
    return values[:limit]


def rationalize_state(presentation, g, state, avoid=()):
    """Specialise a generic prefix at a rational t0 keeping it a valid
    g-torsionfree module. Returns (state, t0) or (None, None)"""
    if not state.generic:
        return state, None

    excluded = set(avoid)
    for value in g_action_scalars(presentation, g, state.points):
        roots, _ = rational_roots(value, state.domain)
        excluded.update(roots)

    for value in specialization_candidates():
        if value in excluded:
            continue
        special = specialize_state(state, value)
        if special is None:
            continue
        valid, _ = is_truncated_point_module(presentation, special.points)
        if valid and is_g_torsionfree_truncated(
                presentation, g, special.points):
            return special, value

    return None, None


class TorsionfreeResult(HasStrictTraits):
    """Outcome of a torsionfree search, found or exhausted"""

    #: Truncated g-torsionfree module of the target length, if any
    module = Instance(TruncatedPointModule)

    #: Target module length L; the module has L - 1 points
    length = Int

    #: Number of distinct seeds propagated
    seeds_tried = Int

    #: Count of fibers met per projective dimension (-1 is empty)
    fiber_dimensions = Dict(Int, Int)

    #: Special parameter values branched on over QQ(t)
    special_values = List

    #: Degree of rank drop factors without rational roots
    residual_degree = Int

    #: Some positive dimensional fiber was sampled, not enumerated
    sampled = Bool

    #: Parameter value used to rationalise a generic module
    specialized_at = Any

    #: x-action scalars on the found module
    x_scalars = List

    #: Whether every x-action scalar is nonzero, None when the module
    #: is too short for the check to apply
    x_propagation = Any

    #: Search tree, one node per propagated prefix
    tree = Instance(nx.DiGraph)

    @property
    def found(self):
        return self.module is not None

    def summary_lines(self):
        lines = [f"length: {self.length}"]
        if self.found:
            lines.append(f"result: found {self.module.format()}")
            if self.specialized_at is not None:
                lines.append(
                    "specialized: t = "
                    f"{format_scalar(self.specialized_at)}")
            if self.x_propagation is None:
                lines.append("x-action check: not applicable")
        else:
            lines.append("result: empty")
        lines.append(f"seeds: {self.seeds_tried}")
        lines.append(
            "fiber dimensions: " + ', '.join(
                f"{dimension}:{count}" for dimension, count
                in sorted(self.fiber_dimensions.items())))
        lines.append(f"special values: {self._special_summary()}")
        if self.residual_degree:
            lines.append(
                f"irrational residual degree: {self.residual_degree}")
        lines.append(
            f"exhaustive: {'no (sampled)' if self.sampled else 'yes'}")
        lines.append(f"nodes: {self.tree.number_of_nodes()}")
        return lines

    def _special_summary(self, shown=SHOWN_SPECIAL_VALUES):
        if not self.special_values:
            return 'none'
        text = ', '.join(
            format_scalar(value) for value in self.special_values[:shown])
        hidden = len(self.special_values) - shown
        if hidden > 0:
            text += f", ... ({len(self.special_values)} in total)"
        return text

    def x_propagation_verdict(self):
        """Verdict on the x-action scalars of a found module, or None
        when there is nothing to check"""
        if not self.found or self.x_propagation is None:
            return None
        detail = ', '.join(
            format_scalar(value, self.module.domain)
            for value in self.x_scalars)
        return Verdict(
            check='x-action nonzero on the found module',
            passed=self.x_propagation, detail=detail)


class TorsionfreeSearch(HasStrictTraits):
    """Search for a truncated g-torsionfree point module of a given
    module length"""

    #: Quotient cache of the algebra
    cache = Instance(QuotientCache)

    #: Homogeneous normal element
    g = Instance(NCPoly)

    #: Module length L, i.e. L - 1 points
    length = Int(3)

    #: Number of random rational seeds
    samples = Int(10)

    #: Seed of the random generator
    seed = Int(0)

    #: Include the generic seed (1:t:t^2:...) over QQ(t)
    generic = Bool(True)

    #: Random combinations drawn from a sampled fiber
    fiber_samples = Int(3)

    #: Largest projective fiber dimension handled
    max_fiber_dim = Int(2)

    #: Largest number of prefixes propagated
    max_nodes = Int(20000)

    #: Witness found while checking preconditions
    witness = Instance(HeisenbergWitness)

    @property
    def presentation(self):
        return self.cache.presentation

    @property
    def npoints(self):
        return self.length - 1

    def check_preconditions(self):
        """g must be a q'-Heisenberg normal element and the sequence
        must be long enough for g to act

        Raises
        ------
        PreconditionError
        """
        g = self.g
        if not g or not g.is_homogeneous:
            raise PreconditionError("g must be nonzero and homogeneous")
        if self.cache.is_zero(g):
            raise PreconditionError("g vanishes in the algebra")
        if self.npoints < g.degree:
            raise PreconditionError(
                f"Module length {self.length} is below deg g + 1 = "
                f"{g.degree + 1}")
        if not is_normal(self.cache, g):
            raise PreconditionError("g is not a normal element")

        rng = np.random.default_rng(self.seed)
        witness = find_heisenberg_witness(self.cache, g, rng=rng)
        if witness is None:
            raise PreconditionError(
                "No q'-Heisenberg display g = xy - uyx was found")
        self.witness = witness

    def seeds(self, rng):
        presentation = self.presentation
        ngens = presentation.ngens
        domain = presentation.domain

        seeds, keys = [], set()

        def add(point, seed_domain, parameter_used):
            key = tuple(point)
            if key not in keys:
                keys.add(key)
                seeds.append(PropagationState(
                    [point], seed_domain, parameter_used, 'seed'))

        for point in coordinate_points(ngens, domain):
            add(point, domain, False)
        for _ in range(self.samples):
            add(random_point(rng, ngens, domain), domain, False)
        if self.generic and domain == RATIONAL and ngens > 1:
            add(normalize_projective(generic_seed(ngens)),
                RATIONAL_FUNCTION, True)
        return seeds

    @log_time(message='torsionfree search')
    def run(self):
        """Run the depth first search

        Returns
        -------
        result: TorsionfreeResult

        Raises
        ------
        PreconditionError, BudgetExceededError
        """
        self.check_preconditions()
        presentation = self.presentation
        g = self.g
        rng = np.random.default_rng(self.seed)

        tree = nx.DiGraph()
        result = TorsionfreeResult(length=self.length, tree=tree)
        special_values = set()

        def add_node(state, parent=None):
            node = tree.number_of_nodes()
            if node >= self.max_nodes:
                raise BudgetExceededError(
                    node + 1, self.max_nodes, unit='search nodes')
            tree.add_node(
                node, points=state.format(), kind=state.kind,
                generic=state.generic, status='open')
            if parent is not None:
                tree.add_edge(parent, node)
            return node

        seeds = self.seeds(rng)
        for seed_state in seeds:
            result.seeds_tried += 1
            logger.debug(f"Seed {seed_state.format()}")
            stack = [(seed_state, add_node(seed_state))]

            while stack:
                state, node = stack.pop()

                if not lambdas_alive(presentation, g, state):
                    tree.nodes[node]['status'] = 'pruned'
                    continue

                if state.length == self.npoints:
                    found, value = rationalize_state(
                        presentation, g, state, special_values)
                    if found is None:
                        tree.nodes[node]['status'] = 'dead'
                        continue
                    tree.nodes[node]['status'] = 'found'
                    self._finish(result, found, value, special_values)
                    return result

                expansion = expand_state(
                    presentation, state, rng=rng,
                    fiber_samples=self.fiber_samples,
                    max_fiber_dim=self.max_fiber_dim)

                dimension = expansion.fiber_dimension
                result.fiber_dimensions[dimension] = (
                    result.fiber_dimensions.get(dimension, 0) + 1)
                result.residual_degree += expansion.residual
                result.sampled = result.sampled or expansion.sampled
                special_values.update(expansion.special_values)

                if expansion.special_values:
                    logger.debug(
                        f"Special values at {state.format()}: " + ', '.join(
                            format_scalar(value)
                            for value in expansion.special_values))

                options = expansion.specials + expansion.children
                if not options:
                    tree.nodes[node]['status'] = 'dead'
                    continue

                tree.nodes[node]['status'] = 'expanded'
                for child in reversed(options):
                    stack.append((child, add_node(child, node)))

        self._finish(result, None, None, special_values)
        logger.info(
            f"No g-torsionfree module of length {self.length} found from "
            f"{result.seeds_tried} seeds")
        return result

    def _finish(self, result, state, value, special_values):
        result.special_values = sorted(special_values)
        if state is None:
            return
        module = TruncatedPointModule(
            self.presentation, state.points, state.domain)
        result.module = module
        result.specialized_at = value
        passed, scalars = x_propagation_check(
            self.presentation, self.witness, module.points)
        result.x_propagation = passed
        result.x_scalars = scalars
        logger.info(
            f"Found g-torsionfree module {module.format()} of length "
            f"{self.length}")


def torsionfree_search(cache, g, length, **traits):
    """Functional entry point around TorsionfreeSearch"""
    search = TorsionfreeSearch(cache=cache, g=g, length=length, **traits)
    return search.run()
