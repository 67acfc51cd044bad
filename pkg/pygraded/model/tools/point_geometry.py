"""Truncated point modules as sequences of projective points.

Convention: x_j m_{i-1} = p^(i)_j m_i and a word acts rightmost letter
first, so the coefficient of w = x_{j_1} ... x_{j_e} on m_i is

    prod_{t=1..e} p^(i+t)_{j_{e+1-t}}

Every relation of degree e gives one multilinear constraint per window
of e consecutive points. Constraints are linear in the last point of a
window, which makes the fiber over a prefix a linear subspace.
"""
import logging

from pygraded.model.core.exact_linalg import (
    as_matrix, kernel_basis, rank_drop_values)
from pygraded.model.core.scalars import (
    RATIONAL, RATIONAL_FUNCTION, T, to_scalar, unify_domains,
    is_function_field, normalize_projective, specialize_vector,
    random_rational)
from pygraded.model.objects.truncated_point_module import format_points
from pygraded.utilities import PreconditionError, BudgetExceededError

logger = logging.getLogger(__name__)


class ProjLinearFiber:
    """Solution subspace for the next point of a truncated point
    module, spanned by basis"""

    def __init__(self, basis, rows, domain=RATIONAL):
        self.basis = [list(vector) for vector in basis]
        #: Constraint rows whose kernel is the fiber
        self.rows = rows
        self.domain = domain

    @property
    def empty(self):
        return not self.basis

    @property
    def projective_dimension(self):
        """-1 for the empty fiber, 0 for a single point"""
        return len(self.basis) - 1

    def points(self):
        return [normalize_projective(vector) for vector in self.basis]

    def contains(self, point):
        point = [to_scalar(value, self.domain) for value in point]
        for row in self.rows:
            total = self.domain.zero
            for entry, value in zip(row, point):
                total += entry * value
            if total:
                return False
        return True

    def __repr__(self):
        return (
            f"ProjLinearFiber(dimension={self.projective_dimension})")


def _points_domain(presentation, points):
    domains = [presentation.domain]
    for point in points:
        for value in point:
            if RATIONAL_FUNCTION.of_type(value) and not RATIONAL.of_type(
                    value):
                domains.append(RATIONAL_FUNCTION)
    return unify_domains(*domains)


def _convert_points(points, domain):
    return [[to_scalar(value, domain) for value in point]
            for point in points]


def word_coefficient(word, points, start, domain=RATIONAL):
    """Scalar by which the word maps m_start to m_{start+e}, where
    points[k] holds p^(k+1)"""
    degree = len(word)
    value = domain.one
    for t in range(1, degree + 1):
        value *= points[start + t - 1][word[degree - t]]
        if not value:
            break
    return value


def evaluate(poly, points, start, domain=RATIONAL):
    """Scalar of a homogeneous poly acting m_start -> m_{start+e}"""
    total = domain.zero
    for word, coefficient in poly.terms.items():
        total += to_scalar(coefficient, domain) * word_coefficient(
            word, points, start, domain)
    return total


def is_truncated_point_module(presentation, points):
    """Check every window constraint exactly

    Returns
    -------
    valid: bool
    violation: tuple or None
        (relation index, window start) of the first violated
        constraint
    """
    if any(not any(point) for point in points):
        raise PreconditionError("Points must be nonzero vectors")
    if any(len(point) != presentation.ngens for point in points):
        raise PreconditionError(
            f"Points must have {presentation.ngens} coordinates")

    domain = _points_domain(presentation, points)
    points = _convert_points(points, domain)
    length = len(points)

    for start in range(length):
        for index, relation in enumerate(presentation.relations):
            if start + relation.degree > length:
                continue
            if evaluate(relation, points, start, domain):
                return False, (index, start)

    return True, None


def fiber_rows(presentation, points, domain):
    """Linear constraints on p^(d+1) from every window ending at
    position d+1"""
    ngens = presentation.ngens
    length = len(points)
    rows = []
    for relation in presentation.relations:
        degree = relation.degree
        start = length + 1 - degree
        if start < 0:
            continue
        row = [domain.zero] * ngens
        for word, coefficient in relation.terms.items():
            # The last point of the window reads the first letter
            value = to_scalar(coefficient, domain) * word_coefficient(
                word[1:], points, start, domain)
            row[word[0]] += value
        if any(row):
            rows.append(row)
    return rows


def extension_fiber(presentation, points, domain=None):
    """Subspace of candidate points p^(d+1) extending points

    Returns
    -------
    fiber: ProjLinearFiber
    """
    domain = domain or _points_domain(presentation, points)
    points = _convert_points(points, domain)
    rows = fiber_rows(presentation, points, domain)
    basis = kernel_basis(as_matrix(rows, domain, presentation.ngens))
    return ProjLinearFiber(basis, rows, domain)


def g_action_scalars(presentation, g, points):
    """Scalars lambda_n, ..., lambda_d with g m_i = lambda_{i+n} m_{i+n}

    Raises
    ------
    PreconditionError
        When the sequence is shorter than deg g
    """
    if not g or not g.is_homogeneous:
        raise PreconditionError("g must be nonzero and homogeneous")
    n = g.degree
    length = len(points)
    if length < n:
        raise PreconditionError(
            f"Sequence of {length} points is shorter than deg g = {n}")

    domain = unify_domains(
        g.domain, _points_domain(presentation, points))
    points = _convert_points(points, domain)
    return [
        evaluate(g, points, start, domain)
        for start in range(length - n + 1)]


def is_g_torsionfree_truncated(presentation, g, points):
    """True iff g m_i != 0 for every i <= d - n"""
    return all(g_action_scalars(presentation, g, points))


def check_all_or_nothing(lambdas):
    """The lambda list must be entirely zero or entirely nonzero

    Returns
    -------
    passed: bool
    index: int or None
        First index where a zero and a nonzero scalar meet
    """
    for index in range(1, len(lambdas)):
        if bool(lambdas[index - 1]) != bool(lambdas[index]):
            return False, index
    return True, None


def torsion_annihilates(presentation, g, points):
    """A module that is not g-torsionfree must have gP = 0 in the
    truncated range, i.e. every lambda vanishes"""
    lambdas = g_action_scalars(presentation, g, points)
    if all(lambdas):
        return True
    return not any(lambdas)


def x_propagation_check(presentation, witness, points):
    """Scalars of x acting m_i -> m_{i+1} for 0 <= i <= d - 1 on a
    g-torsionfree module given by d points

    Only meaningful once d >= 2n - 1 with n = deg g; shorter sequences
    are not checked.

    Returns
    -------
    passed: bool or None
        None when the sequence is too short for the check to apply
    scalars: list
    """
    n = witness.g.degree
    if len(points) < 2 * n - 1:
        logger.debug(
            f"x-action check needs at least {2 * n - 1} points, "
            f"got {len(points)}")
        return None, []

    domain = unify_domains(
        witness.domain, _points_domain(presentation, points))
    converted = _convert_points(points, domain)
    scalars = [
        evaluate(witness.x, converted, start, domain)
        for start in range(len(points))]
    return all(scalars), scalars


def quotient_functor_action(element, points, vector, block=0):
    """Action of a quasi-Veronese element on the block
    (m_{rp}, ..., m_{rp+r-1}) of a truncated point module

    Entry a_{i,j} maps m_{rp+i} to m_{r(p+q)+j}, so the coefficient of
    m_{r(p+q)+j} in the result is sum_i a_{i,j}(m_{rp+i}) c_i.

    Returns
    -------
    coefficients: list
        Coefficients of m_{r(p+q)}, ..., m_{r(p+q)+r-1}
    """
    size = element.size
    if len(vector) != size:
        raise ValueError(f"Block vector must have {size} entries")

    last = size * (block + element.degree) + size - 1
    if last > len(points):
        raise PreconditionError(
            f"The module has no component m_{last}")

    domain = unify_domains(element.domain, RATIONAL)
    points = _convert_points(points, domain)
    result = []
    for j in range(size):
        total = domain.zero
        for i in range(size):
            entry = element[i, j]
            if entry and vector[i]:
                total += to_scalar(vector[i], domain) * evaluate(
                    entry, points, size * block + i, domain)
        result.append(total)
    return result


class PropagationState:
    """Prefix of a truncated point module during propagation"""

    __slots__ = ('points', 'domain', 'parameter_used', 'kind')

    def __init__(self, points, domain=RATIONAL, parameter_used=False,
                 kind='seed'):
        self.points = points
        self.domain = domain
        self.parameter_used = parameter_used
        self.kind = kind

    @property
    def length(self):
        return len(self.points)

    @property
    def generic(self):
        return is_function_field(self.domain)

    def format(self):
        return format_points(self.points, self.domain)


class Expansion:
    """Children of a propagation state together with the data the
    search reports"""

    def __init__(self):
        self.children = []
        self.specials = []
        self.special_values = []
        self.residual = 0
        self.fiber_dimension = None
        self.sampled = False


def specialize_state(state, value):
    """Substitute t = value in every point, or None when a point
    vanishes"""
    points = []
    for point in state.points:
        specialized = specialize_vector(point, value, state.domain)
        if specialized is None:
            return None
        points.append(normalize_projective(specialized))
    return PropagationState(points, RATIONAL, False, 'special')


def generic_seed(ngens):
    """The point (1:t:t^2:...) over QQ(t)"""
    return [
        to_scalar(T ** index, RATIONAL_FUNCTION) for index in range(ngens)]


def expand_state(presentation, state, rng=None, fiber_samples=3,
                 max_fiber_dim=2):
    """Children of a prefix

    A single point is followed directly. A projective line over QQ is
    split into its last basis point and the generic line b0 + t b1,
    unless a parameter is already in use. Other positive dimensional
    fibers are sampled and flagged. Over QQ(t), rational values of t
    where the constraint rank may drop are returned as specialised
    rational states.

    Raises
    ------
    BudgetExceededError
        When a fiber has projective dimension above max_fiber_dim
    """
    expansion = Expansion()
    domain = state.domain
    # The parameter t is reserved when the algebra itself lives over QQ(t)
    parametric = not is_function_field(presentation.domain)
    fiber = extension_fiber(presentation, state.points, domain)
    dimension = fiber.projective_dimension
    expansion.fiber_dimension = dimension

    if state.generic and parametric:
        values, residual = rank_drop_values(
            fiber.rows, domain, presentation.ngens)
        expansion.special_values = values
        expansion.residual = residual
        for value in values:
            special = specialize_state(state, value)
            if special is not None:
                expansion.specials.append(special)

    if fiber.empty:
        return expansion

    if dimension > max_fiber_dim:
        raise BudgetExceededError(
            dimension, max_fiber_dim, unit='projective fiber dimensions')

    def child(point, child_domain, parameter_used, kind):
        return PropagationState(
            _convert_points(state.points, child_domain)
            + [normalize_projective(point)],
            child_domain, parameter_used, kind)

    basis = fiber.basis
    if dimension == 0:
        expansion.children.append(
            child(basis[0], domain, state.parameter_used, 'point'))

    elif dimension == 1 and parametric and not state.generic \
            and not state.parameter_used:
        expansion.children.append(child(basis[1], domain, False, 'point'))
        t = to_scalar(T, RATIONAL_FUNCTION)
        line = [
            to_scalar(first, RATIONAL_FUNCTION)
            + t * to_scalar(second, RATIONAL_FUNCTION)
            for first, second in zip(basis[0], basis[1])]
        expansion.children.append(
            child(line, RATIONAL_FUNCTION, True, 'line'))

    else:
        expansion.sampled = True
        for vector in basis:
            expansion.children.append(
                child(vector, domain, state.parameter_used, 'sample'))
        if rng is not None:
            for _ in range(fiber_samples):
                combination = [domain.zero] * presentation.ngens
                for vector in basis:
                    weight = to_scalar(random_rational(rng), domain)
                    combination = [
                        total + weight * value
                        for total, value in zip(combination, vector)]
                if any(combination):
                    expansion.children.append(child(
                        combination, domain, state.parameter_used,
                        'sample'))

    return expansion


def lambdas_alive(presentation, g, state):
    """Whether every complete g-window of the prefix has a nonzero
    scalar. Over QQ(t) the scalars are compared to the zero function"""
    if state.length < g.degree:
        return True
    return all(g_action_scalars(presentation, g, state.points))
