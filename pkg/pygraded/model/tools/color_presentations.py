import logging
from itertools import product

from pygraded.model.core.exact_linalg import (
    as_matrix, kernel_basis, rank, reduced_rows, solve_affine, transpose)
from pygraded.model.core.scalars import format_scalar
from pygraded.model.objects.heisenberg_witness import HeisenbergWitness
from pygraded.model.objects.nc_poly import NCPoly, poly_mul
from pygraded.model.objects.presentation import Presentation
from pygraded.model.objects.quotient_cache import DEFAULT_BUDGET
from pygraded.model.tools.pbw import EnvelopingAlgebra
from pygraded.utilities import (
    BudgetExceededError, PreconditionError, log_time)

logger = logging.getLogger(__name__)


def n_l(algebra):
    """n_L = max{j : L_1^j != 0}"""
    return len(algebra.bracket_series())


def _theta_names(algebra):
    return [algebra.names[index] for index in algebra.generators]


def _theta_words(algebra, degree, budget):
    ngens = len(algebra.generators)
    count = ngens ** degree
    if count > budget:
        raise BudgetExceededError(count, budget)
    return list(product(range(ngens), repeat=degree))


def _evaluation_rows(enveloping, words):
    """PBW coordinates of the theta words, one row per word"""
    algebra = enveloping.algebra
    degree = len(words[0]) if words else 0
    rows = []
    for word in words:
        image = enveloping.normal_form(
            tuple(algebra.generators[index] for index in word))
        rows.append(enveloping.coordinates(image, degree))
    return rows


def _generated_rows(previous, ngens, degree, domain):
    """Rows spanning theta I_(d-1) + I_(d-1) theta over the words of
    length degree, with words indexed lexicographically"""
    size = ngens ** (degree - 1)
    rows = []
    for vector in previous:
        for letter in range(ngens):
            left = [domain.zero] * (size * ngens)
            right = [domain.zero] * (size * ngens)
            for index, value in enumerate(vector):
                left[letter * size + index] = value
                right[index * ngens + letter] = value
            rows += [left, right]
    return rows


@log_time(message='enveloping presentation')
def u_presentation(algebra, cap, budget=DEFAULT_BUDGET):
    """Presentation of U(L) on the degree one generators theta_i

    The ideal of relations in degree d is the kernel of the
    evaluation map from theta words of length d to the PBW basis of
    U(L)_d. Relations are the kernel vectors not already generated by
    the lower degree ideal, chosen greedily in reduced echelon order.

    Parameters
    ----------
    algebra: ColorLieAlgebra
    cap: int
        Largest relation degree, at least n_L + 1
    budget: int, optional
        Largest number of words evaluated in a single degree

    Returns
    -------
    presentation: Presentation
    """
    nl = n_l(algebra)
    if cap < nl + 1:
        raise PreconditionError(
            f"Degree cap {cap} is below n_L + 1 = {nl + 1}")

    enveloping = EnvelopingAlgebra(algebra)
    domain = algebra.domain
    ngens = len(algebra.generators)
    relations = []
    previous = []

    for degree in range(1, cap + 1):
        words = _theta_words(algebra, degree, budget)
        rows = _evaluation_rows(enveloping, words)
        monomials = enveloping.dim(degree)
        matrix = as_matrix(rows, domain, monomials)

        if rank(matrix) < monomials:
            raise PreconditionError(
                f"L is not generated in degree 1: theta words span "
                f"{rank(matrix)} of the {monomials} PBW monomials "
                f"in degree {degree}")

        ideal, _ = reduced_rows(
            as_matrix(kernel_basis(transpose(matrix)), domain, len(words)))

        span = _generated_rows(previous, ngens, degree, domain)
        current = rank(as_matrix(span, domain, len(words)))
        for vector in ideal:
            if current == len(ideal):
                break
            trial = span + [vector]
            if rank(as_matrix(trial, domain, len(words))) > current:
                span, current = trial, current + 1
                relations.append(NCPoly(
                    {word: value for word, value in zip(words, vector)},
                    domain))

        logger.debug(
            f"U(L) degree {degree}: {len(words)} words, "
            f"{monomials} PBW monomials, ideal dimension {len(ideal)}")
        previous = ideal

    return Presentation(
        _theta_names(algebra), relations, domain,
        name=f"U({algebra.name})" if algebra.name else 'U(L)')


def epsilon_symmetric(algebra):
    """The epsilon-symmetric algebra S_eps(L_1), with relations
    theta_i theta_j - omega_ij theta_j theta_i for i < j"""
    domain = algebra.domain
    relations = []
    for i, j in product(range(algebra.rank), repeat=2):
        if i < j:
            relations.append(NCPoly(
                {(i, j): domain.one, (j, i): -algebra.omega[i][j]},
                domain))
    return Presentation(
        _theta_names(algebra), relations, domain,
        name=f"S({algebra.name})" if algebra.name else 'S(L)')


def express_in_generators(algebra, vector, degree, budget=DEFAULT_BUDGET):
    """Write an element of L of total degree d, given by its
    coordinates in the basis, as a combination of theta words of
    length d

    Returns
    -------
    poly: NCPoly or None
        None when the element is not reached by theta words
    """
    enveloping = EnvelopingAlgebra(algebra)
    words = _theta_words(algebra, degree, budget)
    rows = _evaluation_rows(enveloping, words)
    target = enveloping.coordinates(
        NCPoly({(index,): value for index, value in enumerate(vector)},
               algebra.domain),
        degree)

    matrix = as_matrix(
        [list(column) for column in zip(*rows)], algebra.domain,
        len(words))
    solution, _ = solve_affine(matrix, target)
    if solution is None:
        return None
    return NCPoly(
        {word: value for word, value in zip(words, solution)},
        algebra.domain)


def _heisenberg_pair(algebra, nl):
    """First (theta_i, b) in basis order with b of total degree
    n_L - 1 and [theta_i, b] != 0"""
    for generator in algebra.generators:
        for index in range(algebra.dim):
            if algebra.total_degree(index) != nl - 1:
                continue
            if algebra.bracket(generator, index):
                return generator, index
    return None


def heisenberg_from_color(algebra, cap=None, budget=DEFAULT_BUDGET):
    """Extract the q'-Heisenberg normal element g = [x, y] of U(L),
    with x a generator, y homogeneous of total degree n_L - 1 and
    u = eps(|x|, |y|)

    Returns
    -------
    presentation: Presentation
        u_presentation(L, cap), cap defaulting to 2 n_L
    witness: HeisenbergWitness
        g = xy - u yx, x and y written in the generators of
        the presentation
    """
    nl = n_l(algebra)
    if nl < 2:
        raise PreconditionError(
            "n_L = 1: U(L) is the skew polynomial ring S_eps(L_1) "
            "(S_epsilon case), no Heisenberg element is needed")

    if cap is None:
        cap = 2 * nl
    presentation = u_presentation(algebra, cap, budget=budget)

    pair = _heisenberg_pair(algebra, nl)
    if pair is None:
        raise PreconditionError(
            f"No generator x and basis element y of total degree "
            f"{nl - 1} with [x,y] != 0")
    generator, index = pair

    x = NCPoly.generator(
        algebra.generators.index(generator), algebra.domain)
    y = express_in_generators(
        algebra, algebra.unit_vector(index), nl - 1, budget)
    if y is None:
        raise PreconditionError(
            f"'{algebra.names[index]}' is not generated in degree 1")

    u = algebra.epsilon(generator, index)
    g = poly_mul(x, y) - poly_mul(y, x).scale(u)

    logger.info(
        f"Heisenberg element from [{algebra.names[generator]},"
        f"{algebra.names[index]}] with u = "
        f"{format_scalar(u, algebra.domain)}: "
        f"g = {presentation.format(g)}")

    return presentation, HeisenbergWitness(g, x, y, u, algebra.domain)
