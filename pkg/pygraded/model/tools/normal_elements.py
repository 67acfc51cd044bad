"""Normal elements, the automorphism nu_g and q'-Heisenberg checks.

A homogeneous g of degree n is normal when gA = Ag. Since the algebras
are generated in degree 1 the check is performed in degree n + 1, where
g A_1 and A_1 g must span the same subspace of A_{n+1}. The
automorphism nu_g is then determined on A_1 by nu_g(a) g = g a.
"""
import logging

from pygraded.model.core.exact_linalg import (
    as_matrix, rank, solve_affine)
from pygraded.model.core.scalars import (
    to_scalar, format_scalar, random_rational)
from pygraded.model.objects.heisenberg_witness import (
    HeisenbergWitness, NuAutomorphism)
from pygraded.model.objects.nc_poly import NCPoly, poly_mul, poly_power
from pygraded.model.objects.run_report import Verdict
from pygraded.utilities import PreconditionError

logger = logging.getLogger(__name__)


def _check_homogeneous(g):
    if not g or not g.is_homogeneous:
        raise PreconditionError(
            "g must be a nonzero homogeneous element")


def _generator_products(cache, g):
    """Coordinates of g x_j and x_j g in A_{n+1} for every generator"""
    degree = g.degree + 1
    cache.check_degree(degree)
    left, right = [], []
    for index in range(cache.ngens):
        generator = NCPoly.generator(index, cache.domain)
        left.append(cache.coordinates(poly_mul(g, generator), degree))
        right.append(cache.coordinates(poly_mul(generator, g), degree))
    return left, right


def is_normal(cache, g):
    """Whether g A_1 and A_1 g span the same subspace of A_{n+1}

    Parameters
    ----------
    cache: QuotientCache
    g: NCPoly
        Homogeneous element with deg g + 1 <= cap

    Returns
    -------
    normal: bool
    """
    _check_homogeneous(g)
    left, right = _generator_products(cache, g)
    if cache.dim(g.degree + 1) == 0:
        return True

    domain = cache.domain
    left_rank = rank(as_matrix(left, domain))
    right_rank = rank(as_matrix(right, domain))
    joint_rank = rank(as_matrix(left + right, domain))

    logger.debug(
        f"is_normal: rank gA_1 = {left_rank}, rank A_1g = {right_rank}, "
        f"joint rank = {joint_rank}")

    return left_rank == right_rank == joint_rank


def nu_automorphism(cache, g):
    """Solve nu_g(x_j) g = g x_j for the image of every generator

    Raises
    ------
    PreconditionError
        When g is not normal, or the solution is not unique (g is not
        regular in this degree)
    """
    _check_homogeneous(g)
    left, right = _generator_products(cache, g)
    domain = cache.domain

    # Column i holds the coordinates of x_i g
    columns = as_matrix(
        [list(row) for row in zip(*right)], domain, cache.ngens)

    matrix = [[domain.zero] * cache.ngens for _ in range(cache.ngens)]
    for index, target in enumerate(left):
        solution, kernel = solve_affine(columns, target)
        if solution is None:
            raise PreconditionError(
                "g is not normal: g x_j is not in A_1 g for generator "
                f"{index}")
        if kernel:
            raise PreconditionError(
                "nu_g is not unique: right multiplication by g is not "
                "injective on A_1")
        for row in range(cache.ngens):
            matrix[row][index] = solution[row]

    try:
        return NuAutomorphism(matrix, domain)
    except ValueError as e:
        raise PreconditionError(f"nu_g is not invertible: {e}") from e


def regular_up_to(cache, g):
    """Injectivity of left and right multiplication by g from A_d to
    A_{d+n} for every d <= cap - n

    Returns
    -------
    regular: bool
    degree: int
        First degree where injectivity fails, or the last degree
        checked
    """
    _check_homogeneous(g)
    n = g.degree
    domain = cache.domain
    last = cache.cap - n
    for degree in range(last + 1):
        words = cache.basis(degree)
        if not words:
            continue
        for side in ('left', 'right'):
            images = []
            for word in words:
                element = NCPoly.word(word, domain=domain)
                product = (
                    poly_mul(g, element) if side == 'left'
                    else poly_mul(element, g))
                images.append(cache.coordinates(product, degree + n))
            if rank(as_matrix(images, domain, cache.dim(degree + n))) \
                    < len(words):
                logger.debug(
                    f"{side} multiplication by g not injective on "
                    f"A_{degree}")
                return False, degree
    return True, last


def is_q_heisenberg(cache, witness):
    """Check the defining identities of a q'-Heisenberg normal element

    Parameters
    ----------
    cache: QuotientCache
    witness: HeisenbergWitness

    Returns
    -------
    passed: bool
    verdicts: list of Verdict
        One verdict per clause: the display, x g = u g x, g y = u y g,
        normality and regularity up to the cap
    """
    g, x, y, u = witness.g, witness.x, witness.y, witness.u
    n = witness.n
    cache.check_degree(max(n + 1, 2 * n - 1))

    verdicts = []

    verdicts.append(Verdict(
        check='display g = xy - uyx',
        passed=cache.is_zero(g - witness.display)))

    verdicts.append(Verdict(
        check='xg = ugx',
        passed=cache.is_zero(
            poly_mul(x, g) - poly_mul(g, x).scale(u))))

    verdicts.append(Verdict(
        check='gy = uyg',
        passed=cache.is_zero(
            poly_mul(g, y) - poly_mul(y, g).scale(u))))

    verdicts.append(Verdict(
        check='normal',
        passed=is_normal(cache, g),
        detail=f"verified at degree {n + 1}"))

    regular, degree = regular_up_to(cache, g)
    verdicts.append(Verdict(
        check='regular',
        passed=regular,
        detail=(f"regular up to degree {degree}" if regular
                else f"multiplication by g not injective on A_{degree}")))

    passed = all(verdict.passed for verdict in verdicts)
    logger.info(
        f"q'-Heisenberg check with u = "
        f"{format_scalar(u, witness.domain)}: "
        f"{'passed' if passed else 'failed'}")

    return passed, verdicts


def _u_candidates(cache, g):
    """Finite candidate set for u: +-1, coefficients of the relations
    and of g, their negatives and inverses"""
    domain = cache.domain
    values = [domain.one, -domain.one]
    sources = list(cache.presentation.relations) + [g]
    for poly in sources:
        for _, value in poly.items():
            values += [value, -value, domain.one / value, -domain.one / value]

    candidates = []
    for value in values:
        if value and value not in candidates:
            candidates.append(value)
    return candidates


def _x_candidates(cache, rng=None, random_x=0):
    domain = cache.domain
    candidates = [
        NCPoly.generator(index, domain) for index in range(cache.ngens)]
    if rng is not None:
        for _ in range(random_x):
            candidates.append(NCPoly({
                (index,): random_rational(rng)
                for index in range(cache.ngens)}, domain))
    return [candidate for candidate in candidates if candidate]


def solve_display(cache, g, x, u):
    """Solve g = xy - uyx in A for y in A_{n-1}

    Returns
    -------
    y: NCPoly or None
    """
    n = g.degree
    domain = cache.domain
    words = cache.basis(n - 1)
    if not words:
        return None

    columns = []
    for word in words:
        element = NCPoly.word(word, domain=domain)
        image = poly_mul(x, element) - poly_mul(element, x).scale(u)
        columns.append(cache.coordinates(image, n))

    matrix = as_matrix(
        [list(row) for row in zip(*columns)], domain, len(words))
    solution, _ = solve_affine(matrix, cache.coordinates(g, n))
    if solution is None or not any(solution):
        return None

    return NCPoly(
        {word: value for word, value in zip(words, solution)}, domain)


def find_heisenberg_witness(cache, g, rng=None, random_x=2):
    """Search for a display g = xy - uyx passing is_q_heisenberg

    x runs over the generators followed by random degree 1
    combinations, u over a finite candidate set; y is obtained by
    solving the linear system g = xy - uyx in A_{n-1}. The first
    passing witness is returned, or None.
    """
    _check_homogeneous(g)
    if g.degree < 1:
        raise PreconditionError("g must have positive degree")

    for x in _x_candidates(cache, rng, random_x):
        for u in _u_candidates(cache, g):
            y = solve_display(cache, g, x, u)
            if y is None:
                continue
            witness = HeisenbergWitness(g, x, y, u, cache.domain)
            passed, _ = is_q_heisenberg(cache, witness)
            logger.debug(
                f"Witness candidate "
                f"{witness.format(cache.presentation.generators)}: "
                f"{'passed' if passed else 'failed'}")
            if passed:
                return witness

    return None


def derived_relations(witness):
    """x^2y - 2u xyx + u^2 yx^2 and xy^2 - 2u yxy + u^2 y^2x, which
    vanish in A for every q'-Heisenberg witness"""
    x, y, u = witness.x, witness.y, witness.u
    first = (
        poly_mul(poly_mul(x, x), y)
        - poly_mul(poly_mul(x, y), x).scale(2 * u)
        + poly_mul(poly_mul(y, x), x).scale(u * u))
    second = (
        poly_mul(poly_mul(x, y), y)
        - poly_mul(poly_mul(y, x), y).scale(2 * u)
        + poly_mul(poly_mul(y, y), x).scale(u * u))
    return first, second


def power_identities(witness, r):
    """The two commutation identities for x^r and y as differences
    that vanish in A

        x^r y - (r u^{r-1} xyx^{r-1} - (r-1) u^r yx^r)
        yx^r - (r u^{-(r-1)} x^{r-1}yx - (r-1) u^{-r} x^r y)
    """
    x, y = witness.x, witness.y
    u = witness.u
    domain = witness.domain
    r_scalar = to_scalar(r, domain)
    inverse = domain.one / u

    x_r = poly_power(x, r)
    x_r1 = poly_power(x, r - 1)

    first = poly_mul(x_r, y) - (
        poly_mul(poly_mul(x, y), x_r1).scale(r_scalar * u ** (r - 1))
        - poly_mul(y, x_r).scale((r_scalar - 1) * u ** r))

    second = poly_mul(y, x_r) - (
        poly_mul(poly_mul(x_r1, y), x).scale(r_scalar * inverse ** (r - 1))
        - poly_mul(x_r, y).scale((r_scalar - 1) * inverse ** r))

    return first, second


def check_power_identities(cache, witness, r_max):
    """Check both commutation identities mod I for 1 <= r <= r_max

    Returns
    -------
    passed: bool
    verdicts: list of Verdict
    """
    cache.check_degree(r_max + witness.y.degree)

    verdicts = []
    for r in range(1, r_max + 1):
        first, second = power_identities(witness, r)
        verdicts.append(Verdict(
            check=f"x^{r}y identity", passed=cache.is_zero(first)))
        verdicts.append(Verdict(
            check=f"yx^{r} identity", passed=cache.is_zero(second)))

    return all(verdict.passed for verdict in verdicts), verdicts
