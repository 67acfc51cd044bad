"""The color Koszul complex U(L) (x) Lambda_eps L of a color Lie algebra,
with differential

    d(a (x) v_1 ^ ... ^ v_r)
        = sum_i (-1)^(i+1) eta_i  a v_i (x) v_1 ^ ..^v_i^.. ^ v_r
        + sum_(i<j) (-1)^(i+j) eta_i eta_j eps(|v_j|, |v_i|)
              a (x) [v_i, v_j] ^ v_1 ^ ..^v_i^..^v_j^.. ^ v_r

where eta_i = prod_(l<i) eps(|v_l|, |v_i|), and its verification as a
resolution of the trivial module in low internal degrees.
"""
import logging

from pygraded.model.core.exact_linalg import as_sparse_matrix
from pygraded.model.objects.color_lie_algebra import check_color_axioms
from pygraded.model.objects.koszul_complex import KoszulComplex
from pygraded.model.objects.run_report import Verdict
from pygraded.model.tools.pbw import EnvelopingAlgebra
from pygraded.utilities import (
    BudgetExceededError, PreconditionError, log_time)

logger = logging.getLogger(__name__)

#: Largest number of chain basis elements in a single degree
DEFAULT_CHAIN_BUDGET = 5000


def _insert_sorted(algebra, index, rest):
    """Rewrite b_index ^ rest as sign * (sorted wedge), using
    u ^ v = -eps(|u|, |v|) v ^ u. Returns (None, zero) for a repeated
    index"""
    domain = algebra.domain
    if index in rest:
        return None, domain.zero
    sign = domain.one
    position = 0
    for other in rest:
        if other < index:
            sign *= -algebra.epsilon(index, other)
            position += 1
    return rest[:position] + (index,) + rest[position:], sign


def _etas(algebra, wedge):
    domain = algebra.domain
    etas = []
    for i, current in enumerate(wedge):
        eta = domain.one
        for other in wedge[:i]:
            eta *= algebra.epsilon(other, current)
        etas.append(eta)
    return etas


def differential_image(enveloping, monomial, wedge):
    """d(monomial (x) wedge) as a {(monomial, wedge): scalar}
    dictionary"""
    algebra = enveloping.algebra
    domain = algebra.domain
    etas = _etas(algebra, wedge)
    image = {}

    def add(key, value):
        image[key] = image.get(key, domain.zero) + value

    for i, current in enumerate(wedge):
        sign = domain.one if i % 2 == 0 else -domain.one
        rest = wedge[:i] + wedge[i + 1:]
        product = enveloping.normal_form(monomial + (current,))
        for word, value in product.items():
            add((word, rest), sign * etas[i] * value)

    for i in range(len(wedge)):
        for j in range(i + 1, len(wedge)):
            bracket = algebra.bracket(wedge[i], wedge[j])
            if not bracket:
                continue
            # (-1)^(i+j) with one-based positions
            sign = domain.one if (i + j) % 2 == 0 else -domain.one
            factor = (
                sign * etas[i] * etas[j]
                * algebra.epsilon(wedge[j], wedge[i]))
            rest = tuple(
                index for position, index in enumerate(wedge)
                if position not in (i, j))
            for index, value in bracket.items():
                target, reorder = _insert_sorted(algebra, index, rest)
                if target is not None:
                    add((monomial, target), factor * reorder * value)

    return {key: value for key, value in image.items() if value}


def _chain_basis(complex_, enveloping, r, t):
    basis = []
    for wedge in complex_.wedges(r):
        weight = enveloping.word_degree(wedge)
        if weight <= t:
            basis += [
                (monomial, wedge)
                for monomial in enveloping.monomials(t - weight)]
    return basis


@log_time(message='koszul complex')
def koszul_complex(algebra, r_max=None, max_degree=6,
                   budget=DEFAULT_CHAIN_BUDGET):
    """Build the differentials of the color Koszul complex per internal
    degree 0..max_degree and exterior degree 0..r_max

    Axiom violations are logged as warnings; the complex is still
    built so that koszul_verify can report the consequences.
    """
    if r_max is None:
        r_max = algebra.dim
    if not 0 <= r_max <= algebra.dim:
        raise PreconditionError(
            f"r_max must lie between 0 and dim L = {algebra.dim}")

    passed, violations = check_color_axioms(algebra)
    if not passed:
        for violation in violations:
            logger.warning(f"Building Koszul complex anyway: {violation}")

    enveloping = EnvelopingAlgebra(algebra)
    complex_ = KoszulComplex(algebra, r_max, max_degree)

    for r in range(r_max + 1):
        for t in range(max_degree + 1):
            basis = _chain_basis(complex_, enveloping, r, t)
            if len(basis) > budget:
                raise BudgetExceededError(
                    len(basis), budget, unit='chain basis elements')
            complex_.bases[(r, t)] = basis

    for r in range(1, r_max + 1):
        for t in range(max_degree + 1):
            source = complex_.basis(r, t)
            target = complex_.basis(r - 1, t)
            if not source or not target:
                continue
            index = {key: row for row, key in enumerate(target)}
            rows = [{} for _ in target]
            for column, (monomial, wedge) in enumerate(source):
                image = differential_image(enveloping, monomial, wedge)
                for key, value in image.items():
                    if key not in index:
                        complex_.off_degree += 1
                        continue
                    rows[index[key]][column] = value
            complex_.differentials[(r, t)] = as_sparse_matrix(
                rows, len(source), algebra.domain)

    logger.info(
        f"Koszul complex of {algebra.name or 'L'} up to r = {r_max}, "
        f"degree {max_degree}")

    return complex_


def _is_zero_product(first, second):
    if first is None or second is None:
        return True
    product = first * second
    return not any(any(row) for row in product.to_list())


def _degree_list(degrees):
    return ', '.join(str(degree) for degree in degrees)


def koszul_verify(complex_):
    """Check d_(r-1) d_r = 0 and exactness of the truncated complex

    Exactness at C_r in internal degree t means
    rank d_r + rank d_(r+1) = dim C_r[t]; at r = 0 the homology must
    be k, concentrated in degree 0. Exactness is only checked where
    d_(r+1) is available, i.e. r < r_max or r_max = dim L.

    Returns
    -------
    passed: bool
    verdicts: list of Verdict
    """
    algebra = complex_.algebra
    degrees = range(complex_.max_degree + 1)
    verdicts = []

    verdicts.append(Verdict(
        check='degree preserving',
        passed=complex_.off_degree == 0,
        detail=f"{complex_.off_degree} terms leave their degree"))

    for r in range(2, complex_.r_max + 1):
        failing = [
            t for t in degrees
            if not _is_zero_product(
                complex_.differential(r - 1, t),
                complex_.differential(r, t))]
        verdicts.append(Verdict(
            check=f"d{r - 1} d{r} = 0",
            passed=not failing,
            detail=(f"nonzero in degrees {_degree_list(failing)}"
                    if failing
                    else f"degrees 0..{complex_.max_degree}")))

    verdicts.append(Verdict(
        check='homology k in degree 0',
        passed=complex_.dim(0, 0) == 1
        and complex_.differential_rank(1, 0) == 0))

    top = complex_.r_max if complex_.r_max == algebra.dim \
        else complex_.r_max - 1
    for r in range(top + 1):
        failing = [
            t for t in degrees[1:]
            if complex_.differential_rank(r, t)
            + complex_.differential_rank(r + 1, t) != complex_.dim(r, t)]
        verdicts.append(Verdict(
            check=f"exact at C{r}",
            passed=not failing,
            detail=(f"homology in degrees {_degree_list(failing)}"
                    if failing
                    else f"degrees 1..{complex_.max_degree}")))

    passed = all(verdict.passed for verdict in verdicts)
    logger.info(
        f"Koszul verification: {'passed' if passed else 'failed'}")

    return passed, verdicts
