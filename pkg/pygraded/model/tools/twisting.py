"""Zhang twists by powers of a graded automorphism, the bold normal
element of a quasi-Veronese algebra and the Weyl witness identity.

The dehomogenization of the twisted quasi-Veronese algebra is never
built. Instead the homogeneous identity

    phi(X) o phi(Y) - phi(Y) o phi(X) = bold_g o bold_g

is checked entrywise modulo I; since bold_1 and bold_g agree after
dehomogenizing, this certifies phi(XY - YX - 1) = 0.
"""
import logging

from traits.api import HasStrictTraits, Dict, Instance, Int

from pygraded.model.core.scalars import format_scalar
from pygraded.model.objects.heisenberg_witness import NuAutomorphism
from pygraded.model.objects.nc_poly import NCPoly, poly_mul
from pygraded.model.objects.qv_element import (
    QVElement, qv_mul, bold_g)
from pygraded.model.objects.quotient_cache import QuotientCache
from pygraded.model.objects.run_report import Verdict
from pygraded.utilities import DegreeCapError

from .normal_elements import nu_automorphism

logger = logging.getLogger(__name__)


class TwistSystem(HasStrictTraits):
    """Twisting system {nu^i : i in Z} of a graded automorphism nu,
    extended multiplicatively from A_1"""

    #: Automorphism acting on the generators
    nu = Instance(NuAutomorphism)

    #: Quotient cache of the algebra being twisted
    cache = Instance(QuotientCache)

    #: Largest total degree used by check_twisting_law
    law_degree = Int(3)

    _powers = Dict

    def power(self, exponent):
        if exponent not in self._powers:
            self._powers[exponent] = self.nu.power(exponent)
        return self._powers[exponent]

    def apply(self, poly, exponent=1):
        """nu^exponent(poly) in normal form"""
        return self.cache.normal_form(self.power(exponent).apply(poly))

    def check_automorphism(self):
        """nu(f) must vanish in A for every relation f within the cap

        Returns
        -------
        passed: bool
        verdicts: list of Verdict
        """
        names = self.cache.presentation.generators
        verdicts = []
        for relation in self.cache.presentation.relations:
            if relation.degree > self.cache.cap:
                continue
            image = self.nu.apply(relation)
            verdicts.append(Verdict(
                check=f"nu({relation.format(names)}) in I",
                passed=self.cache.is_zero(image)))
        return all(verdict.passed for verdict in verdicts), verdicts

    def check_twisting_law(self, shifts=(-1, 0, 1, 2)):
        """nu_l(nu_j(a) b) = nu_{j+l}(a) nu_l(b) on all pairs of
        retained basis words with deg a + deg b <= law_degree"""
        cache = self.cache
        domain = cache.domain
        top = min(self.law_degree, cache.cap)
        failures = 0
        checked = 0
        for degree_a in range(top + 1):
            for degree_b in range(top - degree_a + 1):
                for word_a in cache.basis(degree_a):
                    a = NCPoly.word(word_a, domain=domain)
                    for word_b in cache.basis(degree_b):
                        b = NCPoly.word(word_b, domain=domain)
                        for j in shifts:
                            for exponent in shifts:
                                left = self.power(exponent).apply(
                                    poly_mul(self.power(j).apply(a), b))
                                right = poly_mul(
                                    self.power(j + exponent).apply(a),
                                    self.power(exponent).apply(b))
                                checked += 1
                                if not cache.is_zero(left - right):
                                    failures += 1

        logger.debug(
            f"Twisting law: {checked} identities, {failures} failures")
        return failures == 0, Verdict(
            check='twisting law',
            passed=failures == 0,
            detail=f"{checked} identities checked up to degree {top}")


def twist_mul(twist, first, second, cache=None):
    """Twisted product first o second = nu^j(first) second, where j is
    the degree of second. Accepts NCPoly or QVElement arguments"""
    cache = cache or twist.cache

    if isinstance(second, QVElement):
        nu = twist.power(second.degree)
        return qv_mul(first.map_entries(nu.apply), second, cache)

    if not second.is_homogeneous:
        raise ValueError("The right factor must be homogeneous")
    degree = max(second.degree, 0)
    return cache.normal_form(
        poly_mul(twist.power(degree).apply(first), second))


def _elementary_elements(cache, n):
    """Elementary elements E_ij(w) of A^[n] whose products with bold_g
    stay within the cap"""
    top = cache.cap - n
    degree = 0
    while n * degree - (n - 1) <= top:
        for i in range(n):
            for j in range(n):
                entry_degree = n * degree + j - i
                if entry_degree < 0 or entry_degree > top:
                    continue
                for word in cache.basis(entry_degree):
                    yield QVElement.elementary(
                        n, degree, i, j,
                        NCPoly.word(word, domain=cache.domain))
        degree += 1


def verify_bold_normal(cache, g):
    """Check bold_g a = nu(a) bold_g in A^[n] for a spanning set of
    elements a whose products stay within the cap

    Returns
    -------
    passed: bool
    verdict: Verdict

    Raises
    ------
    PreconditionError
        When g is not normal
    """
    n = g.degree
    cache.check_degree(n + 1)
    nu = nu_automorphism(cache, g)
    bold = bold_g(g, n)

    checked = 0
    failure = None
    for element in _elementary_elements(cache, n):
        left = qv_mul(bold, element, cache)
        right = qv_mul(element.map_entries(nu.apply), bold, cache)
        checked += 1
        if left != right:
            failure = element
            break

    if failure is not None:
        i, j = failure.nonzero_entries()[0]
        detail = (
            f"fails on E_{i}{j}("
            f"{failure[i, j].format(cache.presentation.generators)}) "
            f"of degree {failure.degree}")
    else:
        detail = f"{checked} elementary elements checked"

    return failure is None, Verdict(
        check='bold g normal', passed=failure is None, detail=detail)


def weyl_elements(witness):
    """phi(X) and phi(Y) as degree 1 elements of A^[n]

    phi(X) carries xg on the superdiagonal and x in the corner
    (n-1, 0); phi(Y) carries gy in the corner (0, n-1) and y on the
    subdiagonal
    """
    n = witness.n
    domain = witness.domain
    g, x, y = witness.g, witness.x, witness.y
    zero = NCPoly.zero(domain)

    phi_x = [[zero] * n for _ in range(n)]
    phi_y = [[zero] * n for _ in range(n)]
    for index in range(n - 1):
        phi_x[index][index + 1] = poly_mul(x, g)
        phi_y[index + 1][index] = y
    phi_x[n - 1][0] = x
    phi_y[0][n - 1] = poly_mul(g, y)

    return QVElement(phi_x, 1, domain), QVElement(phi_y, 1, domain)


def _entrywise_verdicts(cache, name, first, second):
    names = cache.presentation.generators
    verdicts = []
    for i in range(first.size):
        for j in range(first.size):
            difference = cache.normal_form(first[i, j] - second[i, j])
            verdicts.append(Verdict(
                check=f"{name} entry ({i}, {j})",
                passed=not difference,
                detail=(
                    '' if not difference else
                    f"residual {difference.format(names)}")))
    return verdicts


def weyl_witness(cache, witness):
    """Certify phi(XY - YX - 1) = 0 for the homomorphism from the first
    Weyl algebra into the dehomogenized twisted quasi-Veronese algebra

    Returns
    -------
    passed: bool
    verdicts: list of Verdict
        Entrywise checks of nu(phi(X)) = u^-1 phi(X),
        nu(phi(Y)) = u phi(Y) and of the final identity
    """
    n = witness.n
    if 2 * n > cache.cap:
        raise DegreeCapError(2 * n, cache.cap)

    nu = nu_automorphism(cache, witness.g)
    twist = TwistSystem(nu=nu, cache=cache)
    u = witness.u
    domain = cache.domain

    phi_x, phi_y = weyl_elements(witness)
    bold = bold_g(witness.g, n)

    verdicts = []
    verdicts += _entrywise_verdicts(
        cache, 'nu(phi(X)) = u^-1 phi(X)',
        phi_x.map_entries(nu.apply), phi_x.scale(domain.one / u))
    verdicts += _entrywise_verdicts(
        cache, 'nu(phi(Y)) = u phi(Y)',
        phi_y.map_entries(nu.apply), phi_y.scale(u))

    left = (
        twist_mul(twist, phi_x, phi_y)
        - twist_mul(twist, phi_y, phi_x))
    right = twist_mul(twist, bold, bold)
    verdicts += _entrywise_verdicts(
        cache, 'phi(X)phi(Y) - phi(Y)phi(X) = bold_g bold_g', left, right)

    passed = all(verdict.passed for verdict in verdicts)
    logger.info(
        f"Weyl witness with n = {n}, u = {format_scalar(u, domain)}: "
        f"{'passed' if passed else 'failed'}")

    return passed, verdicts
