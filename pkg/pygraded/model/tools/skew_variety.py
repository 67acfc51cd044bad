"""Point varieties of skew polynomial rings x_i x_j = w_ij x_j x_i.

The variety is cut out by (w_ij w_jl - w_il) p_i p_j p_l = 0 for
i < j < l, so it is the union of the coordinate subspaces P(S) over the
supports S containing no bad triple.
"""
from itertools import combinations
import logging

from pygraded.model.core.scalars import RATIONAL, to_scalar, format_scalar
from pygraded.utilities import PreconditionError

logger = logging.getLogger(__name__)


class SupportFamily:
    """Maximal admissible supports, each a sorted tuple of coordinate
    indices"""

    def __init__(self, supports, size):
        self.supports = sorted(
            (tuple(sorted(support)) for support in supports),
            key=lambda support: (-len(support), support))
        #: Number of coordinates m + 1
        self.size = size

    def __len__(self):
        return len(self.supports)

    def __iter__(self):
        return iter(self.supports)

    def __eq__(self, other):
        if not isinstance(other, SupportFamily):
            return NotImplemented
        return (self.size == other.size
                and set(self.supports) == set(other.supports))

    def contains(self, point):
        """Whether a projective point lies on the variety"""
        support = {index for index, value in enumerate(point) if value}
        return any(support <= set(listed) for listed in self.supports)

    def format(self, names=None):
        names = names or [str(index) for index in range(self.size)]
        return ', '.join(
            '{' + ','.join(names[index] for index in support) + '}'
            for support in self.supports)

    def __repr__(self):
        return f"SupportFamily({self.format()})"


def check_omega(omega, domain=RATIONAL):
    """Validate w_ii = 1 and w_ij w_ji = 1, returning the matrix as
    domain scalars"""
    size = len(omega)
    if size == 0 or any(len(row) != size for row in omega):
        raise PreconditionError("omega must be a nonempty square matrix")

    matrix = [[to_scalar(value, domain) for value in row] for row in omega]
    for i in range(size):
        if matrix[i][i] != domain.one:
            raise PreconditionError(
                f"omega_{i}{i} = {format_scalar(matrix[i][i], domain)}, "
                "expected 1")
        for j in range(i + 1, size):
            if matrix[i][j] * matrix[j][i] != domain.one:
                raise PreconditionError(
                    f"omega_{i}{j} omega_{j}{i} != 1")
    return matrix


def bad_triples(matrix):
    return [
        (i, j, l) for i, j, l in combinations(range(len(matrix)), 3)
        if matrix[i][j] * matrix[j][l] != matrix[i][l]]


def skew_point_variety(omega, domain=RATIONAL):
    """Maximal supports free of bad triples, by brute force over all
    subsets of the coordinates

    Returns
    -------
    family: SupportFamily
    """
    matrix = check_omega(omega, domain)
    size = len(matrix)
    bad = [set(triple) for triple in bad_triples(matrix)]
    logger.debug(f"Bad triples: {bad}")

    admissible = []
    for count in range(size, 0, -1):
        for support in combinations(range(size), count):
            chosen = set(support)
            if any(triple <= chosen for triple in bad):
                continue
            if any(chosen < set(larger) for larger in admissible):
                continue
            admissible.append(support)

    return SupportFamily(admissible, size)


def skew_omega(presentation):
    """Read omega from relations x_i x_j - w_ij x_j x_i, one per pair
    of generators; pairs without a relation are free and rejected

    Raises
    ------
    PreconditionError
        When a relation is not of skew commutation form
    """
    domain = presentation.domain
    size = presentation.ngens
    omega = [[None] * size for _ in range(size)]
    for i in range(size):
        omega[i][i] = domain.one

    for relation in presentation.relations:
        terms = relation.terms
        words = sorted(terms)
        if (relation.degree != 2 or len(words) != 2
                or words[0] != tuple(reversed(words[1]))
                or words[0][0] == words[0][1]):
            raise PreconditionError(
                f"{presentation.format(relation)} is not a skew "
                "commutation relation")
        i, j = words[0]
        value = -terms[(j, i)] / terms[(i, j)]
        omega[i][j] = value
        omega[j][i] = domain.one / value

    for i in range(size):
        for j in range(size):
            if omega[i][j] is None:
                raise PreconditionError(
                    f"No skew commutation relation between generators "
                    f"{presentation.generators[i]} and "
                    f"{presentation.generators[j]}")
    return omega
