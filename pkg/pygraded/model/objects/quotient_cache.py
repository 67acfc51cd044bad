import logging

from pygraded.model.core.exact_linalg import as_sparse_matrix, rref, rank
from pygraded.utilities import (
    BudgetExceededError, DegreeCapError, log_time)

from .nc_poly import NCPoly, poly_mul

logger = logging.getLogger(__name__)

#: Default maximum number of words in the top degree of a cache
DEFAULT_BUDGET = 200000


class QuotientCache:
    """Degree-capped linear model of A = k<x_0..x_m> / I

    Words of degree d are encoded as integers in base m+1 so that the
    integer order is the graded lexicographic order with generator 0
    smallest. In every degree the ideal component I_d is row reduced
    with the largest words as pivots; pivot words are eliminated and
    the remaining words form the retained basis of A_d.
    """

    def __init__(self, presentation, cap, budget=DEFAULT_BUDGET):

        if cap < 0:
            raise ValueError(f"Degree cap must be non-negative, got {cap}")

        self.presentation = presentation
        self.cap = cap
        self.budget = budget
        self.ngens = presentation.ngens
        self.domain = presentation.domain

        required = self.ngens ** cap
        if required > budget:
            raise BudgetExceededError(required, budget)

        #: Reduced basis rows of I_d as {word index: coefficient}
        self._ideal_rows = {}
        #: Map pivot word index -> {retained word index: coefficient}
        self._reducers = {}
        #: Sorted retained word indices of A_d
        self._retained = {}

        self._build()

    def word_count(self, degree):
        return self.ngens ** degree

    def word_to_index(self, word):
        index = 0
        for letter in word:
            index = index * self.ngens + letter
        return index

    def index_to_word(self, index, degree):
        word = []
        for _ in range(degree):
            index, letter = divmod(index, self.ngens)
            word.append(letter)
        return tuple(reversed(word))

    def _poly_row(self, poly):
        return {
            self.word_to_index(word): value
            for word, value in poly.terms.items()}

    def _product_rows(self, degree):
        """Spanning rows of x_j I_{d-1} + I_{d-1} x_j"""
        shift = self.word_count(degree - 1)
        rows = []
        for row in self._ideal_rows.get(degree - 1, []):
            for letter in range(self.ngens):
                rows.append({
                    letter * shift + index: value
                    for index, value in row.items()})
                rows.append({
                    index * self.ngens + letter: value
                    for index, value in row.items()})
        return rows

    def _reduce_degree(self, degree, rows):
        """Row reduce with the largest words as pivots"""
        total = self.word_count(degree)
        reversed_rows = [
            {total - 1 - index: value for index, value in row.items()}
            for row in rows
        ]
        count, pivots, reduced = rref(
            as_sparse_matrix(reversed_rows, total, self.domain))
        if count == 0:
            return []

        sparse = reduced.to_sparse().rep
        return [
            {total - 1 - col: value
             for col, value in sparse.get(row, {}).items() if value}
            for row in range(count)
        ]

    @log_time(message='quotient cache')
    def _build(self):
        for degree in range(self.cap + 1):
            rows = self._product_rows(degree) if degree > 1 else []
            rows += [
                self._poly_row(relation) for relation in
                self.presentation.relations_of_degree(degree)]

            ideal_rows = self._reduce_degree(degree, rows) if rows else []

            reducers = {}
            for row in ideal_rows:
                pivot = max(row)
                reducers[pivot] = {
                    index: -value for index, value in row.items()
                    if index != pivot}

            self._ideal_rows[degree] = ideal_rows
            self._reducers[degree] = reducers
            self._retained[degree] = [
                index for index in range(self.word_count(degree))
                if index not in reducers]

            logger.debug(
                f"Degree {degree}: dim I = {len(ideal_rows)}, "
                f"dim A = {len(self._retained[degree])}")

    def check_degree(self, degree):
        if degree > self.cap:
            raise DegreeCapError(degree, self.cap)

    def dim(self, degree):
        """Dimension of the quotient component A_d"""
        self.check_degree(degree)
        return len(self._retained[degree])

    def ideal_dim(self, degree):
        self.check_degree(degree)
        return len(self._ideal_rows[degree])

    def dims(self):
        return [self.dim(degree) for degree in range(self.cap + 1)]

    def basis(self, degree):
        """Retained words of degree d, a basis of A_d"""
        self.check_degree(degree)
        return [
            self.index_to_word(index, degree)
            for index in self._retained[degree]]

    def ideal_basis(self, degree):
        """Reduced basis of I_d as free algebra polynomials"""
        self.check_degree(degree)
        return [
            NCPoly({self.index_to_word(index, degree): value
                    for index, value in row.items()}, self.domain)
            for row in self._ideal_rows[degree]]

    def normal_form(self, poly):
        """Canonical representative of poly modulo I, supported on
        retained words"""
        poly = poly.convert(self.domain) \
            if poly.domain != self.domain else poly

        terms = {}
        for word, value in poly.terms.items():
            degree = len(word)
            self.check_degree(degree)
            index = self.word_to_index(word)
            reducer = self._reducers[degree].get(index)
            if reducer is None:
                terms[word] = terms.get(word, self.domain.zero) + value
                continue
            for other, coefficient in reducer.items():
                key = self.index_to_word(other, degree)
                terms[key] = (
                    terms.get(key, self.domain.zero) + value * coefficient)

        return NCPoly(terms, self.domain)

    def multiply(self, left, right):
        """Product in A, returned in normal form"""
        return self.normal_form(poly_mul(left, right))

    def is_zero(self, poly):
        return not self.normal_form(poly)

    def coordinates(self, poly, degree):
        """Coordinate vector of the normal form of a homogeneous poly
        against the retained basis of A_d"""
        reduced = self.normal_form(poly)
        return [
            reduced.coefficient(self.index_to_word(index, degree))
            for index in self._retained[degree]]

    def from_coordinates(self, vector, degree):
        return NCPoly({
            self.index_to_word(index, degree): value
            for index, value in zip(self._retained[degree], vector)},
            self.domain)

    def minimal_generator_count(self, degree):
        """dim I_d - dim(F_1 I_{d-1} + I_{d-1} F_1)_d"""
        self.check_degree(degree)
        if degree < 2:
            return 0
        rows = self._product_rows(degree)
        generated = rank(
            as_sparse_matrix(rows, self.word_count(degree), self.domain)
        ) if rows else 0
        return len(self._ideal_rows[degree]) - generated


def build_quotient_cache(presentation, cap, budget=DEFAULT_BUDGET):
    """Build the per-degree bases and reducers of a presentation up to
    a degree cap"""
    return QuotientCache(presentation, cap, budget=budget)


def normal_form(cache, poly):
    return cache.normal_form(poly)


def equal_mod_ideal(cache, left, right):
    """Whether two homogeneous polynomials of equal degree agree in A"""
    if not (left.is_homogeneous and right.is_homogeneous):
        raise ValueError("equal_mod_ideal requires homogeneous arguments")
    if left and right and left.degree != right.degree:
        raise ValueError(
            f"Degree mismatch: {left.degree} != {right.degree}")
    return cache.is_zero(left - right)


def hilbert(presentation, cap, budget=DEFAULT_BUDGET):
    """Hilbert function dim A_d for d = 0..cap"""
    return build_quotient_cache(presentation, cap, budget).dims()


def minimal_relation_degrees(presentation, cap, budget=DEFAULT_BUDGET,
                             cache=None):
    """Number of minimal homogeneous generators of I per degree,
    omitting degrees without any"""
    if cache is None:
        cache = build_quotient_cache(presentation, cap, budget)
    counts = {}
    for degree in range(2, cap + 1):
        count = cache.minimal_generator_count(degree)
        if count:
            counts[degree] = count
    return counts


def presentations_equal(first, second, cap, budget=DEFAULT_BUDGET):
    """Mutual membership of the relations of two presentations on the
    same generators, checked up to cap"""
    if first.ngens != second.ngens:
        return False
    first_cache = build_quotient_cache(first, cap, budget)
    second_cache = build_quotient_cache(second, cap, budget)
    for relation in first.relations:
        if relation.degree <= cap and not second_cache.is_zero(relation):
            return False
    for relation in second.relations:
        if relation.degree <= cap and not first_cache.is_zero(relation):
            return False
    return True
