"""PBW arithmetic in the universal enveloping algebra U(L) of a color
Lie algebra.

Elements of U(L) are NCPoly instances whose words are sequences of basis
indices of L. A word is a PBW monomial when its indices are sorted by the
order (total degree, input index); any other word is rewritten using

    b_j b_i -> eps(|b_j|, |b_i|) b_i b_j + [b_j, b_i]

on an adjacent inversion until it is sorted.
"""
import logging

from pygraded.model.objects.nc_poly import NCPoly

logger = logging.getLogger(__name__)

STRATEGIES = ['leftmost', 'rightmost']


class EnvelopingAlgebra:
    """PBW normal forms and graded pieces of U(L)"""

    def __init__(self, algebra):
        self.algebra = algebra
        self.domain = algebra.domain
        self._forms = {strategy: {} for strategy in STRATEGIES}
        self._monomials = {}

    def is_sorted(self, word):
        rank = self.algebra.pbw_rank
        return all(
            rank[first] <= rank[second]
            for first, second in zip(word, word[1:]))

    def _inversion(self, word, strategy):
        rank = self.algebra.pbw_rank
        positions = [
            position for position in range(len(word) - 1)
            if rank[word[position]] > rank[word[position + 1]]]
        if strategy == 'leftmost':
            return positions[0]
        return positions[-1]

    def normal_form(self, word, strategy='leftmost'):
        """PBW normal form of a word in the basis of L

        Parameters
        ----------
        word: tuple of int
            Basis indices, read left to right
        strategy: str, optional
            Which adjacent inversion to rewrite first, 'leftmost' or
            'rightmost'. Both give the same result

        Returns
        -------
        element: NCPoly
            Combination of sorted words
        """
        if strategy not in STRATEGIES:
            raise ValueError(
                f"Unknown rewriting strategy '{strategy}', expected one "
                f"of {', '.join(STRATEGIES)}")

        word = tuple(word)
        forms = self._forms[strategy]
        if word in forms:
            return forms[word]

        if self.is_sorted(word):
            result = NCPoly.word(word, domain=self.domain)
        else:
            position = self._inversion(word, strategy)
            first, second = word[position], word[position + 1]
            head, tail = word[:position], word[position + 2:]

            result = self.normal_form(
                head + (second, first) + tail, strategy
            ).scale(self.algebra.epsilon(first, second))
            for index, value in self.algebra.bracket(first, second).items():
                result = result + self.normal_form(
                    head + (index,) + tail, strategy).scale(value)

        forms[word] = result
        return result

    def reduce(self, element, strategy='leftmost'):
        """Normal form of a combination of words"""
        result = NCPoly.zero(self.domain)
        for word, value in element.items():
            result = result + self.normal_form(word, strategy).scale(value)
        return result

    def multiply(self, left, right):
        """Product of two elements of U(L), in normal form"""
        result = NCPoly.zero(self.domain)
        for word_a, value_a in left.items():
            for word_b, value_b in right.items():
                result = result + self.normal_form(
                    word_a + word_b).scale(value_a * value_b)
        return result

    def word_degree(self, word):
        """Total Z-degree of a word"""
        return sum(self.algebra.total_degree(index) for index in word)

    def monomials(self, degree):
        """Sorted words of total degree equal to degree, in
        lexicographic order of PBW positions"""
        if degree not in self._monomials:
            order = sorted(
                range(self.algebra.dim),
                key=lambda index: self.algebra.pbw_rank[index])
            self._monomials[degree] = list(
                self._extend((), order, degree))
        return self._monomials[degree]

    def _extend(self, prefix, order, remaining):
        if remaining == 0:
            yield prefix
            return
        for position, index in enumerate(order):
            weight = self.algebra.total_degree(index)
            if 0 < weight <= remaining:
                yield from self._extend(
                    prefix + (index,), order[position:],
                    remaining - weight)

    def dim(self, degree):
        """dim U(L)_d counted from PBW monomials"""
        return len(self.monomials(degree))

    def dims(self, cap):
        return [self.dim(degree) for degree in range(cap + 1)]

    def coordinates(self, element, degree):
        """Coordinate vector of a degree homogeneous normal form over
        monomials(degree)"""
        index = {
            word: position
            for position, word in enumerate(self.monomials(degree))}
        vector = [self.domain.zero] * len(index)
        for word, value in element.items():
            vector[index[word]] += value
        return vector

    def format(self, element):
        return element.format(self.algebra.names)


def pbw_normal_form(algebra, word, strategy='leftmost'):
    """Normal form of a word in the basis of a color Lie algebra"""
    return EnvelopingAlgebra(algebra).normal_form(word, strategy)
