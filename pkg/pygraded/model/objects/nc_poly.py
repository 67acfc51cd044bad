import logging

from pygraded.model.core.scalars import (
    RATIONAL, to_scalar, unify_domains, format_scalar, is_function_field)

logger = logging.getLogger(__name__)


class NCPoly:
    """Element of the free algebra k<x_0, ..., x_m>, stored as a
    mapping from words (tuples of generator indices) to nonzero
    scalars"""

    __slots__ = ('terms', 'domain')

    def __init__(self, terms=None, domain=RATIONAL):
        self.domain = domain
        self.terms = {}
        if terms:
            for word, coefficient in terms.items():
                coefficient = to_scalar(coefficient, domain)
                if coefficient:
                    self.terms[tuple(word)] = coefficient

    @classmethod
    def zero(cls, domain=RATIONAL):
        return cls(domain=domain)

    @classmethod
    def one(cls, domain=RATIONAL):
        return cls({(): domain.one}, domain)

    @classmethod
    def word(cls, word, coefficient=1, domain=RATIONAL):
        return cls({tuple(word): coefficient}, domain)

    @classmethod
    def generator(cls, index, domain=RATIONAL):
        return cls.word((index,), domain=domain)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.items())

    def items(self):
        """Terms sorted by degree then lexicographically"""
        return sorted(
            self.terms.items(), key=lambda item: (len(item[0]), item[0]))

    def coefficient(self, word):
        return self.terms.get(tuple(word), self.domain.zero)

    @property
    def degrees(self):
        return sorted({len(word) for word in self.terms})

    @property
    def degree(self):
        """Largest word length in the support, -1 for the zero
        polynomial"""
        if not self.terms:
            return -1
        return max(len(word) for word in self.terms)

    @property
    def is_homogeneous(self):
        return len(self.degrees) <= 1

    @property
    def max_index(self):
        indices = [index for word in self.terms for index in word]
        return max(indices) if indices else -1

    def homogeneous_part(self, degree):
        return NCPoly(
            {word: value for word, value in self.terms.items()
             if len(word) == degree},
            self.domain)

    def convert(self, domain):
        if domain == self.domain:
            return self
        return NCPoly(self.terms, domain)

    def _unify(self, other):
        domain = unify_domains(self.domain, other.domain)
        return self.convert(domain), other.convert(domain), domain

    def __add__(self, other):
        left, right, domain = self._unify(other)
        terms = dict(left.terms)
        for word, value in right.terms.items():
            terms[word] = terms.get(word, domain.zero) + value
        return NCPoly(terms, domain)

    def __neg__(self):
        return NCPoly(
            {word: -value for word, value in self.terms.items()},
            self.domain)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        scalar = to_scalar(scalar, self.domain)
        return NCPoly(
            {word: scalar * value for word, value in self.terms.items()},
            self.domain)

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return poly_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        left, right, _ = self._unify(other)
        return left.terms == right.terms

    def __hash__(self):
        return hash(tuple(self.items()))

    def map_words(self, func):
        """Apply func to every word, accumulating coefficients"""
        terms = {}
        for word, value in self.terms.items():
            new = func(word)
            terms[new] = terms.get(new, self.domain.zero) + value
        return NCPoly(terms, self.domain)

    def format(self, names=None):
        """Relation syntax representation, e.g. 'x*y - 2*y*x'"""
        if not self.terms:
            return '0'

        if names is None:
            names = [f"x{index}" for index in range(self.max_index + 1)]

        text = ''
        ordered = sorted(
            self.terms.items(), key=lambda item: (-len(item[0]), item[0]))
        for word, value in ordered:
            sign = '+'
            magnitude = value
            if _is_negative(value, self.domain):
                sign, magnitude = '-', -value

            monomial = '*'.join(names[index] for index in word)
            if magnitude == self.domain.one and monomial:
                term = monomial
            else:
                scalar = format_scalar(magnitude, self.domain)
                term = f"{scalar}*{monomial}" if monomial else scalar

            if not text:
                text = term if sign == '+' else f"-{term}"
            else:
                text += f" {sign} {term}"

        return text

    def __repr__(self):
        return f"NCPoly({self.format()})"


def _is_negative(value, domain):
    if is_function_field(domain):
        return format_scalar(value, domain).startswith('(-')
    return value < 0


def poly_mul(left, right):
    """Concatenation product in the free algebra"""
    left, right, domain = left._unify(right)
    terms = {}
    for word_a, value_a in left.terms.items():
        for word_b, value_b in right.terms.items():
            word = word_a + word_b
            terms[word] = terms.get(word, domain.zero) + value_a * value_b
    return NCPoly(terms, domain)


def poly_power(poly, exponent):
    result = NCPoly.one(poly.domain)
    for _ in range(exponent):
        result = poly_mul(result, poly)
    return result
