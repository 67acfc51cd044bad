import logging

from sympy.polys.matrices import DomainMatrix

from pygraded.model.core.base_graded_object import BaseGradedObject
from pygraded.model.core.scalars import (
    RATIONAL, to_scalar, format_scalar, parse_scalar, get_domain,
    domain_name)

from .nc_poly import NCPoly, poly_mul

logger = logging.getLogger(__name__)


class HeisenbergWitness(BaseGradedObject):
    """Candidate display g = xy - u yx of a q'-Heisenberg normal
    element, with deg x = 1 and deg y = deg g - 1"""

    def __init__(self, g, x, y, u, domain=None):

        domain = domain or g.domain
        self.domain = domain
        self.g = g.convert(domain)
        self.x = x.convert(domain)
        self.y = y.convert(domain)
        self.u = to_scalar(u, domain)

        if not self.u:
            raise ValueError("The scalar u must be nonzero")
        if not (self.g and self.g.is_homogeneous):
            raise ValueError("g must be a nonzero homogeneous element")
        if not (self.x and self.x.is_homogeneous and self.x.degree == 1):
            raise ValueError("x must be a homogeneous element of degree 1")
        if not (self.y and self.y.is_homogeneous):
            raise ValueError("y must be a nonzero homogeneous element")
        if self.g.degree != self.x.degree + self.y.degree:
            raise ValueError(
                f"deg g = {self.g.degree} differs from "
                f"deg x + deg y = {self.x.degree + self.y.degree}")

    @property
    def n(self):
        """Degree of g"""
        return self.g.degree

    @property
    def display(self):
        """The free algebra element xy - u yx"""
        return poly_mul(self.x, self.y) - poly_mul(
            self.y, self.x).scale(self.u)

    def format(self, names):
        return (
            f"g = {self.g.format(names)}, x = {self.x.format(names)}, "
            f"y = {self.y.format(names)}, "
            f"u = {format_scalar(self.u, self.domain)}")

    @classmethod
    def from_json(cls, data):
        from pygraded.io.algebra_io import parse_poly
        domain = get_domain(data.get('field', 'rational'))
        names = data['generators']
        return cls(
            parse_poly(data['g'], names, domain),
            parse_poly(data['x'], names, domain),
            parse_poly(data['y'], names, domain),
            parse_scalar(data['u'], domain),
            domain)

    def to_json(self, names=None):
        names = names or [
            f"x{index}" for index in range(
                max(self.g.max_index, self.x.max_index,
                    self.y.max_index) + 1)]
        return {
            'generators': list(names),
            'field': domain_name(self.domain),
            'g': self.g.format(names),
            'x': self.x.format(names),
            'y': self.y.format(names),
            'u': format_scalar(self.u, self.domain)
        }

    @classmethod
    def from_text(cls, text):
        data = {}
        for line in text.splitlines():
            key, sep, value = line.partition(':')
            if sep:
                data[key.strip()] = value.strip()
        data['generators'] = [
            name.strip() for name in data['generators'].split(',')]
        return cls.from_json(data)

    def to_text(self, names=None):
        data = self.to_json(names)
        lines = [f"generators: {', '.join(data.pop('generators'))}"]
        lines += [f"{key}: {value}" for key, value in data.items()]
        return '\n'.join(lines) + '\n'


class NuAutomorphism:
    """Graded automorphism of the free algebra determined by its action
    on degree 1: column j of matrix holds the coordinates of the image
    of generator j"""

    def __init__(self, matrix, domain=RATIONAL):
        self.domain = domain
        self.matrix = [
            [to_scalar(value, domain) for value in row] for row in matrix]
        size = len(self.matrix)
        if any(len(row) != size for row in self.matrix):
            raise ValueError("NuAutomorphism matrix must be square")
        if DomainMatrix(self.matrix, (size, size), domain).rank() < size:
            raise ValueError("NuAutomorphism matrix must be invertible")
        self._images = {}

    @classmethod
    def identity(cls, size, domain=RATIONAL):
        return cls(
            [[domain.one if i == j else domain.zero for j in range(size)]
             for i in range(size)], domain)

    @property
    def size(self):
        return len(self.matrix)

    def image(self, index):
        """nu(x_index) as a degree 1 polynomial"""
        return NCPoly({
            (row,): self.matrix[row][index] for row in range(self.size)},
            self.domain)

    def is_identity(self):
        return self.matrix == NuAutomorphism.identity(
            self.size, self.domain).matrix

    def power(self, exponent):
        """nu^exponent for any integer exponent"""
        base = DomainMatrix(self.matrix, (self.size, self.size), self.domain)
        if exponent < 0:
            base = base.inv()
            exponent = -exponent
        result = DomainMatrix.eye(self.size, self.domain)
        for _ in range(exponent):
            result = result * base
        return NuAutomorphism(result.to_list(), self.domain)

    def inverse(self):
        return self.power(-1)

    def compose(self, other):
        """The automorphism self o other"""
        left = DomainMatrix(self.matrix, (self.size, self.size), self.domain)
        right = DomainMatrix(
            other.matrix, (other.size, other.size), other.domain)
        return NuAutomorphism((left * right).to_list(), self.domain)

    def apply_word(self, word):
        """nu(w) = nu(w_1) ... nu(w_e)"""
        word = tuple(word)
        if word not in self._images:
            result = NCPoly.one(self.domain)
            for letter in word:
                result = poly_mul(result, self.image(letter))
            self._images[word] = result
        return self._images[word]

    def apply(self, poly):
        """Extend nu multiplicatively and linearly to poly"""
        result = NCPoly.zero(self.domain)
        for word, value in poly.terms.items():
            result = result + self.apply_word(word).scale(value)
        return result

    def __eq__(self, other):
        if not isinstance(other, NuAutomorphism):
            return NotImplemented
        return self.matrix == other.matrix

    def format(self, names):
        return ', '.join(
            f"nu({names[index]}) = {self.image(index).format(names)}"
            for index in range(self.size))
