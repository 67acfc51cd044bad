import logging

from pygraded.model.core.scalars import RATIONAL

from .nc_poly import NCPoly, poly_mul

logger = logging.getLogger(__name__)


class QVElement:
    """Homogeneous element of degree p of the r-th quasi-Veronese
    algebra A^[r]: an r x r array whose entry (i, j) is a homogeneous
    element of A of degree r p + j - i (zero allowed)"""

    def __init__(self, entries, degree, domain=RATIONAL):

        self.size = len(entries)
        self.degree = degree
        self.domain = domain

        if any(len(row) != self.size for row in entries):
            raise ValueError("QVElement entries must form a square array")

        self.entries = [
            [entry.convert(domain) for entry in row] for row in entries]

        for i, row in enumerate(self.entries):
            for j, entry in enumerate(row):
                if not entry:
                    continue
                expected = self.entry_degree(i, j)
                if not entry.is_homogeneous or entry.degree != expected:
                    raise ValueError(
                        f"Entry ({i}, {j}) must be homogeneous of "
                        f"degree {expected}")

    def entry_degree(self, i, j):
        return self.size * self.degree + j - i

    @classmethod
    def zero(cls, size, degree, domain=RATIONAL):
        return cls(
            [[NCPoly.zero(domain)] * size for _ in range(size)],
            degree, domain)

    @classmethod
    def identity(cls, size, domain=RATIONAL):
        return cls.diagonal(NCPoly.one(domain), size, 0)

    @classmethod
    def diagonal(cls, poly, size, degree):
        domain = poly.domain
        return cls(
            [[poly if i == j else NCPoly.zero(domain)
              for j in range(size)] for i in range(size)],
            degree, domain)

    @classmethod
    def elementary(cls, size, degree, i, j, poly):
        """Element with poly at (i, j) and zeros elsewhere"""
        element = cls.zero(size, degree, poly.domain)
        entries = [list(row) for row in element.entries]
        entries[i][j] = poly
        return cls(entries, degree, poly.domain)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def map_entries(self, func):
        return QVElement(
            [[func(entry) for entry in row] for row in self.entries],
            self.degree, self.domain)

    def scale(self, scalar):
        return self.map_entries(lambda entry: entry.scale(scalar))

    def _check_compatible(self, other):
        if self.size != other.size or self.degree != other.degree:
            raise ValueError(
                "QVElements must share size and degree to be added")

    def __add__(self, other):
        self._check_compatible(other)
        return QVElement(
            [[a + b for a, b in zip(row_a, row_b)]
             for row_a, row_b in zip(self.entries, other.entries)],
            self.degree, self.domain)

    def __neg__(self):
        return self.map_entries(lambda entry: -entry)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, QVElement):
            return NotImplemented
        return (
            self.size == other.size
            and self.degree == other.degree
            and self.entries == other.entries)

    def nonzero_entries(self):
        return [
            (i, j) for i, row in enumerate(self.entries)
            for j, entry in enumerate(row) if entry]

    def format(self, names=None):
        return '\n'.join(
            '[' + ', '.join(entry.format(names) for entry in row) + ']'
            for row in self.entries)

    def __repr__(self):
        return f"QVElement(size={self.size}, degree={self.degree})"


def qv_product(first, second):
    """Free algebra product in A^[r]: entry (i, j) is
    sum_l a_{l,j} b_{i,l}"""
    if first.size != second.size:
        raise ValueError(
            f"Cannot multiply QVElements of sizes {first.size} "
            f"and {second.size}")
    size = first.size
    domain = first.domain
    entries = []
    for i in range(size):
        row = []
        for j in range(size):
            total = NCPoly.zero(domain)
            for index in range(size):
                left = first.entries[index][j]
                right = second.entries[i][index]
                if left and right:
                    total = total + poly_mul(left, right)
            row.append(total)
        entries.append(row)
    return QVElement(entries, first.degree + second.degree, domain)


def qv_mul(first, second, cache):
    """Product in A^[r] with every entry in normal form"""
    return qv_product(first, second).map_entries(cache.normal_form)


def bold_g(g, n):
    """Degree 1 element of A^[n] with g on the diagonal"""
    if not g.is_homogeneous or g.degree != n or n < 1:
        raise ValueError(
            f"g must be homogeneous of degree n = {n} >= 1")
    return QVElement.diagonal(g, n, 1)
