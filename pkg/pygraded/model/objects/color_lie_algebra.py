import logging
from itertools import product

from pygraded.model.core.base_graded_object import BaseGradedObject
from pygraded.model.core.exact_linalg import (
    as_matrix, rank, reduced_rows)
from pygraded.model.core.scalars import RATIONAL, to_scalar
from pygraded.model.objects.bicharacter import Bicharacter
from pygraded.model.objects.nc_poly import NCPoly
from pygraded.utilities import PreconditionError

logger = logging.getLogger(__name__)


def _format_degree(degree):
    return f"({','.join(str(value) for value in degree)})"


class ColorLieAlgebra(BaseGradedObject):
    """Finite dimensional Z^(m+1)-graded color Lie algebra, given by a
    homogeneous basis, a bicharacter and the structure constants
    [b_i, b_j] = sum_k c_ijk b_k

    Brackets are stored as {(i, j): {k: c_ijk}}. A pair (i, j) given
    without its partner (j, i) is completed by antisymmetry,
    [b_j, b_i] = -eps(|b_j|, |b_i|) [b_i, b_j]. Pairs given in both
    orders are kept as given so that violations remain visible to
    check_color_axioms.
    """

    text_extension = 'cl'

    def __init__(self, names, degrees, omega, brackets=None,
                 generators=None, name=None, domain=RATIONAL):

        self.domain = domain
        self.name = name
        self.names = list(names)
        self.degrees = [tuple(int(value) for value in degree)
                        for degree in degrees]

        if isinstance(omega, Bicharacter):
            self.epsilon_form = omega
        else:
            self.epsilon_form = Bicharacter(omega, domain)

        self._check_basis()
        self.brackets = self._complete_brackets(brackets or {})
        self.generators = self._resolve_generators(generators)

        #: Position of each basis element in the PBW order
        #: (total degree, input index)
        order = sorted(
            range(self.dim),
            key=lambda index: (self.total_degree(index), index))
        self.pbw_rank = [order.index(index) for index in range(self.dim)]

    def _check_basis(self):
        if not self.names:
            raise ValueError("A color Lie algebra needs a basis")
        if len(set(self.names)) != len(self.names):
            raise ValueError("Basis names must be unique")
        for name in self.names:
            if not name.isidentifier():
                raise ValueError(f"Invalid basis name '{name}'")
        if len(self.degrees) != len(self.names):
            raise ValueError("Every basis element needs a degree")
        for name, degree in zip(self.names, self.degrees):
            if len(degree) != self.rank:
                raise ValueError(
                    f"Degree of '{name}' has {len(degree)} coordinates, "
                    f"expected {self.rank}")

    def _complete_brackets(self, brackets):
        table = {}
        for (i, j), combination in brackets.items():
            for index in (i, j, *combination):
                if not 0 <= index < self.dim:
                    raise ValueError(f"Basis index {index} out of range")
            combination = {
                k: to_scalar(value, self.domain)
                for k, value in combination.items()}
            table[(i, j)] = {
                k: value for k, value in combination.items() if value}

        for (i, j), combination in list(table.items()):
            if (j, i) in table:
                continue
            factor = -self.epsilon(j, i)
            table[(j, i)] = {
                k: factor * value for k, value in combination.items()}

        return {key: value for key, value in table.items() if value}

    def _resolve_generators(self, generators):
        """Indices of theta_0..theta_m with |theta_i| = e_i. Missing
        generators default to the first basis element of degree e_i"""
        if generators is None:
            generators = []
            for i in range(self.rank):
                unit = self.unit_degree(i)
                candidates = [
                    index for index, degree in enumerate(self.degrees)
                    if degree == unit]
                if not candidates:
                    raise ValueError(
                        f"No basis element of degree "
                        f"{_format_degree(unit)}")
                generators.append(candidates[0])
            return generators

        generators = [
            self.names.index(item) if isinstance(item, str) else item
            for item in generators]
        if len(generators) != self.rank:
            raise ValueError(
                f"Expected {self.rank} generators, got {len(generators)}")
        for i, index in enumerate(generators):
            if self.degrees[index] != self.unit_degree(i):
                raise ValueError(
                    f"Generator '{self.names[index]}' must have degree "
                    f"{_format_degree(self.unit_degree(i))}")
        return list(generators)

    @property
    def rank(self):
        """Number of grading coordinates m + 1"""
        return self.epsilon_form.rank

    @property
    def dim(self):
        return len(self.names)

    @property
    def omega(self):
        return self.epsilon_form.omega

    def unit_degree(self, i):
        return tuple(int(i == j) for j in range(self.rank))

    def total_degree(self, index):
        return sum(self.degrees[index])

    def epsilon(self, i, j):
        """eps(|b_i|, |b_j|)"""
        return self.epsilon_form(self.degrees[i], self.degrees[j])

    def bracket(self, i, j):
        """[b_i, b_j] as a {k: coefficient} dictionary"""
        return self.brackets.get((i, j), {})

    def bracket_vectors(self, first, second):
        """Bracket of two dense coordinate vectors"""
        result = [self.domain.zero] * self.dim
        for i, a in enumerate(first):
            if not a:
                continue
            for j, b in enumerate(second):
                if not b:
                    continue
                for k, value in self.bracket(i, j).items():
                    result[k] += a * b * value
        return result

    def unit_vector(self, index):
        vector = [self.domain.zero] * self.dim
        vector[index] = self.domain.one
        return vector

    def bracket_series(self):
        """Reduced spanning rows of L_1^j for j = 1, 2, ... while
        nonzero, where L_1^1 is spanned by the generators and
        L_1^(j+1) = [L_1^j, L_1]"""
        current = [self.unit_vector(index) for index in self.generators]
        series = []
        while True:
            rows, _ = reduced_rows(as_matrix(current, self.domain, self.dim))
            if not rows:
                return series
            if len(series) > self.dim:
                raise PreconditionError(
                    "Iterated brackets of the generators do not vanish")
            series.append(rows)
            current = [
                self.bracket_vectors(row, self.unit_vector(index))
                for row in rows for index in self.generators]

    def is_generated(self):
        """Whether the iterated brackets of the generators span L"""
        rows = [row for span in self.bracket_series() for row in span]
        return rank(as_matrix(rows, self.domain, self.dim)) == self.dim

    def format_combination(self, combination):
        return NCPoly(
            {(k,): value for k, value in combination.items()},
            self.domain).format(self.names)

    def __eq__(self, other):
        if not isinstance(other, ColorLieAlgebra):
            return NotImplemented
        return (
            self.names == other.names
            and self.degrees == other.degrees
            and self.epsilon_form == other.epsilon_form
            and self.brackets == other.brackets
            and self.generators == other.generators)

    def __repr__(self):
        return (
            f"ColorLieAlgebra({self.name or ''}: "
            f"{', '.join(self.names)})")

    @classmethod
    def from_json(cls, data):
        names = [entry[0] for entry in data['basis']]
        degrees = [entry[1] for entry in data['basis']]
        omega = [
            [to_scalar(value) for value in row] for row in data['omega']]
        from pygraded.io.color_lie_io import parse_combination
        brackets = {}
        for first, second, text in data.get('brackets', []):
            brackets[(names.index(first), names.index(second))] = (
                parse_combination(text, names))
        return cls(
            names, degrees, omega, brackets,
            generators=data.get('generators'), name=data.get('name'))

    def to_json(self):
        return {
            'name': self.name,
            'rank': self.rank,
            'basis': [
                [name, list(degree)]
                for name, degree in zip(self.names, self.degrees)],
            'omega': [row.split() for row in self.epsilon_form.format_rows()],
            'generators': [self.names[index] for index in self.generators],
            'brackets': [
                [self.names[i], self.names[j],
                 self.format_combination(self.brackets[(i, j)])]
                for i, j in sorted(self.brackets)]
        }

    @classmethod
    def from_text(cls, text):
        from pygraded.io.color_lie_io import parse_color_lie_text
        return parse_color_lie_text(text)

    def to_text(self):
        from pygraded.io.color_lie_io import format_color_lie_text
        return format_color_lie_text(self)


def check_color_axioms(algebra):
    """Verify the color Lie algebra axioms on all basis pairs and
    triples

    Returns
    -------
    passed: bool
    violations: list of str
        One entry per violated axiom instance, naming the basis
        elements involved
    """
    names = algebra.names
    zero = algebra.domain.zero
    violations = []

    for (i, j), combination in sorted(algebra.brackets.items()):
        expected = tuple(
            a + b for a, b in zip(algebra.degrees[i], algebra.degrees[j]))
        for k in sorted(combination):
            if algebra.degrees[k] != expected:
                violations.append(
                    f"grading: [{names[i]},{names[j]}] has component "
                    f"{names[k]} of degree "
                    f"{_format_degree(algebra.degrees[k])}, expected "
                    f"{_format_degree(expected)}")

    for degree in sorted(set(algebra.degrees)):
        if algebra.epsilon_form(degree, degree) != algebra.domain.one:
            violations.append(
                f"epsilon({_format_degree(degree)}, "
                f"{_format_degree(degree)}) != 1")

    for i in range(algebra.dim):
        for j in range(i, algebra.dim):
            forward = algebra.bracket(i, j)
            backward = algebra.bracket(j, i)
            factor = algebra.epsilon(i, j)
            if any(forward.get(k, zero) + factor * backward.get(k, zero)
                   for k in set(forward) | set(backward)):
                violations.append(
                    f"antisymmetry: [{names[i]},{names[j]}]")

    reported = set()
    units = [algebra.unit_vector(index) for index in range(algebra.dim)]
    for a, b, c in product(range(algebra.dim), repeat=3):
        key = tuple(sorted((a, b, c)))
        if key in reported:
            continue
        total = [zero] * algebra.dim
        for first, second, third, weight in (
                (a, b, c, algebra.epsilon(c, a)),
                (b, c, a, algebra.epsilon(a, b)),
                (c, a, b, algebra.epsilon(b, c))):
            inner = algebra.bracket_vectors(units[second], units[third])
            outer = algebra.bracket_vectors(units[first], inner)
            total = [x + weight * y for x, y in zip(total, outer)]
        if any(total):
            reported.add(key)
            violations.append(
                f"Jacobi: ({names[a]},{names[b]},{names[c]})")

    try:
        generated = algebra.is_generated()
    except PreconditionError as e:
        violations.append(f"generation: {e.message}")
    else:
        if not generated:
            violations.append(
                "generation: L is not generated by "
                f"{', '.join(names[index] for index in algebra.generators)}")

    for violation in violations:
        logger.debug(f"Color Lie axiom violation: {violation}")

    return not violations, violations
