import logging

from sympy import QQ

from pygraded.model.core.base_graded_object import BaseGradedObject
from pygraded.model.core.scalars import (
    RATIONAL, to_scalar, format_scalar, parse_scalar, get_domain,
    domain_name, unify_domains, normalize_projective, is_function_field)
from pygraded.utilities import ParseError

logger = logging.getLogger(__name__)


def _format_coordinate(value, domain):
    if is_function_field(domain):
        expression = domain.to_sympy(value)
        if expression.is_Rational:
            return format_scalar(QQ.from_sympy(expression))
    return format_scalar(value, domain)


def format_point(point, domain=RATIONAL):
    """Projective point as '(a:b:...)', constant coordinates printed
    as plain rationals"""
    return '(' + ':'.join(
        _format_coordinate(value, domain) for value in point) + ')'


def parse_point(text, domain=RATIONAL, ngens=None, column=1):
    """Parse '(a:b:...)', checking the arity when ngens is given"""
    column += len(text) - len(text.lstrip())
    text = text.strip()
    if not (text.startswith('(') and text.endswith(')')):
        raise ParseError(f"Malformed projective point '{text}'", 1, column)

    values = text[1:-1].split(':')
    if ngens is not None and len(values) != ngens:
        raise ParseError(
            f"Point '{text}' has {len(values)} coordinates, "
            f"expected {ngens}", 1, column)

    point, offset = [], column + 1
    for value in values:
        point.append(parse_scalar(value, domain, 1, offset))
        offset += len(value) + 1
    return point


def split_points(text):
    """Top level '(...)' groups of a point sequence"""
    groups, depth, start = [], 0, None
    for index, char in enumerate(text):
        if char == '(':
            if depth == 0:
                start = index
            depth += 1
        elif char == ')':
            depth -= 1
            if depth == 0:
                groups.append(text[start:index + 1])
            elif depth < 0:
                break
    if depth != 0 or not groups:
        raise ParseError(
            f"Malformed point sequence '{text}'", 1,
            (start or 0) + 1)
    return groups


def parse_points(text, domain=RATIONAL, ngens=None):
    """Parse a point sequence '(a:b),(c:d),...' into coordinate lists"""
    points, position = [], 0
    for group in split_points(text):
        position = text.index(group, position)
        points.append(parse_point(group, domain, ngens, position + 1))
        position += len(group)
    return points


def format_points(points, domain=RATIONAL):
    return ','.join(format_point(point, domain) for point in points)


class TruncatedPointModule(BaseGradedObject):
    """Truncated point module over a presentation, stored as the
    sequence of d projective points p^(1), ..., p^(d). Generator x_j
    acts by x_j m_{i-1} = p^(i)_j m_i, so the sequence describes a
    cyclic module with d + 1 one-dimensional components"""

    def __init__(self, presentation, points, domain=None):

        self.presentation = presentation
        self.domain = unify_domains(
            presentation.domain, domain or presentation.domain)

        if not points:
            raise ValueError(
                "A truncated point module needs at least one point")

        self.points = []
        for point in points:
            if len(point) != presentation.ngens:
                raise ValueError(
                    f"Point {point} does not have "
                    f"{presentation.ngens} coordinates")
            point = [to_scalar(value, self.domain) for value in point]
            self.points.append(normalize_projective(point))

    @property
    def length(self):
        """Number of points d, the module has d + 1 components"""
        return len(self.points)

    def prefix(self, length):
        return TruncatedPointModule(
            self.presentation, self.points[:length], self.domain)

    def shift(self):
        """The sequence p^(2), ..., p^(d)"""
        return TruncatedPointModule(
            self.presentation, self.points[1:], self.domain)

    def extend(self, point):
        return TruncatedPointModule(
            self.presentation, self.points + [point], self.domain)

    def key(self):
        return tuple(tuple(point) for point in self.points)

    def __eq__(self, other):
        if not isinstance(other, TruncatedPointModule):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def format(self):
        return format_points(self.points, self.domain)

    def __repr__(self):
        return f"TruncatedPointModule({self.format()})"

    @classmethod
    def from_json(cls, data, presentation=None):
        from pygraded.model.objects.presentation import Presentation
        if presentation is None:
            presentation = Presentation.from_json(data['presentation'])
        domain = get_domain(data.get('field', 'rational'))
        points = [parse_point(text, domain) for text in data['points']]
        return cls(presentation, points, domain)

    def to_json(self):
        return {
            'presentation': self.presentation.to_json(),
            'field': domain_name(self.domain),
            'points': [
                format_point(point, self.domain) for point in self.points]
        }

    @classmethod
    def from_text(cls, text, presentation=None):
        """Parse '(a:b),(c:d)' against a presentation"""
        domain = presentation.domain
        points = parse_points(text, domain, presentation.ngens)
        return cls(presentation, points, domain)

    def to_text(self):
        return self.format()
