"""Exact scalars: rationals (QQ) and univariate rational functions QQ(t).

Scalars are sympy domain elements. The domain acts as the variant tag;
sympy keeps both kinds of element in reduced canonical form so that equality
is decided by comparison.
"""
import logging
from tokenize import TokenError

import sympy
from sympy import QQ
from sympy.parsing.sympy_parser import (
    parse_expr, standard_transformations, convert_xor)
from sympy.polys.polyerrors import CoercionFailed

from pygraded.utilities import ParseError

logger = logging.getLogger(__name__)

#: Indeterminate used by the rational function variant
T = sympy.Symbol('t')

RATIONAL = QQ
RATIONAL_FUNCTION = QQ.frac_field(T)

DOMAINS = {
    'rational': RATIONAL,
    'rational-function': RATIONAL_FUNCTION
}

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def get_domain(name):
    """Return the scalar domain registered under name"""
    try:
        return DOMAINS[name]
    except KeyError:
        raise ParseError(
            f"Unknown scalar variant '{name}', expected one of "
            f"{', '.join(DOMAINS)}")


def domain_name(domain):
    """Return the variant tag of a scalar domain"""
    if is_function_field(domain):
        return 'rational-function'
    return 'rational'


def is_function_field(domain):
    return domain == RATIONAL_FUNCTION


def unify_domains(*domains):
    """Smallest variant containing all of domains"""
    if any(is_function_field(domain) for domain in domains):
        return RATIONAL_FUNCTION
    return RATIONAL


def to_scalar(value, domain=RATIONAL):
    """Convert ints, rationals, sympy numbers, strings or scalars from
    the other variant into an element of domain"""

    if isinstance(value, str):
        return parse_scalar(value, domain)

    if isinstance(value, int):
        return domain.convert(value)

    if QQ.of_type(value):
        if domain == QQ:
            return value
        return domain.convert_from(value, QQ)

    if domain.of_type(value):
        return value

    if RATIONAL_FUNCTION.of_type(value):
        if is_function_field(domain):
            return value
        expression = RATIONAL_FUNCTION.to_sympy(value)
        if not expression.is_Rational:
            raise CoercionFailed(
                f"{expression} is not a rational number")
        return QQ.from_sympy(expression)

    if isinstance(value, sympy.Basic):
        return domain.from_sympy(value)

    return domain.convert(value)


def _poly_text(expression):
    return sympy.sstr(sympy.expand(expression)).replace(
        '**', '^').replace(' ', '')


def format_scalar(value, domain=RATIONAL):
    """Serialise a scalar as 'p/q' or '(poly)/(poly)'"""

    if not is_function_field(domain):
        numerator, denominator = value.numerator, value.denominator
        if denominator == 1:
            return f"{numerator}"
        return f"{numerator}/{denominator}"

    numerator, denominator = sympy.fraction(
        sympy.cancel(domain.to_sympy(value)))
    leading = sympy.Poly(denominator, T).LC()
    numerator = sympy.expand(numerator / leading)
    denominator = sympy.expand(denominator / leading)

    if denominator == 1:
        return f"({_poly_text(numerator)})"
    return f"({_poly_text(numerator)})/({_poly_text(denominator)})"


def parse_scalar(text, domain=RATIONAL, line=1, column=1):
    """Parse a scalar literal in the serialisation syntax"""

    local_dict = {'t': T} if is_function_field(domain) else {}

    try:
        expression = parse_expr(
            text.strip(), local_dict=local_dict,
            transformations=_TRANSFORMATIONS)
    except (SyntaxError, TokenError, TypeError, NameError,
            sympy.SympifyError) as e:
        offset = getattr(e, 'offset', None) or 1
        raise ParseError(
            f"Malformed scalar '{text}'", line, column + offset - 1
        ) from e

    if not isinstance(expression, sympy.Expr):
        raise ParseError(f"Malformed scalar '{text}'", line, column)

    allowed = {T} if is_function_field(domain) else set()
    unknown = expression.free_symbols - allowed
    if unknown:
        name = sorted(str(symbol) for symbol in unknown)[0]
        raise ParseError(
            f"Unknown symbol '{name}' in scalar",
            line, column + max(text.find(name), 0))

    try:
        return domain.from_sympy(expression)
    except CoercionFailed as e:
        raise ParseError(
            f"'{text}' is not a {domain_name(domain)} scalar",
            line, column) from e


def rational_roots(value, domain=RATIONAL_FUNCTION, poles_only=False):
    """Rational zeros and poles of a rational function scalar, or only
    the poles when poles_only is set

    Returns
    -------
    roots: list of QQ
        Sorted rational values of t where value vanishes or
        is undefined
    residual: int
        Total degree of irreducible factors without rational roots
    """
    if not is_function_field(domain) or not value:
        return [], 0

    roots = set()
    residual = 0
    parts = sympy.fraction(sympy.cancel(domain.to_sympy(value)))
    if poles_only:
        parts = parts[1:]

    for part in parts:
        poly = sympy.Poly(part, T, domain=QQ)
        if poly.degree() <= 0:
            continue
        found = poly.ground_roots()
        roots.update(QQ.from_sympy(root) for root in found)
        residual += poly.degree() - sum(found.values())

    return sorted(roots), residual


def specialize_vector(vector, value, domain=RATIONAL_FUNCTION):
    """Substitute t = value into a projective vector of rational
    functions, clearing denominators first. Returns None when the
    specialised vector vanishes"""

    if not is_function_field(domain):
        return list(vector)

    expressions = [sympy.cancel(domain.to_sympy(entry)) for entry in vector]
    common = sympy.lcm_list(
        [sympy.fraction(entry)[1] for entry in expressions])
    point = QQ.to_sympy(value)

    result = [
        QQ.from_sympy(
            sympy.cancel(entry * common).subs(T, point))
        for entry in expressions
    ]

    if not any(result):
        return None
    return result


def normalize_projective(vector):
    """Scale vector so that its first nonzero coordinate equals 1"""
    for entry in vector:
        if entry:
            return [coordinate / entry for coordinate in vector]
    raise ValueError("Zero vector has no projective representative")


def random_rational(rng, bound=9):
    """Draw a rational p/q with |p| <= bound and 1 <= q <= bound from a
    numpy Generator"""
    numerator = int(rng.integers(-bound, bound + 1))
    denominator = int(rng.integers(1, bound + 1))
    return QQ(numerator, denominator)
