"""Reading and writing algebra files (.alg) and the relation syntax:
products by '*', terms joined by '+' or '-', powers by '^' and scalar
coefficients in the exactscalar serialisation, e.g.
``x*x*y - 4*x*y*x + 4*y*x*x``.

An algebra file contains a header followed by one relation per line::

    # down-up algebra A(4, -4)
    name: downup_4_-4
    generators: x, y
    field: rational
    relations:
      x*x*y - 4*x*y*x + 4*y*x*x
      x*y*y - 4*y*x*y + 4*y*y*x
"""
import logging
from tokenize import TokenError

import sympy
from sympy.parsing.sympy_parser import (
    parse_expr, standard_transformations, convert_xor)
from sympy.polys.polyerrors import CoercionFailed

from pygraded.model.core.scalars import (
    RATIONAL, T, get_domain, domain_name, is_function_field)
from pygraded.model.objects.nc_poly import NCPoly
from pygraded.model.objects.presentation import Presentation
from pygraded.utilities import ParseError

from .utilities import load_text, save_text

logger = logging.getLogger(__name__)

_TRANSFORMATIONS = standard_transformations + (convert_xor,)

HEADER_KEYS = ['name', 'generators', 'field', 'relations']


def _symbol_table(names, domain):
    symbols = {}
    for name in names:
        if not name.isidentifier():
            raise ParseError(f"Invalid generator name '{name}'")
        if is_function_field(domain) and name == str(T):
            raise ParseError(
                f"Generator name '{name}' is reserved for the "
                f"rational function parameter")
        symbols[name] = sympy.Symbol(name, commutative=False)
    if is_function_field(domain):
        symbols[str(T)] = T
    return symbols


def _expand_factor(factor, indices, text, line, column):
    """Word contributed by a noncommutative factor such as x or x**3"""
    exponent = 1
    if factor.is_Pow:
        factor, exponent = factor.base, factor.exp
        if not (exponent.is_Integer and exponent > 0):
            raise ParseError(
                f"Only positive integer powers are allowed in '{text}'",
                line, column)
    if factor not in indices:
        raise ParseError(
            f"Cannot interpret factor '{factor}' in '{text}'",
            line, column)
    return (indices[factor],) * int(exponent)


def parse_poly(text, names, domain=RATIONAL, line=1, column=1):
    """Parse a free algebra element written in relation syntax

    Parameters
    ----------
    text: str
        Expression such as 'x*y - 2*y*x'
    names: list of str
        Generator names, in index order
    domain: sympy Domain
        Scalar variant of the coefficients
    line, column: int, optional
        Position of text inside a file, used for error messages

    Returns
    -------
    poly: NCPoly
    """
    symbols = _symbol_table(names, domain)
    indices = {
        symbols[name]: index for index, name in enumerate(names)}

    try:
        expression = parse_expr(
            text, local_dict=dict(symbols),
            transformations=_TRANSFORMATIONS)
    except (SyntaxError, TokenError, TypeError, NameError,
            sympy.SympifyError) as e:
        offset = getattr(e, 'offset', None) or 1
        raise ParseError(
            f"Malformed expression '{text.strip()}'",
            line, column + max(offset - 1, 0)) from e

    if not isinstance(expression, sympy.Expr):
        raise ParseError(
            f"Malformed expression '{text.strip()}'", line, column)

    unknown = expression.free_symbols - set(symbols.values())
    if unknown:
        name = sorted(str(symbol) for symbol in unknown)[0]
        raise ParseError(
            f"Unknown symbol '{name}'", line,
            column + max(text.find(name), 0))

    terms = {}
    for term in sympy.Add.make_args(sympy.expand(expression)):
        commutative, noncommutative = term.args_cnc()
        word = ()
        for factor in noncommutative:
            word += _expand_factor(factor, indices, text, line, column)
        try:
            coefficient = domain.from_sympy(sympy.Mul(*commutative))
        except CoercionFailed as e:
            raise ParseError(
                f"Coefficient '{sympy.Mul(*commutative)}' is not a "
                f"{domain_name(domain)} scalar", line, column) from e
        terms[word] = terms.get(word, domain.zero) + coefficient

    return NCPoly(terms, domain)


def _strip_comment(line):
    return line.split('#', 1)[0].rstrip()


def parse_algebra_text(text):
    """Parse the contents of an algebra file into a Presentation"""

    header = {}
    relation_lines = []
    in_relations = False

    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue

        if in_relations and raw[:1].isspace():
            column = len(line) - len(line.lstrip()) + 1
            relation_lines.append((line.strip(), number, column))
            continue

        key, sep, value = line.partition(':')
        key = key.strip()
        if not sep or key not in HEADER_KEYS:
            raise ParseError(
                f"Expected one of {', '.join(HEADER_KEYS)} "
                f"followed by ':'", number, 1)
        if key in header:
            raise ParseError(f"Duplicate header '{key}'", number, 1)

        header[key] = (value.strip(), number, line.index(':') + 2)
        in_relations = key == 'relations'
        if in_relations and value.strip():
            relation_lines.append(
                (value.strip(), number, line.index(':') + 2))

    if 'generators' not in header:
        raise ParseError("Missing 'generators' header", 1, 1)

    names_text, number, column = header['generators']
    names = [name.strip() for name in names_text.split(',')]
    if not all(names):
        raise ParseError("Empty generator name", number, column)

    domain = RATIONAL
    if 'field' in header:
        field, number, column = header['field']
        try:
            domain = get_domain(field)
        except ParseError as e:
            raise ParseError(e.message, number, column)

    relations = [
        parse_poly(relation, names, domain, number, column)
        for relation, number, column in relation_lines
    ]

    name = header['name'][0] if 'name' in header else None

    try:
        presentation = Presentation(names, [], domain, name=name)
    except ValueError as e:
        raise ParseError(str(e), header['generators'][1], 1)

    for relation, (_, number, column) in zip(relations, relation_lines):
        try:
            presentation._check_relation(relation)
        except ValueError as e:
            raise ParseError(str(e), number, column)
        presentation.relations.append(relation)

    return presentation


def format_algebra_text(presentation):
    """Serialise a Presentation in the algebra file format"""

    lines = []
    if presentation.name:
        lines.append(f"name: {presentation.name}")
    lines.append(f"generators: {', '.join(presentation.generators)}")
    lines.append(f"field: {domain_name(presentation.domain)}")
    lines.append("relations:")
    for relation in presentation.relations:
        lines.append(f"  {presentation.format(relation)}")

    return '\n'.join(lines) + '\n'


def load_algebra(file_name):
    """Load a Presentation from an algebra file"""
    return parse_algebra_text(load_text(file_name))


def save_algebra(presentation, file_name):
    save_text(format_algebra_text(presentation), file_name)
