"""Reading and writing color Lie algebra files (.cl).

A color Lie file lists the grading rank, a homogeneous basis with
Z^(m+1) degrees, the bicharacter matrix omega row by row, optionally the
degree one generators, and the nonzero brackets::

    # omega-Heisenberg color Lie algebra, omega = 2
    name: heisenberg_2
    rank: 2
    basis:
      x: (1,0)
      y: (0,1)
      z: (1,1)
    omega:
      1 2
      1/2 1
    generators: x, y
    brackets:
      [x,y] = z

A bracket [a,b] listed without [b,a] is completed by antisymmetry.
"""
import logging
import re

from pygraded.model.core.scalars import RATIONAL, parse_scalar
from pygraded.model.objects.color_lie_algebra import ColorLieAlgebra
from pygraded.utilities import ParseError

from .algebra_io import parse_poly
from .utilities import load_text, save_text

logger = logging.getLogger(__name__)

HEADER_KEYS = ['name', 'rank', 'basis', 'omega', 'generators', 'brackets']

BLOCK_KEYS = ['basis', 'omega', 'brackets']

_BRACKET = re.compile(
    r'^\[\s*(?P<first>\w+)\s*,\s*(?P<second>\w+)\s*\]\s*=\s*(?P<value>.+)$')

_DEGREE = re.compile(r'^\(\s*(-?\d+(\s*,\s*-?\d+)*)\s*\)$')


def _strip_comment(line):
    return line.split('#', 1)[0].rstrip()


def parse_combination(text, names, line=1, column=1):
    """Parse a linear combination of basis elements such as
    '-1/2*z + w' into a {index: coefficient} dictionary"""
    poly = parse_poly(text, names, RATIONAL, line, column)
    combination = {}
    for word, value in poly.items():
        if len(word) != 1:
            raise ParseError(
                f"Bracket values must be linear combinations of basis "
                f"elements, got '{text.strip()}'", line, column)
        combination[word[0]] = value
    return combination


def _parse_degree(text, line, column):
    match = _DEGREE.match(text.strip())
    if match is None:
        raise ParseError(
            f"Malformed degree '{text.strip()}', expected e.g. (1,0)",
            line, column)
    return tuple(int(value) for value in match.group(1).split(','))


def _split_sections(text):
    header = {}
    blocks = {key: [] for key in BLOCK_KEYS}
    current = None

    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue

        if current is not None and raw[:1].isspace():
            column = len(line) - len(line.lstrip()) + 1
            blocks[current].append((line.strip(), number, column))
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
        current = key if key in BLOCK_KEYS else None
        if current is not None and value.strip():
            raise ParseError(
                f"'{key}' entries must start on the following lines",
                number, line.index(':') + 2)

    for key in ('rank', 'basis', 'omega'):
        if key not in header:
            raise ParseError(f"Missing '{key}' header", 1, 1)

    return header, blocks


def parse_color_lie_text(text):
    """Parse the contents of a color Lie file into a ColorLieAlgebra"""

    header, blocks = _split_sections(text)

    value, number, column = header['rank']
    try:
        rank = int(value)
    except ValueError as e:
        raise ParseError(
            f"Rank must be a positive integer, got '{value}'",
            number, column) from e
    if rank < 1:
        raise ParseError("Rank must be positive", number, column)

    names = []
    degrees = []
    for entry, number, column in blocks['basis']:
        name, sep, degree = entry.partition(':')
        if not sep:
            raise ParseError(
                "Basis entries must read 'name: (degree)'", number, column)
        degree = _parse_degree(degree, number, column)
        if len(degree) != rank:
            raise ParseError(
                f"Degree of '{name.strip()}' has {len(degree)} "
                f"coordinates, expected {rank}", number, column)
        names.append(name.strip())
        degrees.append(degree)

    omega = []
    for entry, number, column in blocks['omega']:
        omega.append([
            parse_scalar(value, RATIONAL, number, column)
            for value in entry.split()])
    if len(omega) != rank:
        raise ParseError(
            f"omega must have {rank} rows, got {len(omega)}",
            header['omega'][1], 1)

    brackets = {}
    for entry, number, column in blocks['brackets']:
        match = _BRACKET.match(entry)
        if match is None:
            raise ParseError(
                "Bracket lines must read '[a,b] = value'", number, column)
        pair = []
        for key in ('first', 'second'):
            if match.group(key) not in names:
                raise ParseError(
                    f"Unknown basis element '{match.group(key)}'",
                    number, column + match.start(key))
            pair.append(names.index(match.group(key)))
        if tuple(pair) in brackets:
            raise ParseError(
                f"Duplicate bracket [{match.group('first')},"
                f"{match.group('second')}]", number, column)
        brackets[tuple(pair)] = parse_combination(
            match.group('value'), names, number,
            column + match.start('value'))

    generators = None
    if 'generators' in header:
        value, number, column = header['generators']
        generators = [item.strip() for item in value.split(',')]
        for item in generators:
            if item not in names:
                raise ParseError(
                    f"Unknown generator '{item}'", number, column)

    name = header['name'][0] if 'name' in header else None

    try:
        return ColorLieAlgebra(
            names, degrees, omega, brackets, generators, name=name)
    except ValueError as e:
        raise ParseError(str(e), header['basis'][1], 1) from e


def format_color_lie_text(algebra):
    """Serialise a ColorLieAlgebra in the color Lie file format"""

    lines = []
    if algebra.name:
        lines.append(f"name: {algebra.name}")
    lines.append(f"rank: {algebra.rank}")
    lines.append("basis:")
    for name, degree in zip(algebra.names, algebra.degrees):
        lines.append(f"  {name}: ({','.join(str(d) for d in degree)})")
    lines.append("omega:")
    lines += [f"  {row}" for row in algebra.epsilon_form.format_rows()]
    lines.append(
        "generators: "
        f"{', '.join(algebra.names[index] for index in algebra.generators)}")
    lines.append("brackets:")
    for i, j in sorted(algebra.brackets):
        value = algebra.format_combination(algebra.brackets[(i, j)])
        lines.append(
            f"  [{algebra.names[i]},{algebra.names[j]}] = {value}")

    return '\n'.join(lines) + '\n'


def load_color_lie(file_name):
    """Load a ColorLieAlgebra from a color Lie file"""
    return parse_color_lie_text(load_text(file_name))


def save_color_lie(algebra, file_name):
    save_text(format_color_lie_text(algebra), file_name)
