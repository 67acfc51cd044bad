import os
from tempfile import NamedTemporaryFile
from unittest import TestCase

from sympy import QQ

from pygraded.io.color_lie_io import (
    parse_color_lie_text, format_color_lie_text, load_color_lie,
    save_color_lie, parse_combination)
from pygraded.tests.fixtures import (
    color_lie_fixtures, heisenberg_2_path, heisenberg_corrupt_path,
    abelian_3_path)
from pygraded.tests.probe_classes.color_lie import probe_heisenberg
from pygraded.utilities import ParseError

HEADER = "rank: 2\nbasis:\n  x: (1,0)\n  y: (0,1)\n"


class TestColorLieIO(TestCase):

    def test_load_heisenberg(self):
        algebra = load_color_lie(heisenberg_2_path)
        self.assertEqual('heisenberg_2', algebra.name)
        self.assertEqual(['x', 'y', 'z'], algebra.names)
        self.assertEqual([(1, 0), (0, 1), (1, 1)], algebra.degrees)
        self.assertEqual(QQ(2), algebra.omega[0][1])
        self.assertEqual(
            probe_heisenberg(2).brackets, algebra.brackets)

    def test_corrupt_keeps_both_brackets(self):
        algebra = load_color_lie(heisenberg_corrupt_path)
        self.assertEqual({2: 2}, algebra.bracket(1, 0))

    def test_abelian(self):
        algebra = load_color_lie(abelian_3_path)
        self.assertEqual(3, algebra.rank)
        self.assertEqual({}, algebra.brackets)
        self.assertEqual([0, 1, 2], algebra.generators)

    def test_round_trip(self):
        for path in color_lie_fixtures:
            algebra = load_color_lie(path)
            text = format_color_lie_text(algebra)
            self.assertEqual(algebra, parse_color_lie_text(text))
            self.assertEqual(text, format_color_lie_text(
                parse_color_lie_text(text)))

    def test_save(self):
        algebra = load_color_lie(heisenberg_2_path)
        with NamedTemporaryFile(suffix='.cl', delete=False) as outfile:
            file_name = outfile.name
        try:
            save_color_lie(algebra, file_name)
            self.assertEqual(algebra, load_color_lie(file_name))
        finally:
            os.remove(file_name)

    def test_parse_combination(self):
        self.assertEqual(
            {2: QQ(-1, 2), 0: QQ(1)},
            parse_combination('x - z/2', ['x', 'y', 'z']))
        self.assertEqual({}, parse_combination('0', ['x']))
        with self.assertRaises(ParseError):
            parse_combination('x*y', ['x', 'y'])

    def test_parse_errors(self):
        omega = "omega:\n  1 2\n  1/2 1\n"
        texts = [
            HEADER + omega + "brackets:\n  [x,q] = y\n",
            HEADER + omega + "brackets:\n  x,y = y\n",
            HEADER + "omega:\n  1 2\n",
            HEADER + "omega:\n  1 2\n  2 1\n",
            "rank: 2\nbasis:\n  x: (1,0,0)\n" + omega,
            "rank: 2\nbasis:\n  x: 1,0\n" + omega,
            "rank: two\n" + omega,
            HEADER + omega + "colors: 2\n",
            HEADER + omega + "generators: x, q\n",
            HEADER + omega + "generators: y, x\n",
            HEADER,
        ]
        for text in texts:
            with self.assertRaises(ParseError, msg=text):
                parse_color_lie_text(text)

    def test_error_position(self):
        text = HEADER + "omega:\n  1 2\n  1/2 1\nbrackets:\n  [x,q] = y\n"
        with self.assertRaises(ParseError) as context:
            parse_color_lie_text(text)
        self.assertEqual(9, context.exception.line)
