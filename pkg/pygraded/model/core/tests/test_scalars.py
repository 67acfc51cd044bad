from unittest import TestCase

from hypothesis import given, settings, strategies as st
from sympy import QQ

from pygraded.model.core.scalars import (
    RATIONAL, RATIONAL_FUNCTION, T, get_domain, domain_name,
    unify_domains, to_scalar, format_scalar, parse_scalar,
    rational_roots, specialize_vector, normalize_projective)
from pygraded.utilities import ParseError

rationals = st.fractions(max_denominator=50).map(
    lambda value: QQ(value.numerator, value.denominator))


class TestScalars(TestCase):

    def test_get_domain(self):
        self.assertEqual(RATIONAL, get_domain('rational'))
        self.assertEqual(
            RATIONAL_FUNCTION, get_domain('rational-function'))
        with self.assertRaises(ParseError):
            get_domain('complex')

    def test_domain_name(self):
        self.assertEqual('rational', domain_name(RATIONAL))
        self.assertEqual(
            'rational-function', domain_name(RATIONAL_FUNCTION))
        self.assertEqual(
            RATIONAL_FUNCTION, unify_domains(RATIONAL, RATIONAL_FUNCTION))
        self.assertEqual(RATIONAL, unify_domains(RATIONAL))

    def test_format_rational(self):
        self.assertEqual('3', format_scalar(QQ(3)))
        self.assertEqual('-1/2', format_scalar(QQ(-1, 2)))
        self.assertEqual('0', format_scalar(QQ(0)))

    def test_parse_rational(self):
        self.assertEqual(QQ(2, 3), parse_scalar('2/3'))
        self.assertEqual(QQ(-5), parse_scalar(' -5 '))
        self.assertEqual(QQ(1, 4), parse_scalar('2^-2'))

    def test_parse_errors(self):
        with self.assertRaises(ParseError) as context:
            parse_scalar('2/', line=4, column=3)
        self.assertEqual(4, context.exception.line)

        with self.assertRaises(ParseError):
            parse_scalar('t + 1')

        with self.assertRaises(ParseError):
            parse_scalar('s', RATIONAL_FUNCTION)

    def test_rational_function(self):
        value = parse_scalar('(3*t^2 - 1)/(2*t)', RATIONAL_FUNCTION)
        self.assertTrue(
            format_scalar(value, RATIONAL_FUNCTION).endswith(')/(t)'))
        self.assertEqual(
            value, parse_scalar(
                format_scalar(value, RATIONAL_FUNCTION),
                RATIONAL_FUNCTION))

        polynomial = to_scalar(T + 1, RATIONAL_FUNCTION)
        self.assertEqual(
            '(t+1)', format_scalar(polynomial, RATIONAL_FUNCTION))

    def test_canonical_form(self):
        first = parse_scalar('(t^2 - 1)/(t - 1)', RATIONAL_FUNCTION)
        second = parse_scalar('t + 1', RATIONAL_FUNCTION)
        self.assertEqual(first, second)

    def test_to_scalar(self):
        self.assertEqual(QQ(3), to_scalar(3))
        self.assertEqual(QQ(1, 2), to_scalar('1/2'))
        self.assertEqual(
            RATIONAL_FUNCTION.convert(2),
            to_scalar(QQ(2), RATIONAL_FUNCTION))
        self.assertEqual(
            QQ(2), to_scalar(RATIONAL_FUNCTION.convert(2), RATIONAL))

    def test_rational_roots(self):
        value = parse_scalar(
            '(t - 2)*(t^2 + 1)/(3*t + 1)', RATIONAL_FUNCTION)
        roots, residual = rational_roots(value)
        self.assertEqual([QQ(-1, 3), QQ(2)], roots)
        self.assertEqual(2, residual)

        roots, residual = rational_roots(value, poles_only=True)
        self.assertEqual([QQ(-1, 3)], roots)
        self.assertEqual(0, residual)

        self.assertEqual(([], 0), rational_roots(QQ(2), RATIONAL))

    def test_specialize_vector(self):
        vector = [
            RATIONAL_FUNCTION.one,
            to_scalar(1 / T, RATIONAL_FUNCTION)]
        self.assertEqual(
            [QQ(0), QQ(1)], specialize_vector(vector, QQ(0)))
        self.assertEqual(
            [QQ(2), QQ(1)], specialize_vector(vector, QQ(2)))

        vector = [to_scalar(T, RATIONAL_FUNCTION)] * 2
        self.assertIsNone(specialize_vector(vector, QQ(0)))

    def test_normalize_projective(self):
        self.assertEqual(
            [QQ(0), QQ(1), QQ(1, 2)],
            normalize_projective([QQ(0), QQ(4), QQ(2)]))
        with self.assertRaises(ValueError):
            normalize_projective([QQ(0), QQ(0)])

    @settings(max_examples=100, deadline=None)
    @given(rationals, rationals, rationals)
    def test_field_axioms(self, a, b, c):
        self.assertEqual((a + b) + c, a + (b + c))
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * (b + c), a * b + a * c)
        if a:
            self.assertEqual(QQ(1), a * (QQ(1) / a))

    @settings(max_examples=50, deadline=None)
    @given(rationals)
    def test_serialisation(self, value):
        self.assertEqual(value, parse_scalar(format_scalar(value)))
