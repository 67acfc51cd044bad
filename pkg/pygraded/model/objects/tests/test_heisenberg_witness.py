from unittest import TestCase

from sympy import QQ

from pygraded.model.objects.heisenberg_witness import (
    HeisenbergWitness, NuAutomorphism)
from pygraded.model.objects.nc_poly import NCPoly

X = NCPoly.generator(0)
Y = NCPoly.generator(1)
NAMES = ['x', 'y']


class TestHeisenbergWitness(TestCase):

    def setUp(self):
        self.witness = HeisenbergWitness(
            X * Y - (Y * X).scale(2), X, Y, 2)

    def test_init(self):
        self.assertEqual(2, self.witness.n)
        self.assertEqual(QQ(2), self.witness.u)
        self.assertEqual(self.witness.g, self.witness.display)

    def test_validation(self):
        with self.assertRaises(ValueError):
            HeisenbergWitness(X * Y, X, Y, 0)
        with self.assertRaises(ValueError):
            HeisenbergWitness(X * Y, X * X, Y, 1)
        with self.assertRaises(ValueError):
            HeisenbergWitness(X * Y, X, Y * Y, 1)
        with self.assertRaises(ValueError):
            HeisenbergWitness(X * Y + X, X, Y, 1)

    def test_format(self):
        self.assertEqual(
            'g = x*y - 2*y*x, x = x, y = y, u = 2',
            self.witness.format(NAMES))

    def test_serialisation(self):
        data = self.witness.to_json(NAMES)
        self.assertEqual('x*y - 2*y*x', data['g'])
        self.assertEqual('2', data['u'])

        witness = HeisenbergWitness.from_json(data)
        self.assertEqual(self.witness.g, witness.g)
        self.assertEqual(self.witness.u, witness.u)

        witness = HeisenbergWitness.from_text(
            self.witness.to_text(NAMES))
        self.assertEqual(self.witness.y, witness.y)


class TestNuAutomorphism(TestCase):

    def setUp(self):
        self.nu = NuAutomorphism([[QQ(1, 2), 0], [0, 2]])

    def test_validation(self):
        with self.assertRaises(ValueError):
            NuAutomorphism([[1, 0]])
        with self.assertRaises(ValueError):
            NuAutomorphism([[1, 1], [1, 1]])

    def test_apply(self):
        self.assertEqual(
            (X * Y).scale(1), self.nu.apply(X * Y))
        self.assertEqual(
            (X * X).scale(QQ(1, 4)), self.nu.apply_word((0, 0)))
        self.assertEqual(NCPoly.one(), self.nu.apply(NCPoly.one()))

    def test_powers(self):
        self.assertEqual(
            NuAutomorphism([[QQ(1, 4), 0], [0, 4]]), self.nu.power(2))
        self.assertEqual(
            NuAutomorphism([[2, 0], [0, QQ(1, 2)]]), self.nu.inverse())
        self.assertTrue(self.nu.power(0).is_identity())
        self.assertTrue(
            self.nu.compose(self.nu.inverse()).is_identity())

    def test_format(self):
        self.assertEqual(
            'nu(x) = 1/2*x, nu(y) = 2*y', self.nu.format(NAMES))
