#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: test the state sum oracle and the Jones polynomial
# Created: 06.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

import os
import unittest

import sympy as sp

from khmutation.diagrams import DiagramError, load_diagram, glue
from khmutation.homology import PoincarePolynomial, khovanov_homology
from khmutation.oracle import q, state_circles, oracle_state_sum, kauffman_bracket, jones_polynomial, \
    euler_characteristic

FIXTURES = os.path.join(os.path.dirname(__file__), 'fixtures')

CLOSED = ['unknot0.json', 'unknot1.json', 'unlink2.json', 'trefoil_left.json', 'trefoil_right.json',
          'trefoil_right4.json', 'trefoil_right5.json', 'hopf.json', 'figure_eight.json', 'knot_5_1.json',
          'knot_6_1.json', 'knot_7_4.json', 'knot_8_19.json']

DETERMINANTS = [('trefoil_left.json', 3), ('figure_eight.json', 5), ('knot_5_1.json', 5), ('knot_6_1.json', 9),
                ('knot_7_4.json', 15), ('knot_8_19.json', 3)]


def fixture(name):
    return load_diagram(os.path.join(FIXTURES, name))


class TestStateCircles(unittest.TestCase):
    def test_001_left_trefoil(self):
        diagram = fixture('trefoil_left.json')
        self.assertEqual(state_circles(diagram, 0)[1], 3)
        self.assertEqual(state_circles(diagram, 7)[1], 2)

    def test_002_numbering(self):
        circle, count = state_circles(fixture('unknot1.json'), 0)
        self.assertEqual(circle, {1: 0, 2: 1})


class TestStateSum(unittest.TestCase):
    def test_001_matches_bracket(self):
        for name in CLOSED:
            diagram = fixture(name)
            for t in (0, 1):
                self.assertEqual(oracle_state_sum(diagram, t), khovanov_homology(diagram, t), name)

    def test_002_glued_links(self):
        for inner, outer in (('inner1.json', 'outer1.json'), ('inner2.json', 'outer3.json')):
            link = glue(fixture(inner), fixture(outer))
            self.assertEqual(oracle_state_sum(link, 0), khovanov_homology(link, 0))

    def test_003_open_diagram(self):
        with self.assertRaises(DiagramError):
            oracle_state_sum(fixture('inner1.json'))


class TestJones(unittest.TestCase):
    def test_001_unknot(self):
        self.assertEqual(jones_polynomial(fixture('unknot0.json')), q + 1 / q)
        self.assertEqual(jones_polynomial(fixture('unknot1.json')), q + 1 / q)
        self.assertEqual(jones_polynomial(fixture('unknot0.json'), normalized=True), 1)

    def test_002_right_trefoil(self):
        expected = q + q ** 3 + q ** 5 - q ** 9
        self.assertEqual(sp.expand(jones_polynomial(fixture('trefoil_right.json')) - expected), 0)

    def test_003_euler_characteristic(self):
        for name in CLOSED:
            diagram = fixture(name)
            chi = euler_characteristic(khovanov_homology(diagram))
            self.assertEqual(sp.expand(chi - jones_polynomial(diagram)), 0, name)

    def test_004_kauffman_bracket_of_kink(self):
        bracket = kauffman_bracket(fixture('unknot1.json'))
        self.assertEqual(sp.expand(bracket - (1 + q ** -2)), 0)

    def test_005_lee_table_refused(self):
        with self.assertRaises(ValueError):
            euler_characteristic(khovanov_homology(fixture('unknot0.json'), 1))

    def test_006_exact_coefficients(self):
        chi = euler_characteristic(PoincarePolynomial(0, {(-3, -9): 1, (-2, -5): 2}))
        self.assertEqual(sp.expand(chi - (2 * q ** -5 - q ** -9)), 0)
        self.assertFalse(chi.atoms(sp.Float))
        self.assertEqual(sp.Poly(chi * q ** 9, q).all_coeffs(), [2, 0, 0, 0, -1])

    def test_007_determinant(self):
        for name, determinant in DETERMINANTS:
            jones = jones_polynomial(fixture(name), normalized=True)
            self.assertEqual(abs(sp.expand(jones.subs(q, sp.I))), determinant, name)

    def test_008_crossing_signs(self):
        self.assertEqual(fixture('knot_5_1.json').signs(), [-1] * 5)
        self.assertEqual(fixture('knot_7_4.json').signs(), [-1] * 7)
        self.assertEqual(fixture('knot_8_19.json').signs(), [1] * 8)


if __name__ == '__main__':
    unittest.main()
