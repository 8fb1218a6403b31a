#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: test Hom(empty, -) and F_2 homology
# Created: 06.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

import os
import unittest

from khmutation.diagrams import FlatTangle, TangleDiagram, load_diagram
from khmutation.cob import CobObject, Morphism
from khmutation.matcat import Complex, MatObject, MatMorphism
from khmutation.bracket import khovanov_bracket, saddle
from khmutation.homology import (HomologyError, LinearComplex, PoincarePolynomial, hom_from_empty, linearize,
                                 f2_homology, homology, khovanov_homology)

FIXTURES = os.path.join(os.path.dirname(__file__), 'fixtures')

EMPTY = CobObject()
CIRCLE = CobObject(FlatTangle((), 1))


def fixture(name):
    return load_diagram(os.path.join(FIXTURES, name))


def table(*keys):
    return PoincarePolynomial(0, dict((key, 1) for key in keys))


UNKNOT = table((0, -1), (0, 1))
RIGHT_TREFOIL = table((0, 1), (0, 3), (2, 5), (2, 7), (3, 7), (3, 9))
LEFT_TREFOIL = table((0, -1), (0, -3), (-2, -5), (-2, -7), (-3, -7), (-3, -9))
NEGATIVE_HOPF = table((0, 0), (0, -2), (-2, -4), (-2, -6))
FIGURE_EIGHT = table((-2, -5), (-2, -3), (-1, -3), (-1, -1), (0, -1), (0, 1), (1, 1), (1, 3), (2, 3), (2, 5))

EXPECTED = [
    ('unknot0.json', UNKNOT),
    ('unknot1.json', UNKNOT),
    ('trefoil_right.json', RIGHT_TREFOIL),
    ('trefoil_right4.json', RIGHT_TREFOIL),
    ('trefoil_right5.json', RIGHT_TREFOIL),
    ('trefoil_left.json', LEFT_TREFOIL),
    ('trefoil_left.pd', LEFT_TREFOIL),
    ('hopf.json', NEGATIVE_HOPF),
    ('figure_eight.json', FIGURE_EIGHT),
]


class TestHomFromEmpty(unittest.TestCase):
    def test_001_empty(self):
        self.assertEqual(hom_from_empty(EMPTY), [(0, 0)])

    def test_002_circle(self):
        self.assertEqual(hom_from_empty(CIRCLE), [(0, 1), (1, -1)])

    def test_003_two_circles(self):
        self.assertEqual([q for mask, q in hom_from_empty(CobObject(FlatTangle((), 2)))], [2, 0, 0, -2])

    def test_004_shift(self):
        self.assertEqual(hom_from_empty(CIRCLE.shifted(3)), [(0, 4), (1, 2)])

    def test_005_open_object(self):
        with self.assertRaises(HomologyError):
            hom_from_empty(CobObject(FlatTangle([('a', 'b')])))


class TestLinearize(unittest.TestCase):
    def test_001_identity(self):
        complex_ = Complex({0: MatObject([CIRCLE]), 1: MatObject([CIRCLE])},
                           {0: MatMorphism(MatObject([CIRCLE]), MatObject([CIRCLE]),
                                           [(0, 0, Morphism.identity(CIRCLE))])})
        linear = linearize(complex_)
        self.assertEqual(linear.columns[0], [1, 2])
        self.assertEqual(f2_homology(linear), PoincarePolynomial(0))

    def test_002_merge(self):
        complex_ = khovanov_bracket(fixture('unknot1.json'))
        self.assertEqual(linearize(complex_, 0).columns[0], [1, 2, 2, 0])
        self.assertEqual(linearize(complex_, 1).columns[0], [1, 2, 2, 1])

    def test_003_split(self):
        s = saddle(TangleDiagram('plane', {}, [[1, 2, 2, 1]]), 0, 0)
        cup = Morphism.from_terms(EMPTY, s.source, [(0, 0)])
        dotted_cup = Morphism.from_terms(EMPTY, s.source, [(1, 0)])
        self.assertEqual(s.compose(cup).terms, frozenset([(1, 0), (2, 0)]))
        self.assertEqual(s.compose(dotted_cup).terms, frozenset([(3, 0), (0, 1)]))

    def test_004_open_complex(self):
        with self.assertRaises(HomologyError):
            linearize(khovanov_bracket(fixture('inner1.json')))

    def test_005_bad_t(self):
        with self.assertRaises(HomologyError):
            linearize(khovanov_bracket(fixture('unknot0.json')), 2)

    def test_006_not_square_zero(self):
        basis = dict((i, [(0, 0, 0)]) for i in range(3))
        linear = LinearComplex(basis, {0: [1], 1: [1]}, 0)
        self.assertEqual(linear.check_square(), 0)
        with self.assertRaises(HomologyError):
            f2_homology(linear)


class TestKhovanovHomology(unittest.TestCase):
    def test_001_expected_tables(self):
        for name, expected in EXPECTED:
            self.assertEqual(khovanov_homology(fixture(name)), expected, name)

    def test_002_lee_tables(self):
        for name, expected in EXPECTED:
            self.assertEqual(khovanov_homology(fixture(name), 1), expected.collapsed(), name)

    def test_003_lee_totals(self):
        self.assertEqual(khovanov_homology(fixture('unknot0.json'), 1).total(), 2)
        self.assertEqual(khovanov_homology(fixture('hopf.json'), 1).total(), 4)
        self.assertEqual(khovanov_homology(fixture('trefoil_right.json'), 1).total(), 6)

    def test_004_simplified(self):
        for name, expected in EXPECTED:
            for t in (0, 1):
                self.assertEqual(khovanov_homology(fixture(name), t, simplify=True),
                                 khovanov_homology(fixture(name), t), name)

    def test_005_unlink(self):
        expected = PoincarePolynomial(0, {(0, 2): 1, (0, 0): 2, (0, -2): 1})
        self.assertEqual(khovanov_homology(fixture('unlink2.json')), expected)

    def test_006_open_diagram(self):
        with self.assertRaises(HomologyError):
            khovanov_homology(fixture('inner1.json'))

    def test_007_homology_of_bracket(self):
        complex_ = khovanov_bracket(fixture('trefoil_right.json'))
        self.assertEqual(homology(complex_, 0), RIGHT_TREFOIL)

    def test_008_larger_knots(self):
        for name in ('knot_5_1.json', 'knot_6_1.json', 'knot_7_4.json', 'knot_8_19.json'):
            diagram = fixture(name)
            khovanov = khovanov_homology(diagram, simplify=True)
            self.assertEqual(khovanov, khovanov_homology(diagram), name)
            self.assertEqual(khovanov_homology(diagram, 1, simplify=True), khovanov.collapsed(), name)
            self.assertEqual(khovanov.total() % 2, 0, name)


class TestPoincarePolynomial(unittest.TestCase):
    def test_001_rows_sorted(self):
        self.assertEqual(RIGHT_TREFOIL.rows()[:3], [[0, 1, 1], [0, 3, 1], [2, 5, 1]])

    def test_002_json(self):
        self.assertEqual(UNKNOT.to_json(), {'t': 0, 'table': [[0, -1, 1], [0, 1, 1]]})
        self.assertEqual(UNKNOT.collapsed().to_json(), {'t': 1, 'table': [[0, 2]]})

    def test_003_zero_dims_dropped(self):
        self.assertEqual(PoincarePolynomial(0, {(0, 1): 0}), PoincarePolynomial(0))

    def test_004_format(self):
        self.assertEqual(UNKNOT.format_table(), "0 -1 1\n0  1 1")
        self.assertEqual(PoincarePolynomial(0).format_table(), '')

    def test_005_negative(self):
        with self.assertRaises(HomologyError):
            PoincarePolynomial(0, {(0, 1): -1})


if __name__ == '__main__':
    unittest.main()
