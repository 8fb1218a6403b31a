#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: test matrices of cobordisms and complexes
# Created: 04.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

import os
import unittest

from khmutation.diagrams import FlatTangle, O_0, O_1, CROSSED, load_diagram
from khmutation.cob import CobObject, Morphism
from khmutation.matcat import (MatObject, MatMorphism, Complex, GradedMap, ComplexError, verify_complex,
                               complex_tensor, deloop_object, deloop, straighten, enhanced_deloop,
                               gaussian_eliminate, has_degree, mat_compose, dump_complex)
from khmutation.bracket import khovanov_bracket
from khmutation.homology import homology

FIXTURES = os.path.join(os.path.dirname(__file__), 'fixtures')

EMPTY = CobObject()
CIRCLE = CobObject(FlatTangle((), 1))
VERTICAL = CobObject(FlatTangle(O_0))
HORIZONTAL = CobObject(FlatTangle(O_1))


def fixture(name):
    return load_diagram(os.path.join(FIXTURES, name))


def bracket(name):
    return khovanov_bracket(fixture(name))


class TestMatMorphism(unittest.TestCase):
    def test_001_identity(self):
        obj = MatObject([VERTICAL, HORIZONTAL])
        saddle = Morphism.from_terms(VERTICAL, HORIZONTAL, [(0, 0)])
        matrix = MatMorphism(obj, obj, [(1, 0, saddle)])
        unit = MatMorphism.identity(obj)
        self.assertEqual(mat_compose(unit, matrix), matrix)
        self.assertEqual(mat_compose(matrix, unit), matrix)

    def test_002_row_times_column(self):
        saddle = Morphism.from_terms(VERTICAL, HORIZONTAL, [(0, 0)])
        back = saddle.reversed()
        column = MatMorphism(MatObject([VERTICAL]), MatObject([HORIZONTAL, HORIZONTAL]),
                             [(0, 0, saddle), (1, 0, saddle.dotted('a'))])
        row = MatMorphism(MatObject([HORIZONTAL, HORIZONTAL]), MatObject([VERTICAL]),
                          [(0, 0, back), (0, 1, back)])
        product = row.compose(column)
        expected = back.compose(saddle) + back.compose(saddle.dotted('a'))
        self.assertEqual(product.get(0, 0), expected)

    def test_003_zero_entries_pruned(self):
        saddle = Morphism.from_terms(VERTICAL, HORIZONTAL, [(0, 0)])
        matrix = MatMorphism(MatObject([VERTICAL]), MatObject([HORIZONTAL]), [(0, 0, saddle), (0, 0, saddle)])
        self.assertTrue(matrix.is_zero())
        self.assertTrue(matrix.get(0, 0).is_zero())

    def test_004_shape_checked(self):
        saddle = Morphism.from_terms(VERTICAL, HORIZONTAL, [(0, 0)])
        with self.assertRaises(ComplexError):
            MatMorphism(MatObject([HORIZONTAL]), MatObject([VERTICAL]), [(0, 0, saddle)])
        with self.assertRaises(ComplexError):
            MatMorphism(MatObject([VERTICAL]), MatObject([HORIZONTAL]), [(1, 0, saddle)])

    def test_005_first_difference(self):
        obj = MatObject([VERTICAL, HORIZONTAL])
        unit = MatMorphism.identity(obj)
        dotted = unit.apply(lambda m: m.dotted('a') if m.source == HORIZONTAL else m)
        self.assertEqual(unit.first_difference(dotted), (1, 1))
        self.assertEqual(unit.first_difference(MatMorphism.identity(obj)), None)


class TestComplex(unittest.TestCase):
    def test_001_brackets_are_complexes(self):
        for name in ('trefoil_left.json', 'figure_eight.json', 'inner2.json', 'outer3.json'):
            report = verify_complex(bracket(name))
            self.assertTrue(report.ok, name)

    def test_002_located_failure(self):
        complex_ = bracket('trefoil_left.json')
        differentials = dict(complex_.differentials)
        row, col, morphism = differentials[-3].entries()[0]
        differentials[-3] = differentials[-3].apply(lambda m: m.times_t(1) if m is morphism else m)
        broken = Complex(complex_.objects, differentials)
        report = verify_complex(broken)
        self.assertFalse(report.ok)
        self.assertIn(('degree', -3, row, col), report.failures)
        with self.assertRaises(ComplexError):
            Complex(complex_.objects, differentials, verify=True)

    def test_003_mixed_degree_entry(self):
        complex_ = bracket('hopf.json')
        differentials = dict(complex_.differentials)
        row, col, morphism = differentials[-2].entries()[0]
        mixed = morphism + Morphism.from_terms(morphism.source, morphism.target, [(1, 0)])
        self.assertFalse(has_degree(mixed))
        self.assertTrue(has_degree(morphism))
        differentials[-2] = differentials[-2].apply(lambda m: mixed if m is morphism else m)
        report = verify_complex(Complex(complex_.objects, differentials))
        self.assertFalse(report.ok)
        self.assertIn(('degree', -2, row, col), report.failures)

    def test_004_empty_objects_dropped(self):
        complex_ = Complex({0: MatObject([CIRCLE]), 1: MatObject()})
        self.assertEqual(complex_.degrees, [0])
        self.assertEqual(len(complex_), 1)

    def test_005_differential_shape(self):
        with self.assertRaises(ComplexError):
            Complex({0: MatObject([VERTICAL]), 1: MatObject([HORIZONTAL])},
                    {0: MatMorphism(MatObject([HORIZONTAL]), MatObject([HORIZONTAL]))})

    def test_006_dump(self):
        data = dump_complex(bracket('inner1.json'))
        self.assertEqual(sorted(data['objects']), ['-1', '0'])
        self.assertEqual(len(data['differentials']['-1']), 1)


class TestTensor(unittest.TestCase):
    def test_001_unit(self):
        complex_ = bracket('inner1.json')
        unit = Complex({0: MatObject([EMPTY])})
        self.assertEqual(complex_tensor(complex_, unit), complex_)

    def test_002_two_by_two(self):
        product = complex_tensor(bracket('inner1.json'), bracket('outer1.json'))
        self.assertEqual(product.degrees, [-2, -1, 0])
        self.assertEqual([len(product.objects[i]) for i in product.degrees], [1, 2, 1])
        self.assertTrue(verify_complex(product).ok)

    def test_003_matches_glued_bracket(self):
        product = complex_tensor(bracket('inner1.json'), bracket('outer1.json'))
        glued = bracket('hopf.json')
        shapes = lambda c: sorted((obj.ncircles, obj.shift) for i in c.degrees for obj in c.objects[i])
        self.assertEqual(shapes(product), shapes(glued))
        for t in (0, 1):
            self.assertEqual(homology(product, t), homology(glued, t))

    def test_004_layout(self):
        product = complex_tensor(bracket('inner1.json'), bracket('outer1.json'))
        self.assertEqual(product.layout[-1], [(-1, 0, 0, 0), (0, 0, -1, 0)])
        self.assertEqual(product.index[(0, 0, -1, 0)], 1)


class TestDeloop(unittest.TestCase):
    def test_001_one_circle(self):
        parts = deloop_object(CIRCLE)
        self.assertEqual([obj.shift for obj, g, h in parts], [1, -1])
        total = parts[0][2].compose(parts[0][1]) + parts[1][2].compose(parts[1][1])
        self.assertEqual(total, Morphism.identity(CIRCLE))
        for k, (obj, g, h) in enumerate(parts):
            for l, (obj2, g2, h2) in enumerate(parts):
                product = g2.compose(h)
                if k == l:
                    self.assertEqual(product, Morphism.identity(obj))
                else:
                    self.assertTrue(product.is_zero())

    def test_002_shifts(self):
        parts = deloop_object(CobObject(FlatTangle((), 2), 3))
        self.assertEqual([obj.shift for obj, g, h in parts], [5, 3, 3, 1])
        self.assertTrue(all(obj.ncircles == 0 for obj, g, h in parts))

    def test_003_inverse_maps(self):
        complex_ = bracket('unknot1.json')
        delooped, forward, backward = deloop(complex_)
        self.assertEqual(backward.compose(forward), GradedMap.identity(complex_))
        self.assertEqual(forward.compose(backward), GradedMap.identity(delooped))
        self.assertTrue(forward.is_chain_map())
        self.assertTrue(verify_complex(delooped).ok)

    def test_004_keeps_homology(self):
        complex_ = bracket('trefoil_right.json')
        delooped = deloop(complex_)[0]
        for t in (0, 1):
            self.assertEqual(homology(delooped, t), homology(complex_, t))

    def test_005_enhanced(self):
        straight = enhanced_deloop(bracket('inner1.json'))[0]
        objects = [straight.objects[i][0] for i in straight.degrees]
        self.assertEqual([obj.flat.matching for obj in objects], [O_0, O_1])
        entry = straight.differential(-1).get(0, 0)
        self.assertEqual(entry.terms, frozenset([(0, 0)]))

    def test_006_enhanced_idempotent(self):
        once = enhanced_deloop(bracket('inner2.json'))[0]
        twice = enhanced_deloop(once)[0]
        self.assertEqual(twice, once)

    def test_007_crossed_matching(self):
        complex_ = Complex({0: MatObject([CobObject(FlatTangle(CROSSED))])})
        with self.assertRaises(ComplexError):
            straighten(complex_)


class TestGaussianElimination(unittest.TestCase):
    def test_001_same_homology(self):
        for name in ('trefoil_left.json', 'figure_eight.json', 'unknot1.json'):
            complex_ = bracket(name)
            small = gaussian_eliminate(deloop(complex_)[0])
            self.assertLess(len(small), len(deloop(complex_)[0]))
            for t in (0, 1):
                self.assertEqual(homology(small, t), homology(complex_, t), name)

    def test_002_still_a_complex(self):
        small = gaussian_eliminate(deloop(bracket('figure_eight.json'))[0])
        self.assertTrue(verify_complex(small).ok)

    def test_003_kink_leaves_unknot(self):
        small = gaussian_eliminate(deloop(bracket('unknot1.json'))[0])
        self.assertEqual(len(small), 2)


if __name__ == '__main__':
    unittest.main()
