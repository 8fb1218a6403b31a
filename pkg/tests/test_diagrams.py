#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: test tangle diagrams
# Created: 02.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

import os
import json
import unittest

from khmutation.diagrams import (O_0, O_1, CROSSED, DiagramError, OrientationError, TangleDiagram,
                                 FlatTangle, Resolution, load_diagram, parse_diagram, from_json, dump_diagram,
                                 resolve, rotate_z, rotate_x, rotate_y, reverse, glue, connectivity,
                                 crossing_signs, link_components, arc_matching)

FIXTURES = os.path.join(os.path.dirname(__file__), 'fixtures')


def fixture(name):
    return load_diagram(os.path.join(FIXTURES, name))


class TestParsing(unittest.TestCase):
    def test_001_unknot_has_one_loop(self):
        diagram = fixture('unknot0.json')
        self.assertEqual(diagram.loops, (1, ))
        self.assertTrue(diagram.is_closed)
        self.assertTrue(diagram.is_oriented)
        self.assertEqual(crossing_signs(diagram), (0, 0))

    def test_002_left_trefoil_signs(self):
        self.assertEqual(fixture('trefoil_left.json').signs(), [-1, -1, -1])

    def test_003_right_trefoil_signs(self):
        self.assertEqual(fixture('trefoil_right.json').signs(), [1, 1, 1])

    def test_004_pd_text_matches_json(self):
        self.assertEqual(fixture('trefoil_left.pd'), fixture('trefoil_left.json'))

    def test_005_pd_round_brackets(self):
        diagram = parse_diagram("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
        self.assertEqual(diagram, fixture('trefoil_left.json'))

    def test_006_kink_sign(self):
        self.assertEqual(fixture('unknot1.json').signs(), [1])

    def test_007_dangling_edge(self):
        with self.assertRaises(DiagramError):
            parse_diagram('{"crossings": [[1, 2, 3, 4]]}')

    def test_008_reused_boundary_point(self):
        text = '{"region": "disk", "boundary": {"a": 1, "a": 2}, "crossings": []}'
        with self.assertRaises(DiagramError) as context:
            parse_diagram(text)
        self.assertIn("boundary point reused", str(context.exception))

    def test_009_odd_boundary(self):
        with self.assertRaises(DiagramError):
            TangleDiagram('disk', {'a': 1, 'b': 2, 'c': 3}, [[1, 2, 3, 3]])

    def test_010_malformed_json(self):
        with self.assertRaises(DiagramError):
            parse_diagram('{"crossings": [[1, 2, 3')

    def test_011_edge_used_three_times(self):
        with self.assertRaises(DiagramError):
            TangleDiagram('plane', {}, [[1, 1, 1, 2]])

    def test_012_inconsistent_orientation(self):
        data = {'region': 'disk', 'boundary': {'a': 2, 'b': 3, 'c': 4, 'd': 1},
                'crossings': [[1, 2, 3, 4]], 'orientation': {'1': 'd'}}
        diagram = from_json(data)
        self.assertEqual(diagram.heads[1], 'd')
        data['orientation'] = {'1': 'd', '3': 'b'}
        with self.assertRaises(OrientationError):
            from_json(data)

    def test_013_dump_round_trip(self):
        for name in ('trefoil_right.json', 'inner2.json', 'outer3.json', 'unlink2.json'):
            diagram = fixture(name)
            self.assertEqual(from_json(json.loads(json.dumps(dump_diagram(diagram)))), diagram)

    def test_014_reverse_keyword(self):
        data = {'region': 'disk', 'boundary': {'a': 2, 'b': 3, 'c': 4, 'd': 1},
                'crossings': [[1, 2, 3, 4]], 'orientation': 'pd', 'reverse': [1]}
        self.assertEqual(from_json(data).signs(), [1])


class TestResolutions(unittest.TestCase):
    def test_001_left_trefoil_states(self):
        diagram = fixture('trefoil_left.json')
        self.assertEqual(resolve(diagram, 0).ncircles, 3)
        self.assertEqual(resolve(diagram, 7).ncircles, 2)
        self.assertEqual(resolve(diagram, [1, 1, 1]).ncircles, 2)

    def test_002_one_crossing_disk(self):
        diagram = fixture('inner1.json')
        self.assertEqual(resolve(diagram, 0).matching, O_0)
        self.assertEqual(resolve(diagram, 1).matching, O_1)
        self.assertEqual(resolve(diagram, 0).ncircles, 0)

    def test_003_clasp_states(self):
        diagram = fixture('inner2.json')
        flat = resolve(diagram, 0)
        self.assertEqual((flat.matching, flat.ncircles), (O_1, 1))
        flat = resolve(diagram, 3)
        self.assertEqual((flat.matching, flat.ncircles), (O_0, 0))

    def test_004_resolution_coerce(self):
        self.assertEqual(Resolution.coerce({0: 1, 1: 0, 2: 1}, 3).mask, 5)
        self.assertEqual(Resolution.coerce([1, 0, 1], 3).mask, 5)
        self.assertEqual(Resolution.coerce(5, 3).weight, 2)
        with self.assertRaises(DiagramError):
            Resolution.coerce({0: 1, 2: 1}, 3)
        with self.assertRaises(DiagramError):
            Resolution.coerce([1, 0], 3)

    def test_005_trace_covers_edges(self):
        diagram = fixture('figure_eight.json')
        flat = resolve(diagram, 6)
        self.assertEqual(sorted(flat.trace), diagram.all_edges)
        self.assertTrue(all(flat.has_component(c) for c in flat.trace.values()))

    def test_006_marks_follow_edges(self):
        diagram = fixture('outer3.json').with_marks({'p2': 5})
        flat = resolve(diagram, 0)
        self.assertEqual(flat.marks['p2'], flat.trace[5])

    def test_007_flat_tangle_rejects_bad_matching(self):
        with self.assertRaises(DiagramError):
            FlatTangle([('a', 'b'), ('b', 'c')])

    def test_008_partner(self):
        flat = resolve(fixture('inner1.json'), 0)
        self.assertEqual([flat.partner(p) for p in 'abcd'], ['d', 'c', 'b', 'a'])
        flat = resolve(fixture('inner1.json'), 1)
        self.assertEqual([flat.partner(p) for p in 'abcd'], ['b', 'a', 'd', 'c'])


class TestRotations(unittest.TestCase):
    def test_001_rotate_z_involution(self):
        diagram = fixture('inner2.json')
        self.assertEqual(rotate_z(rotate_z(diagram)), diagram)

    def test_002_x_then_y_is_z(self):
        diagram = fixture('inner2.json')
        self.assertEqual(rotate_x(rotate_y(diagram)), rotate_z(diagram))
        self.assertEqual(rotate_y(rotate_x(diagram)), rotate_z(diagram))

    def test_003_rotate_keeps_signs(self):
        diagram = fixture('inner2.json')
        self.assertEqual(rotate_z(diagram).signs(), diagram.signs())
        self.assertEqual(reverse(diagram).signs(), diagram.signs())

    def test_004_rotations_need_disk(self):
        with self.assertRaises(DiagramError):
            rotate_z(fixture('outer1.json'))

    def test_005_connectivity(self):
        self.assertEqual(connectivity(fixture('outer1.json')), 'crossed')
        self.assertEqual(connectivity(fixture('outer3.json')), 'crossed')
        self.assertEqual(connectivity(fixture('outer_horizontal.json')), 'horizontal')
        self.assertEqual(connectivity(fixture('inner2.json')), 'vertical')
        self.assertEqual(arc_matching(fixture('outer1_kink.json')), CROSSED)


class TestGlue(unittest.TestCase):
    def test_001_hopf_from_one_crossing_pair(self):
        link = glue(fixture('inner1.json'), fixture('outer1.json'))
        self.assertTrue(link.is_closed)
        self.assertEqual(len(link.crossings), 2)
        self.assertEqual(link.signs(), [-1, -1])
        self.assertEqual(link_components(link), 2)

    def test_002_orientation_mismatch(self):
        with self.assertRaises(OrientationError):
            glue(rotate_z(fixture('inner1.json')), fixture('outer1.json'))

    def test_003_reversed_rotation_fits(self):
        link = glue(reverse(rotate_z(fixture('inner1.json'))), fixture('outer1.json'))
        self.assertEqual(len(link.crossings), 2)

    def test_004_regions_checked(self):
        with self.assertRaises(DiagramError):
            glue(fixture('outer1.json'), fixture('inner1.json'))

    def test_005_crossing_order(self):
        inner, outer = fixture('inner2.json'), fixture('outer3.json')
        link = glue(inner, outer)
        self.assertEqual(len(link.crossings), 5)
        self.assertEqual(link.signs()[:2], inner.signs())
        self.assertEqual(link.signs()[2:], outer.signs())

    def test_006_marks_carried(self):
        link = glue(fixture('inner2.json'), fixture('outer3.json').with_marks({'p1': 8}))
        self.assertEqual(link.marks, {'p1': 1})
        with self.assertRaises(OrientationError):
            glue(fixture('inner1.json'), fixture('outer3.json'))


if __name__ == '__main__':
    unittest.main()
