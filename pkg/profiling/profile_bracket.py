#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: profile the cube of resolutions and homology
# Created: 12.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

import os
from timeit import Timer

from khmutation import load_diagram, khovanov_bracket, khovanov_homology, oracle_state_sum

COUNT = 5
FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', 'tests', 'fixtures')

setup_bracket = """
from __main__ import bracket_serial, bracket_parallel, homology_plain, homology_simplified, state_sum
"""

diagram = load_diagram(os.path.join(FIXTURES, 'figure_eight.json'))


def bracket_serial():
    khovanov_bracket(diagram)


def bracket_parallel():
    khovanov_bracket(diagram, jobs=2)


def homology_plain():
    khovanov_homology(diagram, 0)


def homology_simplified():
    khovanov_homology(diagram, 0, simplify=True)


def state_sum():
    oracle_state_sum(diagram, 0)


def print_result(time, text):
    print("Operation: %s takes %.2f seconds\n" % (text, time))


def main():
    print("Crossings: %d" % len(diagram.crossings))

    t = Timer("bracket_serial()", setup_bracket)
    print_result(t.timeit(COUNT), 'bracket, one process')

    t = Timer("bracket_parallel()", setup_bracket)
    print_result(t.timeit(COUNT), 'bracket, two workers')

    t = Timer("homology_plain()", setup_bracket)
    print_result(t.timeit(COUNT), 'Kh over the full cube')

    t = Timer("homology_simplified()", setup_bracket)
    print_result(t.timeit(COUNT), 'Kh after delooping and elimination')

    t = Timer("state_sum()", setup_bracket)
    print_result(t.timeit(COUNT), 'Kh by the state sum')

if __name__ == '__main__':
    main()
