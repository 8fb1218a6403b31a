#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: profile the construction and checking of phi
# Created: 13.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

import os
from timeit import Timer

from khmutation import load_diagram, build_phi, verify_mutation

COUNT = 3
FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', 'tests', 'fixtures')

setup_mutation = """
from __main__ import phi_full, phi_simplified, verify_only_phi
"""

inner = load_diagram(os.path.join(FIXTURES, 'inner2.json'))
outer = load_diagram(os.path.join(FIXTURES, 'outer3.json'))


def phi_full():
    build_phi(inner, outer)


def phi_simplified():
    build_phi(inner, outer, simplify=True)


def verify_only_phi():
    verify_mutation(inner, outer, homology=False)


def print_result(time, text):
    print("Operation: %s takes %.2f seconds\n" % (text, time))


def main():
    print("Inner crossings: %d, outer crossings: %d" % (len(inner.crossings), len(outer.crossings)))

    t = Timer("phi_full()", setup_mutation)
    print_result(t.timeit(COUNT), 'build phi')

    t = Timer("phi_simplified()", setup_mutation)
    print_result(t.timeit(COUNT), 'build phi on simplified Kh(T)')

    t = Timer("verify_only_phi()", setup_mutation)
    print_result(t.timeit(COUNT), 'verify phi identities')

if __name__ == '__main__':
    main()
