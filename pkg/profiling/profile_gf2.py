#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: profile bitset_rank, packed_rank and the Cython kernel
# Created: 12.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

from timeit import Timer
from random import getrandbits, seed

from khmutation.gf2 import bitset_rank, packed_rank, pack_rows, fast_rank, FAST_GF2

COUNT = 20
SIZE = 600

setup_ranks = """
from __main__ import int_rank, numpy_rank, kernel_rank
"""

seed(2026)
vectors = [getrandbits(SIZE) for _ in range(SIZE)]
rows = pack_rows(vectors, SIZE)


def int_rank():
    bitset_rank(vectors)


def numpy_rank():
    packed_rank(rows.copy(), SIZE)


def kernel_rank():
    fast_rank(vectors, SIZE)


def print_result(time, text):
    print("Operation: %s takes %.2f seconds\n" % (text, time))


def main():
    print("Matrix: %d x %d, compiled kernel: %s" % (SIZE, SIZE, FAST_GF2))

    t = Timer("int_rank()", setup_ranks)
    print_result(t.timeit(COUNT), 'rank on int bitsets')

    t = Timer("numpy_rank()", setup_ranks)
    print_result(t.timeit(COUNT), 'rank on packed numpy rows')

    t = Timer("kernel_rank()", setup_ranks)
    print_result(t.timeit(COUNT), 'fast_rank')

if __name__ == '__main__':
    main()
