#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: test the compiled GF(2) kernel
# Created: 03.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

import sys
PYPY = hasattr(sys, 'pypy_version_info')

import unittest
from random import randint

from khmutation.gf2 import FAST_GF2, pack_rows, packed_rank, bitset_rank

if FAST_GF2:
    from khmutation.cython_gf2 import rank_packed


@unittest.skipIf(PYPY or not FAST_GF2, "Cython kernel not built.")
class TestRankPacked(unittest.TestCase):
    def test_identity(self):
        vectors = [1 << k for k in range(130)]
        self.assertEqual(rank_packed(pack_rows(vectors, 130), 130), 130)

    def test_zero_rows(self):
        self.assertEqual(rank_packed(pack_rows([0, 0, 0], 10), 10), 0)

    def test_against_numpy(self):
        for _ in range(20):
            vectors = [randint(0, (1 << 150) - 1) for _ in range(randint(1, 60))]
            expected = packed_rank(pack_rows(vectors, 150), 150)
            self.assertEqual(rank_packed(pack_rows(vectors, 150), 150), expected)
            self.assertEqual(expected, bitset_rank(vectors))

    def test_eliminates_in_place(self):
        rows = pack_rows([0b11, 0b01], 2)
        rank_packed(rows, 2)
        self.assertEqual(int(rows[1, 0]), 0b10)


if __name__ == '__main__':
    unittest.main()
