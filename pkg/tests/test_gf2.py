#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: test GF(2) ranks
# Created: 03.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

import unittest
from random import Random

import numpy as np

from khmutation.gf2 import (bitset_rank, packed_rank, pack_rows, fast_rank, rank, compress, iter_bits,
                            PACKED_THRESHOLD)


def random_vectors(rng, count, nbits, density=0.3):
    result = []
    for _ in range(count):
        vector = 0
        for bit in range(nbits):
            if rng.random() < density:
                vector |= 1 << bit
        result.append(vector)
    return result


class CheckRank(object):
    def test_001_empty(self):
        self.assertEqual(self.rank([]), 0)
        self.assertEqual(self.rank([0, 0]), 0)

    def test_002_identity(self):
        self.assertEqual(self.rank([1 << k for k in range(70)]), 70)

    def test_003_dependent(self):
        self.assertEqual(self.rank([0b011, 0b110, 0b101]), 2)

    def test_004_repeated(self):
        self.assertEqual(self.rank([0b1001] * 5), 1)

    def test_005_wide_vectors(self):
        vectors = [(1 << 200) | 1, (1 << 130) | 1, (1 << 200) | (1 << 130)]
        self.assertEqual(self.rank(vectors), 2)

    def test_006_random_against_bitsets(self):
        rng = Random(17)
        for count, nbits in ((10, 8), (40, 65), (150, 130), (200, 64)):
            vectors = random_vectors(rng, count, nbits)
            self.assertEqual(self.rank(vectors), bitset_rank(vectors))


class TestBitsetRank(CheckRank, unittest.TestCase):
    rank = staticmethod(bitset_rank)


class TestFastRank(CheckRank, unittest.TestCase):
    rank = staticmethod(fast_rank)


class TestRank(CheckRank, unittest.TestCase):
    rank = staticmethod(rank)

    def test_007_switches_to_packed_rows(self):
        vectors = [1 << k for k in range(PACKED_THRESHOLD + 10)]
        self.assertEqual(rank(vectors), PACKED_THRESHOLD + 10)


class TestPacking(unittest.TestCase):
    def test_001_pack_rows(self):
        rows = pack_rows([(1 << 64) | 3, 5], 70)
        self.assertEqual(rows.shape, (2, 2))
        self.assertEqual(rows.dtype, np.uint64)
        self.assertEqual(int(rows[0, 0]), 3)
        self.assertEqual(int(rows[0, 1]), 1)
        self.assertEqual(int(rows[1, 1]), 0)

    def test_002_packed_rank_matches_bitset(self):
        rng = Random(3)
        vectors = random_vectors(rng, 30, 100)
        rows = pack_rows(vectors, 100)
        self.assertEqual(packed_rank(rows, 100), bitset_rank(vectors))

    def test_003_compress(self):
        self.assertEqual(compress([0b1010, 0b1000], {1: 0, 3: 1}), [0b11, 0b10])

    def test_004_compress_keeps_rank(self):
        vectors = [(1 << 40) | (1 << 7), 1 << 7, 1 << 40]
        small = compress(vectors, {7: 0, 40: 1})
        self.assertEqual(bitset_rank(small), bitset_rank(vectors))

    def test_005_iter_bits(self):
        self.assertEqual(list(iter_bits(0b100101)), [0, 2, 5])
        self.assertEqual(list(iter_bits(0)), [])


if __name__ == '__main__':
    unittest.main()
