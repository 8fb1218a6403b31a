#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: rank of GF(2) matrices given as int bitsets
# Created: 02.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

from __future__ import absolute_import

import logging

import numpy as np

logger = logging.getLogger(__name__)

WORD_BITS = 64
_WORD_MASK = (1 << WORD_BITS) - 1

# below this many vectors the int bitset elimination beats packing
PACKED_THRESHOLD = 96


def bitset_rank(vectors):
    """ bitset_rank(vectors) -> rank of the int bitsets over GF(2)

    Pivots are keyed by their leading bit, every new vector is reduced against
    the existing pivots until it vanishes or brings a new leading bit.
    """
    pivots = {}
    for vector in vectors:
        while vector:
            lead = vector.bit_length() - 1
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = vector
                break
            vector ^= pivot
    return len(pivots)


def pack_rows(vectors, nbits):
    """ pack_rows(vectors, nbits) -> uint64 array, one row per vector, bit k
    of a vector stored in word k // 64 at position k % 64.
    """
    nwords = max(1, (nbits + WORD_BITS - 1) // WORD_BITS)
    packed = np.zeros((len(vectors), nwords), dtype=np.uint64)
    for row, vector in enumerate(vectors):
        word = 0
        while vector:
            packed[row, word] = vector & _WORD_MASK
            vector >>= WORD_BITS
            word += 1
    return packed


def packed_rank(rows, ncols):
    """ packed_rank(rows, ncols) -> rank of a packed uint64 matrix, rows are
    eliminated in place.
    """
    nrows = rows.shape[0]
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        word = col // WORD_BITS
        bit = np.uint64(1) << np.uint64(col % WORD_BITS)
        hits = np.flatnonzero(rows[rank:, word] & bit)
        if hits.size == 0:
            continue
        pivot = rank + int(hits[0])
        if pivot != rank:
            rows[[rank, pivot]] = rows[[pivot, rank]]
        below = rank + 1 + np.flatnonzero(rows[rank + 1:, word] & bit)
        if below.size:
            rows[below, word:] ^= rows[rank, word:]
        rank += 1
    return rank


try:
    from .cython_gf2 import rank_packed as _fast_rank_packed
    FAST_GF2 = True
except ImportError:  # fall back to the numpy elimination
    logger.info("cython_gf2 not available, using numpy version packed_rank.")
    _fast_rank_packed = packed_rank
    FAST_GF2 = False


def fast_rank(vectors, nbits=None):
    """ fast_rank(vectors[, nbits]) -> rank computed on packed uint64 rows,
    by the compiled kernel when it is built.
    """
    if not vectors:
        return 0
    if nbits is None:
        nbits = max(vector.bit_length() for vector in vectors)
    if nbits == 0:
        return 0
    rows = pack_rows(vectors, nbits)
    return int(_fast_rank_packed(rows, nbits))


def rank(vectors, nbits=None):
    """ rank(vectors[, nbits]) -> GF(2) rank, small inputs stay on int bitsets """
    vectors = [vector for vector in vectors if vector]
    if len(vectors) < PACKED_THRESHOLD:
        return bitset_rank(vectors)
    return fast_rank(vectors, nbits)


def compress(vectors, positions):
    """ compress(vectors, positions) -> vectors rewritten over the bit positions
    listed in positions (a dict old bit -> new bit); other bits must be clear.
    """
    result = []
    for vector in vectors:
        packed = 0
        while vector:
            low = vector & -vector
            packed |= 1 << positions[low.bit_length() - 1]
            vector ^= low
        result.append(packed)
    return result


def iter_bits(vector):
    """ iter_bits(vector) -> positions of the set bits, ascending """
    while vector:
        low = vector & -vector
        yield low.bit_length() - 1
        vector ^= low
