#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: Hom(empty, -) at t = 0 and t = 1 and F_2 homology
# Created: 06.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

"""
Linearisation of closed complexes and their homology over F_2.

A closed object O with n circles has Hom(empty, O) free over F_2[t] on the
2^n dottings of the cups; dotting m (bit j set when circle j carries a dot)
sits in quantum degree n - 2|m| + shift. At t = 0 terms with a positive
power of t vanish, at t = 1 every term counts once, the quantum grading is
then dropped.
"""

from __future__ import absolute_import

import logging

from . import gf2
from .cob import CobObject, Morphism, popcount

logger = logging.getLogger(__name__)

EMPTY = CobObject()


class HomologyError(ValueError):
    pass


def hom_from_empty(obj):
    """ hom_from_empty(O) -> list of (dotmask, quantum degree) """
    if obj.flat.points:
        raise HomologyError("Hom(empty, O) needs a closed object, got %r" % (obj, ))
    count = obj.flat.ncircles
    return [(mask, count - 2 * popcount(mask) + obj.shift) for mask in range(1 << count)]


def _action(morphism, t):
    """ columns of the linear map induced by post-composition, one dict
    source dotmask -> set of target dotmasks.
    """
    source = morphism.source
    result = {}
    for mask, degree in hom_from_empty(source):
        cup = Morphism.from_terms(EMPTY, source, [(mask, 0)])
        image = set()
        for dots, tpow in morphism.compose(cup).terms:
            if t == 0 and tpow:
                continue
            if dots in image:
                image.remove(dots)
            else:
                image.add(dots)
        result[mask] = image
    return result


class LinearComplex(object):
    """
    Complex of F_2 vector spaces from a closed complex.

    L.basis -> dict degree -> list of (summand, dotmask, q)
    L.columns -> dict degree -> list of int bitsets over the basis of degree + 1
    L.t -> 0 or 1
    """
    __slots__ = ['basis', 'columns', 't']

    def __init__(self, basis, columns, t):
        self.basis = basis
        self.columns = columns
        self.t = t

    @property
    def degrees(self):
        return sorted(self.basis)

    def dimension(self):
        return sum(len(labels) for labels in self.basis.values())

    def check_square(self):
        """ L.check_square() -> first degree i with d o d != 0 on C^i, or None """
        for i in self.degrees:
            if i not in self.columns or i + 1 not in self.columns:
                continue
            upper = self.columns[i + 1]
            for column in self.columns[i]:
                image = 0
                for position in gf2.iter_bits(column):
                    image ^= upper[position]
                if image:
                    return i
        return None


def linearize(complex_, t=0):
    """ linearize(C, t) -> LinearComplex of Hom(empty, C) specialised at t """
    if t not in (0, 1):
        raise HomologyError("t must be 0 or 1, got %r" % (t, ))
    basis = {}
    index = {}
    for i in complex_.degrees:
        labels = []
        for summand, obj in enumerate(complex_.objects[i]):
            for mask, degree in hom_from_empty(obj):
                index[(i, summand, mask)] = len(labels)
                labels.append((summand, mask, degree))
        basis[i] = labels
    columns = {}
    for i in complex_.degrees:
        if i + 1 not in basis:
            continue
        vectors = [0] * len(basis[i])
        matrix = complex_.differential(i)
        for row, col, morphism in matrix.entries():
            for mask, images in _action(morphism, t).items():
                vector = 0
                for image in images:
                    vector |= 1 << index[(i + 1, row, image)]
                vectors[index[(i, col, mask)]] ^= vector
        columns[i] = vectors
    logger.debug("linearised %r at t = %d: %d basis elements", complex_, t,
                 sum(len(labels) for labels in basis.values()))
    return LinearComplex(basis, columns, t)


class PoincarePolynomial(object):
    """
    Dimensions of homology, dims[(i, j)] at t = 0 and dims[(i, None)] at t = 1.
    """
    __slots__ = ['t', 'dims']

    def __init__(self, t, dims=None):
        self.t = t
        self.dims = dict((key, value) for key, value in (dims or {}).items() if value)
        if any(value < 0 for value in self.dims.values()):
            raise HomologyError("negative dimension in %r" % (self.dims, ))

    def rows(self):
        """ P.rows() -> [[i, j, dim]] (t = 0) or [[i, dim]] (t = 1), ascending """
        if self.t == 0:
            return [[i, j, dim] for (i, j), dim in sorted(self.dims.items())]
        return [[i, dim] for (i, j), dim in sorted(self.dims.items())]

    def total(self):
        return sum(self.dims.values())

    def collapsed(self):
        """ P.collapsed() -> PoincarePolynomial with the quantum grading summed out """
        dims = {}
        for (i, j), dim in self.dims.items():
            dims[(i, None)] = dims.get((i, None), 0) + dim
        return PoincarePolynomial(1, dims)

    def to_json(self):
        return {'t': self.t, 'table': self.rows()}

    def format_table(self):
        """ P.format_table() -> aligned text table, one row per line """
        rows = self.rows()
        if not rows:
            return ''
        widths = [max(len(str(row[k])) for row in rows) for k in range(len(rows[0]))]
        lines = [' '.join(str(value).rjust(width) for value, width in zip(row, widths)) for row in rows]
        return '\n'.join(lines)

    def __eq__(self, other):
        if not isinstance(other, PoincarePolynomial):
            return NotImplemented
        return self.t == other.t and self.dims == other.dims

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return "PoincarePolynomial(t=%d, %r)" % (self.t, self.rows())


def f2_homology(linear):
    """ f2_homology(L) -> PoincarePolynomial

    dim H^(i,j) = dim C^(i,j) - rank d^i - rank d^(i-1) on the block of
    quantum degree j (all of C^i at t = 1).
    """
    broken = linear.check_square()
    if broken is not None:
        raise HomologyError("d o d != 0 on degree %d" % broken)
    graded = linear.t == 0

    def block_of(label):
        return label[2] if graded else None

    blocks = {}
    for i, labels in linear.basis.items():
        for position, label in enumerate(labels):
            blocks.setdefault((i, block_of(label)), []).append(position)
    ranks = {}
    for (i, j), positions in blocks.items():
        if i not in linear.columns:
            continue
        targets = blocks.get((i + 1, j), [])
        renumber = dict((old, new) for new, old in enumerate(targets))
        vectors = [linear.columns[i][position] for position in positions]
        try:
            vectors = gf2.compress(vectors, renumber)
        except KeyError:
            raise HomologyError("differential of degree %d leaves the quantum degree %r" % (i, j))
        ranks[(i, j)] = gf2.rank(vectors, len(targets))
    dims = {}
    for (i, j), positions in blocks.items():
        dims[(i, j)] = len(positions) - ranks.get((i, j), 0) - ranks.get((i - 1, j), 0)
        logger.debug("H^(%d,%r): %d", i, j, dims[(i, j)])
    return PoincarePolynomial(linear.t, dims)


def homology(complex_, t=0):
    """ homology(C, t) -> PoincarePolynomial of the closed complex C """
    return f2_homology(linearize(complex_, t))


def khovanov_homology(diagram, t=0, simplify=False, jobs=None):
    """ khovanov_homology(D[, t, simplify, jobs]) -> PoincarePolynomial of
    the closed diagram D; simplify deloops and eliminates identity entries
    before linearising.
    """
    from .bracket import khovanov_bracket
    from .matcat import deloop, gaussian_eliminate

    if not diagram.is_closed:
        raise HomologyError("homology needs a closed diagram, got %r" % (diagram, ))
    complex_ = khovanov_bracket(diagram, jobs=jobs)
    if simplify:
        complex_ = gaussian_eliminate(deloop(complex_)[0])
    return f2_homology(linearize(complex_, t))
