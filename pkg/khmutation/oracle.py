#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: independent state sum homology and the Jones polynomial
# Created: 06.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

"""
Cross checks for the cobordism pipeline.

oracle_state_sum() computes Khovanov (t = 0) and Lee (t = 1) homology of a
closed diagram from the Frobenius algebra A = F_2[t][x]/(x^2 - t):

    m(1 x 1) = 1, m(1 x x) = m(x x 1) = x, m(x x x) = t
    D(1) = 1 x x + x x 1, D(x) = x x x + t 1 x 1

The state circles are traced here again; no cobordism code is involved.

jones_polynomial() evaluates the Kauffman bracket <D> = <D_0> - q <D_1>,
<k circles> = (q + 1/q)^k, normalised as (-1)^n_minus q^(n_plus - 2 n_minus) <D>.
"""

from __future__ import absolute_import

import logging
from collections import deque

import sympy as sp

from .diagrams import DiagramError, crossing_signs
from .gf2 import bitset_rank, iter_bits
from .homology import PoincarePolynomial
from .unionfind import UnionFind

logger = logging.getLogger(__name__)

q = sp.Symbol('q')


def _closed_signs(diagram):
    if not diagram.is_closed:
        raise DiagramError("the oracle needs a closed diagram")
    if not diagram.is_oriented:
        raise DiagramError("the oracle needs an oriented diagram")
    return crossing_signs(diagram)


def state_circles(diagram, mask):
    """ state_circles(D, mask) -> (dict edge -> circle index, circle count),
    circles numbered by their smallest edge.
    """
    uf = UnionFind(diagram.all_edges)
    for index, (e0, e1, e2, e3) in enumerate(diagram.crossings):
        if (mask >> index) & 1:
            uf.union(e1, e2)
            uf.union(e3, e0)
        else:
            uf.union(e0, e1)
            uf.union(e2, e3)
    number = {}
    circle = {}
    for edge in diagram.all_edges:
        root = uf.find(edge)
        if root not in number:
            number[root] = len(number)
        circle[edge] = number[root]
    return circle, len(number)


def _moved(labels, mapping):
    result = 0
    for old in iter_bits(labels):
        result |= 1 << mapping[old]
    return result


def _edge_images(labels, crossing, before, after, t):
    """ images of a labelling of the state before under the edge map into after;
    bit k of a labelling marks circle k with x.
    """
    circle, count = before
    circle2, count2 = after
    e0, e1, e2, e3 = crossing
    first, second = circle[e0], circle[e2]
    mapping = {}
    for edge, k in circle.items():
        if k != first and k != second:
            mapping.setdefault(k, circle2[edge])
    rest = _moved(labels & ~((1 << first) | (1 << second)), mapping)
    a = (labels >> first) & 1
    if first != second:
        merged = circle2[e0]
        b = (labels >> second) & 1
        if a and b:
            return [rest] if t else []
        return [rest | ((a | b) << merged)]
    left, right = circle2[e1], circle2[e0]
    if left == right:
        return []
    if not a:
        return [rest | (1 << left), rest | (1 << right)]
    images = [rest | (1 << left) | (1 << right)]
    if t:
        images.append(rest)
    return images


def oracle_state_sum(diagram, t=0):
    """ oracle_state_sum(D, t) -> PoincarePolynomial of Khovanov (t = 0) or
    Lee (t = 1) homology over F_2.
    """
    n_plus, n_minus = _closed_signs(diagram)
    size = len(diagram.crossings)
    states = [state_circles(diagram, mask) for mask in range(1 << size)]
    basis = {}
    index = {}
    for mask, (circle, count) in enumerate(states):
        r = bin(mask).count('1')
        i = r - n_minus
        for labels in range(1 << count):
            j = count - 2 * bin(labels).count('1') + r + n_plus - 2 * n_minus
            members = basis.setdefault(i, [])
            index[(mask, labels)] = len(members)
            members.append((mask, labels, j))
    columns = dict((i, [0] * len(members)) for i, members in basis.items())
    for mask, (circle, count) in enumerate(states):
        i = bin(mask).count('1') - n_minus
        for c, crossing in enumerate(diagram.crossings):
            if (mask >> c) & 1:
                continue
            target = mask | (1 << c)
            for labels in range(1 << count):
                vector = 0
                for image in _edge_images(labels, crossing, states[mask], states[target], t):
                    vector ^= 1 << index[(target, image)]
                columns[i][index[(mask, labels)]] ^= vector
    blocks = {}
    for i, members in basis.items():
        for position, (mask, labels, j) in enumerate(members):
            blocks.setdefault((i, j if t == 0 else None), []).append(position)
    ranks = {}
    for (i, j), positions in blocks.items():
        targets = dict((old, new) for new, old in enumerate(blocks.get((i + 1, j), [])))
        vectors = []
        for position in positions:
            vector = 0
            for bit in iter_bits(columns[i][position]):
                vector |= 1 << targets[bit]
            vectors.append(vector)
        ranks[(i, j)] = bitset_rank(vectors)
    dims = {}
    for (i, j), positions in blocks.items():
        dims[(i, j)] = len(positions) - ranks[(i, j)] - ranks.get((i - 1, j), 0)
    logger.debug("state sum of %r at t = %d over %d states", diagram, t, len(states))
    return PoincarePolynomial(t, dims)


def kauffman_bracket(diagram):
    """ kauffman_bracket(D) -> <D> as a sympy expression in q """
    if not diagram.is_closed:
        raise DiagramError("the Kauffman bracket needs a closed diagram")
    size = len(diagram.crossings)
    total = sp.Integer(0)
    stack = deque([(sp.Integer(1), 0, 0)])
    while stack:
        coeff, mask, crossing = stack.pop()
        if crossing == size:
            circles = state_circles(diagram, mask)[1]
            total += coeff * (q + 1 / q) ** circles
            continue
        stack.append((coeff, mask, crossing + 1))
        stack.append((-q * coeff, mask | (1 << crossing), crossing + 1))
    return sp.expand(total)


def jones_polynomial(diagram, normalized=False):
    """ jones_polynomial(D[, normalized]) -> unnormalised Jones polynomial
    J^(q), or J = J^ / (q + 1/q) when normalized is set.
    """
    n_plus, n_minus = _closed_signs(diagram)
    result = sp.expand((-1) ** n_minus * q ** (n_plus - 2 * n_minus) * kauffman_bracket(diagram))
    if normalized:
        result = sp.expand(sp.cancel(result / (q + 1 / q)))
    return result


def euler_characteristic(poincare):
    """ euler_characteristic(P) -> sum of (-1)^i q^j dim H^(i,j), for t = 0 tables """
    if poincare.t != 0:
        raise ValueError("the graded Euler characteristic needs a t = 0 table")
    return sp.expand(sum((sp.Integer(-1) ** i * q ** j * dim for (i, j), dim in poincare.dims.items()), sp.Integer(0)))
