#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: dotted cobordisms over F_2 between flat tangles
# Created: 03.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

"""
Dotted cobordisms modulo the sphere, dot, neck cutting and double dot
relations, with coefficients in F_2[t].

A cobordism S: O1 -> O2 is kept as a sum of Surfaces. A Surface lists its
connected components as (curvemask, dot) pairs over the boundary curves of
(O1, O2) together with a power of t. Components always have genus 0 and at
most one dot: higher genus is zero, closed spheres are evaluated and pairs of
dots become t as soon as they appear. The normal form of a morphism is the set
of terms (dotmask, tpow) in the basis of dotted disks, one disk per boundary
curve.

Boundary curve keys:

* ('p', x, y, ...) -- the curve through the boundary points x, y, ...
* ('s', i) -- circle i of the source
* ('t', j) -- circle j of the target

Curves are ordered with arc curves first (by their first point), then source
circles, then target circles; bit k of a mask refers to curve k.
"""

from __future__ import absolute_import

import logging
from collections import namedtuple
from functools import lru_cache

from .diagrams import FlatTangle, POINTS, Z_TURN
from .gf2 import iter_bits
from .unionfind import UnionFind

logger = logging.getLogger(__name__)


class CobordismError(ValueError):
    pass


Surface = namedtuple('Surface', ['components', 'tpow'])


def popcount(value):
    return bin(value).count('1')


def _bits(mask):
    return list(iter_bits(mask))


def _toggle(collection, item):
    if item in collection:
        collection.remove(item)
    else:
        collection.add(item)


class CobObject(object):
    """ Flat tangle with a quantum shift {shift}. """
    __slots__ = ['flat', 'shift']

    def __init__(self, flat=None, shift=0):
        self.flat = FlatTangle() if flat is None else flat
        self.shift = shift

    @property
    def key(self):
        return (self.flat.key, self.shift)

    @property
    def points(self):
        return self.flat.points

    @property
    def ncircles(self):
        return self.flat.ncircles

    def shifted(self, amount):
        return CobObject(self.flat, self.shift + amount)

    def __eq__(self, other):
        return isinstance(other, CobObject) and self.key == other.key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "%r{%d}" % (self.flat, self.shift)


class CurveSet(object):
    """
    Boundary curves of cobordisms between two flat tangles.

    C.keys -> tuple of curve keys in bit order
    C.point -> dict boundary point -> bit of its arc curve
    C.source -> bit of each source circle
    C.target -> bit of each target circle
    """
    __slots__ = ['keys', 'point', 'source', 'target', 'index']

    def __init__(self, keys, point, source, target):
        self.keys = keys
        self.point = point
        self.source = source
        self.target = target
        self.index = dict((key, bit) for bit, key in enumerate(keys))

    def __len__(self):
        return len(self.keys)

    @property
    def full(self):
        return (1 << len(self.keys)) - 1

    def label(self, bit):
        key = self.keys[bit]
        if key[0] == 'p':
            return 'arc:' + ','.join(key[1:])
        return '%s:%d' % ('source' if key[0] == 's' else 'target', key[1])


@lru_cache(maxsize=None)
def _curve_set(points, matching1, ncircles1, matching2, ncircles2):
    partner1 = {}
    for p, q in matching1:
        partner1[p], partner1[q] = q, p
    partner2 = {}
    for p, q in matching2:
        partner2[p], partner2[q] = q, p
    keys = []
    point = {}
    for start in points:
        if start in point:
            continue
        cycle = []
        current = start
        while True:
            cycle.append(current)
            other = partner1[current]
            cycle.append(other)
            current = partner2[other]
            if current == start:
                break
        for member in cycle:
            point[member] = len(keys)
        keys.append(('p', ) + tuple(sorted(cycle)))
    source = tuple(range(len(keys), len(keys) + ncircles1))
    keys.extend(('s', i) for i in range(ncircles1))
    target = tuple(range(len(keys), len(keys) + ncircles2))
    keys.extend(('t', j) for j in range(ncircles2))
    return CurveSet(tuple(keys), point, source, target)


def _flat(obj):
    return obj.flat if isinstance(obj, CobObject) else obj


def boundary_curves(first, second):
    """ boundary_curves(O1, O2) -> CurveSet of cobordisms O1 -> O2 """
    f1, f2 = _flat(first), _flat(second)
    if f1.points != f2.points:
        raise CobordismError("boundary points differ: %r and %r" % (f1.points, f2.points))
    return _curve_set(f1.points, f1.matching, f1.ncircles, f2.matching, f2.ncircles)


@lru_cache(maxsize=65536)
def _component_terms(mask, dots):
    """ dotted disk expansion of a genus 0 component by neck cutting """
    bits = _bits(mask)
    count = len(bits)
    result = []
    # choice: curves whose disk carries a dot; every other curve adds a dot to the sphere
    for choice in range(1 << count):
        left = dots + count - popcount(choice)
        if left % 2:
            dotted = 0
            for index, bit in enumerate(bits):
                if (choice >> index) & 1:
                    dotted |= 1 << bit
            result.append((dotted, (left - 1) // 2))
    return tuple(result)


def _cut_in_order(bits, dots):
    if len(bits) == 0:
        return {(0, (dots - 1) // 2)} if dots % 2 else set()
    if len(bits) == 1:
        return {((1 << bits[0]) if dots % 2 else 0, dots // 2)}
    first, rest = bits[0], bits[1:]
    result = set()
    for mask, tpow in _cut_in_order(rest, dots):
        _toggle(result, (mask | (1 << first), tpow))
    for mask, tpow in _cut_in_order(rest, dots + 1):
        _toggle(result, (mask, tpow))
    return result


class PreCobordism(object):
    """
    Surface before reduction: components as (curvemask, genus, dots) and a
    global power of t.
    """
    __slots__ = ['components', 'tpow']

    def __init__(self, components, tpow=0):
        self.components = [tuple(component) for component in components]
        self.tpow = tpow


def reduce(pre, curves=None, order=None):
    """ reduce(pre[, curves, order]) -> frozenset of normal terms (dotmask, tpow)

    Components of genus >= 1 annihilate the term, closed spheres evaluate to
    0 or a power of t, the rest is cut along its boundary curves. order is a
    sequence of curve bits fixing the cutting order.
    """
    if curves is not None:
        seen = 0
        for mask, genus, dots in pre.components:
            if seen & mask:
                raise CobordismError("components share a boundary curve")
            seen |= mask
        if seen != curves.full:
            raise CobordismError("components do not cover the boundary curves")
    terms = {(0, pre.tpow)}
    for mask, genus, dots in pre.components:
        if genus:
            return frozenset()
        if order is None:
            options = _component_terms(mask, dots)
        else:
            rank = dict((bit, index) for index, bit in enumerate(order))
            options = _cut_in_order(sorted(_bits(mask), key=rank.__getitem__), dots)
        product = set()
        for left, ltpow in terms:
            for right, rtpow in options:
                _toggle(product, (left | right, ltpow + rtpow))
        terms = product
        if not terms:
            break
    return frozenset(terms)


@lru_cache(maxsize=65536)
def _surface_terms(surface):
    terms = [(0, surface.tpow)]
    for mask, dot in surface.components:
        options = _component_terms(mask, dot)
        terms = [(left | right, ltpow + rtpow) for left, ltpow in terms for right, rtpow in options]
        if not terms:
            break
    return terms


def _finish(chi, dots, masks, tpow):
    components = []
    for root, euler in chi.items():
        mask = masks.get(root, 0)
        count = popcount(mask)
        twice_genus = 2 - euler - count
        if twice_genus:  # genus >= 1 kills the term over F_2
            if twice_genus < 0 or twice_genus % 2:
                raise CobordismError("inconsistent Euler characteristic %d with %d curves" % (euler, count))
            return None
        total = dots[root]
        if count == 0:
            if total % 2 == 0:
                return None
            tpow += (total - 1) // 2
        else:
            tpow += total // 2
            components.append((mask, total % 2))
    return Surface(tuple(sorted(components)), tpow)


@lru_cache(maxsize=65536)
def _owners(components):
    owner = {}
    for index, (mask, dot) in enumerate(components):
        for bit in _bits(mask):
            owner[bit] = index
    return owner


def _glue(first, second, links, owners):
    """ Glue two surfaces along the pieces listed in links, a sequence of
    (bit in first, bit in second, along_interval); owners gives, for every
    result curve, the side and bit it is read from.
    """
    comps1, comps2 = first.components, second.components
    where1, where2 = _owners(comps1), _owners(comps2)
    offset = len(comps1)
    uf = UnionFind(range(offset + len(comps2)))
    cuts = []
    for bit1, bit2, interval in links:
        left = where1[bit1]
        uf.union(left, offset + where2[bit2])
        if interval:
            cuts.append(left)
    chi = {}
    dots = {}
    for index, (mask, dot) in enumerate(comps1 + comps2):
        root = uf.find(index)
        chi[root] = chi.get(root, 0) + 2 - popcount(mask)
        dots[root] = dots.get(root, 0) + dot
    # gluing along an interval lowers chi by one, along a circle by zero
    for index in cuts:
        chi[uf.find(index)] -= 1
    masks = {}
    for bit, (side, curve) in enumerate(owners):
        root = uf.find(where1[curve] if side == 0 else offset + where2[curve])
        masks[root] = masks.get(root, 0) | (1 << bit)
    return _finish(chi, dots, masks, first.tpow + second.tpow)


@lru_cache(maxsize=None)
def _compose_plan(key1, key2, key3):
    points = key1[0]
    c12 = _curve_set(points, key1[1], key1[2], key2[1], key2[2])
    c23 = _curve_set(points, key2[1], key2[2], key3[1], key3[2])
    c13 = _curve_set(points, key1[1], key1[2], key3[1], key3[2])
    links = [(c12.target[j], c23.source[j], False) for j in range(key2[2])]
    links += [(c12.point[p], c23.point[p], True) for p, q in key2[1]]
    owners = []
    for key in c13.keys:
        if key[0] == 'p':
            owners.append((0, c12.point[key[1]]))
        elif key[0] == 's':
            owners.append((0, c12.source[key[1]]))
        else:
            owners.append((1, c23.target[key[1]]))
    return tuple(links), tuple(owners)


@lru_cache(maxsize=None)
def _glue_plan(points1, matching1, ncircles1, points2, matching2, ncircles2):
    """ structure of the union of two flat tangles along their shared points """
    shared = set(points1) & set(points2)
    partners = ({}, {})
    arcs = ({}, {})
    for side, matching in ((0, matching1), (1, matching2)):
        for index, (p, q) in enumerate(matching):
            partners[side][p], partners[side][q] = q, p
            arcs[side][p] = arcs[side][q] = index
    free = sorted(set(points1) ^ set(points2))
    arc_home = ([None] * len(matching1), [None] * len(matching2))
    pairs = []
    done = set()
    for start in free:
        if start in done:
            continue
        side = 0 if start in points1 else 1
        current = start
        visited = []
        while True:
            visited.append((side, arcs[side][current]))
            current = partners[side][current]
            if current not in shared:
                break
            side = 1 - side
        done.update((start, current))
        pairs.append(((start, current), visited))
    pairs.sort()
    for index, (pair, visited) in enumerate(pairs):
        for side, arc in visited:
            arc_home[side][arc] = ('arc', index)
    origin = []
    point_home = {}
    # closed loops through shared points become circles
    for start in sorted(shared):
        if arc_home[0][arcs[0][start]] is not None:
            continue
        home = ('circle', len(origin))
        origin.append(('pt', start))
        current = start
        while True:
            arc_home[0][arcs[0][current]] = home
            current = partners[0][current]
            arc_home[1][arcs[1][current]] = home
            current = partners[1][current]
            if current == start:
                break
    for side in (0, 1):
        for index in range(ncircles1 if side == 0 else ncircles2):
            origin.append(('in' if side == 0 else 'out', index))
    for point in shared:
        point_home[point] = arc_home[0][arcs[0][point]]
    matching = tuple(tuple(sorted(pair)) for pair, visited in pairs)
    return (matching, tuple(free), tuple(origin), tuple(arc_home[0]), tuple(arc_home[1]),
            tuple(sorted(point_home.items())))


def glue_flat(inner, outer):
    """ glue_flat(F, F2) -> (G, origin), G the union of F and F2 along their
    shared boundary points, origin[j] telling where circle j of G comes from:
    ('pt', p) for a circle through the shared point p, ('in', i) or
    ('out', i) for circle i of F or F2. Shared points become marks of G.
    """
    plan = _glue_plan(inner.points, inner.matching, inner.ncircles,
                      outer.points, outer.matching, outer.ncircles)
    matching, free, origin, home1, home2, point_home = plan
    circle_of = dict((source, ('circle', index)) for index, source in enumerate(origin))
    marks = dict(point_home)
    for tag, flat, homes in (('in', inner, home1), ('out', outer, home2)):
        for name, (kind, index) in flat.marks.items():
            if name in marks:
                raise CobordismError("mark %r present on both sides" % (name, ))
            marks[name] = homes[index] if kind == 'arc' else circle_of[(tag, index)]
    return FlatTangle(matching, len(origin), free, marks), origin


@lru_cache(maxsize=None)
def _tensor_plan(inner1, outer1, inner2, outer2):
    """ inner1/outer1 are (points, matching, ncircles) of the sources,
    inner2/outer2 of the targets.
    """
    c_in = _curve_set(inner1[0], inner1[1], inner1[2], inner2[1], inner2[2])
    c_out = _curve_set(outer1[0], outer1[1], outer1[2], outer2[1], outer2[2])
    plan1 = _glue_plan(inner1[0], inner1[1], inner1[2], outer1[0], outer1[1], outer1[2])
    plan2 = _glue_plan(inner2[0], inner2[1], inner2[2], outer2[0], outer2[1], outer2[2])
    c_res = _curve_set(plan1[1], plan1[0], len(plan1[2]), plan2[0], len(plan2[2]))
    shared = sorted(set(inner1[0]) & set(outer1[0]))
    links = tuple((c_in.point[p], c_out.point[p], True) for p in shared)

    def circle_owner(origin, inner_bits, outer_bits):
        kind, value = origin
        if kind == 'pt':
            return (0, c_in.point[value])
        if kind == 'in':
            return (0, inner_bits[value])
        return (1, outer_bits[value])

    owners = []
    for key in c_res.keys:
        if key[0] == 'p':
            point = key[1]
            owners.append((0, c_in.point[point]) if point in inner1[0] else (1, c_out.point[point]))
        elif key[0] == 's':
            owners.append(circle_owner(plan1[2][key[1]], c_in.source, c_out.source))
        else:
            owners.append(circle_owner(plan2[2][key[1]], c_in.target, c_out.target))
    return links, tuple(owners)


def tensor_objects(first, second):
    """ tensor_objects(O, O2) -> glued CobObject, shifts added """
    flat, origin = glue_flat(first.flat, second.flat)
    return CobObject(flat, first.shift + second.shift)


class Morphism(object):
    """
    F_2-linear combination of dotted cobordisms source -> target.

    S.surfaces -> frozenset of Surface, equal surfaces cancel
    S.terms -> normal form, frozenset of (dotmask, tpow)
    S.curves -> CurveSet of (source, target)
    """
    __slots__ = ['source', 'target', 'surfaces', '_terms']

    def __init__(self, source, target, surfaces=()):
        self.source = source
        self.target = target
        if isinstance(surfaces, frozenset):
            self.surfaces = surfaces
        else:
            collected = set()
            for surface in surfaces:
                if surface is not None:
                    _toggle(collected, surface)
            self.surfaces = frozenset(collected)
        self._terms = None

    @classmethod
    def from_terms(cls, source, target, terms):
        """ Morphism.from_terms(source, target, terms) -> sum of dotted disk
        terms (dotmask, tpow).
        """
        count = len(boundary_curves(source, target))
        surfaces = [Surface(tuple((1 << bit, (mask >> bit) & 1) for bit in range(count)), tpow)
                    for mask, tpow in terms]
        return cls(source, target, surfaces)

    @classmethod
    def identity(cls, obj):
        curves = boundary_curves(obj, obj)
        components = [(1 << bit, 0) for bit, key in enumerate(curves.keys) if key[0] == 'p']
        components += [((1 << s) | (1 << t), 0) for s, t in zip(curves.source, curves.target)]
        return cls(obj, obj, [Surface(tuple(sorted(components)), 0)])

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, frozenset())

    @property
    def curves(self):
        return boundary_curves(self.source, self.target)

    @property
    def terms(self):
        if self._terms is None:
            collected = set()
            for surface in self.surfaces:
                for term in _surface_terms(surface):
                    _toggle(collected, term)
            self._terms = frozenset(collected)
        return self._terms

    def is_zero(self):
        return not self.surfaces or not self.terms

    def normalized(self):
        """ S.normalized() -> equal morphism built from its normal terms """
        return Morphism.from_terms(self.source, self.target, self.terms)

    def compact(self):
        """ S.compact() -> the representation with fewer surfaces """
        if len(self.surfaces) > 1 and len(self.terms) < len(self.surfaces):
            return self.normalized()
        return self

    def _check_parallel(self, other):
        if self.source != other.source or self.target != other.target:
            raise CobordismError("cannot add %r -> %r and %r -> %r" % (
                self.source, self.target, other.source, other.target))

    def __add__(self, other):
        self._check_parallel(other)
        return Morphism(self.source, self.target, self.surfaces.symmetric_difference(other.surfaces))

    __sub__ = __add__

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        if self.source != other.source or self.target != other.target:
            return False
        return self.surfaces == other.surfaces or self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def compose(self, other):
        """ S.compose(S2) -> S o S2, S2 applied first """
        if other.target != self.source:
            raise CobordismError("cannot compose %r -> %r after %r -> %r" % (
                self.source, self.target, other.source, other.target))
        if not self.surfaces or not other.surfaces:
            return Morphism.zero(other.source, self.target)
        links, owners = _compose_plan(other.source.flat.key, self.source.flat.key, self.target.flat.key)
        results = [_glue(lower, upper, links, owners) for lower in other.surfaces for upper in self.surfaces]
        return Morphism(other.source, self.target, results)

    def tensor(self, other):
        """ S.tensor(S2) -> S and S2 side by side, glued along shared points """
        source = tensor_objects(self.source, other.source)
        target = tensor_objects(self.target, other.target)
        if not self.surfaces or not other.surfaces:
            return Morphism.zero(source, target)
        links, owners = _tensor_plan(self.source.flat.key, other.source.flat.key,
                                     self.target.flat.key, other.target.flat.key)
        results = [_glue(left, right, links, owners) for left in self.surfaces for right in other.surfaces]
        return Morphism(source, target, results)

    def times_t(self, power=1):
        return Morphism(self.source, self.target,
                        [Surface(s.components, s.tpow + power) for s in self.surfaces])

    def _point_bit(self, name, side):
        curves = self.curves
        flat = self.target.flat if side == 'target' else self.source.flat
        if name in flat.points:
            return curves.point[name]
        try:
            kind, index = flat.marks[name]
        except KeyError:
            raise CobordismError("no point or mark named %r" % (name, ))
        if kind == 'arc':
            return curves.point[flat.matching[index][0]]
        return (curves.target if side == 'target' else curves.source)[index]

    def dotted(self, name, side='target'):
        """ S.dotted(p) -> X_p o S, one more dot on the component through p;
        side='source' gives S o X_p.
        """
        bit = 1 << self._point_bit(name, side)
        results = []
        for surface in self.surfaces:
            components = list(surface.components)
            tpow = surface.tpow
            for index, (mask, dot) in enumerate(components):
                if mask & bit:
                    components[index] = (mask, 1 - dot)
                    tpow += dot
                    break
            results.append(Surface(tuple(components), tpow))
        return Morphism(self.source, self.target, results)

    def derivative(self):
        """ S.derivative() -> sum over dotted components with the dot removed """
        results = []
        for surface in self.surfaces:
            for index, (mask, dot) in enumerate(surface.components):
                if dot:
                    components = list(surface.components)
                    components[index] = (mask, 0)
                    results.append(Surface(tuple(components), surface.tpow))
        return Morphism(self.source, self.target, results)

    def _remapped(self, source, target, bitmap):
        results = []
        for surface in self.surfaces:
            components = []
            for mask, dot in surface.components:
                new = 0
                for bit in _bits(mask):
                    new |= 1 << bitmap[bit]
                components.append((new, dot))
            results.append(Surface(tuple(sorted(components)), surface.tpow))
        return Morphism(source, target, results)

    def reversed(self):
        """ S.reversed() -> S read upside down, target -> source """
        old, new = self.curves, boundary_curves(self.target, self.source)
        swap = {'s': 't', 't': 's'}
        bitmap = []
        for key in old.keys:
            bitmap.append(new.index[key if key[0] == 'p' else (swap[key[0]], key[1])])
        return self._remapped(self.target, self.source, bitmap)

    def rotated(self, perm=None):
        """ S.rotated([perm]) -> S with boundary points renamed by perm, the
        half turn a<->c, b<->d by default.
        """
        perm = Z_TURN if perm is None else perm
        source = CobObject(self.source.flat.permuted(perm), self.source.shift)
        target = CobObject(self.target.flat.permuted(perm), self.target.shift)
        new = boundary_curves(source, target)
        bitmap = []
        for key in self.curves.keys:
            if key[0] == 'p':
                key = ('p', ) + tuple(sorted(perm[p] for p in key[1:]))
            bitmap.append(new.index[key])
        return self._remapped(source, target, bitmap)

    def degrees(self):
        """ S.degrees() -> set of quantum degrees of the surfaces """
        half = len(self.source.points) // 2
        shift = self.target.shift - self.source.shift
        result = set()
        for surface in self.surfaces:
            chi = sum(2 - popcount(mask) for mask, dot in surface.components)
            dots = sum(dot for mask, dot in surface.components)
            result.add(chi - half - 2 * dots - 4 * surface.tpow + shift)
        return result

    def term_degree(self, term):
        mask, tpow = term
        return len(self.curves) - len(self.source.points) // 2 - 2 * popcount(mask) - 4 * tpow + \
            self.target.shift - self.source.shift

    def degree(self):
        """ S.degree() -> quantum degree, None for zero; mixed degrees raise """
        degrees = self.degrees()
        if len(degrees) > 1:
            degrees = set(self.term_degree(term) for term in self.terms)
        if len(degrees) > 1:
            raise CobordismError("morphism is not homogeneous: degrees %r" % sorted(degrees))
        return degrees.pop() if degrees else None

    def __repr__(self):
        return "Morphism(%r -> %r, %d surfaces)" % (self.source, self.target, len(self.surfaces))


def identity(obj):
    return Morphism.identity(obj)


def compose(second, first):
    """ compose(S2, S1) -> S2 o S1 """
    return second.compose(first)


def tensor(first, second):
    return first.tensor(second)


def degree(morphism):
    return morphism.degree()


def dot_multiply(name, target):
    """ dot_multiply(p, S) -> X_p o S; for an object O the dotted identity X_p """
    if isinstance(target, CobObject):
        target = Morphism.identity(target)
    return target.dotted(name)


def dot_derivative(morphism):
    return morphism.derivative()


def rotate_cob(morphism):
    """ rotate_cob(S) -> S turned by a half turn, for disk cobordisms """
    if morphism.source.points != POINTS:
        raise CobordismError("rotation needs the boundary points a, b, c, d")
    return morphism.rotated(Z_TURN)


def reverse_cob(morphism):
    return morphism.reversed()


def dump_object(obj):
    return {
        'matching': [list(pair) for pair in obj.flat.matching],
        'circles': obj.flat.ncircles,
        'shift': obj.shift,
    }


def dump_morphism(morphism):
    """ dump_morphism(S) -> JSON-ready dict of the normal form """
    curves = morphism.curves
    terms = []
    for mask, tpow in sorted(morphism.terms):
        dots = dict((curves.label(bit), (mask >> bit) & 1) for bit in range(len(curves)))
        terms.append({'dots': dots, 'tPower': tpow})
    return {
        'source': dump_object(morphism.source),
        'target': dump_object(morphism.target),
        'terms': terms,
    }
