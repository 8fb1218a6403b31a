#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: matrices of cobordisms, chain complexes, delooping and straightening
# Created: 04.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

from __future__ import absolute_import

import itertools
import logging
from collections import namedtuple

from .cob import (CobObject, CobordismError, Morphism, boundary_curves, tensor_objects, dump_object,
                  dump_morphism)
from .diagrams import FlatTangle, POINTS, O_0, O_1

logger = logging.getLogger(__name__)


class ComplexError(ValueError):
    pass


class MatObject(object):
    """ Finite tuple of CobObjects, the direct sum of its summands. """
    __slots__ = ['summands']

    def __init__(self, summands=()):
        self.summands = tuple(summands)

    def __len__(self):
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def __getitem__(self, index):
        return self.summands[index]

    def shifted(self, amount):
        return MatObject(obj.shifted(amount) for obj in self.summands)

    def __eq__(self, other):
        return isinstance(other, MatObject) and self.summands == other.summands

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.summands)

    def __repr__(self):
        return "MatObject(%s)" % ', '.join(repr(obj) for obj in self.summands)


def _accumulate(rows, row, col, morphism):
    entries = rows.setdefault(row, {})
    present = entries.get(col)
    entries[col] = morphism if present is None else present + morphism


def _pruned(rows):
    result = {}
    for row, entries in rows.items():
        kept = dict((col, m.compact()) for col, m in entries.items() if not m.is_zero())
        if kept:
            result[row] = kept
    return result


class MatMorphism(object):
    """
    Sparse matrix of Morphisms between MatObjects; rows[i][j] maps source[j]
    to target[i], absent entries are zero.
    """
    __slots__ = ['source', 'target', 'rows', '_columns']

    def __init__(self, source, target, entries=None, check=True, prune=True):
        self.source = source
        self.target = target
        rows = {}
        if isinstance(entries, dict):
            for row, cols in entries.items():
                for col, morphism in cols.items():
                    _accumulate(rows, row, col, morphism)
        elif entries:
            for row, col, morphism in entries:
                _accumulate(rows, row, col, morphism)
        self.rows = _pruned(rows) if prune else rows
        self._columns = None
        if check:
            for row, cols in self.rows.items():
                if not 0 <= row < len(target):
                    raise ComplexError("row %d outside a target of size %d" % (row, len(target)))
                for col, morphism in cols.items():
                    if not 0 <= col < len(source):
                        raise ComplexError("column %d outside a source of size %d" % (col, len(source)))
                    if morphism.source != source[col] or morphism.target != target[row]:
                        raise ComplexError("entry (%d, %d) has shape %r -> %r" % (
                            row, col, morphism.source, morphism.target))

    @classmethod
    def identity(cls, obj):
        return cls(obj, obj, [(k, k, Morphism.identity(summand)) for k, summand in enumerate(obj)],
                   check=False, prune=False)

    @classmethod
    def zero(cls, source, target):
        return cls(source, target)

    @property
    def columns(self):
        """ M.columns -> dict col -> {row: Morphism} """
        if self._columns is None:
            columns = {}
            for row, cols in self.rows.items():
                for col, morphism in cols.items():
                    columns.setdefault(col, {})[row] = morphism
            self._columns = columns
        return self._columns

    def get(self, row, col):
        morphism = self.rows.get(row, {}).get(col)
        if morphism is None:
            return Morphism.zero(self.source[col], self.target[row])
        return morphism

    def entries(self):
        """ M.entries() -> sorted list of (row, col, Morphism) """
        return [(row, col, self.rows[row][col]) for row in sorted(self.rows) for col in sorted(self.rows[row])]

    def is_zero(self):
        return not self.rows

    def compose(self, other):
        """ M.compose(N) -> M o N """
        if other.target != self.source:
            raise ComplexError("cannot compose matrices: %r after %r" % (self.source, other.target))
        rows = {}
        for row, cols in self.rows.items():
            for middle, upper in cols.items():
                for col, lower in other.rows.get(middle, {}).items():
                    _accumulate(rows, row, col, upper.compose(lower))
        return MatMorphism(other.source, self.target, rows, check=False)

    def __add__(self, other):
        if self.source != other.source or self.target != other.target:
            raise ComplexError("cannot add matrices of different shapes")
        rows = {}
        for matrix in (self, other):
            for row, cols in matrix.rows.items():
                for col, morphism in cols.items():
                    _accumulate(rows, row, col, morphism)
        return MatMorphism(self.source, self.target, rows, check=False)

    __sub__ = __add__

    def apply(self, function):
        """ M.apply(f) -> entrywise f, f mapping Morphism -> Morphism of the same shape """
        return MatMorphism(self.source, self.target,
                           [(row, col, function(m)) for row, col, m in self.entries()], check=False)

    def first_difference(self, other):
        """ M.first_difference(N) -> first (row, col) where M and N differ, or None """
        positions = set((row, col) for row, cols in self.rows.items() for col in cols)
        positions.update((row, col) for row, cols in other.rows.items() for col in cols)
        for row, col in sorted(positions):
            mine = self.rows.get(row, {}).get(col)
            theirs = other.rows.get(row, {}).get(col)
            if mine is None:
                if not theirs.is_zero():
                    return (row, col)
            elif theirs is None:
                if not mine.is_zero():
                    return (row, col)
            elif mine != theirs:
                return (row, col)
        return None

    def __eq__(self, other):
        if not isinstance(other, MatMorphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target and \
            self.first_difference(other) is None

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        count = sum(len(cols) for cols in self.rows.values())
        return "MatMorphism(%dx%d, %d entries)" % (len(self.target), len(self.source), count)


def mat_compose(first, second):
    """ mat_compose(F, G) -> F o G """
    return first.compose(second)


ComplexReport = namedtuple('ComplexReport', ['ok', 'failures'])


class Complex(object):
    """
    Bounded chain complex over the cobordism category.

    C.objects -> dict degree -> MatObject
    C.differentials -> dict degree i -> MatMorphism C^i -> C^(i+1)
    """
    __slots__ = ['objects', 'differentials']

    def __init__(self, objects, differentials=None, verify=False):
        self.objects = dict((i, obj) for i, obj in objects.items() if len(obj))
        self.differentials = {}
        for i, matrix in (differentials or {}).items():
            if matrix.source != self.object(i) or matrix.target != self.object(i + 1):
                raise ComplexError("differential %d does not map C^%d to C^%d" % (i, i, i + 1))
            if not matrix.is_zero():
                self.differentials[i] = matrix
        if verify:
            report = verify_complex(self)
            if not report.ok:
                raise ComplexError("not a complex: %r" % (report.failures[:3], ))

    @property
    def degrees(self):
        return sorted(self.objects)

    def object(self, i):
        return self.objects.get(i, MatObject())

    def differential(self, i):
        matrix = self.differentials.get(i)
        if matrix is None:
            return MatMorphism.zero(self.object(i), self.object(i + 1))
        return matrix

    def __len__(self):
        return sum(len(obj) for obj in self.objects.values())

    def same_objects(self, other):
        return self.degrees == other.degrees and all(self.objects[i] == other.objects[i] for i in self.degrees)

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        if not self.same_objects(other):
            return False
        return all(self.differential(i) == other.differential(i) for i in self.degrees)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return "Complex(%s)" % ', '.join('%d:%d' % (i, len(self.objects[i])) for i in self.degrees)


def has_degree(morphism, expected=0):
    """ has_degree(S[, expected]) -> False for mixed degrees or a degree other
    than expected; the zero morphism has every degree.
    """
    try:
        degree = morphism.degree()
    except CobordismError:
        return False
    return degree in (expected, None)


def verify_complex(complex_):
    """ verify_complex(C) -> ComplexReport(ok, failures)

    failures lists ('square', i, row, col) for nonzero entries of d^(i+1) o d^i
    and ('degree', i, row, col) for differential entries that are not
    homogeneous of quantum degree 0.
    """
    failures = []
    for i in sorted(complex_.differentials):
        for row, col, morphism in complex_.differentials[i].entries():
            if not has_degree(morphism):
                failures.append(('degree', i, row, col))
        if i + 1 in complex_.differentials:
            square = complex_.differentials[i + 1].compose(complex_.differentials[i])
            for row, col, morphism in square.entries():
                failures.append(('square', i, row, col))
    logger.debug("verified complex %r: %d failures", complex_, len(failures))
    return ComplexReport(not failures, failures)


class GradedMap(object):
    """
    Map of homological degree k between complexes, components[i]: C^i -> D^(i+k).
    Chain maps have degree 0, homotopies degree -1, differentials degree 1.
    """
    __slots__ = ['source', 'target', 'degree', 'components']

    def __init__(self, source, target, degree=0, components=None):
        self.source = source
        self.target = target
        self.degree = degree
        self.components = {}
        for i, matrix in (components or {}).items():
            if matrix.source != source.object(i) or matrix.target != target.object(i + degree):
                raise ComplexError("component %d has the wrong shape" % i)
            if not matrix.is_zero():
                self.components[i] = matrix

    @classmethod
    def identity(cls, complex_):
        return cls(complex_, complex_, 0,
                   dict((i, MatMorphism.identity(complex_.objects[i])) for i in complex_.degrees))

    @classmethod
    def differential(cls, complex_):
        """ GradedMap.differential(C) -> d of C as a degree 1 map C -> C """
        return cls(complex_, complex_, 1, complex_.differentials)

    def component(self, i):
        matrix = self.components.get(i)
        if matrix is None:
            return MatMorphism.zero(self.source.object(i), self.target.object(i + self.degree))
        return matrix

    def compose(self, other):
        """ F.compose(G) -> F o G """
        components = {}
        for i, lower in other.components.items():
            upper = self.components.get(i + other.degree)
            if upper is not None:
                components[i] = upper.compose(lower)
        return GradedMap(other.source, self.target, self.degree + other.degree, components)

    def __add__(self, other):
        if self.degree != other.degree:
            raise ComplexError("cannot add maps of degrees %d and %d" % (self.degree, other.degree))
        components = dict(self.components)
        for i, matrix in other.components.items():
            components[i] = components[i] + matrix if i in components else matrix
        return GradedMap(self.source, self.target, self.degree, components)

    __sub__ = __add__

    def apply(self, function):
        return GradedMap(self.source, self.target, self.degree,
                         dict((i, m.apply(function)) for i, m in self.components.items()))

    def first_difference(self, other):
        """ F.first_difference(G) -> (i, row, col) of the first differing entry, or None

        Only the matrices are compared, so maps between complexes with equal
        objects but different differentials can be compared.
        """
        if self.degree != other.degree:
            return ('degree', self.degree, other.degree)
        for i in sorted(set(self.components) | set(other.components)):
            mine, theirs = self.component(i), other.component(i)
            if mine.source != theirs.source or mine.target != theirs.target:
                return (i, None, None)
            position = mine.first_difference(theirs)
            if position is not None:
                return (i, ) + position
        return None

    def __eq__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        return self.first_difference(other) is None

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def is_chain_map(self):
        """ F.is_chain_map() -> True if F o d == d o F (up to F's degree over F_2) """
        left = self.compose(GradedMap.differential(self.source))
        right = GradedMap.differential(self.target).compose(self)
        return left == right

    def __repr__(self):
        return "GradedMap(degree %d, %d components)" % (self.degree, len(self.components))


ChainMap = GradedMap


class TensorComplex(Complex):
    """
    C (x) D with d = d_C (x) 1 + 1 (x) d_D. Summands of degree i are laid out by
    ascending i1, then summand a of C^i1, then summand b of D^(i-i1).

    index -> dict (i1, a, i2, b) -> position in degree i1 + i2
    layout -> dict degree -> list of (i1, a, i2, b)
    """
    __slots__ = ['index', 'layout', 'factors']


def _tensor_layout(first, second):
    layout = {}
    for i1 in first.degrees:
        for i2 in second.degrees:
            slots = layout.setdefault(i1 + i2, [])
            for a in range(len(first.objects[i1])):
                for b in range(len(second.objects[i2])):
                    slots.append((i1, a, i2, b))
    for slots in layout.values():
        slots.sort()
    return layout


def complex_tensor(first, second):
    """ complex_tensor(C, D) -> TensorComplex C (x) D """
    layout = _tensor_layout(first, second)
    index = {}
    objects = {}
    for i, slots in layout.items():
        summands = []
        for position, (i1, a, i2, b) in enumerate(slots):
            index[(i1, a, i2, b)] = position
            summands.append(tensor_objects(first.objects[i1][a], second.objects[i2][b]))
        objects[i] = MatObject(summands)
    identities = {}

    def unit(complex_, i, k):
        key = (id(complex_), i, k)
        if key not in identities:
            identities[key] = Morphism.identity(complex_.objects[i][k])
        return identities[key]

    differentials = {}
    for i, slots in layout.items():
        if i + 1 not in layout:
            continue
        entries = []
        for position, (i1, a, i2, b) in enumerate(slots):
            if i1 in first.differentials:
                for target, morphism in first.differentials[i1].columns.get(a, {}).items():
                    entries.append((index[(i1 + 1, target, i2, b)], position, morphism.tensor(unit(second, i2, b))))
            if i2 in second.differentials:
                for target, morphism in second.differentials[i2].columns.get(b, {}).items():
                    entries.append((index[(i1, a, i2 + 1, target)], position, unit(first, i1, a).tensor(morphism)))
        differentials[i] = MatMorphism(objects[i], objects[i + 1], entries, check=False)
    result = TensorComplex(objects, differentials)
    result.index = index
    result.layout = layout
    result.factors = (first, second)
    logger.debug("tensor product of %r and %r has %d summands", first, second, len(result))
    return result


def tensor_maps(left, right, source, target):
    """ tensor_maps(F, G, S, T) -> F (x) G as a GradedMap S -> T, where S and T
    are the TensorComplexes of the sources and targets of F and G.
    """
    degree = left.degree + right.degree
    components = {}
    for i, slots in source.layout.items():
        if i + degree not in target.layout:
            continue
        entries = []
        for position, (i1, a, i2, b) in enumerate(slots):
            first = left.components.get(i1)
            second = right.components.get(i2)
            if first is None or second is None:
                continue
            for a2, f in first.columns.get(a, {}).items():
                for b2, g in second.columns.get(b, {}).items():
                    entries.append((target.index[(i1 + left.degree, a2, i2 + right.degree, b2)], position,
                                    f.tensor(g)))
        components[i] = MatMorphism(source.objects[i], target.objects[i + degree], entries, check=False)
    return GradedMap(source, target, degree, components)


def deloop_object(obj):
    """ deloop_object(O) -> list of (O_sigma, G_sigma, H_sigma)

    O_sigma is O without circles, shifted by the sum of sigma in {+1, -1}^n,
    in lexicographic order with +1 first. G_sigma: O -> O_sigma caps every
    circle, dotted where sigma is +1; H_sigma: O_sigma -> O cups every
    circle, dotted where sigma is -1.
    """
    flat = obj.flat
    if not flat.ncircles:
        return [(obj, Morphism.identity(obj), Morphism.identity(obj))]
    marks = dict((name, c) for name, c in flat.marks.items() if c[0] == 'arc')
    trace = dict((edge, c) for edge, c in flat.trace.items() if c[0] == 'arc')
    bare = FlatTangle(flat.matching, 0, flat.points, marks, trace)
    result = []
    # circle j becomes {+1} (dotted cap) or {-1} (dotted cup)
    for sigma in itertools.product((1, -1), repeat=flat.ncircles):
        summand = CobObject(bare, obj.shift + sum(sigma))
        cap_curves = boundary_curves(obj, summand)
        cup_curves = boundary_curves(summand, obj)
        cap_dots = 0
        cup_dots = 0
        for j, sign in enumerate(sigma):
            if sign > 0:
                cap_dots |= 1 << cap_curves.source[j]
            else:
                cup_dots |= 1 << cup_curves.target[j]
        result.append((summand,
                       Morphism.from_terms(obj, summand, [(cap_dots, 0)]),
                       Morphism.from_terms(summand, obj, [(cup_dots, 0)])))
    return result


def _conjugate(complex_, expand):
    """ replace every summand by the summands expand(O) -> [(O', F, Finv)] """
    objects = {}
    forward = {}
    backward = {}
    for i in complex_.degrees:
        summands = []
        there = []
        back = []
        for col, obj in enumerate(complex_.objects[i]):
            for new, f, finv in expand(obj):
                there.append((len(summands), col, f))
                back.append((col, len(summands), finv))
                summands.append(new)
        objects[i] = MatObject(summands)
        forward[i] = there
        backward[i] = back
    for i in complex_.degrees:
        forward[i] = MatMorphism(complex_.objects[i], objects[i], forward[i], check=False)
        backward[i] = MatMorphism(objects[i], complex_.objects[i], backward[i], check=False)
    differentials = {}
    for i, matrix in complex_.differentials.items():
        differentials[i] = forward[i + 1].compose(matrix).compose(backward[i])
    result = Complex(objects, differentials)
    return (result, GradedMap(complex_, result, 0, forward), GradedMap(result, complex_, 0, backward))


def deloop(complex_):
    """ deloop(C) -> (C', F, Finv), C' with circle-free objects and F: C -> C'
    an isomorphism with inverse Finv.
    """
    result = _conjugate(complex_, deloop_object)
    logger.debug("delooped %r into %r", complex_, result[0])
    return result


def straighten_object(obj):
    flat = obj.flat
    if flat.ncircles:
        raise ComplexError("cannot straighten %r: it still has circles" % (obj, ))
    if flat.points == POINTS and flat.matching not in (O_0, O_1):
        raise ComplexError("matching %r is not planar in the disk" % (flat.matching, ))
    plain = CobObject(flat.canonical(), obj.shift)
    return [(plain, Morphism.identity(obj), Morphism.identity(plain))]


def straighten(complex_):
    """ straighten(C) -> (C', F, Finv), every object replaced by the plain
    O_0 or O_1 (marks and resolution traces dropped).
    """
    return _conjugate(complex_, straighten_object)


def enhanced_deloop(complex_):
    """ enhanced_deloop(C) -> (C', F, Finv), straighten o deloop """
    delooped, forward, backward = deloop(complex_)
    straight, forward2, backward2 = straighten(delooped)
    return straight, forward2.compose(forward), backward.compose(backward2)


def _is_unit(morphism):
    source, target = morphism.source, morphism.target
    if source != target or source.flat.ncircles:
        return False
    return morphism == Morphism.identity(source)


def gaussian_eliminate(complex_):
    """ gaussian_eliminate(C) -> homotopy equivalent complex

    Repeatedly removes a pair of summands joined by an identity entry
    d[b][a], replacing d[y][x] by d[y][x] + d[y][a] o d[b][x].
    """
    labels = dict((i, list(range(len(complex_.objects[i])))) for i in complex_.degrees)
    rows = {}
    for i, matrix in complex_.differentials.items():
        rows[i] = dict((row, dict(cols)) for row, cols in matrix.rows.items())
    removed = 0

    def find_unit():
        for i in sorted(rows):
            for row in sorted(rows[i]):
                for col in sorted(rows[i][row]):
                    if _is_unit(rows[i][row][col]):
                        return i, row, col
        return None

    while True:
        found = find_unit()
        if found is None:
            break
        i, b, a = found
        # d[y][x] += d[y][a] o d[b][x], no sign over F_2
        d = rows[i]
        column_a = [(y, cols[a]) for y, cols in d.items() if y != b and a in cols]
        row_b = [(x, m) for x, m in d[b].items() if x != a]
        for y, upper in column_a:
            for x, lower in row_b:
                _accumulate(d, y, x, upper.compose(lower))
                if d[y][x].is_zero():
                    del d[y][x]
                else:
                    d[y][x] = d[y][x].compact()
        del d[b]
        for y in list(d):
            d[y].pop(a, None)
            if not d[y]:
                del d[y]
        if i - 1 in rows:
            rows[i - 1].pop(a, None)
        if i + 1 in rows:
            for y in list(rows[i + 1]):
                rows[i + 1][y].pop(b, None)
                if not rows[i + 1][y]:
                    del rows[i + 1][y]
        labels[i].remove(a)
        labels[i + 1].remove(b)
        removed += 1
    objects = {}
    position = {}
    for i, kept in labels.items():
        objects[i] = MatObject(complex_.objects[i][k] for k in kept)
        position[i] = dict((k, n) for n, k in enumerate(kept))
    differentials = {}
    for i, d in rows.items():
        if i not in objects or i + 1 not in objects:
            continue
        entries = [(position[i + 1][y], position[i][x], m) for y, cols in d.items() for x, m in cols.items()]
        differentials[i] = MatMorphism(objects[i], objects[i + 1], entries, check=False, prune=False)
    logger.info("gaussian elimination removed %d summand pairs", removed)
    return Complex(objects, differentials)


def dump_complex(complex_):
    """ dump_complex(C) -> JSON-ready dict """
    return {
        'objects': dict((str(i), [dump_object(obj) for obj in complex_.objects[i]]) for i in complex_.degrees),
        'differentials': dict((str(i), [[row, col, dump_morphism(m)] for row, col, m in matrix.entries()])
                              for i, matrix in sorted(complex_.differentials.items())),
    }
