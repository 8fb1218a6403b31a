#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: crossed z-mutation: arc tracing, dot migration and the isomorphism phi
# Created: 08.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

"""
Mutation of a link L = T u T2 along the disk of the inner tangle T.

The outer tangle T2 must be crossed, its strand alpha runs from a to c. The
arc is cut by the crossings c_1..c_m it passes into the edges e_1..e_m+1;
mark pk sits on e_k, so p1 lies next to a and p(m+1) next to c.

With K the enhanced delooping of Kh(T), delta its differential and
E = d/dot(delta), the complexes

    A = K (x) Kh(T2)        B = R_dot(K) (x) Kh(T2)

share their objects, and phi = phi_1 o ... o phi_m with
phi_k = 1 + E (x) h_k conjugates d_A into d_B. h_k runs the saddles of c_k
backwards.
"""

from __future__ import absolute_import

import logging
from collections import namedtuple

from .bracket import crossing_differential, khovanov_bracket
from .cob import Morphism
from .diagrams import (POINTS, O_0, O_1, DiagramError, OrientationError, connectivity, crossing_signs,
                       glue, link_components, reverse, rotate_z)
from .homology import khovanov_homology
from .matcat import (Complex, ComplexError, GradedMap, MatMorphism, complex_tensor, enhanced_deloop,
                     gaussian_eliminate, has_degree, tensor_maps)

logger = logging.getLogger(__name__)


class HypothesisError(ValueError):
    pass


class ArcTraversal(object):
    """
    The strand of the outer tangle from a to c.

    A.edges -> e_1 .. e_m+1
    A.crossings -> c_1 .. c_m, self-crossings listed at both passages
    A.marks -> names of the marked points p1 .. p(m+1)
    A.self_crossings -> pairs (k, l) of 1-based positions of the same crossing
    """
    __slots__ = ['edges', 'crossings', 'marks', 'self_crossings']

    def __init__(self, edges, crossings):
        self.edges = tuple(edges)
        self.crossings = tuple(crossings)
        self.marks = tuple('p%d' % (k + 1) for k in range(len(self.edges)))
        seen = {}
        pairs = []
        for k, crossing in enumerate(self.crossings, 1):
            if crossing in seen:
                pairs.append((seen[crossing], k))
            else:
                seen[crossing] = k
        self.self_crossings = tuple(pairs)

    @property
    def m(self):
        return len(self.crossings)

    def to_json(self):
        return {
            'edges': list(self.edges),
            'crossings': list(self.crossings),
            'selfCrossings': [list(pair) for pair in self.self_crossings],
        }

    def __repr__(self):
        return "ArcTraversal(m=%d, crossings=%r)" % (self.m, self.crossings)


def _check_crossed(outer):
    if outer.region != 'disk-complement':
        raise HypothesisError("the outer tangle must live in the disk complement, got %s" % outer.region)
    kind = connectivity(outer)
    if kind != 'crossed':
        raise HypothesisError("the outer tangle is %s, not crossed" % kind)


def trace_arc(outer):
    """ trace_arc(T2) -> ArcTraversal of the strand from a to c """
    _check_crossed(outer)
    path, closed = outer.walk(outer.boundary['a'], 'a')
    if closed or path[-1][2] != 'c':
        raise HypothesisError("the strand leaving a does not end at c")
    edges = [edge for edge, tail, head in path]
    crossings = [head[0] for edge, tail, head in path[:-1]]  # the last edge ends at c
    return ArcTraversal(edges, crossings)


def mark_arc(outer, traversal):
    """ mark_arc(T2, traversal) -> T2 with the marks p1 .. p(m+1) on e_1 .. e_m+1 """
    return outer.with_marks(dict(zip(traversal.marks, traversal.edges)))


def _check_straight(complex_):
    for i in complex_.degrees:
        for obj in complex_.objects[i]:
            flat = obj.flat
            if flat.ncircles or flat.points != POINTS or flat.matching not in (O_0, O_1):
                raise ComplexError("%r is not O_0 or O_1" % (obj, ))


def dot_rotate(morphism):
    """ dot_rotate(S) -> S + (x_a + x_c) d/dot S """
    derivative = morphism.derivative()
    if derivative.is_zero():
        return morphism
    return morphism + derivative.dotted('a') + derivative.dotted('c')


def dot_rotation(complex_, verify=False):
    """ dot_rotation(C) -> C with every differential entry S replaced by
    S + (x_a + x_c) d/dot S; the objects must be O_0 or O_1.
    """
    _check_straight(complex_)
    differentials = dict((i, matrix.apply(dot_rotate)) for i, matrix in complex_.differentials.items())
    return Complex(complex_.objects, differentials, verify=verify)


def migration_homotopy(bracket, k, traversal):
    """ migration_homotopy(Kh(T2), k, traversal) -> h_k, the degree -1 map
    whose entries are the reversed saddles of the crossing c_k.
    """
    if not 1 <= k <= traversal.m:
        raise HypothesisError("k = %d outside 1..%d" % (k, traversal.m))
    d_c = crossing_differential(bracket, traversal.crossings[k - 1])
    components = {}
    for i, matrix in d_c.components.items():
        # transpose: h_k runs from degree i + 1 back to i
        entries = [(col, row, morphism.reversed()) for row, col, morphism in matrix.entries()]
        components[i + 1] = MatMorphism(matrix.target, matrix.source, entries, check=False, prune=False)
    return GradedMap(bracket, bracket, -1, components)


def dot_multiplication(complex_, name):
    """ dot_multiplication(C, p) -> diagonal degree 0 map X_p of dotted identities """
    components = {}
    for i in complex_.degrees:
        summands = complex_.objects[i]
        components[i] = MatMorphism(summands, summands,
                                    [(n, n, Morphism.identity(obj).dotted(name)) for n, obj in enumerate(summands)],
                                    check=False)
    return GradedMap(complex_, complex_, 0, components)


def dot_multiplication_endos(bracket, traversal):
    """ dot_multiplication_endos(Kh(T2), traversal) -> [X_1, .., X_m+1] """
    return [dot_multiplication(bracket, name) for name in traversal.marks]


PhiData = namedtuple('PhiData', ['A', 'B', 'phi', 'factors', 'order', 'inner', 'rotated', 'outer',
                                 'derivative', 'traversal'])


def _signs(diagram):
    if diagram.is_oriented:
        return crossing_signs(diagram)
    logger.info("unoriented %r: bracket built without shifts", diagram)
    return (0, 0)


def build_phi(inner, outer, simplify=False, skip_self_crossings=False, jobs=None):
    """ build_phi(T, T2[, simplify, skip_self_crossings, jobs]) -> PhiData

    simplify runs gaussian elimination on the enhanced delooping of Kh(T);
    skip_self_crossings leaves out both factors of every self-crossing of the
    arc, whose product is the identity.
    """
    if inner.region != 'disk':
        raise DiagramError("the inner tangle must live in the disk, got %s" % inner.region)
    traversal = trace_arc(outer)
    marked = mark_arc(outer, traversal)
    straight = enhanced_deloop(khovanov_bracket(inner, signs=_signs(inner), jobs=jobs))[0]
    if simplify:
        straight = gaussian_eliminate(straight)
    rotated = dot_rotation(straight)
    outer_bracket = khovanov_bracket(marked, signs=_signs(outer), jobs=jobs)
    first = complex_tensor(straight, outer_bracket)
    second = complex_tensor(rotated, outer_bracket)
    if not first.same_objects(second):
        raise ComplexError("A and B differ as graded objects")
    derivative = GradedMap.differential(straight).apply(Morphism.derivative)
    skipped = set()
    if skip_self_crossings:
        for pair in traversal.self_crossings:
            skipped.update(pair)
    order = [k for k in range(1, traversal.m + 1) if k not in skipped]
    unit = GradedMap.identity(first)
    factors = []
    phi = unit
    for k in order:
        homotopy = migration_homotopy(outer_bracket, k, traversal)
        factor = unit + tensor_maps(derivative, homotopy, first, first)
        factors.append(factor)
        phi = phi.compose(factor)
    logger.info("phi built from %d factors over %d summands", len(factors), len(first))
    return PhiData(first, second, phi, factors, order, straight, rotated, outer_bracket, derivative, traversal)


def mutant_inner(inner, outer):
    """ mutant_inner(T, T2) -> R_z(T), reversed when its orientation does not
    fit T2.
    """
    turned = rotate_z(inner)
    if not (turned.is_oriented and outer.is_oriented):
        return turned
    try:
        glue(turned, outer)
    except OrientationError:
        logger.info("reversing the rotated inner tangle to match the outer orientation")
        turned = reverse(turned)
    return turned


def mutate_diagram(inner, outer):
    """ mutate_diagram(T, T2) -> glue(R_z(T), T2), orientation fixed if needed """
    return glue(mutant_inner(inner, outer), outer)


Stage = namedtuple('Stage', ['name', 'ok', 'counterexample'])


class MutationCertificate(object):
    """
    Outcome of verify_mutation.

    C.stages -> list of Stage(name, ok, counterexample) in checking order
    C.tables -> {'original': {...}, 'mutant': {...}} homology tables or None
    C.valid -> all stages passed
    """
    __slots__ = ['stages', 'tables', 'order', 'traversal', 'components', 'sizes', 'data']

    def __init__(self, traversal, order, data=None):
        self.stages = []
        self.tables = None
        self.order = list(order)
        self.traversal = traversal
        self.components = None
        self.sizes = None
        self.data = data

    def add(self, name, counterexample):
        self.stages.append(Stage(name, counterexample is None, counterexample))
        logger.info("stage %s: %s", name, 'ok' if counterexample is None else 'FAILED at %r' % (counterexample, ))

    @property
    def valid(self):
        return all(stage.ok for stage in self.stages)

    def first_failure(self):
        for stage in self.stages:
            if not stage.ok:
                return stage
        return None

    def to_json(self):
        failure = self.first_failure()
        return {
            'valid': self.valid,
            'stages': [{'name': stage.name, 'ok': stage.ok,
                        'counterexample': None if stage.counterexample is None else list(stage.counterexample)}
                       for stage in self.stages],
            'firstFailure': None if failure is None else failure.name,
            'order': self.order,
            'traversal': self.traversal.to_json(),
            'components': self.components,
            'sizes': self.sizes,
            'tables': self.tables,
        }


def _degree_failure(phi):
    for i in sorted(phi.components):
        for row, col, morphism in phi.components[i].entries():
            if not has_degree(morphism):
                return (i, row, col)
    return None


def _complex_failure(complex_):
    for i in sorted(complex_.differentials):
        if i + 1 in complex_.differentials:
            square = complex_.differentials[i + 1].compose(complex_.differentials[i])
            for row, col, morphism in square.entries():
                return (i, row, col)
    return None


def _tables(diagram, simplify, jobs):
    # the t = 1 table is the t = 0 table with j summed out
    khovanov = khovanov_homology(diagram, 0, simplify=simplify, jobs=jobs)
    lee = khovanov.collapsed()
    return {'khovanov': khovanov.to_json(), 'lee': lee.to_json(), 'leeTotal': lee.total()}


def verify_mutation(inner, outer, simplify=False, skip_self_crossings=False, homology=True, jobs=None):
    """ verify_mutation(T, T2[, simplify, skip_self_crossings, homology, jobs])
    -> MutationCertificate

    Stages, in order: phi o phi = 1, phi commutes with delta (x) 1, the
    telescope identity phi (1 (x) d) phi = 1 (x) d + E (x) (X_1 + X_m+1),
    phi d_A phi = d_B, B is a complex, phi has quantum degree 0, and with
    homology set the tables of L = glue(T, T2) and of its mutant agree.
    """
    data = build_phi(inner, outer, simplify=simplify, skip_self_crossings=skip_self_crossings, jobs=jobs)
    first, second, phi = data.A, data.B, data.phi
    certificate = MutationCertificate(data.traversal, data.order, data)
    certificate.sizes = {'inner': len(data.inner), 'outer': len(data.outer), 'A': len(first)}
    unit = GradedMap.identity(first)
    certificate.add('phi_squared', phi.compose(phi).first_difference(unit))

    delta = tensor_maps(GradedMap.differential(data.inner), GradedMap.identity(data.outer), first, first)
    certificate.add('commutes_with_delta', phi.compose(delta).first_difference(delta.compose(phi)))

    outer_d = tensor_maps(GradedMap.identity(data.inner), GradedMap.differential(data.outer), first, first)
    ends = dot_multiplication_endos(data.outer, data.traversal)
    expected = outer_d + tensor_maps(data.derivative, ends[0] + ends[-1], first, first)
    certificate.add('telescope', phi.compose(outer_d).compose(phi).first_difference(expected))

    conjugated = phi.compose(GradedMap.differential(first)).compose(phi)
    certificate.add('conjugates_differential', conjugated.first_difference(GradedMap.differential(second)))
    certificate.add('b_is_complex', _complex_failure(second))
    certificate.add('degree_zero', _degree_failure(phi))

    if homology:
        original = glue(inner, outer)
        mutant = mutate_diagram(inner, outer)
        certificate.components = [link_components(original), link_components(mutant)]
        if certificate.components[0] != certificate.components[1]:
            logger.warning("the mutation changes the number of components: %r", certificate.components)
        tables = {'original': _tables(original, simplify, jobs), 'mutant': _tables(mutant, simplify, jobs)}
        certificate.tables = tables
        same = tables['original'] == tables['mutant']
        certificate.add('homology', None if same else ('tables', ))
    return certificate
