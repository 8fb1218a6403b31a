#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: Khovanov homology and mutation package
# Created: 02.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

from __future__ import absolute_import

__doc__ = """
Khovanov Mutation Package
=========================

Dotted cobordisms over F_2[t], the formal Khovanov bracket of tangles,
Khovanov (t = 0) and Lee (t = 1) homology over F_2 and a checker for the
isomorphism between the brackets of two links related by crossed
z-mutation.

Modules
-------

* diagrams -- tangle diagrams, resolutions, rotations, gluing, JSON and PD input
* cob -- dotted cobordisms, composition, tensor product, dots and degrees
* matcat -- matrices of cobordisms, complexes, delooping, simplification
* bracket -- cube of resolutions and the formal Khovanov bracket
* homology -- Hom(empty, -) at t = 0, 1 and F_2 homology
* oracle -- independent state sum and Jones polynomial
* mutation -- arc tracing, dot migration homotopies, the isomorphism phi
* cli -- command line entry point

Diagrams
--------

* load_diagram(path) -> TangleDiagram from JSON or PD code
* resolve(T, e) -> FlatTangle of the resolution e
* glue(T, T2) -> plane diagram of T inside T2
* rotate_z(T), rotate_x(T), rotate_y(T) -> turned disk tangle
* connectivity(T) -> 'crossed', 'horizontal' or 'vertical'

Cobordisms
----------

* Morphism(source, target, surfaces) -> sum of dotted surfaces
* S.compose(S2) -> S o S2
* S.tensor(S2) -> side by side, glued along shared boundary points
* S.dotted(p) -> X_p o S
* S.derivative() -> d/dot S
* S.degree() -> quantum degree
* S.terms -> normal form, a set of (dotmask, tpow)

Complexes
---------

* khovanov_bracket(T) -> BracketComplex
* deloop(C), enhanced_deloop(C) -> (C', F, Finv)
* gaussian_eliminate(C) -> smaller homotopy equivalent complex
* complex_tensor(C, D) -> C (x) D

Homology
--------

* khovanov_homology(D, t) -> PoincarePolynomial
* oracle_state_sum(D, t) -> PoincarePolynomial
* jones_polynomial(D) -> sympy expression in q

Mutation
--------

* trace_arc(T2) -> ArcTraversal
* build_phi(T, T2) -> PhiData(A, B, phi, ...)
* verify_mutation(T, T2) -> MutationCertificate
* mutate_diagram(T, T2) -> glued mutant

GF(2) ranks
-----------

* rank(vectors) -> rank of int bitsets
* fast_rank(vectors) -> rank on packed rows, Cython kernel when built
"""

__all__ = [
    'TangleDiagram',
    'FlatTangle',
    'load_diagram',
    'parse_diagram',
    'resolve',
    'glue',
    'rotate_z',
    'connectivity',
    'CobObject',
    'Morphism',
    'MatObject',
    'MatMorphism',
    'Complex',
    'GradedMap',
    'khovanov_bracket',
    'deloop',
    'enhanced_deloop',
    'gaussian_eliminate',
    'complex_tensor',
    'khovanov_homology',
    'PoincarePolynomial',
    'oracle_state_sum',
    'jones_polynomial',
    'trace_arc',
    'build_phi',
    'verify_mutation',
    'mutate_diagram',
    'rank',
    'fast_rank',
    'FAST_GF2',
]

from .diagrams import TangleDiagram, FlatTangle, load_diagram, parse_diagram, resolve, glue, rotate_z
from .diagrams import connectivity
from .cob import CobObject, Morphism
from .matcat import MatObject, MatMorphism, Complex, GradedMap, deloop, enhanced_deloop
from .matcat import gaussian_eliminate, complex_tensor
from .bracket import khovanov_bracket
from .homology import khovanov_homology, PoincarePolynomial
from .oracle import oracle_state_sum, jones_polynomial
from .mutation import trace_arc, build_phi, verify_mutation, mutate_diagram
from .gf2 import rank, fast_rank, FAST_GF2
