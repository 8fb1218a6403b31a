#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: cube of resolutions and the formal Khovanov bracket
# Created: 05.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

from __future__ import absolute_import

import logging
from collections import namedtuple
from multiprocessing import Pool

from .cob import CobObject, Morphism, Surface, boundary_curves
from .diagrams import DiagramError, Resolution, crossing_signs, resolve
from .matcat import Complex, GradedMap, MatMorphism, MatObject
from .unionfind import UnionFind

logger = logging.getLogger(__name__)

Cube = namedtuple('Cube', ['diagram', 'vertices', 'edges'])


def _saddle_surface(diagram, mask, crossing, source, target):
    curves = boundary_curves(source, target)
    uf = UnionFind(diagram.all_edges)
    for index, (e0, e1, e2, e3) in enumerate(diagram.crossings):
        if index == crossing:  # the saddle joins all four edges
            uf.union(e0, e1)
            uf.union(e1, e2)
            uf.union(e2, e3)
        elif (mask >> index) & 1:
            uf.union(e1, e2)
            uf.union(e3, e0)
        else:
            uf.union(e0, e1)
            uf.union(e2, e3)
    first_edge = {}
    for flat, tag in ((source, 's'), (target, 't')):
        for edge in sorted(flat.trace):
            first_edge.setdefault((tag, flat.trace[edge]), edge)
    masks = {}
    for bit, key in enumerate(curves.keys):
        if key[0] == 'p':
            edge = diagram.boundary[key[1]]
        else:
            edge = first_edge[(key[0], ('circle', key[1]))]
        root = uf.find(edge)
        masks[root] = masks.get(root, 0) | (1 << bit)
    return Surface(tuple(sorted((component, 0) for component in masks.values())), 0)


def saddle(diagram, resolution, crossing):
    """ saddle(T, e, c) -> undotted saddle Morphism T_e -> T_e' where e' is e
    with crossing c switched from 0 to 1.
    """
    e = Resolution.coerce(resolution, len(diagram.crossings))
    if e[crossing]:
        raise DiagramError("crossing %d is 1-resolved in %r" % (crossing, e.mask))
    source = CobObject(resolve(diagram, e.mask))
    target = CobObject(resolve(diagram, e.flipped(crossing).mask))
    surface = _saddle_surface(diagram, e.mask, crossing, source.flat, target.flat)
    return Morphism(source, target, [surface])


_worker_diagram = None


def _init_worker(diagram):
    global _worker_diagram
    _worker_diagram = diagram


def _resolve_job(mask):
    return resolve(_worker_diagram, mask)


def _saddle_job(job):
    mask, crossing, source, target = job
    return _saddle_surface(_worker_diagram, mask, crossing, source, target)


def _edge_jobs(flats, size):
    for mask in sorted(flats):
        for crossing in range(size):
            if not (mask >> crossing) & 1:
                yield (mask, crossing, flats[mask], flats[mask | (1 << crossing)])


def build_cube(diagram, jobs=None):
    """ build_cube(T[, jobs]) -> Cube(diagram, vertices, edges)

    vertices maps resolution masks to flat tangles, edges maps (mask, c) to
    the saddle Surface of the edge leaving mask along crossing c. jobs > 1
    evaluates the cube in a process pool.
    """
    size = len(diagram.crossings)
    masks = list(range(1 << size))
    if jobs is not None and jobs > 1 and size > 3:
        pool = Pool(jobs, initializer=_init_worker, initargs=(diagram, ))
        try:
            flats = dict(zip(masks, pool.map(_resolve_job, masks)))
            work = list(_edge_jobs(flats, size))
            surfaces = pool.map(_saddle_job, work, chunksize=max(1, len(work) // (4 * jobs)))
        finally:
            pool.close()
            pool.join()
    else:
        flats = dict((mask, resolve(diagram, mask)) for mask in masks)
        work = list(_edge_jobs(flats, size))
        surfaces = [_saddle_surface(diagram, mask, crossing, source, target)
                    for mask, crossing, source, target in work]
    edges = dict(((job[0], job[1]), surface) for job, surface in zip(work, surfaces))
    logger.debug("cube of %r: %d vertices, %d edges", diagram, len(flats), len(edges))
    return Cube(diagram, flats, edges)


class BracketComplex(Complex):
    """
    Formal Khovanov bracket of a tangle diagram.

    K.masks -> dict degree -> resolution masks in summand order
    K.position -> dict mask -> (degree, summand index)
    K.signs -> (n_plus, n_minus)
    """
    __slots__ = ['diagram', 'signs', 'masks', 'position']


def khovanov_bracket(diagram, signs=None, verify=False, jobs=None):
    """ khovanov_bracket(T[, signs, verify, jobs]) -> BracketComplex

    The summands of degree i are the resolutions with i + n_minus ones,
    ascending by mask, shifted by i + n_plus - n_minus. signs = (n_plus,
    n_minus) overrides the crossing signs, which unoriented diagrams need.
    """
    if signs is None:
        if not diagram.is_oriented:
            raise DiagramError("khovanov_bracket needs an oriented diagram or explicit signs")
        signs = crossing_signs(diagram)
    n_plus, n_minus = signs
    cube = build_cube(diagram, jobs)
    size = len(diagram.crossings)
    masks = {}
    for mask in sorted(cube.vertices):
        masks.setdefault(bin(mask).count('1') - n_minus, []).append(mask)
    position = {}
    objects = {}
    vertex = {}
    for i, members in masks.items():
        shift = i + n_plus - n_minus  # |e| + n_plus - 2 n_minus
        for index, mask in enumerate(members):
            position[mask] = (i, index)
            vertex[mask] = CobObject(cube.vertices[mask], shift)
        objects[i] = MatObject(vertex[mask] for mask in members)
    entries = {}
    for (mask, crossing), surface in cube.edges.items():
        target = mask | (1 << crossing)
        i, col = position[mask]
        row = position[target][1]
        entries.setdefault(i, []).append((row, col, Morphism(vertex[mask], vertex[target], [surface])))
    differentials = dict((i, MatMorphism(objects[i], objects[i + 1], found, check=False, prune=False))
                         for i, found in entries.items())
    result = BracketComplex(objects, differentials, verify=verify)
    result.diagram = diagram
    result.signs = (n_plus, n_minus)
    result.masks = masks
    result.position = position
    logger.info("bracket of %r: %d crossings, n+ = %d, n- = %d", diagram, size, n_plus, n_minus)
    return result


def crossing_differential(bracket, crossing):
    """ crossing_differential(K, c) -> the part d_c of the differential of K
    along crossing c, as a degree 1 GradedMap.
    """
    bit = 1 << crossing
    components = {}
    for i, matrix in bracket.differentials.items():
        entries = []
        for row, col, morphism in matrix.entries():
            if bracket.masks[i + 1][row] == bracket.masks[i][col] | bit:
                entries.append((row, col, morphism))
        components[i] = MatMorphism(matrix.source, matrix.target, entries, check=False, prune=False)
    return GradedMap(bracket, bracket, 1, components)
