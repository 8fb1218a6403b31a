#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: planar tangle diagrams, resolutions, rotations and gluing
# Created: 02.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

"""
Planar tangle diagrams.

A crossing is a 4-tuple of edge ids listed counterclockwise, starting at an
end of the under-strand: slots 0 and 2 carry the under-strand, slots 1 and 3
the over-strand. The 0-resolution joins slots 0-1 and 2-3, the 1-resolution
joins slots 1-2 and 3-0. An edge ends at two crossing slots ``(i, s)`` or at
boundary points ``'a'``..``'d'``; edges without ends are free loops.
Orientation is kept per edge as the end the edge runs into (its head).

Boundary points sit counterclockwise in the order a, b, c, d; O_0 is the
matching {a-d, b-c} and O_1 is {a-b, c-d}.
"""

from __future__ import absolute_import

import json
import logging
import re

from .unionfind import UnionFind

logger = logging.getLogger(__name__)

POINTS = ('a', 'b', 'c', 'd')
REGIONS = ('disk', 'disk-complement', 'plane')

O_0 = (('a', 'd'), ('b', 'c'))
O_1 = (('a', 'b'), ('c', 'd'))
CROSSED = (('a', 'c'), ('b', 'd'))

# boundary permutations of the three half turns
Z_TURN = {'a': 'c', 'b': 'd', 'c': 'a', 'd': 'b'}
X_TURN = {'a': 'd', 'b': 'c', 'c': 'b', 'd': 'a'}
Y_TURN = {'a': 'b', 'b': 'a', 'c': 'd', 'd': 'c'}


class DiagramError(ValueError):
    pass


class OrientationError(DiagramError):
    pass


def is_point(ref):
    return not isinstance(ref, tuple)


class FlatTangle(object):
    """
    Crossingless tangle: a perfect matching of the boundary points plus a
    number of circles. Circles are numbered 0..ncircles-1.

    Components are named ('arc', k), k indexing the sorted matching, or
    ('circle', j). marks maps names of marked points to components, trace maps
    diagram edges to components for flat tangles that come from a resolution.
    Equality ignores marks and trace.
    """
    __slots__ = ['points', 'matching', 'ncircles', 'marks', 'trace', 'key']

    def __init__(self, matching=(), ncircles=0, points=None, marks=None, trace=None):
        pairs = tuple(sorted(tuple(sorted(pair)) for pair in matching))
        used = sorted(point for pair in pairs for point in pair)
        if points is None:
            points = used
        points = tuple(sorted(points))
        if any(len(pair) != 2 for pair in pairs) or tuple(used) != points or len(set(used)) != len(used):
            raise DiagramError("matching %r is not a perfect matching of %r" % (pairs, points))
        if ncircles < 0:
            raise DiagramError("negative circle count")
        self.points = points
        self.matching = pairs
        self.ncircles = int(ncircles)
        self.marks = dict(marks or {})
        self.trace = dict(trace or {})
        for name, component in self.marks.items():
            if not self.has_component(component):
                raise DiagramError("mark %r sits on unknown component %r" % (name, component))
        self.key = (self.points, self.matching, self.ncircles)

    @property
    def circles(self):
        return tuple(range(self.ncircles))

    def has_component(self, component):
        kind, index = component
        if kind == 'arc':
            return 0 <= index < len(self.matching)
        return kind == 'circle' and 0 <= index < self.ncircles

    def arc_of(self, point):
        for index, pair in enumerate(self.matching):
            if point in pair:
                return index
        raise KeyError(point)

    def partner(self, point):
        pair = self.matching[self.arc_of(point)]
        return pair[1] if pair[0] == point else pair[0]

    def component(self, name):
        """ F.component(name) -> component containing a boundary point or mark """
        if name in self.points:
            return ('arc', self.arc_of(name))
        try:
            return self.marks[name]
        except KeyError:
            raise KeyError("no point or mark named %r" % (name, ))

    def with_marks(self, marks):
        merged = dict(self.marks)
        merged.update(marks)
        return FlatTangle(self.matching, self.ncircles, self.points, merged, self.trace)

    def canonical(self):
        """ F.canonical() -> same matching and circle count, no marks or trace """
        return FlatTangle(self.matching, self.ncircles, self.points)

    def permuted(self, perm):
        """ F.permuted(perm) -> boundary points renamed by the dict perm """
        pairs = [tuple(sorted(perm[p] for p in pair)) for pair in self.matching]
        new = FlatTangle(pairs, self.ncircles, [perm[p] for p in self.points])
        arcs = dict((old, new.matching.index(pair)) for old, pair in enumerate(pairs))

        def move(component):
            kind, index = component
            return (kind, arcs[index]) if kind == 'arc' else component

        new.marks = dict((name, move(c)) for name, c in self.marks.items())
        new.trace = dict((edge, move(c)) for edge, c in self.trace.items())
        return new

    def __eq__(self, other):
        return isinstance(other, FlatTangle) and self.key == other.key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        arcs = ' '.join('%s-%s' % pair for pair in self.matching)
        return "FlatTangle(%s%s)" % (arcs or '-', ' +%do' % self.ncircles if self.ncircles else '')


class Resolution(object):
    """
    Assignment of 0 or 1 to every crossing, stored as a bitmask over the
    crossing order of the diagram.
    """
    __slots__ = ['mask', 'size']

    def __init__(self, mask, size):
        if not 0 <= mask < (1 << size):
            raise DiagramError("resolution %r does not fit %d crossings" % (mask, size))
        self.mask = mask
        self.size = size

    @classmethod
    def coerce(cls, value, size):
        """ Resolution.coerce(value, size) -> Resolution from an int, a mapping
        crossing -> bit or a sequence of bits.
        """
        if isinstance(value, Resolution):
            if value.size != size:
                raise DiagramError("resolution covers %d crossings, diagram has %d" % (value.size, size))
            return value
        if isinstance(value, int):
            return cls(value, size)
        if isinstance(value, dict):
            if sorted(value) != list(range(size)):
                raise DiagramError("resolution domain differs from the crossing set")
            items = [value[i] for i in range(size)]
        else:
            items = list(value)
            if len(items) != size:
                raise DiagramError("resolution covers %d crossings, diagram has %d" % (len(items), size))
        mask = 0
        for index, bit in enumerate(items):
            if bit not in (0, 1):
                raise DiagramError("resolution values must be 0 or 1")
            mask |= bit << index
        return cls(mask, size)

    def __getitem__(self, crossing):
        return (self.mask >> crossing) & 1

    @property
    def weight(self):
        return bin(self.mask).count('1')

    def flipped(self, crossing):
        return Resolution(self.mask ^ (1 << crossing), self.size)


class TangleDiagram(object):
    """
    Tangle diagram in a disk, in the complement of a disk or in the plane.

    T.region -> 'disk', 'disk-complement' or 'plane'
    T.boundary -> dict point -> edge id
    T.crossings -> tuple of 4-tuples of edge ids
    T.loops -> tuple of edge ids of free loops
    T.heads -> dict edge -> head end, or None for unoriented diagrams
    T.marks -> dict mark name -> edge id
    """
    __slots__ = ['region', 'boundary', 'crossings', 'loops', 'heads', 'marks', '_ends']

    def __init__(self, region, boundary=None, crossings=(), loops=(), heads=None, marks=None):
        if region not in REGIONS:
            raise DiagramError("unknown region %r" % (region, ))
        boundary = dict(boundary or {})
        if region == 'plane' and boundary:
            raise DiagramError("a plane diagram has no boundary points")
        if len(boundary) % 2:
            raise DiagramError("odd number of boundary points")
        for point in boundary:
            if point not in POINTS:
                raise DiagramError("unknown boundary point %r" % (point, ))
        crossings = tuple(tuple(x) for x in crossings)
        ends = {}
        for index, crossing in enumerate(crossings):
            if len(crossing) != 4:
                raise DiagramError("crossing %d needs 4 edge slots, got %d" % (index, len(crossing)))
            for slot, edge in enumerate(crossing):
                ends.setdefault(edge, []).append((index, slot))
        for point in sorted(boundary):
            ends.setdefault(boundary[point], []).append(point)
        for edge, refs in ends.items():
            if len(refs) == 1:
                raise DiagramError("dangling edge %r" % (edge, ))
            if len(refs) > 2:
                raise DiagramError("edge %r is used %d times" % (edge, len(refs)))
        loops = tuple(loops)
        for edge in loops:
            if edge in ends:
                raise DiagramError("free loop %r also has ends" % (edge, ))
        if len(set(loops)) != len(loops):
            raise DiagramError("free loop listed twice")
        self.region = region
        self.boundary = boundary
        self.crossings = crossings
        self.loops = loops
        self._ends = dict((edge, tuple(refs)) for edge, refs in ends.items())
        self.marks = dict(marks or {})
        for name, edge in self.marks.items():
            if edge not in self._ends and edge not in loops:
                raise DiagramError("mark %r on unknown edge %r" % (name, edge))
        if heads is not None:
            heads = dict(heads)
            for edge, refs in self._ends.items():
                if heads.get(edge) not in refs:
                    raise OrientationError("edge %r has no valid head" % (edge, ))
        self.heads = heads

    @property
    def points(self):
        return tuple(sorted(self.boundary))

    @property
    def edges(self):
        return sorted(self._ends)

    @property
    def all_edges(self):
        return sorted(list(self._ends) + list(self.loops))

    @property
    def is_oriented(self):
        return self.heads is not None

    @property
    def is_closed(self):
        return not self.boundary

    def __len__(self):
        return len(self.crossings)

    def ends(self, edge):
        return self._ends[edge]

    def other_end(self, edge, ref):
        first, second = self._ends[edge]
        return second if first == ref else first

    def tail(self, edge):
        return self.other_end(edge, self.heads[edge])

    def walk(self, edge, tail):
        """ T.walk(edge, tail) -> (path, closed), path lists (edge, tail, head)
        triples along the strand, passing straight through crossings.
        """
        path = []
        start = (edge, tail)
        while True:
            head = self.other_end(edge, tail)
            path.append((edge, tail, head))
            if is_point(head):
                return path, False
            index, slot = head
            tail = (index, (slot + 2) % 4)
            edge = self.crossings[index][tail[1]]
            if (edge, tail) == start:
                return path, True

    def strands(self):
        """ T.strands() -> list of (path, closed) in a fixed order: arcs from
        their earlier boundary point, then closed strands from their smallest
        edge, then free loops.
        """
        seen = set()
        result = []
        for point in self.points:
            edge = self.boundary[point]
            if edge in seen:
                continue
            path, closed = self.walk(edge, point)
            seen.update(step[0] for step in path)
            result.append((path, closed))
        for edge in self.edges:
            if edge in seen:
                continue
            path, closed = self.walk(edge, self._ends[edge][0])
            seen.update(step[0] for step in path)
            result.append((path, closed))
        for edge in self.loops:
            result.append(([(edge, None, None)], True))
        return result

    def signs(self):
        """ T.signs() -> list of +1/-1 per crossing """
        if self.heads is None:
            raise DiagramError("unoriented diagram")
        result = []
        for index, crossing in enumerate(self.crossings):
            under = [s for s in (0, 2) if self.heads[crossing[s]] == (index, s)]
            over = [s for s in (1, 3) if self.heads[crossing[s]] == (index, s)]
            if len(under) != 1 or len(over) != 1:
                raise OrientationError("crossing %d is not oriented through" % index)
            result.append(1 if over[0] == (under[0] + 3) % 4 else -1)
        return result

    def with_marks(self, marks):
        merged = dict(self.marks)
        merged.update(marks)
        return TangleDiagram(self.region, self.boundary, self.crossings, self.loops, self.heads, merged)

    def __eq__(self, other):
        if not isinstance(other, TangleDiagram):
            return False
        return (self.region, self.boundary, self.crossings, self.loops, self.heads, self.marks) == \
            (other.region, other.boundary, other.crossings, other.loops, other.heads, other.marks)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "TangleDiagram(%s, %d crossings, points=%s)" % (
            self.region, len(self.crossings), ''.join(self.points) or '-')


def orient(diagram, constraints=None, pd=False):
    """ orient(T, constraints, pd) -> oriented copy of T

    constraints maps edges to their heads; with pd=True every crossing also
    demands that slot 0 is the incoming end of the under-strand. Each strand
    takes the direction its constraints agree on; strands without any take
    the default direction of T.strands().
    """
    wanted = dict(constraints or {})
    if pd:
        for index, crossing in enumerate(diagram.crossings):
            for edge, head in ((crossing[0], (index, 0)),
                               (crossing[2], diagram.other_end(crossing[2], (index, 2)))):
                if wanted.setdefault(edge, head) != head:
                    raise OrientationError("inconsistent orientation at edge %r" % (edge, ))
    heads = {}
    for path, closed in diagram.strands():
        if path[0][1] is None:
            continue
        agree = disagree = 0
        for edge, tail, head in path:
            want = wanted.get(edge)
            if want is None:
                continue
            if want == head:
                agree += 1
            elif want == tail:
                disagree += 1
            else:
                raise OrientationError("edge %r cannot point to %r" % (edge, want))
        if agree and disagree:
            raise OrientationError("inconsistent orientation along the strand through edge %r" % path[0][0])
        if not (agree or disagree):
            logger.info("orienting %s strand through edge %r by default",
                        'closed' if closed else 'open', path[0][0])
        for edge, tail, head in path:
            heads[edge] = tail if disagree else head
    return TangleDiagram(diagram.region, diagram.boundary, diagram.crossings, diagram.loops,
                         heads, diagram.marks)


def reverse(diagram, edges=None):
    """ reverse(T[, edges]) -> T with the strands through edges reversed,
    all strands when edges is None.
    """
    if diagram.heads is None:
        raise DiagramError("unoriented diagram")
    heads = dict(diagram.heads)
    for path, closed in diagram.strands():
        members = [step[0] for step in path]
        if path[0][1] is None:
            continue
        if edges is None or any(edge in edges for edge in members):
            for edge in members:
                heads[edge] = diagram.other_end(edge, diagram.heads[edge])
    return TangleDiagram(diagram.region, diagram.boundary, diagram.crossings, diagram.loops,
                         heads, diagram.marks)


def crossing_signs(diagram):
    """ crossing_signs(T) -> (n_plus, n_minus) """
    signs = diagram.signs()
    return signs.count(1), signs.count(-1)


def resolve(diagram, resolution):
    """ resolve(T, e) -> FlatTangle of the resolution e (int mask, mapping or
    bit sequence over the crossings).
    """
    mask = Resolution.coerce(resolution, len(diagram.crossings)).mask
    uf = UnionFind(diagram.all_edges)
    for index, (e0, e1, e2, e3) in enumerate(diagram.crossings):
        if (mask >> index) & 1:
            uf.union(e1, e2)
            uf.union(e3, e0)
        else:
            uf.union(e0, e1)
            uf.union(e2, e3)
    return flatten(diagram, uf)


def flatten(diagram, uf):
    """ flatten(T, uf) -> FlatTangle whose components are the classes of the
    edge union-find uf.
    """
    by_root = {}
    for point in diagram.points:
        by_root.setdefault(uf.find(diagram.boundary[point]), []).append(point)
    pairs = sorted(tuple(points) for points in by_root.values())
    components = {}
    for index, pair in enumerate(pairs):
        components[uf.find(diagram.boundary[pair[0]])] = ('arc', index)
    ncircles = 0
    trace = {}
    for edge in diagram.all_edges:
        root = uf.find(edge)
        if root not in components:
            components[root] = ('circle', ncircles)
            ncircles += 1
        trace[edge] = components[root]
    marks = dict((name, trace[edge]) for name, edge in diagram.marks.items())
    return FlatTangle(pairs, ncircles, diagram.points, marks, trace)


def _turned(diagram, perm, mirror):
    if diagram.region != 'disk':
        raise DiagramError("rotations need a disk tangle, got %s" % diagram.region)
    boundary = dict((perm[point], edge) for point, edge in diagram.boundary.items())
    crossings = diagram.crossings
    heads = diagram.heads

    def move(ref):
        if is_point(ref):
            return perm[ref]
        return (ref[0], 3 - ref[1]) if mirror else ref

    if mirror:
        crossings = [tuple(reversed(crossing)) for crossing in crossings]
    if heads is not None:
        heads = dict((edge, move(ref)) for edge, ref in heads.items())
    return TangleDiagram(diagram.region, boundary, crossings, diagram.loops, heads, diagram.marks)


def rotate_z(diagram):
    """ rotate_z(T) -> T turned by a half turn in its own plane: a<->c, b<->d """
    return _turned(diagram, Z_TURN, False)


def rotate_x(diagram):
    """ rotate_x(T) -> T turned over the horizontal axis: a<->d, b<->c,
    over and under exchanged.
    """
    return _turned(diagram, X_TURN, True)


def rotate_y(diagram):
    """ rotate_y(T) -> T turned over the vertical axis: a<->b, c<->d,
    over and under exchanged.
    """
    return _turned(diagram, Y_TURN, True)


def arc_matching(diagram):
    """ arc_matching(T) -> sorted pairs of boundary points joined by strands """
    pairs = []
    for path, closed in diagram.strands():
        if not closed:
            pairs.append(tuple(sorted((path[0][1], path[-1][2]))))
    return tuple(sorted(pairs))


def connectivity(diagram):
    """ connectivity(T) -> 'crossed', 'horizontal' or 'vertical' """
    if diagram.points != POINTS:
        raise DiagramError("connectivity needs the boundary points a, b, c, d")
    pairs = arc_matching(diagram)
    if pairs == CROSSED:
        return 'crossed'
    if pairs == O_1:
        return 'horizontal'
    return 'vertical'


def link_components(diagram):
    """ link_components(T) -> number of strands, free loops included """
    return len(diagram.strands())


def glue(inner, outer):
    """ glue(T, T2) -> plane diagram of the disk tangle T inside the
    disk-complement tangle T2. Crossings of T come first; edges are renumbered
    from 1.
    """
    if inner.region != 'disk' or outer.region != 'disk-complement':
        raise DiagramError("glue needs a disk tangle and a disk-complement tangle")
    if inner.points != outer.points:
        raise DiagramError("boundary points differ: %r and %r" % (inner.points, outer.points))
    oriented = inner.is_oriented and outer.is_oriented
    if oriented:
        for point in inner.points:
            inward = inner.heads[inner.boundary[point]] == point
            outward = outer.heads[outer.boundary[point]] == point
            if inward == outward:
                raise OrientationError("orientations disagree at boundary point %r" % point)

    shift = len(inner.crossings)
    tags = [('i', edge) for edge in inner.all_edges] + [('o', edge) for edge in outer.all_edges]
    uf = UnionFind(tags)
    for point in inner.points:
        uf.union(('i', inner.boundary[point]), ('o', outer.boundary[point]))
    rename = {}
    numbers = {}
    for tag in tags:
        root = uf.find(tag)
        if root not in numbers:
            numbers[root] = len(numbers) + 1
        rename[tag] = numbers[root]

    crossings = [tuple(rename[('i', e)] for e in x) for x in inner.crossings]
    crossings += [tuple(rename[('o', e)] for e in x) for x in outer.crossings]
    used = set(edge for crossing in crossings for edge in crossing)
    loops = sorted(set(rename.values()) - used)

    heads = None
    if oriented:
        heads = {}
        for side, diagram, offset in (('i', inner, 0), ('o', outer, shift)):
            for edge, ref in diagram.heads.items():
                if not is_point(ref):
                    heads[rename[(side, edge)]] = (ref[0] + offset, ref[1])
        missing = used - set(heads)
        if missing:
            raise OrientationError("edges %r lost their orientation" % sorted(missing))

    marks = {}
    for side, diagram in (('i', inner), ('o', outer)):
        for name, edge in diagram.marks.items():
            if name in marks:
                raise DiagramError("mark %r set on both sides" % name)
            marks[name] = rename[(side, edge)]
    return TangleDiagram('plane', {}, crossings, loops, heads, marks)


def _head_ref(value, point_names):
    if isinstance(value, list):
        if len(value) != 2:
            raise DiagramError("crossing end must be [crossing, slot]")
        return (int(value[0]), int(value[1]))
    if value in point_names:
        return value
    raise DiagramError("bad head reference %r" % (value, ))


def _no_duplicates(pairs):
    result = {}
    for key, value in pairs:
        if key in result:
            if key in POINTS:
                raise DiagramError("boundary point reused: %s" % key)
            raise DiagramError("duplicate key %r" % key)
        result[key] = value
    return result


def from_json(data):
    """ from_json(data) -> TangleDiagram from the decoded JSON object """
    if not isinstance(data, dict):
        raise DiagramError("diagram JSON must be an object")
    region = data.get('region', 'plane')
    raw = data.get('boundary', {})
    if isinstance(raw, list):
        boundary = {}
        for item in raw:
            if not isinstance(item, list) or len(item) != 2:
                raise DiagramError("boundary list entries must be [point, edge]")
            if item[0] in boundary:
                raise DiagramError("boundary point reused: %s" % item[0])
            boundary[item[0]] = item[1]
    elif isinstance(raw, dict):
        boundary = raw
    else:
        raise DiagramError("boundary must be an object or a list")
    if not all(isinstance(edge, int) for edge in boundary.values()):
        raise DiagramError("boundary edges must be edge ids")
    crossings = data.get('crossings', [])
    if not isinstance(crossings, list):
        raise DiagramError("crossings must be a list")
    referenced = set(boundary.values())
    for crossing in crossings:
        if not isinstance(crossing, list) or not all(isinstance(e, int) for e in crossing):
            raise DiagramError("crossing %r must be a list of edge ids" % (crossing, ))
        referenced.update(crossing)
    loops = list(data.get('loops', []))
    if 'edges' in data:
        count = data['edges']
        if not isinstance(count, int) or count < 0:
            raise DiagramError("edges must be a non-negative count")
        outside = [edge for edge in referenced if not 1 <= edge <= count]
        if outside:
            raise DiagramError("edge ids %r exceed the edge count %d" % (sorted(outside), count))
        loops += [edge for edge in range(1, count + 1) if edge not in referenced and edge not in loops]
    marks = dict(data.get('marks', {}))
    diagram = TangleDiagram(region, boundary, crossings, sorted(loops), None, marks)

    orientation = data.get('orientation')
    if orientation is None:
        result = diagram
    elif orientation == 'pd':
        result = orient(diagram, pd=True)
    elif isinstance(orientation, dict):
        constraints = {}
        for key, value in orientation.items():
            try:
                edge = int(key)
            except ValueError:
                raise DiagramError("orientation keys must be edge ids, got %r" % key)
            constraints[edge] = _head_ref(value, diagram.points)
        result = orient(diagram, constraints)
    else:
        raise DiagramError("unknown orientation %r" % (orientation, ))
    if data.get('reverse'):
        result = reverse(result, set(data['reverse']))
    return result


_PD_CROSSING = re.compile(r'X\s*[\[(]([^\])]*)[\])]')


def from_pd(text):
    """ from_pd(text) -> closed diagram from X[i,j,k,l] or X(i,j,k,l) items,
    oriented by the slot convention.
    """
    crossings = []
    for match in _PD_CROSSING.finditer(text):
        try:
            crossings.append([int(item) for item in match.group(1).split(',')])
        except ValueError:
            raise DiagramError("malformed PD item %r" % match.group(0))
    if not crossings:
        raise DiagramError("no PD crossings found")
    return orient(TangleDiagram('plane', {}, crossings), pd=True)


def parse_diagram(text):
    """ parse_diagram(text) -> TangleDiagram from JSON or PD code text """
    stripped = text.strip()
    if stripped.startswith('{'):
        try:
            data = json.loads(stripped, object_pairs_hook=_no_duplicates)
        except ValueError as error:
            if isinstance(error, DiagramError):
                raise
            raise DiagramError("malformed JSON: %s" % error)
        return from_json(data)
    return from_pd(stripped)


def load_diagram(path):
    with open(path) as fp:
        return parse_diagram(fp.read())


def dump_diagram(diagram):
    """ dump_diagram(T) -> JSON-ready dict, readable by from_json """
    data = {
        'region': diagram.region,
        'boundary': dict(diagram.boundary),
        'crossings': [list(crossing) for crossing in diagram.crossings],
    }
    if diagram.loops:
        data['loops'] = list(diagram.loops)
    if diagram.marks:
        data['marks'] = dict(diagram.marks)
    if diagram.heads is not None:
        data['orientation'] = dict(
            (str(edge), ref if is_point(ref) else list(ref)) for edge, ref in sorted(diagram.heads.items()))
    return data
