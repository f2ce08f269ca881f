"""
Views of the complete Cayley digraph and the cycle hypergraph H_k.

The edge (a, b) has colour a - b. A hyperedge of H_k is a set of k
vertices together with a set of k colours such that some directed cycle
through the vertices uses exactly those colours, each once.
"""
import collections
import logging

from ..exceptions import DomainError
from ..group import GroupSpec

# Creates a ClickLogger
logger = logging.getLogger(__name__)


def edge_color(a, b):
    """ Colour of the edge (a, b), i.e. a - b.

    Raises:
        DomainError: for a loop (a = b).
    """
    if a == b:
        raise DomainError("the Cayley digraph has no loop at {}".format(a))
    return a - b


def _mask(indices):
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


class ColoredDigraphView(object):
    """ The subgraph of the Cayley digraph on some vertices using some colours.

    Args:
        group (GroupSpec): the group.
        vertices (iterable): Elements; all of G when None.
        colors (iterable): Elements; all of G when None.
        parts (list): optional vertex sets V_1, ..., V_r; edges then only run
            from V_i to V_{i+1} (indices taken cyclically).
    """

    def __init__(self, group, vertices=None, colors=None, parts=None):
        self.group = group
        everything = group.elements()
        self.vertices = frozenset(everything if vertices is None else vertices)
        self.colors = frozenset(everything if colors is None else colors)
        for e in self.vertices | self.colors:
            group.check_member(e)
        self.parts = None if parts is None else [frozenset(p) for p in parts]
        self.vertex_mask = _mask(e.index for e in self.vertices)
        self.color_mask = _mask(e.index for e in self.colors)
        self._part_of = None
        if self.parts is not None:
            self._part_of = collections.defaultdict(set)
            for position, part in enumerate(self.parts):
                for e in part:
                    self._part_of[e.index].add(position)

    @classmethod
    def full(cls, group, punctured=False):
        """ The whole Cayley digraph, or the one on G minus the identity with colours G minus the identity. """
        if not punctured:
            return cls(group)
        rest = group.elements()[1:]
        return cls(group, rest, rest)

    def restrict(self, vertices=None, colors=None):
        return ColoredDigraphView(self.group,
                                  self.vertices if vertices is None else vertices,
                                  self.colors if colors is None else colors,
                                  self.parts)

    def has_vertex_index(self, i):
        return bool(self.vertex_mask >> i & 1)

    def has_color_index(self, c):
        return bool(self.color_mask >> c & 1)

    def has_edge_index(self, a, b):
        if a == b or not (self.vertex_mask >> a & 1 and self.vertex_mask >> b & 1):
            return False
        if not self.color_mask >> self.group.sub_index(a, b) & 1:
            return False
        if self._part_of is not None:
            r = len(self.parts)
            return any((p + 1) % r in self._part_of[b] for p in self._part_of[a])
        return True

    def has_edge(self, a, b):
        return self.has_edge_index(a.index, b.index)

    def vertex_indices(self):
        return sorted(e.index for e in self.vertices)

    def color_indices(self):
        return sorted(e.index for e in self.colors)

    def __repr__(self):
        return 'ColoredDigraphView({}, {} vertices, {} colours)'.format(
            self.group, len(self.vertices), len(self.colors))


class HyperEdge(object):
    """ A rainbow directed cycle, stored with its least vertex first. """

    def __init__(self, group, cycle):
        cycle = tuple(cycle)
        start = cycle.index(min(cycle))
        self.group = group
        self.cycle = cycle[start:] + cycle[:start]

    @property
    def k(self):
        return len(self.cycle)

    @property
    def colors(self):
        """ Colours in cycle order: cycle[i] - cycle[i+1]. """
        k = len(self.cycle)
        return tuple(self.cycle[i] - self.cycle[(i + 1) % k] for i in range(k))

    @property
    def vertex_set(self):
        return frozenset(self.cycle)

    @property
    def color_set(self):
        return frozenset(self.colors)

    def to_dict(self):
        return {"cycle": [v.index for v in self.cycle], "colors": [c.index for c in self.colors]}

    @classmethod
    def from_dict(cls, group, data):
        return cls(group, [group.element(i) for i in data["cycle"]])

    def __eq__(self, other):
        return isinstance(other, HyperEdge) and self.cycle == other.cycle

    def __hash__(self):
        return hash(self.cycle)

    def __repr__(self):
        return 'HyperEdge({})'.format([str(v) for v in self.cycle])


def cycle_to_hyperedge(vertices, view):
    """ The hyperedge induced by a directed cycle, if it is rainbow and inside the view.

    Returns:
        HyperEdge or None

    Raises:
        DomainError: if fewer than two vertices are given or one repeats.
    """
    vertices = list(vertices)
    if len(vertices) < 2:
        raise DomainError("a cycle needs at least two vertices")
    if len(set(vertices)) != len(vertices):
        raise DomainError("cycle repeats a vertex")
    for v in vertices:
        view.group.check_member(v)
    k = len(vertices)
    colors = set()
    for i in range(k):
        a, b = vertices[i], vertices[(i + 1) % k]
        if not view.has_edge(a, b):
            return None
        colors.add((a - b).index)
    if len(colors) != k:
        return None
    return HyperEdge(view.group, vertices)


class Enumeration(collections.namedtuple('Enumeration', ['edges', 'truncated'])):
    """ Hyperedges found by enumerate_hyperedges and whether the cap cut it short. """


def iter_hyperedges(view, k):
    """ Yields every hyperedge of H_k inside the view once, least vertex first. """
    if k < 2:
        raise DomainError("cycles need at least two vertices, got k={}".format(k))
    group = view.group
    sub = group.sub_index
    vertices = view.vertex_indices()
    path = []
    used_colors = set()

    def extend(current):
        if len(path) == k:
            closing = sub(current, path[0])
            if closing not in used_colors and view.has_edge_index(current, path[0]):
                yield HyperEdge(group, [group.element(i) for i in path])
            return
        for w in vertices:
            if w <= path[0] or w in path:
                continue
            color = sub(current, w)
            if color in used_colors or not view.has_edge_index(current, w):
                continue
            used_colors.add(color)
            path.append(w)
            for edge in extend(w):
                yield edge
            path.pop()
            used_colors.discard(color)

    for v0 in vertices:
        path.append(v0)
        for edge in extend(v0):
            yield edge
        path.pop()


def enumerate_hyperedges(view, k, cap=None):
    """ Lists the hyperedges of H_k inside the view, stopping after `cap` of them.

    Returns:
        Enumeration: the hyperedges and a truncation flag.
    """
    edges = []
    for edge in iter_hyperedges(view, k):
        if cap is not None and len(edges) >= cap:
            return Enumeration(edges, True)
        edges.append(edge)
    return Enumeration(edges, False)


class Matching(object):
    """ Hyperedges with pairwise disjoint vertex sets and colour sets. """

    def __init__(self, group, edges=()):
        self.group = group
        self.edges = list(edges)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    @property
    def covered_vertices(self):
        return frozenset(v for e in self.edges for v in e.cycle)

    @property
    def covered_colors(self):
        return frozenset(c for e in self.edges for c in e.colors)

    def violations(self, view=None, perfect=False):
        """ Re-checks every edge against the digraph and the disjointness of the edges.

        Args:
            view (ColoredDigraphView): the view the edges must lie in; the
                full Cayley digraph when None.
            perfect (bool): also require every vertex and colour of the view
                to be covered.
        """
        view = view or ColoredDigraphView(self.group)
        problems = []
        seen_vertices, seen_colors = set(), set()
        for position, edge in enumerate(self.edges):
            try:
                rebuilt = cycle_to_hyperedge(edge.cycle, view)
            except DomainError as e:
                rebuilt = None
                problems.append("edge {}: {}".format(position, e))
            if rebuilt is None:
                problems.append("edge {} is not a rainbow cycle of the view".format(position))
            if seen_vertices.intersection(edge.cycle):
                problems.append("edge {} reuses a vertex".format(position))
            if seen_colors.intersection(edge.colors):
                problems.append("edge {} reuses a colour".format(position))
            if self.group.sum_indices(c.index for c in edge.colors) != 0:
                problems.append("edge {} has colours not summing to the identity".format(position))
            seen_vertices.update(edge.cycle)
            seen_colors.update(edge.colors)
        if perfect:
            if seen_vertices != set(view.vertices):
                problems.append("{} of {} vertices covered".format(len(seen_vertices), len(view.vertices)))
            if seen_colors != set(view.colors):
                problems.append("{} of {} colours covered".format(len(seen_colors), len(view.colors)))
        return problems

    def to_list(self):
        return [e.to_dict() for e in self.edges]

    @classmethod
    def from_list(cls, group, data):
        return cls(group, [HyperEdge.from_dict(group, item) for item in data])

    def __repr__(self):
        return 'Matching({}, {} edges)'.format(self.group, len(self.edges))


def parse_view(group, vertices=None, colors=None):
    """ Builds a view from index lists, defaulting to the whole group. """
    if not isinstance(group, GroupSpec):
        group = GroupSpec.parse(group)
    to_elements = (lambda xs: None if xs is None else [group.element(i) for i in xs])
    return ColoredDigraphView(group, to_elements(vertices), to_elements(colors))
