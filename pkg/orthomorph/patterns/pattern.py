"""
Patterns: small digraphs labelled by words, and their copies in the
Cayley digraph of a group.
"""
import collections
import itertools
import logging
import random

from ..exceptions import BudgetExceededError
from ..exceptions import DomainError
from ..exceptions import PreconditionError
from ..group import GroupSpec
from ..search import SearchResult
from ..search import SearchBudget
from .words import Projection
from .words import Word
from .words import _evaluator
from .words import is_pairwise_separable

# Creates a ClickLogger
logger = logging.getLogger(__name__)

DEFAULT_ATTEMPTS = 10 ** 5
EXHAUSTIVE_LIMIT = 10 ** 6
MAX_PATTERN_SIZE = 100


ColoredEdge = collections.namedtuple('ColoredEdge', ['source', 'target', 'color'])


class EdgeColoredSubgraph(collections.namedtuple('EdgeColoredSubgraph', ['vertices', 'edges'])):
    """ A concrete subgraph of the Cayley digraph: vertices and coloured edges. """

    def is_consistent(self):
        """ Every edge joins two listed vertices and carries colour source - target. """
        vertices = set(self.vertices)
        return all(e.source in vertices and e.target in vertices and
                   e.source - e.target == e.color for e in self.edges)

    def to_dict(self):
        return {
            "vertices": [v.index for v in self.vertices],
            "edges": [[e.source.index, e.target.index, e.color.index] for e in self.edges],
        }


class Pattern(object):
    """ A simple digraph with a word on every vertex and every edge.

    Args:
        group (GroupSpec): the group the labels live over.
        vertex_labels (dict): vertex id -> Word.
        edge_labels (dict): (tail, head) -> Word.
    """

    def __init__(self, group, vertex_labels, edge_labels):
        self.group = group
        self.vertex_labels = collections.OrderedDict(vertex_labels)
        self.edge_labels = collections.OrderedDict(edge_labels)

    @property
    def vertices(self):
        return list(self.vertex_labels)

    @property
    def edges(self):
        return list(self.edge_labels)

    @property
    def size(self):
        return len(self.vertex_labels) + len(self.edge_labels)

    def words(self):
        return list(self.vertex_labels.values()) + list(self.edge_labels.values())

    def variables(self):
        return sorted({var for w in self.words() for var in w.variables})

    @classmethod
    def path(cls, colors):
        """ The directed path following `colors` out of a free start vertex v1. """
        group = colors.group
        start = Word.variable(group, 1)
        sums = colors.prefix_sum_indices()
        vertex_labels = [(i, start - Word.const(group, s)) for i, s in enumerate(sums)]
        edge_labels = [((i, i + 1), Word.const(group, c.index)) for i, c in enumerate(colors)]
        return cls(group, vertex_labels, edge_labels)

    @classmethod
    def cycle(cls, colors):
        """ The directed cycle following a cycle-candidate `colors` out of v1. """
        if not colors.is_cycle_candidate():
            raise DomainError("{} is not a cycle-candidate".format(colors))
        group = colors.group
        k = len(colors)
        start = Word.variable(group, 1)
        sums = colors.prefix_sum_indices()[:-1]
        vertex_labels = [(i, start - Word.const(group, s)) for i, s in enumerate(sums)]
        edge_labels = [((i, (i + 1) % k), Word.const(group, c.index)) for i, c in enumerate(colors)]
        return cls(group, vertex_labels, edge_labels)

    @classmethod
    def connecting_path(cls, u, v):
        """ A path of length 3 from u to v with two free colours. """
        if u == v:
            raise DomainError("the endpoints of a connecting path must differ")
        group = u.group
        c1, c2 = Word.variable(group, 1), Word.variable(group, 2)
        start, end = Word.const(group, u), Word.const(group, v)
        vertex_labels = [(0, start), (1, start - c1), (2, start - c1 - c2), (3, end)]
        edge_labels = [((0, 1), c1), ((1, 2), c2), ((2, 3), start - end - c1 - c2)]
        return cls(group, vertex_labels, edge_labels)

    @classmethod
    def rooted_triangle(cls, u):
        """ A directed triangle through u with two free colours. """
        group = u.group
        c1, c2 = Word.variable(group, 1), Word.variable(group, 2)
        start = Word.const(group, u)
        vertex_labels = [(0, start), (1, start - c1), (2, start - c1 - c2)]
        edge_labels = [((0, 1), c1), ((1, 2), c2), ((2, 0), -c1 - c2)]
        return cls(group, vertex_labels, edge_labels)

    @classmethod
    def from_dict(cls, data):
        group = GroupSpec.parse(data["group"])
        vertex_labels = [(v["id"], Word.parse(v["label"], group)) for v in data["vertices"]]
        edge_labels = [((e["source"], e["target"]), Word.parse(e["label"], group))
                       for e in data["edges"]]
        return cls(group, vertex_labels, edge_labels)

    def to_dict(self):
        return {
            "group": str(self.group),
            "vertices": [{"id": v, "label": str(w)} for v, w in self.vertex_labels.items()],
            "edges": [{"source": a, "target": b, "label": str(w)}
                      for (a, b), w in self.edge_labels.items()],
        }

    def violations(self):
        problems = []
        labels = list(self.vertex_labels.values())
        if len(set(labels)) != len(labels):
            problems.append("two vertices share a label")
        for (a, b), w in self.edge_labels.items():
            if a not in self.vertex_labels or b not in self.vertex_labels:
                problems.append("edge ({}, {}) has an endpoint outside the vertex set".format(a, b))
                continue
            if a == b:
                problems.append("loop at {}".format(a))
            elif self.vertex_labels[a] - self.vertex_labels[b] != w:
                problems.append("edge ({}, {}) is labelled {} but its endpoints differ by {}".format(
                    a, b, w, self.vertex_labels[a] - self.vertex_labels[b]))
        for w in self.words():
            if w.group != self.group:
                problems.append("label {} is over {}".format(w, w.group))
        return problems

    def __repr__(self):
        return 'Pattern({}, {} vertices, {} edges)'.format(
            self.group, len(self.vertex_labels), len(self.edge_labels))


def validate_pattern(p):
    """ Checks distinct vertex labels and label(v) - label(w) = label(v, w) on every edge. """
    return not p.violations()


def is_well_distributed(p):
    """ Vertex labels and edge labels are each pairwise separable, and every
    label is constant or linear in some variable. """
    for w in p.words():
        if not (w.is_constant or w.linear_variables()):
            return False
    return (is_pairwise_separable(p.vertex_labels.values(), p.group) and
            is_pairwise_separable(p.edge_labels.values(), p.group))


class PatternCopy(object):
    """ A pattern together with the projection that places it in the group. """

    def __init__(self, pattern, projection):
        self.pattern = pattern
        self.projection = projection
        self.vertex_map = collections.OrderedDict(
            (v, projection.apply(w)) for v, w in pattern.vertex_labels.items())
        self.edge_map = collections.OrderedDict(
            (e, projection.apply(w)) for e, w in pattern.edge_labels.items())

    @property
    def image_vertices(self):
        return frozenset(self.vertex_map.values())

    @property
    def image_colors(self):
        return frozenset(self.edge_map.values())

    def violations(self, vertex_pool=None, color_pool=None, forbidden=()):
        """ Re-checks separation, pool membership and constant fixing from scratch. """
        p = self.pattern
        problems = []
        if not self.projection.separates(p.vertex_labels.values()):
            problems.append("projection does not separate the vertex labels")
        if not self.projection.separates(p.edge_labels.values()):
            problems.append("projection does not separate the edge labels")
        if len(self.image_vertices) != len(self.vertex_map):
            problems.append("projection is not injective on the vertex labels")
        forbidden = set(forbidden)
        checks = ((p.vertex_labels, self.vertex_map, vertex_pool, "vertex"),
                  (p.edge_labels, self.edge_map, color_pool, "colour"))
        for labels, images, pool, kind in checks:
            for key, w in labels.items():
                image = images[key]
                if w.is_constant:
                    if image != w.constant:
                        problems.append("constant {} label moved to {}".format(kind, image))
                    continue
                if pool is not None and image not in pool:
                    problems.append("{} {} outside its pool".format(kind, image))
                if image in forbidden:
                    problems.append("{} {} is forbidden".format(kind, image))
        if not copy_to_subgraph(self).is_consistent():
            problems.append("image is not a subgraph with the pattern's colours")
        return problems

    def to_dict(self):
        return {
            "projection": self.projection.to_dict(),
            "vertices": {str(v): e.index for v, e in self.vertex_map.items()},
            "colors": [[str(a), str(b), c.index] for (a, b), c in self.edge_map.items()],
        }


def copy_to_subgraph(c):
    """ The subgraph of the Cayley digraph realised by a copy. """
    vertices = list(c.vertex_map.values())
    edges = [ColoredEdge(c.vertex_map[a], c.vertex_map[b], color)
             for (a, b), color in c.edge_map.items()]
    return EdgeColoredSubgraph(vertices, edges)


class _CopyChecker(object):
    """ Evaluates candidate assignments against a pattern's copy conditions. """

    def __init__(self, p, variables, vertex_pool, color_pool, forbidden):
        group = p.group
        self.vertex_words = [self._compile(group, w, variables, vertex_pool, forbidden)
                             for w in dict.fromkeys(p.vertex_labels.values())]
        self.edge_words = [self._compile(group, w, variables, color_pool, forbidden)
                           for w in dict.fromkeys(p.edge_labels.values())]

    @staticmethod
    def _compile(group, word, variables, pool, forbidden):
        if word.is_constant:
            allowed = None
        else:
            allowed = frozenset(e.index for e in pool) - frozenset(e.index for e in forbidden)
        return _evaluator(group, word, variables), allowed

    @staticmethod
    def _distinct_and_allowed(compiled, values):
        seen = set()
        for evaluate, allowed in compiled:
            image = evaluate(values)
            if image in seen or (allowed is not None and image not in allowed):
                return False
            seen.add(image)
        return True

    def accepts(self, values):
        return (self._distinct_and_allowed(self.vertex_words, values) and
                self._distinct_and_allowed(self.edge_words, values))


def find_copy(p, vertex_pool, color_pool, forbidden=(), seed=0, attempts=DEFAULT_ATTEMPTS,
              exhaustive_limit=EXHAUSTIVE_LIMIT, budget=None):
    """ Looks for a copy of a well-distributed pattern with its free labels in the pools.

    Assignments of the free variables are sampled with a seeded generator;
    when the assignment space has at most `attempts` points, or sampling
    fails and the space has at most `exhaustive_limit` points, every
    assignment is tried in canonical order instead.

    Returns:
        SearchResult: witness is a PatternCopy. NONEXISTENT is only reported
            after exhaustive enumeration.

    Raises:
        PreconditionError: if the pattern is invalid, not well-distributed
            or larger than MAX_PATTERN_SIZE.
    """
    if not validate_pattern(p):
        raise PreconditionError("invalid pattern: {}".format('; '.join(p.violations())))
    if not is_well_distributed(p):
        raise PreconditionError("pattern is not well-distributed")
    if p.size > MAX_PATTERN_SIZE:
        raise PreconditionError("pattern has {} vertices and edges, at most {} are supported".format(
            p.size, MAX_PATTERN_SIZE))
    group = p.group
    variables = p.variables()
    checker = _CopyChecker(p, variables, vertex_pool, color_pool, forbidden)
    space = group.order ** len(variables)
    meter = (budget or SearchBudget.unlimited()).meter()

    def witness(values):
        projection = Projection(group, dict(zip(variables, values)))
        return PatternCopy(p, projection)

    sampled = 0
    if space > attempts:
        rng = random.Random(seed)
        for sampled in range(1, attempts + 1):
            values = tuple(rng.randrange(group.order) for _ in variables)
            if checker.accepts(values):
                logger.debug("copy found after %d samples", sampled)
                return SearchResult.found(witness(values), sampled, 'sampling')
        if space > exhaustive_limit:
            return SearchResult.unknown(sampled, "{} samples failed and {} assignments are too many "
                                        "to enumerate".format(attempts, space))
    try:
        for count, values in enumerate(itertools.product(range(group.order), repeat=len(variables)), 1):
            meter.tick()
            if checker.accepts(values):
                return SearchResult.found(witness(values), sampled + count, 'exhaustive')
    except BudgetExceededError as e:
        return SearchResult.unknown(sampled + meter.nodes, str(e))
    return SearchResult.nonexistent(sampled + space, 'all {} assignments fail'.format(space))
