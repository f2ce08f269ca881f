"""
Rainbow cycle factors of coloured digraph views.

A cycle factor is a set of vertex-disjoint rainbow cycles that together
use every vertex and every colour of the view exactly once; when all
cycles have length k it is a perfect matching of H_k.
"""
import collections
import logging
import random

from ..exceptions import BudgetExceededError
from ..exceptions import DivisibilityError
from ..exceptions import DomainError
from ..exceptions import PreconditionError
from ..search import SearchBudget
from ..search import SearchResult
from ..search import run_search
from .digraph import HyperEdge
from .digraph import Matching
from .digraph import iter_hyperedges

# Creates a ClickLogger
logger = logging.getLogger(__name__)

# effort spent looking for one cycle through a vertex in the greedy heuristic
DEFAULT_EFFORT = 256


def _color_sum(view):
    return view.group.sum_indices(view.color_indices())


def _check_factor_shape(view, lengths):
    if any(length < 2 for length in lengths):
        raise DomainError("cycle lengths must be at least 2: {}".format(sorted(lengths)))
    if len(view.vertices) != len(view.colors):
        raise PreconditionError("a factor needs as many colours as vertices ({} != {})".format(
            len(view.colors), len(view.vertices)))
    total = sum(length * count for length, count in lengths.items())
    if total != len(view.vertices):
        raise DivisibilityError("cycle lengths cover {} vertices, the view has {}".format(
            total, len(view.vertices)))


def _search_factor(view, lengths, meter):
    group = view.group
    sub = group.sub_index
    order = view.vertex_indices()
    partite = view.parts is not None
    counts = collections.Counter({length: c for length, c in lengths.items() if c > 0})
    cycles = []

    def grow(path, current, free_v, free_c, length):
        v0 = path[0]
        if len(path) == length:
            closing = sub(current, v0)
            if not free_c >> closing & 1:
                return False
            if partite and not view.has_edge_index(current, v0):
                return False
            cycles.append(tuple(path))
            counts[length] -= 1
            if solve(free_v, free_c & ~(1 << closing)):
                return True
            counts[length] += 1
            cycles.pop()
            return False
        for w in order:
            if not free_v >> w & 1:
                continue
            color = sub(current, w)
            if not free_c >> color & 1:
                continue
            if partite and not view.has_edge_index(current, w):
                continue
            meter.tick()
            path.append(w)
            if grow(path, w, free_v & ~(1 << w), free_c & ~(1 << color), length):
                return True
            path.pop()
        return False

    def solve(free_v, free_c):
        if not free_v:
            return True
        v0 = (free_v & -free_v).bit_length() - 1
        for length in sorted(length for length, c in counts.items() if c > 0):
            if grow([v0], v0, free_v & ~(1 << v0), free_c, length):
                return True
        return False

    if not solve(view.vertex_mask, view.color_mask):
        return None
    return Matching(group, [HyperEdge(group, [group.element(i) for i in c]) for c in cycles])


def cycle_factor(view, lengths, budget=None):
    """ Partitions the view into rainbow cycles with the given multiset of lengths.

    Args:
        view (ColoredDigraphView): vertices and colours to cover.
        lengths (dict): cycle length -> number of cycles.

    Returns:
        SearchResult: witness is a Matching.

    Raises:
        PreconditionError: if the view has different numbers of vertices and colours.
        DivisibilityError: if the lengths do not add up to the number of vertices.
    """
    lengths = collections.Counter(lengths)
    _check_factor_shape(view, lengths)
    if _color_sum(view) != 0:
        return SearchResult.nonexistent(0, "colours do not sum to the identity")
    result = run_search(budget, _search_factor, view, lengths)
    logger.debug("cycle factor %s of %r: %s after %d nodes",
                 dict(lengths), view, result.outcome.label, result.nodes)
    return result


def perfect_matching(view, k, budget=None):
    """ A perfect matching of H_k inside the view, i.e. a rainbow C_k-factor.

    Cycles are grown one at a time from the least uncovered vertex, with
    used vertices and colours kept as bitsets.

    Returns:
        SearchResult: witness is a Matching.

    >>> from orthomorph.group import GroupSpec
    >>> from orthomorph.rainbow import ColoredDigraphView
    >>> view = ColoredDigraphView.full(GroupSpec.cyclic(4), punctured=True)
    >>> perfect_matching(view, 3).outcome.label
    'nonexistent'
    """
    if k < 2:
        raise DomainError("cycles need at least two vertices, got k={}".format(k))
    if len(view.vertices) != len(view.colors):
        raise PreconditionError("a perfect matching needs as many colours as vertices")
    if len(view.vertices) % k:
        raise DivisibilityError("{} does not divide {}".format(k, len(view.vertices)))
    return cycle_factor(view, {k: len(view.vertices) // k}, budget)


def materialized_matching(view, k, budget=None):
    """ Perfect matching of an explicitly enumerated H_k by exact cover.

    Meant for cross-checking perfect_matching on small views: every
    hyperedge is listed first, then the item with the fewest remaining
    options is covered at each step.

    Returns:
        SearchResult: witness is a Matching.
    """
    if k < 2:
        raise DomainError("cycles need at least two vertices, got k={}".format(k))
    if len(view.vertices) != len(view.colors):
        raise PreconditionError("a perfect matching needs as many colours as vertices")
    if len(view.vertices) % k:
        raise DivisibilityError("{} does not divide {}".format(k, len(view.vertices)))

    def search(meter):
        options = []
        for edge in iter_hyperedges(view, k):
            meter.tick()
            options.append(edge)
        items = {('v', i): set() for i in view.vertex_indices()}
        items.update({('c', c): set() for c in view.color_indices()})
        rows = []
        for position, edge in enumerate(options):
            row = [('v', v.index) for v in edge.cycle] + [('c', c.index) for c in edge.colors]
            rows.append(row)
            for item in row:
                items[item].add(position)
        chosen = []

        def select(position):
            removed = []
            for item in rows[position]:
                for other in items[item]:
                    for other_item in rows[other]:
                        if other_item != item:
                            items[other_item].discard(other)
                removed.append((item, items.pop(item)))
            return removed

        def deselect(position, removed):
            for item, column in reversed(removed):
                items[item] = column
                for other in column:
                    for other_item in rows[other]:
                        if other_item != item and other_item in items:
                            items[other_item].add(other)

        def solve():
            if not items:
                return True
            item = min(items, key=lambda it: (len(items[it]), it))
            for position in sorted(items[item]):
                meter.tick()
                chosen.append(position)
                removed = select(position)
                if solve():
                    return True
                deselect(position, removed)
                chosen.pop()
            return False

        if not solve():
            return None
        return Matching(view.group, [options[position] for position in chosen])

    return run_search(budget, search)


class NearMatchingReport(collections.namedtuple(
        'NearMatchingReport', ['matching', 'leftover_vertices', 'leftover_colors', 'k', 'seed'])):
    """ A greedy matching with the vertices and colours it leaves uncovered. """

    def csv_row(self):
        return (self.matching.group.order, self.k, self.seed, len(self.leftover_vertices))

    def to_dict(self):
        return {
            "edges": self.matching.to_list(),
            "leftover_vertices": sorted(v.index for v in self.leftover_vertices),
            "leftover_colors": sorted(c.index for c in self.leftover_colors),
        }


def near_perfect_matching(view, k, seed=0, effort=DEFAULT_EFFORT):
    """ Randomised greedy matching of H_k inside the view.

    Vertices are visited in a seeded random order; for each uncovered one a
    short randomised search (at most `effort` nodes) looks for a rainbow
    k-cycle through it on uncovered vertices and colours. Nothing is
    guaranteed about the size of the leftover.

    Returns:
        NearMatchingReport
    """
    if k < 2:
        raise DomainError("cycles need at least two vertices, got k={}".format(k))
    group = view.group
    sub = group.sub_index
    rng = random.Random(seed)
    free_v = set(view.vertex_indices())
    free_c = set(view.color_indices())
    visit = sorted(free_v)
    rng.shuffle(visit)
    edges = []

    def find_cycle(v0, meter):
        path = [v0]
        colors = []

        def extend(current):
            if len(path) == k:
                closing = sub(current, v0)
                return (closing in free_c and closing not in colors and
                        view.has_edge_index(current, v0))
            candidates = [w for w in sorted(free_v) if w not in path]
            rng.shuffle(candidates)
            for w in candidates:
                color = sub(current, w)
                if color not in free_c or color in colors or not view.has_edge_index(current, w):
                    continue
                meter.tick()
                path.append(w)
                colors.append(color)
                if extend(w):
                    return True
                path.pop()
                colors.pop()
            return False

        return path if extend(v0) else None

    for v0 in visit:
        if v0 not in free_v:
            continue
        meter = SearchBudget(effort).meter()
        try:
            cycle = find_cycle(v0, meter)
        except BudgetExceededError:
            cycle = None
        if cycle is None:
            continue
        edge = HyperEdge(group, [group.element(i) for i in cycle])
        free_v.difference_update(cycle)
        free_c.difference_update(c.index for c in edge.colors)
        edges.append(edge)

    report = NearMatchingReport(Matching(group, edges),
                                frozenset(group.element(i) for i in free_v),
                                frozenset(group.element(i) for i in free_c), k, seed)
    logger.debug("greedy matching on %r: %d edges, %d vertices left",
                 view, len(edges), len(free_v))
    return report
