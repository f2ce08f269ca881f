"""
m-absorption in the cycle hypergraph H_k.

A reservoir (some vertices and colours) m-absorbs a family of small sets
when, for every choice of m sets from the family, the reservoir together
with the chosen sets has a perfect matching of H_k.
"""
import collections
import itertools
import logging

from ..exceptions import BudgetExceededError
from ..exceptions import DomainError
from ..exceptions import PreconditionError
from ..search import Outcome
from ..search import SearchBudget
from ..search import SearchResult
from ..search import Verdict
from ..rainbow import perfect_matching

# Creates a ClickLogger
logger = logging.getLogger(__name__)


class Absorbable(collections.namedtuple('Absorbable', ['vertices', 'colors'])):
    """ One member of an absorbed family: some vertices and some colours. """

    def __new__(cls, vertices=(), colors=()):
        return super(Absorbable, cls).__new__(cls, frozenset(vertices), frozenset(colors))

    def to_dict(self):
        return {"vertices": sorted(v.index for v in self.vertices),
                "colors": sorted(c.index for c in self.colors)}

    def __str__(self):
        parts = [str(v) for v in sorted(self.vertices)] + ['c' + str(c) for c in sorted(self.colors)]
        return '{' + ','.join(parts) + '}'


def _as_absorbable(member):
    if isinstance(member, Absorbable):
        return member
    return Absorbable(vertices=member)


class AbsorberInstance(object):
    """ A reservoir, the family it should absorb and the number m of members absorbed at once.

    Members given as plain sets are read as vertex sets.

    Raises:
        DomainError: if a member meets the reservoir or m is out of range.
    """

    def __init__(self, group, reservoir_vertices, reservoir_colors, family, m):
        self.group = group
        self.reservoir_vertices = frozenset(reservoir_vertices)
        self.reservoir_colors = frozenset(reservoir_colors)
        self.family = [_as_absorbable(member) for member in family]
        self.m = int(m)
        if not 0 <= self.m <= len(self.family):
            raise DomainError("m={} outside 0..{}".format(self.m, len(self.family)))
        for member in self.family:
            if member.vertices & self.reservoir_vertices or member.colors & self.reservoir_colors:
                raise DomainError("family member {} meets the reservoir".format(member))

    @property
    def size(self):
        return len(self.reservoir_vertices) + len(self.reservoir_colors)

    def to_dict(self):
        return {
            "group": str(self.group),
            "reservoir_vertices": sorted(v.index for v in self.reservoir_vertices),
            "reservoir_colors": sorted(c.index for c in self.reservoir_colors),
            "family": [member.to_dict() for member in self.family],
            "m": self.m,
        }

    @classmethod
    def from_dict(cls, group, data):
        family = [Absorbable([group.element(i) for i in member.get("vertices", [])],
                             [group.element(i) for i in member.get("colors", [])])
                  for member in data["family"]]
        return cls(group, [group.element(i) for i in data["reservoir_vertices"]],
                   [group.element(i) for i in data["reservoir_colors"]], family, data["m"])

    def __repr__(self):
        return 'AbsorberInstance({}, |R|={}, {} members, m={})'.format(
            self.group, self.size, len(self.family), self.m)


class AbsorptionVerdict(collections.namedtuple('AbsorptionVerdict', [
        'verdict', 'failing', 'checked', 'total', 'reason'])):
    """ Outcome of verify_m_absorbs; `failing` is the first subfamily without a matching. """

    def to_dict(self):
        return {
            "verdict": self.verdict.label,
            "failing": None if self.failing is None else [m.to_dict() for m in self.failing],
            "checked": self.checked,
            "total": self.total,
            "reason": self.reason,
        }


def verify_m_absorbs(inst, view, k, budget=None):
    """ Checks every m-subfamily (in sorted order) for a perfect matching of
    the reservoir plus the chosen members.

    A subfamily whose sets cannot even be matched in size (colour count
    differs from vertex count, or k does not divide it) fails.

    Returns:
        AbsorptionVerdict
    """
    total = 0
    checked = 0
    outside = [v for v in inst.reservoir_vertices if v not in view.vertices]
    outside += [c for c in inst.reservoir_colors if c not in view.colors]
    if outside:
        return AbsorptionVerdict(Verdict.FAIL, None, 0, 0, "reservoir leaves the view")
    for chosen in itertools.combinations(inst.family, inst.m):
        total += 1
        vertices = set(inst.reservoir_vertices)
        colors = set(inst.reservoir_colors)
        for member in chosen:
            vertices |= member.vertices
            colors |= member.colors
        sub = view.restrict(vertices, colors)
        try:
            result = perfect_matching(sub, k, budget)
        except (DomainError, PreconditionError) as e:
            result = SearchResult.nonexistent(0, str(e))
        if result.outcome is Outcome.UNKNOWN:
            return AbsorptionVerdict(Verdict.UNKNOWN, None, checked, None,
                                     "budget exhausted after {} subfamilies".format(checked))
        if result.outcome is Outcome.NONEXISTENT:
            logger.debug("%r fails on %s: %s", inst, [str(m) for m in chosen], result.reason)
            return AbsorptionVerdict(Verdict.FAIL, list(chosen), checked + 1, None, result.reason)
        checked += 1
    return AbsorptionVerdict(Verdict.PASS, None, checked, total, "all {} subfamilies matched".format(total))


def _cycles_through(view, k, start, avoid_vertices=(), avoid_colors=()):
    """ Rainbow directed k-cycles of the view through `start`, as index tuples starting there. """
    group = view.group
    sub = group.sub_index
    vertices = [v for v in view.vertex_indices() if v != start and v not in avoid_vertices]
    avoid_colors = set(avoid_colors)
    path = [start]
    colors = []

    def extend(current):
        if len(path) == k:
            closing = sub(current, start)
            if (closing not in colors and closing not in avoid_colors and
                    view.has_edge_index(current, start)):
                yield tuple(path), tuple(colors) + (closing,)
            return
        for w in vertices:
            if w in path:
                continue
            color = sub(current, w)
            if color in colors or color in avoid_colors or not view.has_edge_index(current, w):
                continue
            path.append(w)
            colors.append(color)
            for found in extend(w):
                yield found
            path.pop()
            colors.pop()

    return extend(start)


def find_pair_absorber(x, z, view, k, budget=None):
    """ Searches for a reservoir that 1-absorbs the singletons {x} and {z}.

    First a rainbow k-cycle through x is sought whose other vertices, with
    z in place of x, carry a rainbow k-cycle on exactly the same colours.
    Failing that, a second cycle disjoint from the first is added and the
    z side is matched as a whole. The reservoir is verified before it is
    returned.

    Returns:
        SearchResult: witness is an AbsorberInstance.

    Raises:
        PreconditionError: if x = z or either is not a vertex of the view.
    """
    if x == z:
        raise PreconditionError("the two absorbed vertices must differ")
    if x not in view.vertices or z not in view.vertices:
        raise PreconditionError("both absorbed vertices must lie in the view")
    group = view.group
    meter = (budget or SearchBudget()).meter()
    family = [Absorbable([x]), Absorbable([z])]

    def candidate(vertices, colors):
        inst = AbsorberInstance(group, [group.element(i) for i in vertices],
                                [group.element(c) for c in colors], family, 1)
        if verify_m_absorbs(inst, view, k, budget).verdict is Verdict.PASS:
            return inst
        return None

    def z_side_matches(vertices, colors):
        sub = view.restrict([group.element(i) for i in set(vertices) | {z.index}],
                            [group.element(c) for c in colors])
        return perfect_matching(sub, k, budget).is_found

    try:
        through_x = []
        for path, colors in _cycles_through(view, k, x.index, avoid_vertices={z.index}):
            meter.tick()
            through_x.append((path, colors))
            rest = path[1:]
            if z_side_matches(rest, colors):
                found = candidate(rest, colors)
                if found is not None:
                    return SearchResult.found(found, meter.nodes, 'single cycle')
        if not through_x:
            return SearchResult.nonexistent(meter.nodes, "no rainbow {}-cycle through {}".format(k, x))
        for path, colors in through_x:
            avoid = set(path) | {z.index}
            for first in view.vertex_indices():
                if first in avoid:
                    continue
                for other, other_colors in _cycles_through(view, k, first, avoid, colors):
                    meter.tick()
                    if min(other) != first:
                        continue
                    vertices = path[1:] + other
                    both = colors + other_colors
                    if z_side_matches(vertices, both):
                        found = candidate(vertices, both)
                        if found is not None:
                            return SearchResult.found(found, meter.nodes, 'two cycles')
    except BudgetExceededError as e:
        return SearchResult.unknown(meter.nodes, str(e))
    return SearchResult.unknown(meter.nodes, "no absorber among one- and two-cycle reservoirs")


def chain_pair_absorbers(vertices, view, k, budget=None):
    """ Chains pair absorbers for consecutive vertices a_1, ..., a_l into one
    reservoir that (l-1)-absorbs the singletons {a_i}.

    Each pair absorber is sought away from the other a_j and from the
    reservoirs already chosen, so the pieces are disjoint.

    Returns:
        SearchResult: witness is an AbsorberInstance with m = l - 1.
    """
    vertices = list(vertices)
    if len(vertices) < 2 or len(set(vertices)) != len(vertices):
        raise PreconditionError("at least two distinct vertices are required")
    group = view.group
    used_vertices, used_colors = set(), set()
    nodes = 0
    for a, b in zip(vertices, vertices[1:]):
        keep_v = [v for v in view.vertices
                  if v not in used_vertices and (v in (a, b) or v not in vertices)]
        keep_c = [c for c in view.colors if c not in used_colors]
        result = find_pair_absorber(a, b, view.restrict(keep_v, keep_c), k, budget)
        nodes += result.nodes
        if not result.is_found:
            return SearchResult.unknown(nodes, "no pair absorber for {} and {}: {}".format(
                a, b, result.reason))
        used_vertices |= result.witness.reservoir_vertices
        used_colors |= result.witness.reservoir_colors
    family = [Absorbable([v]) for v in vertices]
    inst = AbsorberInstance(group, used_vertices, used_colors, family, len(vertices) - 1)
    return SearchResult.found(inst, nodes)
