"""
Robustly matchable bipartite graphs.

The left side X has 3h vertices; the right side is Y (2h vertices) plus a
flexible part Y' (h + beta*h vertices). The graph is robustly matchable if
X can be perfectly matched into Y plus any h vertices of Y', and no vertex
has degree above 100.
"""
import collections
import fractions
import itertools
import logging
import math
import random

from ..exceptions import DomainError
from ..search import SearchResult
from ..search import Verdict
from .bipartite import HopcroftKarp

# Creates a ClickLogger
logger = logging.getLogger(__name__)

MAX_DEGREE = 100
DEFAULT_ROUNDS = 8
DEFAULT_SAMPLES = 1000
DEFAULT_EXHAUSTIVE_THRESHOLD = 100000
DEFAULT_RETRIES = 10


def _beta_h(h, beta):
    extra = fractions.Fraction(beta) * h
    if extra.denominator != 1:
        raise DomainError("beta * h must be an integer, got {}".format(extra))
    return int(extra)


class RMBG(object):
    """ Bipartite graph on X = {0..3h-1} and right vertices 0..3h+beta*h-1,
    of which the first 2h form Y and the rest Y'.

    Args:
        h (int): size parameter.
        beta (Fraction): proportion of extra flexible vertices.
        edges (iterable): (x, y) pairs.
    """

    def __init__(self, h, beta, edges):
        self.h = int(h)
        self.beta = fractions.Fraction(beta)
        if self.h < 1:
            raise DomainError("h must be at least 1")
        self.extra = _beta_h(self.h, self.beta)
        self.edges = sorted(set((int(x), int(y)) for x, y in edges))

    @property
    def left(self):
        return list(range(3 * self.h))

    @property
    def right(self):
        return list(range(3 * self.h + self.extra))

    @property
    def Y(self):
        return list(range(2 * self.h))

    @property
    def Y_flexible(self):
        return list(range(2 * self.h, 3 * self.h + self.extra))

    def adjacency(self):
        adj = collections.OrderedDict((x, []) for x in self.left)
        for x, y in self.edges:
            adj[x].append(y)
        return adj

    def degrees(self):
        left = collections.Counter(x for x, _ in self.edges)
        right = collections.Counter(y for _, y in self.edges)
        return left, right

    def max_degree(self):
        left, right = self.degrees()
        return max(list(left.values()) + list(right.values()) + [0])

    def structural_problems(self):
        problems = []
        n_left, n_right = 3 * self.h, 3 * self.h + self.extra
        for x, y in self.edges:
            if not (0 <= x < n_left and 0 <= y < n_right):
                problems.append("edge ({}, {}) leaves the vertex classes".format(x, y))
                break
        if self.max_degree() > MAX_DEGREE:
            problems.append("maximum degree {} exceeds {}".format(self.max_degree(), MAX_DEGREE))
        return problems

    def to_dict(self):
        return {"h": self.h, "beta": str(self.beta), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data):
        return cls(data["h"], fractions.Fraction(data["beta"]), data["edges"])

    def __repr__(self):
        return 'RMBG(h={}, beta={}, {} edges)'.format(self.h, self.beta, len(self.edges))


class RMBGVerdict(collections.namedtuple('RMBGVerdict', [
        'verdict', 'evidence', 'checked', 'seed', 'failing', 'reason'])):
    """ Verification outcome; evidence is 'exhaustive', 'sampled' or 'structural'. """

    def to_dict(self):
        data = self._asdict()
        data['verdict'] = self.verdict.label
        data['failing'] = None if self.failing is None else list(self.failing)
        return data


def rmbg_verify(g, samples=DEFAULT_SAMPLES, seed=0, exhaustive_threshold=DEFAULT_EXHAUSTIVE_THRESHOLD):
    """ Checks the degree bound and, for every (or a sample of) h-subset Y0 of Y',
    that X has a perfect matching into Y plus Y0.

    Returns:
        RMBGVerdict
    """
    problems = g.structural_problems()
    if problems:
        return RMBGVerdict(Verdict.FAIL, 'structural', 0, seed, None, '; '.join(problems))
    flexible = g.Y_flexible
    adjacency = g.adjacency()
    target = len(g.left)
    if math.comb(len(flexible), g.h) <= exhaustive_threshold:
        evidence = 'exhaustive'
        subsets = itertools.combinations(flexible, g.h)
    else:
        evidence = 'sampled'
        rng = random.Random(seed)
        subsets = (tuple(sorted(rng.sample(flexible, g.h))) for _ in range(samples))
    fixed = set(g.Y)
    checked = 0
    for subset in subsets:
        allowed = fixed.union(subset)
        graph = collections.OrderedDict(
            (x, [y for y in ys if y in allowed]) for x, ys in adjacency.items())
        checked += 1
        if HopcroftKarp(graph).maximum_matching_size() != target:
            return RMBGVerdict(Verdict.FAIL, evidence, checked, seed, subset,
                               "no perfect matching of X into Y and {}".format(list(subset)))
    logger.debug("%r verified on %d subsets (%s)", g, checked, evidence)
    return RMBGVerdict(Verdict.PASS, evidence, checked, seed, None,
                       "{} subsets matched ({})".format(checked, evidence))


def _candidate(h, beta, rng, rounds):
    left = list(range(3 * h))
    right = list(range(3 * h + _beta_h(h, beta)))
    if len(right) <= rounds:
        return RMBG(h, beta, [(x, y) for x in left for y in right])
    edges = set()
    for _ in range(rounds):
        order = right[:]
        rng.shuffle(order)
        for position, y in enumerate(order):
            edges.add((left[position % len(left)], y))
    return RMBG(h, beta, edges)


def rmbg_build(h, beta, seed=0, retries=DEFAULT_RETRIES, rounds=DEFAULT_ROUNDS,
               samples=DEFAULT_SAMPLES, exhaustive_threshold=DEFAULT_EXHAUSTIVE_THRESHOLD):
    """ Overlays `rounds` random pairings of the right side onto X and keeps
    the first candidate that rmbg_verify accepts.

    Small instances (right side no bigger than `rounds`) are complete
    bipartite. Attempt i draws from a generator seeded with "seed:i".

    Returns:
        SearchResult: witness is an RMBG; UNKNOWN after `retries` + 1 failed attempts.
    """
    if h < 1:
        raise DomainError("h must be at least 1")
    _beta_h(h, beta)
    for attempt in range(retries + 1):
        rng = random.Random("{}:{}".format(seed, attempt))
        graph = _candidate(h, beta, rng, rounds)
        verdict = rmbg_verify(graph, samples, seed, exhaustive_threshold)
        if verdict.verdict is Verdict.PASS:
            return SearchResult.found(graph, attempt + 1, verdict.evidence)
        logger.debug("rmbg attempt %d rejected: %s", attempt, verdict.reason)
    return SearchResult.unknown(retries + 1, "no candidate passed after {} attempts".format(retries + 1))
