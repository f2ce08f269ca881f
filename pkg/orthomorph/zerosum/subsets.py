""" Fixed-size subsets with a prescribed sum """
import itertools
import logging
import math

from ..exceptions import DomainError
from ..group import unpack
from ..search import run_search

# Creates a ClickLogger
logger = logging.getLogger(__name__)

# above this many m-subsets the search switches to meet-in-the-middle
BRUTE_FORCE_LIMIT = 200000


def _brute_force(group, pool, m, target, meter):
    for combo in itertools.combinations(pool, m):
        meter.tick()
        if group.sum_indices(combo) == target:
            return combo
    return None


def _meet_in_the_middle(group, pool, m, target, meter):
    half = len(pool) // 2
    left, right = pool[:half], pool[half:]
    for j in range(max(0, m - len(right)), min(m, len(left)) + 1):
        by_sum = {}
        for combo in itertools.combinations(right, m - j):
            meter.tick()
            by_sum.setdefault(group.sum_indices(combo), combo)
        for combo in itertools.combinations(left, j):
            meter.tick()
            need = group.sub_index(target, group.sum_indices(combo))
            if need in by_sum:
                return combo + by_sum[need]
    return None


def subset_with_sum(elements, m, g, budget=None):
    """ Finds an m-subset of `elements` whose sum is g.

    Small instances are enumerated in canonical order, so the returned
    subset is the lexicographically first one; larger ones are split in
    two halves and matched by sum.

    Returns:
        SearchResult: witness is a frozenset of Elements.

    >>> from orthomorph.group import GroupSpec
    >>> z5 = GroupSpec.cyclic(5)
    >>> res = subset_with_sum(z5.elements()[1:], 2, z5.identity)
    >>> sorted(int(e) for e in res.witness)
    [1, 4]
    """
    group, pool = unpack(set(elements), g.group)
    if not 0 <= m <= len(pool):
        raise DomainError("subset size {} outside 0..{}".format(m, len(pool)))
    if math.comb(len(pool), m) <= BRUTE_FORCE_LIMIT:
        strategy = _brute_force
    else:
        strategy = _meet_in_the_middle

    def search(meter):
        found = strategy(group, pool, m, g.index, meter)
        if found is None:
            return None
        return frozenset(group.element(i) for i in found)

    result = run_search(budget, search)
    logger.debug("%s: %d-subset of %d elements summing to %s: %s",
                 strategy.__name__, m, len(pool), g, result.outcome.label)
    return result
