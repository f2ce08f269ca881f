""" Counting k-tuples with a fixed nonzero sum that are rainbow path-candidates """
import itertools
import logging

from ..exceptions import BudgetExceededError
from ..exceptions import DomainError
from ..exceptions import PreconditionError

# Creates a ClickLogger
logger = logging.getLogger(__name__)

ENUMERATION_LIMIT = 10 ** 7


def is_good_tuple(group, entries, avoid=frozenset()):
    """ True iff the index tuple is rainbow, a path-candidate and avoids `avoid`. """
    if len(set(entries)) != len(entries) or avoid.intersection(entries):
        return False
    seen = {0}
    total = 0
    for e in entries:
        total = group.add_index(total, e)
        if total in seen:
            return False
        seen.add(total)
    return True


def count_good_tuples(g, k, s, avoid=()):
    """ Counts k-tuples summing to s that are rainbow path-candidates disjoint from `avoid`.

    All n^(k-1) tuples with sum s are enumerated (the last entry is forced).

    Raises:
        PreconditionError: if s is the identity.
        DomainError: if k < 2.
        BudgetExceededError: if n^(k-1) exceeds ENUMERATION_LIMIT.
    """
    g.check_member(s)
    if k < 2:
        raise DomainError("tuples need at least two entries, got k={}".format(k))
    if s.is_identity:
        raise PreconditionError("the tuple sum must be nonzero")
    if g.order ** (k - 1) > ENUMERATION_LIMIT:
        raise BudgetExceededError("{}^{} tuples exceed the enumeration limit".format(g.order, k - 1))
    avoid = frozenset(e.index for e in avoid)
    count = 0
    for head in itertools.product(range(g.order), repeat=k - 1):
        last = g.sub_index(s.index, g.sum_indices(head))
        if is_good_tuple(g, head + (last,), avoid):
            count += 1
    logger.debug("%d good %d-tuples with sum %s in %s", count, k, s, g)
    return count


def good_tuple_bound_holds(count, n, k):
    """ 4 * count >= 3 * n^(k-1), i.e. at most a quarter of the tuples are bad """
    return 4 * count >= 3 * n ** (k - 1)
