"""Ordering search: arrange a set of colours as a rainbow path- or cycle-candidate."""
import logging

from ..exceptions import DomainError
from ..exceptions import IdentityPresentError
from ..exceptions import SumNonzeroError
from ..group import unpack
from .sequence import ColorSequence

# Creates a ClickLogger
logger = logging.getLogger(__name__)


def _search_order(group, pool, placed_limit, meter=None):
    """ Depth-first search over orderings of `pool` keeping prefix sums distinct.

    Places `placed_limit` entries with pairwise distinct prefix sums (the
    empty sum included) in canonical index order and appends whatever is
    left over. Returns the ordering as a list of indices or None.
    """
    add = group.add_index
    order = []
    used = [False] * len(pool)
    seen = {0}

    def extend(current):
        if len(order) == placed_limit:
            return True
        for i, x in enumerate(pool):
            if used[i]:
                continue
            nxt = add(current, x)
            if nxt in seen:
                continue
            if meter is not None:
                meter.tick()
            used[i] = True
            order.append(x)
            seen.add(nxt)
            if extend(nxt):
                return True
            seen.discard(nxt)
            order.pop()
            used[i] = False
        return False

    if not extend(0):
        return None
    return order + [x for i, x in enumerate(pool) if not used[i]]


def order_as_cycle_candidate(elements, group=None, meter=None):
    """ Finds an ordering of a zero-sum set that is a rainbow cycle-candidate.

    Args:
        elements (iterable): distinct Elements, none of them the identity.
        group (GroupSpec): needed only for an empty set.

    Returns:
        ColorSequence: the first ordering found in canonical order, or None
            after exhausting every ordering.

    Raises:
        IdentityPresentError: if the identity is in the set.
        SumNonzeroError: if the set does not sum to the identity.
        DomainError: if the set has fewer than two elements.
    """
    group, pool = unpack(set(elements), group)
    if 0 in pool:
        raise IdentityPresentError("the identity cannot appear in a cycle-candidate")
    if group.sum_indices(pool) != 0:
        raise SumNonzeroError("a cycle-candidate must sum to the identity")
    if len(pool) < 2:
        raise DomainError("cycle-candidates need at least two entries")
    order = _search_order(group, pool, len(pool) - 1, meter)
    if order is None:
        logger.debug("no cycle-candidate ordering of %s in %s", pool, group)
        return None
    return ColorSequence.from_indices(group, order)


def order_as_path_candidate(elements, group=None, meter=None):
    """ Finds an ordering of a set that is a rainbow path-candidate.

    Returns:
        ColorSequence: the first valid ordering in canonical order, or None.

    Raises:
        IdentityPresentError: if the identity is in the set.
    """
    group, pool = unpack(set(elements), group)
    if 0 in pool:
        raise IdentityPresentError("the identity cannot appear in a path-candidate")
    order = _search_order(group, pool, len(pool), meter)
    if order is None:
        return None
    return ColorSequence.from_indices(group, order)
