"""
Exact-cover partitioning of element sets into blocks with prescribed sums.

Every public search here is deterministic: blocks are grown from the
smallest uncovered element, block types are tried in ascending order and
block members in canonical index order, so the first partition found is
always the same one.
"""
import collections
import itertools
import logging

from ..exceptions import DivisibilityError
from ..exceptions import DomainError
from ..exceptions import IdentityPresentError
from ..exceptions import PreconditionError
from ..exceptions import SumNonzeroError
from ..group import GroupSpec
from ..group import unpack
from ..search import SearchResult
from ..search import run_search
from ..sequencing import order_as_cycle_candidate
from ..sequencing import order_as_path_candidate

# Creates a ClickLogger
logger = logging.getLogger(__name__)


class Partition(object):
    """ Disjoint blocks of group elements, each with its required sum.

    Args:
        group (GroupSpec): the ambient group.
        blocks (list): lists of element indices.
        targets (list): the required sum (index) of each block.
        ground (iterable): indices the blocks are meant to cover, if known.
    """

    def __init__(self, group, blocks, targets, ground=None):
        self.group = group
        self.blocks = tuple(tuple(sorted(b)) for b in blocks)
        self.targets = tuple(targets)
        self.ground = None if ground is None else frozenset(ground)
        if len(self.targets) != len(self.blocks):
            raise DomainError("one target per block is required")

    def element_blocks(self):
        return [frozenset(self.group.element(i) for i in b) for b in self.blocks]

    def block_sums(self):
        return [self.group.sum_indices(b) for b in self.blocks]

    def violations(self):
        """ Re-checks the partition from scratch.

        Returns:
            list: human readable descriptions of every violated invariant.
        """
        problems = []
        seen = set()
        for position, block in enumerate(self.blocks):
            if len(set(block)) != len(block):
                problems.append("block {} repeats an element".format(position))
            overlap = seen.intersection(block)
            if overlap:
                problems.append("block {} reuses {}".format(position, sorted(overlap)))
            seen.update(block)
            for i in block:
                if not 0 <= i < self.group.order:
                    problems.append("block {} holds {} outside {}".format(position, i, self.group))
        for position, (actual, target) in enumerate(zip(self.block_sums(), self.targets)):
            if actual != target:
                problems.append("block {} sums to {} instead of {}".format(position, actual, target))
        if self.ground is not None and seen != self.ground:
            problems.append("blocks cover {} elements, ground set has {}".format(
                len(seen), len(self.ground)))
        return problems

    def is_valid(self):
        return not self.violations()

    def to_dict(self):
        data = {
            "group": str(self.group),
            "blocks": [list(b) for b in self.blocks],
            "block_sums": list(self.targets),
        }
        if self.ground is not None:
            data["elements"] = sorted(self.ground)
        return data

    @classmethod
    def from_dict(cls, data):
        group = GroupSpec.parse(data["group"])
        return cls(group, data["blocks"], data["block_sums"], data.get("elements"))

    def __repr__(self):
        return 'Partition({}, {})'.format(self.group, [list(b) for b in self.blocks])


def _search_partition(group, ground, block_types, meter, accept=None):
    """ Backtracking exact cover of `ground` by blocks of the given types.

    Args:
        ground (tuple): sorted indices to cover.
        block_types (dict): (size, target index) -> number of blocks.
        accept (callable): optional extra filter on (block, target).

    Returns:
        list: (block, target) pairs, or None.
    """
    remaining = set(ground)
    counts = collections.Counter(block_types)
    chosen = []

    def blocks_through(first, size, target):
        pool = sorted(remaining)
        need_base = group.sub_index(target, first)
        if size == 1:
            if need_base == 0:
                yield (first,)
            return
        for combo in itertools.combinations(pool, size - 2):
            last = group.sub_index(need_base, group.sum_indices(combo))
            if last not in remaining or (combo and last <= combo[-1]):
                continue
            yield (first,) + combo + (last,)

    def solve():
        if not remaining:
            return not any(counts.values())
        first = min(remaining)
        remaining.discard(first)
        for size, target in sorted(t for t, c in counts.items() if c > 0):
            if size - 1 > len(remaining):
                continue
            for block in blocks_through(first, size, target):
                meter.tick()
                if accept is not None and not accept(block, target):
                    continue
                remaining.difference_update(block[1:])
                counts[(size, target)] -= 1
                chosen.append((block, target))
                if solve():
                    return True
                chosen.pop()
                counts[(size, target)] += 1
                remaining.update(block[1:])
        remaining.add(first)
        return False

    if sum(size * c for (size, _), c in counts.items()) != len(ground):
        return None
    if not solve():
        return None
    return list(chosen)


def _partition_result(group, ground, block_types, budget, accept=None):
    def search(meter):
        found = _search_partition(group, ground, block_types, meter, accept)
        if found is None:
            return None
        return Partition(group, [b for b, _ in found], [t for _, t in found], ground)
    result = run_search(budget, search)
    logger.debug("partition of %d elements of %s: %s after %d nodes",
                 len(ground), group, result.outcome.label, result.nodes)
    return result


def zero_sum_equipartition(elements, k, group=None, budget=None):
    """ Partitions a zero-sum, identity-free set into zero-sum blocks of size k.

    Returns:
        SearchResult: witness is a Partition.

    Raises:
        IdentityPresentError, SumNonzeroError, DivisibilityError: on a
            violated precondition.
    """
    group, ground = unpack(set(elements), group)
    if k < 2:
        raise DomainError("block size must be at least 2, got {}".format(k))
    if 0 in ground:
        raise IdentityPresentError("the identity cannot lie in a zero-sum block")
    if group.sum_indices(ground) != 0:
        raise SumNonzeroError("the set sums to {} instead of the identity".format(
            group.element(group.sum_indices(ground))))
    if len(ground) % k:
        raise DivisibilityError("{} does not divide {}".format(k, len(ground)))
    return _partition_result(group, ground, {(k, 0): len(ground) // k}, budget)


def partition_fixed_sum_quads(elements, alpha, group=None, budget=None):
    """ Partitions a set into 4-blocks each summing to alpha.

    Returns:
        SearchResult: witness is a Partition.
    """
    group, ground = unpack(set(elements), group or alpha.group)
    group.check_member(alpha)
    if 0 in ground:
        raise IdentityPresentError("the identity cannot lie in the set")
    if len(ground) % 4:
        raise DivisibilityError("4 does not divide {}".format(len(ground)))
    blocks = len(ground) // 4
    if group.sum_indices(ground) != group.mul_index(blocks, alpha.index):
        raise SumNonzeroError("the set does not sum to {} * {}".format(blocks, alpha))
    return _partition_result(group, ground, {(4, alpha.index): blocks}, budget)


def tannenbaum_partition(group, sizes, budget=None):
    """ Partitions the non-identity elements into zero-sum blocks of the given sizes.

    Raises:
        DomainError: if a size is below 2.
        DivisibilityError: if the sizes do not add up to n - 1.
    """
    sizes = [int(s) for s in sizes]
    if any(s < 2 for s in sizes):
        raise DomainError("block sizes must be at least 2: {}".format(sizes))
    if sum(sizes) != group.order - 1:
        raise DivisibilityError("sizes add up to {}, expected {}".format(sum(sizes), group.order - 1))
    types = collections.Counter((s, 0) for s in sizes)
    return _partition_result(group, tuple(range(1, group.order)), types, budget)


def generalized_tannenbaum_candidates(elements, k, mode='cycle', alpha=None, group=None, budget=None):
    """ Splits a set into k-tuples that are rainbow cycle-candidates (or path-candidates).

    In 'cycle' mode the set must sum to the identity and 3 <= k <= 9; in
    'path' mode k must be 4 and every tuple sums to the nonzero `alpha`.
    Only partitions whose blocks can all be ordered are accepted.

    Returns:
        SearchResult: witness is a list of ColorSequence.
    """
    group, ground = unpack(set(elements), group or (alpha.group if alpha is not None else None))
    if 0 in ground:
        raise IdentityPresentError("the identity cannot lie in the set")
    if k < 2 or len(ground) % k:
        raise DivisibilityError("{} does not divide {}".format(k, len(ground)))

    if mode == 'cycle':
        if not 3 <= k <= 9:
            raise PreconditionError("cycle mode needs 3 <= k <= 9, got {}".format(k))
        if group.sum_indices(ground) != 0:
            raise SumNonzeroError("cycle mode needs a zero-sum set")
        target = 0

        def order(block):
            return order_as_cycle_candidate([group.element(i) for i in block], group)
    elif mode == 'path':
        if k != 4:
            raise PreconditionError("path mode needs k = 4, got {}".format(k))
        if alpha is None or alpha.is_identity:
            raise PreconditionError("path mode needs a nonzero alpha")
        group.check_member(alpha)
        if group.sum_indices(ground) != group.mul_index(len(ground) // 4, alpha.index):
            raise SumNonzeroError("the set does not sum to {} * {}".format(len(ground) // 4, alpha))
        target = alpha.index

        def order(block):
            return order_as_path_candidate([group.element(i) for i in block], group)
    else:
        raise DomainError("unknown mode '{}'".format(mode))

    ordered = {}

    def accept(block, _):
        if block not in ordered:
            ordered[block] = order(block)
        return ordered[block] is not None

    result = _partition_result(group, ground, {(k, target): len(ground) // k}, budget, accept)
    if not result.is_found:
        return result
    sequences = [ordered[block] for block in result.witness.blocks]
    return SearchResult.found(sequences, result.nodes)
