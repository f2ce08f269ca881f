"""
Orthomorphisms, cycle types and the searches that produce them.

An orthomorphism of G is a permutation phi such that g -> phi(g) - g is
also a permutation. Permutations are stored as tuples of canonical
indices: perm[i] is the index of phi(element i).

Searches that prescribe a cycle type work on the coloured digraph on
G minus the identity: a rainbow cycle factor there becomes phi by sending
every vertex to its successor on its cycle and fixing the identity.
"""
import collections
import logging
import re

from ..exceptions import DomainError
from ..exceptions import DivisibilityError
from ..exceptions import OrthomorphError
from ..group import Element
from ..group import hall_paige
from ..rainbow import ColoredDigraphView
from ..rainbow import cycle_factor
from ..search import Outcome
from ..search import SearchResult
from ..search import run_search
from ..zerosum import tannenbaum_partition

# Creates a ClickLogger
logger = logging.getLogger(__name__)

_TERM_RE = re.compile(r'^(\d+)(?:\^(\d+))?$')


class CycleType(object):
    """ Multiset of cycle lengths of a permutation, written like "1+3^2".

    >>> str(CycleType.parse('3^2 + 1'))
    '1+3^2'
    >>> CycleType.parse('1+2+4').fixed_points
    1
    """

    def __init__(self, lengths):
        lengths = collections.Counter({int(length): int(c) for length, c in dict(lengths).items() if c})
        if any(length < 1 for length in lengths) or any(c < 0 for c in lengths.values()):
            raise DomainError("cycle lengths and counts must be positive: {}".format(dict(lengths)))
        self._lengths = lengths

    @classmethod
    def parse(cls, text):
        """ Parses "1+3^2" (length, optionally ^count, joined by '+').

        Raises:
            DomainError: for malformed text.
        """
        if not isinstance(text, str) or not text.strip():
            raise DomainError("empty cycle type")
        lengths = collections.Counter()
        for term in text.replace(' ', '').split('+'):
            match = _TERM_RE.match(term)
            if not match:
                raise DomainError("cannot parse cycle type '{}'".format(text))
            length, count = int(match.group(1)), int(match.group(2) or 1)
            if length < 1 or count < 1:
                raise DomainError("cannot parse cycle type '{}'".format(text))
            lengths[length] += count
        return cls(lengths)

    @classmethod
    def fgt(cls, n, k):
        """ One fixed point and (n - 1) / k cycles of length k. """
        if k < 2:
            raise DomainError("cycle length must be at least 2, got k={}".format(k))
        if (n - 1) % k:
            raise DivisibilityError("{} does not divide n - 1 = {}".format(k, n - 1))
        lengths = {1: 1}
        if n > 1:
            lengths[k] = (n - 1) // k
        return cls(lengths)

    @classmethod
    def of(cls, perm):
        return cycle_type(perm)

    @property
    def lengths(self):
        """ Sorted tuple of all cycle lengths, with repetition """
        return tuple(sorted(self._lengths.elements()))

    @property
    def fixed_points(self):
        return self._lengths.get(1, 0)

    @property
    def order(self):
        """ Number of points permuted """
        return sum(length * c for length, c in self._lengths.items())

    def non_trivial(self):
        """ Counter of the lengths >= 2 """
        return collections.Counter({length: c for length, c in self._lengths.items() if length > 1})

    def __eq__(self, other):
        return isinstance(other, CycleType) and self._lengths == other._lengths

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(tuple(sorted(self._lengths.items())))

    def __str__(self):
        terms = []
        for length in sorted(self._lengths):
            count = self._lengths[length]
            terms.append(str(length) if count == 1 else '{}^{}'.format(length, count))
        return '+'.join(terms)

    def __repr__(self):
        return 'CycleType({!r})'.format(str(self))


class OrthomorphismCheck(collections.namedtuple('OrthomorphismCheck', ['ok', 'reason', 'collision'])):
    """ Outcome of verify: `collision` is a pair of indices that clash, if any. """

    def __bool__(self):
        return self.ok


def _as_indices(perm, group):
    if isinstance(perm, Orthomorphism):
        return perm.perm
    indices = []
    for value in perm:
        if isinstance(value, Element):
            group.check_member(value)
            indices.append(value.index)
        else:
            index = int(value)
            if not 0 <= index < group.order:
                raise DomainError("image {} outside {}".format(index, group))
            indices.append(index)
    if len(indices) != group.order:
        raise DomainError("a map on {} needs {} images, got {}".format(group, group.order, len(indices)))
    return tuple(indices)


def _first_collision(values):
    seen = {}
    for i, v in enumerate(values):
        if v in seen:
            return seen[v], i
        seen[v] = i
    return None


def check_orthomorphism(perm, group):
    """ Checks both bijectivity conditions and names the first clash.

    Args:
        perm (sequence): images as indices or Elements, indexed by canonical index.
        group (GroupSpec): the group.

    Returns:
        OrthomorphismCheck

    Raises:
        DomainError: if perm is not a function on all of the group.
    """
    perm = _as_indices(perm, group)
    collision = _first_collision(perm)
    if collision:
        return OrthomorphismCheck(False, "not a permutation: {} and {} share an image".format(
            *[str(group.element(i)) for i in collision]), collision)
    differences = [group.sub_index(y, x) for x, y in enumerate(perm)]
    collision = _first_collision(differences)
    if collision:
        return OrthomorphismCheck(False, "phi(g) - g repeats at {} and {}".format(
            *[str(group.element(i)) for i in collision]), collision)
    return OrthomorphismCheck(True, '', None)


def verify_orthomorphism(perm, group):
    """ True iff perm and g -> perm(g) - g are both bijections of the group.

    >>> from orthomorph.group import GroupSpec
    >>> verify_orthomorphism([0, 2, 1], GroupSpec.cyclic(3))
    True
    >>> verify_orthomorphism([0, 1, 2], GroupSpec.cyclic(3))
    False
    """
    return check_orthomorphism(perm, group).ok


def cycle_type(perm):
    """ Cycle type of a permutation given as a sequence of indices (or an Orthomorphism).

    Raises:
        DomainError: if perm is not a permutation of range(len(perm)).
    """
    if isinstance(perm, Orthomorphism):
        perm = perm.perm
    perm = [int(p) for p in perm]
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise DomainError("not a permutation of 0..{}".format(n - 1))
    seen = [False] * n
    lengths = collections.Counter()
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        lengths[length] += 1
    return CycleType(lengths)


class Orthomorphism(object):
    """ A map on a group stored by image indices; not necessarily valid until checked. """

    def __init__(self, group, perm):
        self.group = group
        self.perm = _as_indices(perm, group)

    @classmethod
    def from_matching(cls, group, matching):
        """ Builds phi from a rainbow cycle factor of G minus the identity.

        Every vertex goes to its successor on its cycle and the identity is
        fixed, so phi(v) - v is the negated colour of the edge leaving v.
        """
        perm = [None] * group.order
        perm[0] = 0
        for edge in matching:
            cycle = edge.cycle
            for position, v in enumerate(cycle):
                perm[v.index] = cycle[(position + 1) % len(cycle)].index
        if any(p is None for p in perm):
            raise DomainError("the cycles do not cover every non-identity element")
        return cls(group, perm)

    def __call__(self, element):
        self.group.check_member(element)
        return self.group.element(self.perm[element.index])

    def check(self):
        return check_orthomorphism(self.perm, self.group)

    @property
    def is_valid(self):
        return self.check().ok

    def cycle_type(self):
        return cycle_type(self.perm)

    def differences(self):
        """ The map g -> phi(g) - g as a tuple of indices; a complete mapping when phi is valid """
        return tuple(self.group.sub_index(y, x) for x, y in enumerate(self.perm))

    def to_dict(self):
        return {"group": str(self.group), "perm": list(self.perm), "cycle_type": str(self.cycle_type())}

    def __eq__(self, other):
        return isinstance(other, Orthomorphism) and self.group == other.group and self.perm == other.perm

    def __hash__(self):
        return hash((self.group, self.perm))

    def __repr__(self):
        return 'Orthomorphism({}, {})'.format(self.group, list(self.perm))


def verify_complete_mapping(theta, group):
    """ True iff theta and g -> g + theta(g) are both bijections. """
    theta = _as_indices(theta, group)
    if _first_collision(theta):
        return False
    return _first_collision([group.add_index(x, t) for x, t in enumerate(theta)]) is None


def _checked(group, phi, requested):
    verdict = phi.check()
    if not verdict.ok or phi.cycle_type() != requested:
        # a rainbow cycle factor always converts to a valid orthomorphism
        raise OrthomorphError("internal error: converted map {!r} failed verification ({})".format(
            phi, verdict.reason or 'cycle type {}'.format(phi.cycle_type())))
    return phi


def _realize(group, requested, budget):
    n = group.order
    if n == 1:
        return SearchResult.found(Orthomorphism(group, [0]), 0)

    lengths = requested.non_trivial()
    sizes = sorted(lengths.elements())
    refuter = tannenbaum_partition(group, sizes, budget)
    if refuter.outcome is Outcome.NONEXISTENT:
        return SearchResult.nonexistent(refuter.nodes, "no partition of G\\{{0}} into zero-sum sets of sizes {}".format(
            ','.join(str(s) for s in sizes)))

    view = ColoredDigraphView.full(group, punctured=True)
    result = cycle_factor(view, lengths, budget)
    nodes = refuter.nodes + result.nodes
    if not result.is_found:
        return result._replace(nodes=nodes)
    phi = _checked(group, Orthomorphism.from_matching(group, result.witness), requested)
    return SearchResult.found(phi, nodes)


def find_fgt_orthomorphism(group, k, budget=None):
    """ An orthomorphism fixing the identity whose other cycles all have length k.

    Hall-Paige is checked first, then a zero-sum partition of G minus the
    identity into k-sets is required (every cycle's colours sum to zero),
    and only then is a rainbow C_k-factor searched for.

    Args:
        group (GroupSpec): the group.
        k (int): cycle length, at least 2 and dividing n - 1.
        budget (SearchBudget): search caps.

    Returns:
        SearchResult: witness is an Orthomorphism.

    Raises:
        DomainError: if k < 2.
        DivisibilityError: if k does not divide n - 1.

    >>> from orthomorph.group import GroupSpec
    >>> find_fgt_orthomorphism(GroupSpec.cyclic(3), 2).witness.perm
    (0, 2, 1)
    """
    requested = CycleType.fgt(group.order, k)
    if not hall_paige(group):
        return SearchResult.nonexistent(0, "hall-paige fails: the elements sum to {}".format(
            group.element(group.sum_indices(range(group.order)))))
    result = _realize(group, requested, budget)
    logger.debug("fgt %s k=%d: %s after %d nodes", group, k, result.outcome.label, result.nodes)
    return result


def find_cycle_type_orthomorphism(group, requested, budget=None):
    """ An orthomorphism with the given cycle type.

    Every orthomorphism has exactly one fixed point, and conjugating by a
    translation moves it to the identity without changing the cycle type,
    so searching only maps that fix the identity loses nothing.

    Args:
        group (GroupSpec): the group.
        requested (CycleType or str): the cycle type, e.g. "1+2+4".

    Returns:
        SearchResult: witness is an Orthomorphism.

    Raises:
        DomainError: if the type does not have exactly one fixed point or
            does not permute n points.
    """
    if isinstance(requested, str):
        requested = CycleType.parse(requested)
    if requested.order != group.order:
        raise DomainError("cycle type {} permutes {} points, {} has {}".format(
            requested, requested.order, group, group.order))
    if requested.fixed_points != 1:
        raise DomainError("an orthomorphism has exactly one fixed point, {} has {}".format(
            requested, requested.fixed_points))
    if not hall_paige(group):
        return SearchResult.nonexistent(0, "hall-paige fails")
    result = _realize(group, requested, budget)
    logger.debug("cycle type %s on %s: %s after %d nodes", requested, group, result.outcome.label, result.nodes)
    return result


def _search_orthomorphism(group, meter):
    n = group.order
    sub = group.sub_index
    perm = [0] * n
    # phi(0) = 0: subtracting phi(0) from any orthomorphism gives another one
    used_images = 1
    used_differences = 1

    def extend(x):
        nonlocal used_images, used_differences
        if x == n:
            return True
        for y in range(n):
            if used_images >> y & 1:
                continue
            d = sub(y, x)
            if used_differences >> d & 1:
                continue
            meter.tick()
            perm[x] = y
            used_images |= 1 << y
            used_differences |= 1 << d
            if extend(x + 1):
                return True
            used_images &= ~(1 << y)
            used_differences &= ~(1 << d)
        return False

    if n == 0 or not extend(1):
        return None
    return Orthomorphism(group, perm)


def find_orthomorphism(group, budget=None, prune_sums=True):
    """ Any orthomorphism, normalised so that the identity is fixed.

    With `prune_sums`, a group whose elements do not sum to the identity is
    rejected at once: summing phi(g) - g over G gives zero for any
    bijection phi, but the differences run over all of G.

    Returns:
        SearchResult: witness is an Orthomorphism.
    """
    if prune_sums and not hall_paige(group):
        return SearchResult.nonexistent(0, "the elements do not sum to the identity")
    result = run_search(budget, _search_orthomorphism, group)
    logger.debug("orthomorphism of %s: %s after %d nodes", group, result.outcome.label, result.nodes)
    return result


def find_complete_mapping(group, budget=None, prune_sums=True):
    """ A complete mapping theta, taken as g -> phi(g) - g for an orthomorphism phi.

    Returns:
        SearchResult: witness is a tuple of image indices.
    """
    result = find_orthomorphism(group, budget, prune_sums)
    if not result.is_found:
        return result
    return result._replace(witness=result.witness.differences())
