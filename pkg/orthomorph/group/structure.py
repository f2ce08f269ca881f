"""Group-level predicates: Hall-Paige, image sizes, genericity and classification."""
import collections
import itertools
import logging
import math

import sympy
from sympy.utilities.iterables import partitions

from ..exceptions import DomainError
from .abelian import GroupSpec
from .abelian import unpack

# Creates a ClickLogger
logger = logging.getLogger(__name__)


def element_sum(elements, group=None):
    """ Returns the group sum of a collection of elements.

    Args:
        elements (iterable): Elements of one group.
        group (GroupSpec): needed only for an empty collection.

    Returns:
        Element: the sum; the identity for an empty collection.
    """
    group, indices = unpack(elements, group)
    return group.element(group.sum_indices(indices))


def hall_paige(group):
    """ True iff the sum of all elements of `group` is the identity. """
    return group.sum_indices(range(group.order)) == 0


def mult_image_size(t, group):
    """ Size of the image of x -> t*x.

    Each cyclic factor Z_m contributes m / gcd(m, t).

    Raises:
        DomainError: if t < 1.
    """
    if t < 1:
        raise DomainError("multiplier must be positive, got {}".format(t))
    size = 1
    for m in group.factors:
        size *= m // math.gcd(m, t)
    return size


def check_two_three_lemma(group):
    """ True iff max(|2G|, |3G|)^5 >= n, compared in exact integers. """
    best = max(mult_image_size(2, group), mult_image_size(3, group))
    return best ** 5 >= group.order


def halving_counts(group):
    """ Maps each index g to the number of solutions of 2x = g. """
    counts = collections.Counter(group.mul_index(2, x) for x in range(group.order))
    return [counts.get(g, 0) for g in range(group.order)]


def non_generic_elements(group):
    """ Returns N(G): the identity plus every g with more than sqrt(n) halves.

    The threshold is tested as solutions^2 > n.

    Returns:
        frozenset: Elements of `group`.
    """
    n = group.order
    counts = halving_counts(group)
    indices = {0} | {g for g in range(n) if counts[g] ** 2 > n}
    return frozenset(group.element(g) for g in indices)


def count_heavy_translates(elements, group=None, sign=1):
    """ Counts translates A + g (or A - g for sign=-1) holding many non-generic elements.

    A translate is heavy when more than n^(3/5) of its members are
    non-generic, tested exactly as count^5 > n^3. `elements` is a multiset.

    Returns:
        int: the number of heavy g.
    """
    elements = list(elements)
    group, _ = unpack(elements, group)
    n = group.order
    non_generic = {e.index for e in non_generic_elements(group)}
    heavy = 0
    for g in range(n):
        shift = g if sign > 0 else group.neg_index(g)
        hits = sum(1 for a in elements if group.add_index(a.index, shift) in non_generic)
        if hits ** 5 > n ** 3:
            heavy += 1
    return heavy


def heavy_translates_bound_holds(elements, group=None, sign=1):
    """ Checks #heavy * n^(1/10) <= |A| exactly, as #heavy^10 * n <= |A|^10. """
    elements = list(elements)
    group, _ = unpack(elements, group)
    heavy = count_heavy_translates(elements, group, sign)
    return heavy ** 10 * group.order <= len(elements) ** 10


def primary_decomposition(group):
    """ Sorted list of prime-power cyclic factors isomorphic to `group`. """
    powers = []
    for m in group.factors:
        for p, e in sympy.factorint(m).items():
            powers.append(p ** e)
    return sorted(powers, reverse=True)


def is_isomorphic(g, h):
    """ Abelian groups are isomorphic iff their primary decompositions agree. """
    return primary_decomposition(g) == primary_decomposition(h)


def enumerate_abelian_groups(order):
    """ One GroupSpec per isomorphism class of abelian groups of `order`.

    Classes come from one partition of each prime exponent; each class is
    written in invariant-factor form (Z12 rather than Z4xZ3) and the list is
    sorted by descending factor tuple.

    >>> [str(g) for g in enumerate_abelian_groups(8)]
    ['Z8', 'Z4xZ2', 'Z2xZ2xZ2']
    """
    if order < 1:
        raise DomainError("group order must be positive, got {}".format(order))
    if order == 1:
        return [GroupSpec()]

    per_prime = []
    for p, e in sorted(sympy.factorint(order).items()):
        shapes = []
        for part in partitions(e):
            parts = sorted(itertools.chain.from_iterable(
                [size] * mult for size, mult in part.items()), reverse=True)
            shapes.append([p ** size for size in parts])
        per_prime.append(shapes)

    groups = []
    for combo in itertools.product(*per_prime):
        width = max(len(shape) for shape in combo)
        invariant = []
        for i in range(width):
            factor = 1
            for shape in combo:
                if i < len(shape):
                    factor *= shape[i]
            invariant.append(factor)
        groups.append(GroupSpec(invariant))
    groups.sort(key=lambda g: g.factors, reverse=True)
    return groups
