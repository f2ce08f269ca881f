"""
Degree statistics of the tripartite hypergraph of solutions to
s1*a + s2*b + s3*c = 0 with a, b, c drawn from three vertex subsets.
"""
import collections
import fractions
import itertools
import logging

from ..exceptions import DomainError
from ..search import Verdict

# Creates a ClickLogger
logger = logging.getLogger(__name__)


class TypicalityReport(collections.namedtuple('TypicalityReport', [
        'part_sizes', 'min_degree', 'max_degree', 'min_pair_degree', 'max_pair_degree',
        'verdict'])):
    """ Extremal degrees of an equation hypergraph; verdict is None unless gamma and p were given. """

    def to_dict(self):
        data = self._asdict()
        data['part_sizes'] = list(self.part_sizes)
        data['verdict'] = None if self.verdict is None else self.verdict.label
        return data


def _popcount(mask):
    return bin(mask).count('1')


def _within(value, centre, gamma):
    return (1 - gamma) * centre <= value <= (1 + gamma) * centre


def typicality_stats(group, signs=(1, 1, 1), parts=None, gamma=None, p=None):
    """ Vertex degrees and same-part pair degrees of an equation hypergraph.

    The pair degree of two vertices u, v of one part into another part is
    the number of vertices there that lie in an edge with u and in an edge
    with v.

    Args:
        group (GroupSpec): the group.
        signs (tuple): the coefficients s1, s2, s3, each +1 or -1.
        parts (tuple): three collections of Elements; all of G each when None.
        gamma, p: when both are given the report carries the verdict of
            (gamma, p, n)-typicality, compared with exact fractions.

    Returns:
        TypicalityReport
    """
    signs = tuple(int(s) for s in signs)
    if len(signs) != 3 or any(s not in (1, -1) for s in signs):
        raise DomainError("signs must be three values from {{+1, -1}}, got {}".format(signs))
    if parts is None:
        parts = [range(group.order)] * 3
    else:
        if len(parts) != 3:
            raise DomainError("exactly three parts are required")
        parts = [sorted({e.index for e in part}) for part in parts]
    members = [set(part) for part in parts]
    add, mul = group.add_index, group.mul_index

    def neighbourhood(x, u, y):
        """ Bitmask of the vertices of part y sharing an edge with u from part x. """
        t = 3 - x - y
        base = mul(signs[x], u)
        mask = 0
        for w in parts[y]:
            third = mul(-signs[t], add(base, mul(signs[y], w)))
            if third in members[t]:
                mask |= 1 << w
        return mask

    degrees = []
    pair_degrees = []
    for x in range(3):
        others = [y for y in range(3) if y != x]
        masks = {y: [neighbourhood(x, u, y) for u in parts[x]] for y in others}
        degrees.extend(_popcount(m) for m in masks[others[0]])
        for y in others:
            for mu, mv in itertools.combinations(masks[y], 2):
                pair_degrees.append(_popcount(mu & mv))

    verdict = None
    if gamma is not None and p is not None:
        gamma, p = fractions.Fraction(gamma), fractions.Fraction(p)
        n = group.order
        typical = (all(_within(len(part), n, gamma) for part in parts) and
                   all(_within(d, p * n, gamma) for d in degrees) and
                   all(_within(d, p * p * n, gamma) for d in pair_degrees))
        verdict = Verdict.PASS if typical else Verdict.FAIL
    report = TypicalityReport(
        tuple(len(part) for part in parts),
        min(degrees, default=None), max(degrees, default=None),
        min(pair_degrees, default=None), max(pair_degrees, default=None),
        verdict)
    logger.debug("typicality of %s with signs %s: %s", group, signs, report)
    return report
