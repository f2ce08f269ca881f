"""
Colour sequences as walks in the Cayley digraph.

An edge (a, b) has colour a - b, so following colours c_1, c_2, ... out of v
visits v, v - c_1, v - c_1 - c_2, ... ; a sequence is a path-candidate when
those walks never revisit a vertex.
"""
import re

from ..exceptions import DomainError
from ..group import GroupSpec

_SEQUENCE_RE = re.compile(r'^\s*([^:\[]+)\s*:\s*\[([^\]]*)\]\s*$')


class ColorSequence(object):
    """ An ordered tuple of group elements with prefix-sum queries.

    Args:
        entries (iterable): Elements of one group.
        group (GroupSpec): required when `entries` is empty.
    """

    def __init__(self, entries, group=None):
        entries = tuple(entries)
        if group is None:
            if not entries:
                raise DomainError("an empty sequence needs an explicit group")
            group = entries[0].group
        for e in entries:
            group.check_member(e)
        self.group = group
        self.entries = entries
        self._sums = None

    @classmethod
    def from_indices(cls, group, indices):
        return cls([group.element(i) for i in indices], group)

    @classmethod
    def parse(cls, text):
        """ Parses "Z7:[1,2,4]" (group spec, then canonical indices). """
        match = _SEQUENCE_RE.match(text or '')
        if not match:
            raise DomainError("cannot parse sequence '{}'".format(text))
        group = GroupSpec.parse(match.group(1))
        body = match.group(2).strip()
        indices = [int(tok) for tok in body.split(',')] if body else []
        return cls.from_indices(group, indices)

    @property
    def indices(self):
        return tuple(e.index for e in self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, item):
        return self.entries[item]

    def __eq__(self, other):
        return (isinstance(other, ColorSequence) and self.group == other.group and
                self.indices == other.indices)

    def __hash__(self):
        return hash((self.group, self.indices))

    def __str__(self):
        return '{}:[{}]'.format(self.group, ','.join(str(i) for i in self.indices))

    def __repr__(self):
        return 'ColorSequence({!r})'.format(str(self))

    def prefix_sum_indices(self):
        """ Indices of the k+1 prefix sums, starting with the empty sum. """
        if self._sums is None:
            sums = [0]
            for e in self.entries:
                sums.append(self.group.add_index(sums[-1], e.index))
            self._sums = tuple(sums)
        return self._sums

    def partial_sum(self, j):
        """ Sum of the first j entries; partial_sum(0) is the identity. """
        if not 0 <= j <= len(self.entries):
            raise DomainError("prefix length {} outside 0..{}".format(j, len(self.entries)))
        return self.group.element(self.prefix_sum_indices()[j])

    def partial_sums(self):
        return [self.group.element(i) for i in self.prefix_sum_indices()]

    @property
    def total(self):
        return self.partial_sum(len(self.entries))

    def is_rainbow(self):
        return len(set(self.indices)) == len(self.entries)

    def is_path_candidate(self):
        sums = self.prefix_sum_indices()
        return len(set(sums)) == len(sums)

    def is_cycle_candidate(self):
        if len(self.entries) < 2:
            raise DomainError("cycle-candidates need at least two entries")
        sums = self.prefix_sum_indices()
        head = sums[:-1]
        return sums[-1] == 0 and len(set(head)) == len(head)

    def reversed_negated(self):
        """ The colour sequence of the reversed walk. """
        return ColorSequence([-e for e in reversed(self.entries)], self.group)

    def walk_out(self, v):
        self.group.check_member(v)
        return [self.group.element(self.group.sub_index(v.index, s))
                for s in self.prefix_sum_indices()]

    def walk_in(self, v):
        self.group.check_member(v)
        return [self.group.element(self.group.add_index(v.index, s))
                for s in self.prefix_sum_indices()]


def walk_out(v, c):
    """ (v, v - c_1, v - c_1 - c_2, ...) """
    return c.walk_out(v)


def walk_in(v, c):
    """ (v, v + c_1, v + c_1 + c_2, ...) """
    return c.walk_in(v)


def is_path_candidate(c):
    return c.is_path_candidate()


def is_cycle_candidate(c):
    return c.is_cycle_candidate()


def is_rainbow(c):
    return c.is_rainbow()


def _prefix_collision(family, depth):
    family = list(family)
    if not family:
        return False
    lengths = {len(c) for c in family}
    if len(lengths) > 1:
        raise DomainError("sequences of mixed lengths {}".format(sorted(lengths)))
    group = family[0].group
    owner = {}
    for position, c in enumerate(family):
        if c.group != group:
            raise DomainError("sequences from different groups")
        limit = depth(len(c))
        for s in set(c.prefix_sum_indices()[1:limit + 1]):
            if owner.setdefault(s, position) != position:
                return True
    return False


def is_dissociable(family):
    """ True iff no two sequences share a non-empty prefix sum. """
    return not _prefix_collision(family, lambda k: k)


def is_near_dissociable(family):
    """ Same as is_dissociable but only over prefixes of length at most k-1. """
    return not _prefix_collision(family, lambda k: k - 1)


def separable_at_distance(c, b, d):
    """ True iff every mixed prefix sum of c and b avoids {d, -d}.

    Only non-empty prefixes of both sequences are combined.
    """
    group = c.group
    if b.group != group:
        raise DomainError("sequences from different groups")
    group.check_member(d)
    excluded = {d.index, group.neg_index(d.index)}
    right = set(b.prefix_sum_indices()[1:])
    for s in set(c.prefix_sum_indices()[1:]):
        for t in right:
            if group.add_index(s, t) in excluded:
                return False
    return True
