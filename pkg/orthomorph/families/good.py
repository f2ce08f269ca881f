"""
Good families of colour tuples for long cycles.

F is a family of disjoint 4-tuples with a common sum f, each split into
two halves F+ and F-; S is a family of disjoint z-tuples with a common
sum s. Both families consist of rainbow path-candidates and satisfy
the dissociability and distance-separability conditions that let paths
built from them be glued into cycles of length k.
"""
import collections
import itertools
import logging

from ..exceptions import BudgetExceededError
from ..exceptions import DomainError
from ..exceptions import PreconditionError
from ..group import GroupSpec
from ..search import SearchBudget
from ..search import SearchResult
from ..search import Verdict
from ..sequencing import ColorSequence
from ..sequencing import is_dissociable
from ..sequencing import is_near_dissociable
from ..sequencing import separable_at_distance

# Creates a ClickLogger
logger = logging.getLogger(__name__)

# stand-in for the absolute constant bounding the family size by n / (C k)
FAMILY_CONSTANT = 64


def choose_z_s(k):
    """ Smallest z in 2..5 with k - 4 - z positive and divisible by 4.

    >>> [choose_z_s(k) for k in (10, 11, 12, 13)]
    [2, 3, 4, 5]
    """
    for z in range(2, 6):
        if k - 4 - z > 0 and (k - 4 - z) % 4 == 0:
            return z
    raise PreconditionError("no admissible tuple length for k={} (k must be at least 10)".format(k))


def max_target_count(n, k):
    return n // (FAMILY_CONSTANT * k)


class GoodFamilies(object):
    """ The families F and S together with their parameters f, s, z and q. """

    def __init__(self, group, k, F, S, f, s, z_s, q):
        self.group = group
        self.k = k
        self.F = list(F)
        self.S = list(S)
        self.f = f
        self.s = s
        self.z_s = z_s
        self.q = q

    @property
    def F_plus(self):
        return [ColorSequence(t.entries[:2], self.group) for t in self.F]

    @property
    def F_minus(self):
        return [ColorSequence(t.entries[2:], self.group) for t in self.F]

    def to_dict(self):
        return {
            "group": str(self.group),
            "k": self.k,
            "f": self.f.index,
            "s": self.s.index,
            "z_S": self.z_s,
            "q": self.q.index,
            "F": [list(t.indices) for t in self.F],
            "S": [list(t.indices) for t in self.S],
        }

    @classmethod
    def from_dict(cls, data):
        group = GroupSpec.parse(data["group"])
        return cls(group, int(data["k"]),
                   [ColorSequence.from_indices(group, t) for t in data["F"]],
                   [ColorSequence.from_indices(group, t) for t in data["S"]],
                   group.element(data["f"]), group.element(data["s"]),
                   int(data["z_S"]), group.element(data["q"]))

    def __repr__(self):
        return 'GoodFamilies({}, k={}, |F|={}, |S|={})'.format(
            self.group, self.k, len(self.F), len(self.S))


class FamilyReport(collections.OrderedDict):
    """ Check name -> bool, in the order the checks were run. """

    @property
    def verdict(self):
        return Verdict.PASS if all(self.values()) else Verdict.FAIL

    @property
    def passed(self):
        return all(self.values())

    def failures(self):
        return [name for name, ok in self.items() if not ok]


def _all_rainbow_paths(tuples):
    return all(t.is_rainbow() and t.is_path_candidate() for t in tuples)


def check_good_families(fam, g, k):
    """ Checks disjointness and the six defining properties of good families.

    The check never trusts the stored parameters: q is recomputed from f,
    s and z and compared.

    Returns:
        FamilyReport
    """
    report = FamilyReport()
    elements = [e.index for t in fam.F + fam.S for e in t]
    report['disjoint'] = (fam.group == g and len(elements) == len(set(elements)))

    report['property_1'] = all(len(t) == 4 and t.total == fam.f for t in fam.F)

    report['property_2'] = (fam.z_s in (2, 3, 4, 5) and
                            all(len(t) == fam.z_s and t.total == fam.s for t in fam.S))

    try:
        near = is_near_dissociable(fam.S)
    except DomainError:
        near = False
    report['property_3'] = _all_rainbow_paths(fam.S) and near

    excess = k - 4 - fam.z_s
    if excess >= 0 and excess % 4 == 0:
        q = -(excess // 4 * fam.f) - fam.s
        report['property_4'] = q == fam.q and not q.is_identity
    else:
        q = fam.q
        report['property_4'] = False

    try:
        halves = (_all_rainbow_paths(fam.F_plus) and _all_rainbow_paths(fam.F_minus) and
                  is_dissociable(fam.F_plus) and is_dissociable(fam.F_minus))
        whole = _all_rainbow_paths(fam.F) and is_near_dissociable(fam.F)
    except DomainError:
        halves = whole = False
    report['property_5'] = halves and whole and all(len(t) == 4 for t in fam.F)

    distances = [q + m * fam.f for m in range(k + 1)]
    report['property_6'] = all(separable_at_distance(plus, minus, d)
                               for plus, minus in zip(fam.F_plus, fam.F_minus)
                               for d in distances)
    logger.debug("good families check on %s: %s", g, dict(report))
    return report


class _Stuck(Exception):
    """ The greedy extension found no admissible candidate """


class _FamilyBuilder(object):
    """ Greedy construction of F and S; every choice is the first admissible
    candidate in canonical index order. """

    def __init__(self, group, k, meter):
        self.group = group
        self.k = k
        self.meter = meter
        self.used = set()

    def _scan(self, length, total, accept):
        """ First index tuple of the given length and sum, in lexicographic order,
        that is rainbow, a path-candidate, avoids used elements and passes `accept`. """
        group = self.group
        chosen = []
        sums = [0]

        def extend():
            if len(chosen) == length - 1:
                last = group.sub_index(total, sums[-1])
                if last in self.used or last in chosen or total in sums:
                    return None
                candidate = tuple(chosen) + (last,)
                return candidate if accept(candidate) else None
            for x in range(1, group.order):
                if x in self.used or x in chosen:
                    continue
                nxt = group.add_index(sums[-1], x)
                if nxt in sums or nxt == total:
                    continue
                self.meter.tick()
                chosen.append(x)
                sums.append(nxt)
                found = extend()
                if found is not None:
                    return found
                chosen.pop()
                sums.pop()
            return None
        return extend()

    def _sequence(self, indices):
        return ColorSequence.from_indices(self.group, indices)

    def choose_s(self, f, r):
        group = self.group
        for s in range(1, group.order):
            q = group.sub_index(group.neg_index(group.mul_index(r, f)), s)
            ok = True
            for m in range(self.k + 2):
                shift = group.mul_index(m, f)
                if (group.add_index(q, shift) == 0 or
                        f == group.add_index(q, shift) or
                        f == group.add_index(group.neg_index(q), shift)):
                    ok = False
                    break
            if ok:
                return s, q
        raise _Stuck("choosing s")

    def build_S(self, z, s, count):
        family = []
        blocked = set()
        for i in range(count):
            def accept(candidate):
                heads = set(self._sequence(candidate).prefix_sum_indices()[1:z])
                return not blocked.intersection(heads)
            found = self._scan(z, s, accept)
            if found is None:
                raise _Stuck("extending S at {} of {}".format(i + 1, count))
            seq = self._sequence(found)
            blocked.update(seq.prefix_sum_indices()[1:z])
            self.used.update(found)
            family.append(seq)
        return family

    def build_F(self, f, q, count):
        group = self.group
        family = []
        distances = [group.element(group.add_index(q, group.mul_index(m, f)))
                     for m in range(self.k + 1)]
        excluded = {d.index for d in distances} | {group.neg_index(d.index) for d in distances}
        for i in range(count):
            subset_sums = set()
            for t in family:
                for size in range(1, 5):
                    for combo in itertools.combinations(t.indices, size):
                        subset_sums.add(group.sum_indices(combo))
            signed_sums = subset_sums | {group.neg_index(x) for x in subset_sums}
            new = None
            for f_plus in range(1, group.order):
                f_minus = group.sub_index(f, f_plus)
                if f_minus == 0 or f_plus in subset_sums or f_minus in subset_sums:
                    continue
                new = self._extend_F(family, f_plus, f_minus, excluded, signed_sums, distances)
                if new is not None:
                    break
            if new is None:
                raise _Stuck("extending F at {} of {}".format(i + 1, count))
            self.used.update(new.indices)
            family.append(new)
        return family

    def _extend_F(self, family, f_plus, f_minus, excluded, signed_sums, distances):
        group = self.group
        plus_family = [ColorSequence(t.entries[:2], group) for t in family]
        minus_family = [ColorSequence(t.entries[2:], group) for t in family]

        def accept_plus(candidate):
            a, b = candidate
            if a in signed_sums or b in signed_sums:
                return False
            if group.add_index(a, f_minus) in excluded or group.add_index(f_plus, f_minus) in excluded:
                return False
            return is_dissociable(plus_family + [self._sequence(candidate)])

        plus = self._scan(2, f_plus, accept_plus)
        if plus is None:
            return None
        plus_seq = self._sequence(plus)

        def accept_minus(candidate):
            if set(candidate).intersection(plus):
                return False
            minus_seq = self._sequence(candidate)
            if not all(separable_at_distance(plus_seq, minus_seq, d) for d in distances):
                return False
            whole = self._sequence(plus + candidate)
            if not (whole.is_rainbow() and whole.is_path_candidate()):
                return False
            return (is_dissociable(minus_family + [minus_seq]) and
                    is_near_dissociable(family + [whole]))

        minus = self._scan(2, f_minus, accept_minus)
        if minus is None:
            return None
        return self._sequence(plus + minus)


def build_good_families(g, k, target_count, seed=0, budget=None):
    """ Greedily builds good families F and S with `target_count` tuples each.

    The construction picks z, then f (the element with index 1), then the
    first s keeping every q + m f nonzero, extends S and finally extends F
    one 4-tuple at a time. The seed is accepted for interface stability;
    the scan order is canonical so the result does not depend on it.

    Returns:
        SearchResult: witness is a GoodFamilies; UNKNOWN names the stage
            where the greedy extension got stuck.

    Raises:
        PreconditionError: if k < 10 or target_count exceeds n / (64 k).
    """
    if k < 10:
        raise PreconditionError("good families need k >= 10, got {}".format(k))
    limit = max_target_count(g.order, k)
    if not 0 <= target_count <= limit:
        raise PreconditionError("target count {} outside 0..{} for n={}, k={}".format(
            target_count, limit, g.order, k))
    z = choose_z_s(k)
    r = (k - 4 - z) // 4
    f = 1
    meter = (budget or SearchBudget()).meter()
    builder = _FamilyBuilder(g, k, meter)
    try:
        s, q = builder.choose_s(f, r)
        S = builder.build_S(z, s, target_count)
        F = builder.build_F(f, q, target_count)
    except _Stuck as e:
        logger.debug("good families on %s stuck: %s", g, e)
        return SearchResult.unknown(meter.nodes, "stuck {}".format(e))
    except BudgetExceededError as e:
        return SearchResult.unknown(meter.nodes, str(e))
    families = GoodFamilies(g, k, F, S, g.element(f), g.element(s), z, g.element(q))
    return SearchResult.found(families, meter.nodes)
