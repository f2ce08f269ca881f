"""
Words over the free extension of a group by k free variables.

A word is an integer combination of free variables v1, v2, ... plus a
constant group element. Projections substitute a group element for every
free variable and fix the constants.
"""
import itertools
import logging
import re

from ..exceptions import BudgetExceededError
from ..exceptions import DomainError
from ..exceptions import GroupMismatchError
from ..exceptions import PreconditionError

# Creates a ClickLogger
logger = logging.getLogger(__name__)

# largest n^k that the counting helpers are willing to enumerate
ENUMERATION_LIMIT = 10 ** 7

_TERM_RE = re.compile(r'([+-]?)(?:(\d+)\*?)?v(\d+)|([+-]?)\(([^)]*)\)')


class Word(object):
    """ z_1*v_1 + ... + z_t*v_t + g, with no zero coefficient stored.

    >>> from orthomorph.group import GroupSpec
    >>> w = Word.parse('2*v1 - v3 + (1)', GroupSpec.cyclic(5))
    >>> w.coefficient(3), int(w.constant)
    (-1, 1)
    """

    def __init__(self, group, coeffs=None, constant=0):
        self.group = group
        items = {}
        for var, z in (coeffs or {}).items():
            var, z = int(var), int(z)
            if var < 1:
                raise DomainError("free variables are numbered from 1, got v{}".format(var))
            if z:
                items[var] = z
        self._coeffs = tuple(sorted(items.items()))
        self._constant = group.element(constant).index

    @classmethod
    def variable(cls, group, var, coefficient=1):
        return cls(group, {var: coefficient})

    @classmethod
    def const(cls, group, value):
        return cls(group, {}, value)

    @classmethod
    def parse(cls, text, group):
        """ Parses "2*v1 - v3 + (1)"; constants are indices or coordinates "(1,0)". """
        compact = (text or '').replace(' ', '')
        if not compact:
            raise DomainError("empty word")
        coeffs = {}
        constant = 0
        position = 0
        for match in _TERM_RE.finditer(compact):
            if match.start() != position or (position and not compact[position] in '+-'):
                raise DomainError("cannot parse word '{}'".format(text))
            position = match.end()
            if match.group(3) is not None:
                sign = -1 if match.group(1) == '-' else 1
                z = sign * int(match.group(2) or 1)
                var = int(match.group(3))
                coeffs[var] = coeffs.get(var, 0) + z
            else:
                sign = -1 if match.group(4) == '-' else 1
                body = match.group(5)
                if ',' in body:
                    value = group.encode(int(tok) for tok in body.split(','))
                else:
                    value = group.element(int(body)).index
                constant = group.add_index(constant, group.mul_index(sign, value))
        if position != len(compact):
            raise DomainError("cannot parse word '{}'".format(text))
        return cls(group, coeffs, constant)

    @property
    def coeffs(self):
        return dict(self._coeffs)

    @property
    def constant(self):
        return self.group.element(self._constant)

    @property
    def variables(self):
        return tuple(var for var, _ in self._coeffs)

    def coefficient(self, var):
        return dict(self._coeffs).get(var, 0)

    @property
    def is_constant(self):
        return not self._coeffs

    @property
    def is_linear(self):
        return bool(self._coeffs) and all(abs(z) == 1 for _, z in self._coeffs)

    def is_linear_in(self, var):
        return abs(self.coefficient(var)) == 1

    def linear_variables(self):
        return tuple(var for var, z in self._coeffs if abs(z) == 1)

    def _check(self, other):
        if not isinstance(other, Word):
            raise DomainError("{!r} is not a word".format(other))
        if other.group != self.group:
            raise GroupMismatchError("words over {} and {}".format(self.group, other.group))

    def __add__(self, other):
        self._check(other)
        coeffs = self.coeffs
        for var, z in other._coeffs:
            coeffs[var] = coeffs.get(var, 0) + z
        return Word(self.group, coeffs, self.group.add_index(self._constant, other._constant))

    def __neg__(self):
        return Word(self.group, {var: -z for var, z in self._coeffs},
                    self.group.neg_index(self._constant))

    def __sub__(self, other):
        self._check(other)
        return self + (-other)

    def __rmul__(self, t):
        if not isinstance(t, int):
            return NotImplemented
        return Word(self.group, {var: t * z for var, z in self._coeffs},
                    self.group.mul_index(t, self._constant))

    def __eq__(self, other):
        return (isinstance(other, Word) and self.group == other.group and
                self._coeffs == other._coeffs and self._constant == other._constant)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.group, self._coeffs, self._constant))

    def __str__(self):
        parts = []
        for var, z in self._coeffs:
            magnitude = '' if abs(z) == 1 else '{}*'.format(abs(z))
            term = '{}v{}'.format(magnitude, var)
            if not parts:
                parts.append(term if z > 0 else '-' + term)
            else:
                parts.append(('+ ' if z > 0 else '- ') + term)
        if self._constant or not parts:
            const = str(self.constant)
            if not const.startswith('('):
                const = '({})'.format(const)
            parts.append(const if not parts else '+ ' + const)
        return ' '.join(parts)

    def __repr__(self):
        return 'Word({!r})'.format(str(self))

    def linear_form(self):
        """ (variables, coefficients, constant index) for fast evaluation. """
        return (tuple(var for var, _ in self._coeffs),
                tuple(z for _, z in self._coeffs), self._constant)


class Projection(object):
    """ A homomorphism fixing G, given by one group element per free variable.

    Args:
        group (GroupSpec): the target group.
        assignment (dict): variable id -> Element (or index).
    """

    def __init__(self, group, assignment):
        self.group = group
        self.assignment = {int(var): group.element(value) for var, value in assignment.items()}

    @classmethod
    def from_values(cls, group, values):
        """ Assigns values[i] (an index) to v_{i+1}. """
        return cls(group, {i + 1: value for i, value in enumerate(values)})

    def __call__(self, word):
        return self.apply(word)

    def apply(self, word):
        if word.group != self.group:
            raise GroupMismatchError("word over {} projected into {}".format(word.group, self.group))
        total = word._constant
        for var, z in word._coeffs:
            if var not in self.assignment:
                raise DomainError("projection does not assign v{}".format(var))
            total = self.group.add_index(total, self.group.mul_index(z, self.assignment[var].index))
        return self.group.element(total)

    def separates(self, words):
        """ True iff every separable pair of `words` gets distinct images. """
        words = list(dict.fromkeys(words))
        images = [self.apply(w).index for w in words]
        for i, j in itertools.combinations(range(len(words)), 2):
            if images[i] == images[j] and word_is_separable_pair(words[i], words[j], self.group):
                return False
        return True

    def to_dict(self):
        return {'v{}'.format(var): e.index for var, e in sorted(self.assignment.items())}

    def __eq__(self, other):
        return (isinstance(other, Projection) and self.group == other.group and
                self.assignment == other.assignment)

    def __hash__(self):
        return hash((self.group, tuple(sorted((v, e.index) for v, e in self.assignment.items()))))

    def __repr__(self):
        return 'Projection({}, {})'.format(self.group, self.to_dict())


def word_is_separable_pair(w, w2, g=None):
    """ Which separability condition holds for (w, w2), checked in the order a, b, c.

    Returns:
        str: 'a', 'b', 'c', or None if the words are not separable.
    """
    diff = w2 - w
    coeffs = diff.coeffs
    if any(abs(z) == 1 for z in coeffs.values()):
        return 'a'
    if not coeffs and diff._constant != 0:
        return 'b'
    if len(coeffs) == 2 and sorted(coeffs.values()) in ([-2, 3], [-3, 2]):
        return 'c'
    return None


def is_pairwise_separable(words, g=None):
    words = list(dict.fromkeys(words))
    return all(word_is_separable_pair(a, b, g) is not None
               for a, b in itertools.combinations(words, 2))


def _evaluator(group, word, variables):
    """ Compiles a word into a function of a value tuple indexed like `variables`. """
    position = {var: i for i, var in enumerate(variables)}
    vars_, zs, constant = word.linear_form()
    for var in vars_:
        if var not in position:
            raise DomainError("v{} is outside the variables in scope".format(var))
    slots = tuple(position[var] for var in vars_)
    add, mul = group.add_index, group.mul_index

    def evaluate(values):
        total = constant
        for slot, z in zip(slots, zs):
            total = add(total, mul(z, values[slot]))
        return total
    return evaluate


def _check_enumerable(g, k):
    if k < 0:
        raise DomainError("number of free variables must be non-negative")
    if g.order ** k > ENUMERATION_LIMIT:
        raise BudgetExceededError("{}^{} projections exceed the enumeration limit of {}".format(
            g.order, k, ENUMERATION_LIMIT))


def _assignments(g, k):
    return itertools.product(range(g.order), repeat=k)


def enumerate_projections(g, k):
    """ Yields all n^k projections over v1..vk in canonical order. """
    _check_enumerable(g, k)
    for values in _assignments(g, k):
        yield Projection.from_values(g, values)


def count_projections_fixing(w, target, g, k):
    """ Number of projections over v1..vk sending w to target (n^(k-1) when w is linear somewhere).

    Raises:
        PreconditionError: if w is not linear in any variable.
        BudgetExceededError: if n^k exceeds ENUMERATION_LIMIT.
    """
    if not w.linear_variables():
        raise PreconditionError("{} is not linear in any free variable".format(w))
    g.check_member(target)
    _check_enumerable(g, k)
    evaluate = _evaluator(g, w, range(1, k + 1))
    return sum(1 for values in _assignments(g, k) if evaluate(values) == target.index)


def count_projections_hitting(words, targets, g, k):
    """ Number of projections sending at least one of `words` into `targets`. """
    _check_enumerable(g, k)
    targets = {t.index for t in targets}
    evaluators = [_evaluator(g, w, range(1, k + 1)) for w in dict.fromkeys(words)]
    return sum(1 for values in _assignments(g, k)
               if any(evaluate(values) in targets for evaluate in evaluators))


def count_non_separating_projections(words, g, k):
    """ Number of projections that merge at least one separable pair of `words`.

    Raises:
        DomainError: if more than 1000 words are given.
    """
    words = list(dict.fromkeys(words))
    if len(words) > 1000:
        raise DomainError("at most 1000 words are supported, got {}".format(len(words)))
    _check_enumerable(g, k)
    evaluators = [_evaluator(g, w, range(1, k + 1)) for w in words]
    pairs = [(i, j) for i, j in itertools.combinations(range(len(words)), 2)
             if word_is_separable_pair(words[i], words[j], g) is not None]
    count = 0
    for values in _assignments(g, k):
        images = [evaluate(values) for evaluate in evaluators]
        if any(images[i] == images[j] for i, j in pairs):
            count += 1
    logger.debug("%d of %d projections fail to separate %d words", count, g.order ** k, len(words))
    return count


def hitting_bound_holds(count, num_words, num_targets, n, k):
    """ count <= |S| |U| n^(k-1) """
    return count * n <= num_words * num_targets * n ** k


def non_separating_bound_holds(count, num_words, n, k):
    """ count <= |S|^2 n^(k-1/5), compared exactly as count^5 n <= (|S|^2 n^k)^5 """
    return count ** 5 * n <= (num_words ** 2 * n ** k) ** 5


def disjoint_separating_projections(words, g, k):
    """ Greedy maximal list of separating projections with pairwise disjoint images.

    Projections are scanned in canonical order; each separating projection
    whose image of `words` avoids every image taken so far is kept.

    Returns:
        list: Projection objects.
    """
    words = list(dict.fromkeys(words))
    _check_enumerable(g, k)
    evaluators = [_evaluator(g, w, range(1, k + 1)) for w in words]
    pairs = [(i, j) for i, j in itertools.combinations(range(len(words)), 2)
             if word_is_separable_pair(words[i], words[j], g) is not None]
    taken = set()
    chosen = []
    for values in _assignments(g, k):
        images = [evaluate(values) for evaluate in evaluators]
        if any(images[i] == images[j] for i, j in pairs):
            continue
        if taken.intersection(images):
            continue
        taken.update(images)
        chosen.append(Projection.from_values(g, values))
    return chosen
