"""
Matchability of a linear system A over a group.

(A, G) is matchable when there are n vectors v in G^m, each with A v = 0,
such that for every coordinate i the i-th entries of the vectors run over
all of G exactly once. A = [[1, -1, -1]] asks for an orthomorphism and
the toroidal n-queens system asks for n non-attacking queens.
"""
import logging

from ..exceptions import DomainError
from ..group import hall_paige
from ..search import SearchResult
from ..search import run_search

# Creates a ClickLogger
logger = logging.getLogger(__name__)


class EquationSystem(object):
    """ An l x m integer matrix, written "1,-1,-1;1,1,-1,0" row by row.

    >>> EquationSystem.parse('1,1,-1,0; 1,-1,0,-1').m
    4
    """

    def __init__(self, rows):
        rows = [tuple(int(a) for a in row) for row in rows]
        if not rows:
            raise DomainError("an equation system needs at least one row")
        m = len(rows[0])
        if m < 1:
            raise DomainError("an equation system needs at least one column")
        if any(len(row) != m for row in rows):
            raise DomainError("rows of unequal length: {}".format([len(r) for r in rows]))
        self.rows = tuple(rows)

    @classmethod
    def parse(cls, text):
        if not isinstance(text, str) or not text.strip():
            raise DomainError("empty matrix")
        try:
            return cls([[int(a) for a in row.split(',')] for row in text.replace(' ', '').split(';') if row])
        except ValueError:
            raise DomainError("cannot parse matrix '{}'".format(text))

    @classmethod
    def hall_paige(cls):
        """ v1 = v2 + v3: matchable iff the group has an orthomorphism """
        return cls([[1, -1, -1]])

    @classmethod
    def queens(cls):
        """ Toroidal n-queens: (t, y, t + y, t - y) """
        return cls([[1, 1, -1, 0], [1, -1, 0, -1]])

    @property
    def m(self):
        return len(self.rows[0])

    def row_sums(self):
        return [sum(row) for row in self.rows]

    def to_list(self):
        return [list(row) for row in self.rows]

    def __eq__(self, other):
        return isinstance(other, EquationSystem) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        return ';'.join(','.join(str(a) for a in row) for row in self.rows)

    def __repr__(self):
        return 'EquationSystem({!r})'.format(str(self))


def columns(vectors, m):
    """ The m coordinate permutations of a witness: columns[i][j] is entry i of vector j """
    return [[v[i] for v in vectors] for i in range(m)]


def matching_violations(system, group, vectors):
    """ Lists what is wrong with a claimed witness; empty when it is valid.

    Args:
        system (EquationSystem): the matrix A.
        group (GroupSpec): the group.
        vectors (list): n tuples of m indices.
    """
    n, m = group.order, system.m
    problems = []
    vectors = [tuple(int(x) for x in v) for v in vectors]
    if len(vectors) != n:
        problems.append("expected {} vectors, got {}".format(n, len(vectors)))
    for j, v in enumerate(vectors):
        if len(v) != m or any(not 0 <= x < n for x in v):
            problems.append("vector {} is not in {}^{}".format(j, group, m))
            return problems
        for r, row in enumerate(system.rows):
            total = group.sum_indices(group.mul_index(a, x) for a, x in zip(row, v))
            if total:
                problems.append("vector {} breaks equation {}".format(j, r))
    for i, column in enumerate(columns(vectors, m)):
        if sorted(column) != list(range(n)):
            problems.append("coordinate {} is not a bijection onto {}".format(i, group))
    return problems


def _search_matching(system, group, meter):
    n, m = group.order, system.m
    rows = system.rows
    times = {a: [group.mul_index(a, x) for x in range(n)] for row in rows for a in row}
    support = [[i for i, a in enumerate(row) if a] for row in rows]
    used = [0] * m
    stack = []
    solution = []

    def assign(vec, i, x):
        vec[i] = x
        used[i] |= 1 << x

    def release(vec, i):
        used[i] &= ~(1 << vec[i])
        vec[i] = None

    def propagate(vec, forced):
        # a row with one open unit coefficient fixes that coordinate
        changed = True
        while changed:
            changed = False
            for r, row in enumerate(rows):
                partial = 0
                open_cols = []
                for i in support[r]:
                    if vec[i] is None:
                        open_cols.append(i)
                    else:
                        partial = group.add_index(partial, times[row[i]][vec[i]])
                if not open_cols:
                    if partial:
                        return False
                elif len(open_cols) == 1 and row[open_cols[0]] in (1, -1):
                    i = open_cols[0]
                    x = group.neg_index(partial) if row[i] == 1 else partial
                    if used[i] >> x & 1:
                        return False
                    assign(vec, i, x)
                    forced.append(i)
                    changed = True
        return True

    def fill(t, vec):
        forced = []
        try:
            if not propagate(vec, forced):
                return False
            open_cols = [i for i in range(m) if vec[i] is None]
            if not open_cols:
                stack.append(tuple(vec))
                if place(t + 1):
                    return True
                stack.pop()
                return False
            i = open_cols[0]
            for x in range(n):
                if used[i] >> x & 1:
                    continue
                meter.tick()
                assign(vec, i, x)
                if fill(t, vec):
                    return True
                release(vec, i)
            return False
        finally:
            if not solution:
                for i in reversed(forced):
                    release(vec, i)

    def place(t):
        # the first coordinate is a bijection, so vector t may be taken to start with t
        if t == n:
            solution.extend(stack)
            return True
        vec = [None] * m
        assign(vec, 0, t)
        if fill(t, vec):
            return True
        release(vec, 0)
        return False

    if not place(0):
        return None
    return tuple(solution)


def matchable(system, group, budget=None, prune_sums=True):
    """ Decides whether (A, G) is matchable.

    Vectors are placed in order of their first coordinate; within a vector
    the first open coordinate is branched on and every equation left with
    a single open +-1 coefficient is solved directly. With `prune_sums`
    the necessary condition (sum of row r) * (sum of G) = 0 is checked
    first for every row.

    Args:
        system (EquationSystem): the matrix A.
        group (GroupSpec): the group.
        budget (SearchBudget): search caps.

    Returns:
        SearchResult: witness is a tuple of n vectors of m indices.

    >>> from orthomorph.group import GroupSpec
    >>> matchable(EquationSystem.hall_paige(), GroupSpec.cyclic(4)).outcome.label
    'nonexistent'
    """
    if isinstance(system, str):
        system = EquationSystem.parse(system)
    if prune_sums and not hall_paige(group):
        total = group.sum_indices(range(group.order))
        for r, s in enumerate(system.row_sums()):
            if group.mul_index(s, total):
                return SearchResult.nonexistent(0, "row {} sums to {}, which does not kill the sum of {}".format(
                    r, s, group))
    result = run_search(budget, _search_matching, system, group)
    logger.debug("matchability of %s over %s: %s after %d nodes",
                 system, group, result.outcome.label, result.nodes)
    return result

