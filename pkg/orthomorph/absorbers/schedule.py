"""
Column selection for chained triple absorbers.

Column 1 holds {a_1, d_l, d_1}, column j (1 < j < l) holds
{a_j, d_(j-1), d_j} and column l holds {a_l, d_(l-1)}. Once one column is
deleted, every other column picks one d so that d_1, ..., d_(l-1) are each
picked exactly once.
"""
import collections

from ..exceptions import DomainError


def _check(l, deleted):
    if l < 2:
        raise DomainError("at least two columns are required, got l={}".format(l))
    if not 1 <= deleted <= l:
        raise DomainError("deleted column {} outside 1..{}".format(deleted, l))


def selection_sets(l):
    """ Column number -> the labels ("a3", "d2", ...) in that column.

    >>> sorted(selection_sets(3)[1])
    ['a1', 'd1', 'd3']
    """
    if l < 2:
        raise DomainError("at least two columns are required, got l={}".format(l))
    sets = collections.OrderedDict()
    sets[1] = frozenset(['a1', 'd{}'.format(l), 'd1'])
    for j in range(2, l):
        sets[j] = frozenset(['a{}'.format(j), 'd{}'.format(j - 1), 'd{}'.format(j)])
    sets[l] = frozenset(['a{}'.format(l), 'd{}'.format(l - 1)])
    return sets


def selection_schedule(l, deleted):
    """ Column -> index j of the chosen d_j.

    Columns left of the deleted one take their bottom entry d_j, columns to
    its right take the middle entry d_(j-1).

    >>> selection_schedule(5, 2)
    {1: 1, 3: 2, 4: 3, 5: 4}
    """
    _check(l, deleted)
    schedule = {}
    for column in range(1, l + 1):
        if column < deleted:
            schedule[column] = column
        elif column > deleted:
            schedule[column] = column - 1
    return schedule


def schedule_is_valid(l, deleted, schedule):
    """ Every remaining column picks a d from its own set and each of d_1..d_(l-1) is picked once. """
    _check(l, deleted)
    sets = selection_sets(l)
    if set(schedule) != set(sets) - {deleted}:
        return False
    for column, j in schedule.items():
        if 'd{}'.format(j) not in sets[column]:
            return False
    return sorted(schedule.values()) == list(range(1, l))
