import itertools

import pytest

from orthomorph.exceptions import DomainError
from orthomorph.exceptions import IdentityPresentError
from orthomorph.exceptions import SumNonzeroError
from orthomorph.group import GroupSpec
from orthomorph.group import enumerate_abelian_groups
from orthomorph.search import Outcome
from orthomorph.search import SearchBudget
from orthomorph.search import run_search
from orthomorph.sequencing import ColorSequence
from orthomorph.sequencing import is_cycle_candidate
from orthomorph.sequencing import is_dissociable
from orthomorph.sequencing import is_near_dissociable
from orthomorph.sequencing import is_path_candidate
from orthomorph.sequencing import is_rainbow
from orthomorph.sequencing import order_as_cycle_candidate
from orthomorph.sequencing import order_as_path_candidate
from orthomorph.sequencing import separable_at_distance
from orthomorph.sequencing import walk_in
from orthomorph.sequencing import walk_out


def seq(text):
    return ColorSequence.parse(text)


def test_parse_and_str():
    c = seq('Z7:[1,2,4]')
    assert c.indices == (1, 2, 4)
    assert str(c) == 'Z7:[1,2,4]'
    assert len(seq('Z7:[]')) == 0
    with pytest.raises(DomainError):
        seq('1,2,4')
    with pytest.raises(DomainError):
        ColorSequence([])


def test_walks(z7):
    c = seq('Z7:[1,2,4]')
    assert [e.index for e in walk_out(z7.element(0), c)] == [0, 6, 4, 0]
    assert [e.index for e in walk_in(z7.element(0), c)] == [0, 1, 3, 0]
    assert walk_out(z7.element(5), seq('Z7:[]')) == [z7.element(5)]


def test_partial_sums():
    c = seq('Z7:[1,2,4]')
    assert [e.index for e in c.partial_sums()] == [0, 1, 3, 0]
    assert c.total.is_identity
    with pytest.raises(DomainError):
        c.partial_sum(4)


@pytest.mark.parametrize('text, expected', [
    ('Z7:[1,2]', True), ('Z7:[1,6]', False), ('Z5:[0]', False), ('Z7:[]', True),
])
def test_is_path_candidate(text, expected):
    assert is_path_candidate(seq(text)) is expected


@pytest.mark.parametrize('text, expected', [
    ('Z7:[1,2,4]', True), ('Z7:[1,6,0]', False), ('Z7:[1,2,3]', False), ('Z4:[1,3]', True),
])
def test_is_cycle_candidate(text, expected):
    assert is_cycle_candidate(seq(text)) is expected


def test_cycle_candidate_needs_two_entries():
    with pytest.raises(DomainError):
        is_cycle_candidate(seq('Z7:[0]'))


def test_is_rainbow():
    assert is_rainbow(seq('Z7:[1,2,4]'))
    assert not is_rainbow(seq('Z7:[1,1]'))
    assert is_rainbow(seq('Z7:[]'))


def test_reversed_negated():
    assert seq('Z7:[1,2,4]').reversed_negated().indices == (3, 5, 6)


@pytest.mark.parametrize('indices', [(1, 2, 4), (3, 5, 6)])
def test_order_as_cycle_candidate(z7, indices):
    found = order_as_cycle_candidate([z7.element(i) for i in indices])
    assert sorted(found.indices) == sorted(indices)
    assert found.is_cycle_candidate()
    assert found.is_rainbow()


def test_order_two_cycle():
    z5 = GroupSpec.parse('Z5')
    assert order_as_cycle_candidate([z5.element(1), z5.element(4)]).indices == (1, 4)


def test_order_as_cycle_candidate_preconditions(z7):
    with pytest.raises(IdentityPresentError):
        order_as_cycle_candidate([z7.element(0), z7.element(3), z7.element(4)])
    with pytest.raises(SumNonzeroError):
        order_as_cycle_candidate([z7.element(1), z7.element(2)])


def test_order_as_path_candidate(z7):
    assert order_as_path_candidate([z7.element(1), z7.element(3)]).indices == (1, 3)
    found = order_as_path_candidate([z7.element(i) for i in (1, 3, 5, 6)])
    assert sorted(found.indices) == [1, 3, 5, 6]
    assert found.is_path_candidate()
    with pytest.raises(IdentityPresentError):
        order_as_path_candidate([z7.element(0)])


def test_path_candidate_absent_for_zero_sum_pair():
    z4 = GroupSpec.parse('Z4')
    assert order_as_path_candidate([z4.element(1), z4.element(3)]) is None


def test_every_zero_sum_set_in_small_cyclic_groups_orders():
    # small zero-sum sets without the identity always admit a cycle ordering
    for n in (5, 7, 9):
        g = GroupSpec.cyclic(n)
        for size in (2, 3, 4):
            for subset in itertools.combinations(range(1, n), size):
                if sum(subset) % n:
                    continue
                found = order_as_cycle_candidate([g.element(i) for i in subset])
                assert found is not None and found.is_cycle_candidate(), subset


def test_every_subset_in_groups_up_to_order_thirteen():
    for n in range(2, 14):
        for g in enumerate_abelian_groups(n):
            for size in range(1, min(9, n - 1) + 1):
                for subset in itertools.combinations(range(1, n), size):
                    elements = [g.element(i) for i in subset]
                    if g.sum_indices(subset) == 0:
                        found = order_as_cycle_candidate(elements, g)
                        assert found is not None and found.is_cycle_candidate(), (g, subset)
                    else:
                        found = order_as_path_candidate(elements, g)
                        assert found is not None and found.is_path_candidate(), (g, subset)


def test_ordering_under_budget(z7):
    colors = [z7.element(i) for i in (1, 2, 4)]
    assert run_search(SearchBudget(), order_as_cycle_candidate, colors, z7).outcome is Outcome.FOUND
    tight = run_search(SearchBudget(max_nodes=0), order_as_cycle_candidate, colors, z7)
    assert tight.outcome is Outcome.UNKNOWN
    absent = [GroupSpec.parse('Z4').element(i) for i in (1, 3)]
    assert run_search(None, order_as_path_candidate, absent).outcome is Outcome.NONEXISTENT


def test_dissociable():
    assert not is_dissociable([seq('Z7:[1,2]'), seq('Z7:[3,4]')])
    assert is_near_dissociable([seq('Z7:[1,2]'), seq('Z7:[3,4]')])
    assert is_dissociable([seq('Z7:[1,2]'), seq('Z7:[4,5]')])
    assert is_dissociable([seq('Z7:[1,2,4]')])
    assert is_dissociable([])
    with pytest.raises(DomainError):
        is_dissociable([seq('Z7:[1,2]'), seq('Z7:[3]')])


def test_separable_at_distance(z7):
    assert not separable_at_distance(seq('Z7:[1]'), seq('Z7:[2]'), z7.element(3))
    assert separable_at_distance(seq('Z7:[1]'), seq('Z7:[2]'), z7.element(5))
    # -3 = 4 is excluded as well
    assert not separable_at_distance(seq('Z7:[1]'), seq('Z7:[2]'), z7.element(4))
