import itertools

import pytest

from orthomorph.exceptions import DivisibilityError
from orthomorph.exceptions import DomainError
from orthomorph.group import GroupSpec
from orthomorph.group import enumerate_abelian_groups
from orthomorph.group import hall_paige
from orthomorph.rainbow import ColoredDigraphView
from orthomorph.rainbow import perfect_matching
from orthomorph.search import Outcome
from orthomorph.search import SearchBudget
from orthomorph.solver import CycleType
from orthomorph.solver import EquationSystem
from orthomorph.solver import Orthomorphism
from orthomorph.solver import check_orthomorphism
from orthomorph.solver import columns
from orthomorph.solver import cycle_type
from orthomorph.solver import fgt_sweep
from orthomorph.solver import find_complete_mapping
from orthomorph.solver import find_cycle_type_orthomorphism
from orthomorph.solver import find_fgt_orthomorphism
from orthomorph.solver import find_orthomorphism
from orthomorph.solver import matchable
from orthomorph.solver import matching_violations
from orthomorph.solver import verify_complete_mapping
from orthomorph.solver import verify_orthomorphism
from orthomorph.solver import witness_hash


@pytest.mark.parametrize('text, canonical', [
    ('1+3^2', '1+3^2'), ('3^2 + 1', '1+3^2'), ('1+2+4', '1+2+4'), ('2+2+1', '1+2^2'),
])
def test_cycle_type_parse(text, canonical):
    assert str(CycleType.parse(text)) == canonical


@pytest.mark.parametrize('text', ['', '0', '3^0', 'a', '1++2'])
def test_cycle_type_parse_rejects(text):
    with pytest.raises(DomainError):
        CycleType.parse(text)


def test_cycle_type_fgt():
    t = CycleType.fgt(7, 3)
    assert t == CycleType.parse('1+3^2')
    assert t.order == 7 and t.fixed_points == 1
    assert t.lengths == (1, 3, 3)
    assert CycleType.fgt(1, 2) == CycleType.parse('1')
    with pytest.raises(DivisibilityError):
        CycleType.fgt(7, 4)
    with pytest.raises(DomainError):
        CycleType.fgt(7, 1)


def test_verify_orthomorphism_z3():
    z3 = GroupSpec.parse('Z3')
    assert not verify_orthomorphism([0, 1, 2], z3)
    assert verify_orthomorphism([0, 2, 1], z3)
    assert cycle_type([0, 2, 1]) == CycleType.parse('1+2')


def test_no_orthomorphism_of_z4():
    z4 = GroupSpec.parse('Z4')
    assert not any(verify_orthomorphism(p, z4) for p in itertools.permutations(range(4)))


def test_check_names_the_collision(z7):
    check = check_orthomorphism([0, 0, 1, 2, 3, 4, 5], z7)
    assert not check and check.collision == (0, 1)
    check = check_orthomorphism(list(range(7)), z7)
    assert check.collision == (0, 1)
    assert 'repeats' in check.reason
    with pytest.raises(DomainError):
        check_orthomorphism([0, 1], z7)
    with pytest.raises(DomainError):
        check_orthomorphism([0, 1, 2, 3, 4, 5, 9], z7)


def test_cycle_type_rejects_non_permutation():
    with pytest.raises(DomainError):
        cycle_type([0, 0, 1])


@pytest.mark.parametrize('text, k, expected', [
    ('Z7', 3, '1+3^2'), ('Z7', 2, '1+2^3'), ('Z3', 2, '1+2'), ('Z13', 3, '1+3^4'),
    ('Z3xZ3', 2, '1+2^4'), ('Z2xZ2', 3, '1+3'),
])
def test_find_fgt_orthomorphism(text, k, expected):
    g = GroupSpec.parse(text)
    result = find_fgt_orthomorphism(g, k)
    assert result.outcome is Outcome.FOUND
    phi = result.witness
    assert phi.is_valid
    assert str(phi.cycle_type()) == expected
    assert phi.perm[0] == 0


def test_find_fgt_calibration_case():
    assert find_fgt_orthomorphism(GroupSpec.parse('Z3'), 2).witness.perm == (0, 2, 1)


def test_find_fgt_hall_paige_failure():
    result = find_fgt_orthomorphism(GroupSpec.parse('Z4'), 3)
    assert result.outcome is Outcome.NONEXISTENT
    assert 'hall-paige' in result.reason


def test_find_fgt_preconditions(z7):
    with pytest.raises(DivisibilityError):
        find_fgt_orthomorphism(z7, 4)
    with pytest.raises(DomainError):
        find_fgt_orthomorphism(z7, 1)


def test_find_fgt_under_tiny_budget():
    result = find_fgt_orthomorphism(GroupSpec.parse('Z13'), 3, SearchBudget(max_nodes=1))
    assert result.outcome is Outcome.UNKNOWN


@pytest.mark.parametrize('text, k', [('Z7', 2), ('Z7', 3), ('Z13', 2), ('Z13', 3)])
def test_fgt_agrees_with_perfect_matching(text, k):
    g = GroupSpec.parse(text)
    direct = perfect_matching(ColoredDigraphView.full(g, punctured=True), k)
    assert find_fgt_orthomorphism(g, k).outcome is direct.outcome is Outcome.FOUND
    phi = Orthomorphism.from_matching(g, direct.witness)
    assert phi.is_valid
    assert phi.cycle_type() == CycleType.fgt(g.order, k)


def test_find_cycle_type_orthomorphism():
    z5 = GroupSpec.parse('Z5')
    result = find_cycle_type_orthomorphism(z5, '1+4')
    assert result.outcome is Outcome.FOUND
    assert result.witness.cycle_type() == CycleType.parse('1+4')

    z7 = GroupSpec.parse('Z7')
    decided = find_cycle_type_orthomorphism(z7, CycleType.parse('1+2+4'))
    assert decided.outcome is not Outcome.UNKNOWN
    if decided.is_found:
        assert decided.witness.is_valid
        assert str(decided.witness.cycle_type()) == '1+2+4'


def test_find_cycle_type_rejects(z7):
    with pytest.raises(DomainError):
        find_cycle_type_orthomorphism(z7, '1+3')
    with pytest.raises(DomainError):
        find_cycle_type_orthomorphism(z7, '2+5')
    with pytest.raises(DomainError):
        find_cycle_type_orthomorphism(z7, '1^3+2^2')
    z4 = GroupSpec.parse('Z4')
    assert find_cycle_type_orthomorphism(z4, '1+3').outcome is Outcome.NONEXISTENT


@pytest.mark.parametrize('text, exists', [
    ('Z5', True), ('Z2xZ2', True), ('Z4', False), ('Z6', False), ('Z1', True),
])
def test_find_orthomorphism(text, exists):
    g = GroupSpec.parse(text)
    result = find_orthomorphism(g)
    assert result.is_found is exists
    if exists:
        assert verify_orthomorphism(result.witness, g)


def test_find_orthomorphism_without_pruning():
    result = find_orthomorphism(GroupSpec.parse('Z4'), prune_sums=False)
    assert result.outcome is Outcome.NONEXISTENT
    assert result.nodes > 0


def test_complete_mapping():
    z5 = GroupSpec.parse('Z5')
    theta = find_complete_mapping(z5).witness
    assert verify_complete_mapping(theta, z5)
    assert not verify_complete_mapping([0, 0, 0, 0, 0], z5)
    assert find_complete_mapping(GroupSpec.parse('Z4')).outcome is Outcome.NONEXISTENT


def test_orthomorphism_helpers(z7):
    phi = Orthomorphism(z7, [0, 2, 4, 6, 1, 3, 5])
    assert phi.is_valid
    assert phi(z7.element(3)).index == 6
    assert phi.differences() == (0, 1, 2, 3, 4, 5, 6)
    assert phi.to_dict() == {"group": "Z7", "perm": [0, 2, 4, 6, 1, 3, 5], "cycle_type": "1+3^2"}


def test_equation_system_parse():
    system = EquationSystem.parse('1,1,-1,0; 1,-1,0,-1')
    assert system == EquationSystem.queens()
    assert str(EquationSystem.hall_paige()) == '1,-1,-1'
    assert system.row_sums() == [1, -1]
    for text in ('', '1,a', '1,2;1'):
        with pytest.raises(DomainError):
            EquationSystem.parse(text)


@pytest.mark.parametrize('system, text, exists', [
    (EquationSystem.hall_paige(), 'Z5', True),
    (EquationSystem.hall_paige(), 'Z4', False),
    (EquationSystem.queens(), 'Z3', False),
    (EquationSystem.queens(), 'Z5', True),
    (EquationSystem.queens(), 'Z7', True),
    (EquationSystem.queens(), 'Z9', False),
    (EquationSystem.queens(), 'Z11', True),
    (EquationSystem.queens(), 'Z13', True),
])
def test_matchable(system, text, exists):
    g = GroupSpec.parse(text)
    result = matchable(system, g)
    assert result.outcome is (Outcome.FOUND if exists else Outcome.NONEXISTENT)
    if exists:
        assert matching_violations(system, g, result.witness) == []
        assert len(columns(result.witness, system.m)) == system.m


def test_matchable_agrees_with_hall_paige():
    for order in range(1, 13):
        for g in enumerate_abelian_groups(order):
            found = matchable(EquationSystem.hall_paige(), g).is_found
            assert found is hall_paige(g), g


def test_matchable_under_budget():
    result = matchable('1,1,-1,0;1,-1,0,-1', GroupSpec.parse('Z11'), SearchBudget(max_nodes=2))
    assert result.outcome is Outcome.UNKNOWN


def test_matching_violations(z7):
    system = EquationSystem.hall_paige()
    problems = matching_violations(system, z7, [(0, 0, 0)] * 7)
    assert any('not a bijection' in p for p in problems)
    assert matching_violations(system, z7, [(0, 1)])[-1].startswith('vector 0')


def test_sweep_to_three():
    report = fgt_sweep(3)
    assert [(row.group, row.k, row.outcome) for row in report.rows] == [
        ('Z2', None, 'skipped'), ('Z3', 2, 'found')]
    assert report.rows[1].witness_hash == witness_hash((0, 2, 1))
    assert report.passed
    with pytest.raises(DomainError):
        fgt_sweep(1)


def test_sweep_reports_progress():
    seen = []
    report = fgt_sweep(5, progress=seen.append)
    assert seen == report.rows
    assert report.counts()['skipped'] == 2


@pytest.mark.slow
def test_sweep_to_fifteen():
    report = fgt_sweep(15)
    assert report.passed, report.failures
