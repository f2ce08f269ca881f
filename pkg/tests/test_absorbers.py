import fractions

import pytest

from orthomorph.absorbers import RMBG
from orthomorph.absorbers import Absorbable
from orthomorph.absorbers import AbsorberInstance
from orthomorph.absorbers import HopcroftKarp
from orthomorph.absorbers import chain_pair_absorbers
from orthomorph.absorbers import find_pair_absorber
from orthomorph.absorbers import rmbg_build
from orthomorph.absorbers import rmbg_verify
from orthomorph.absorbers import schedule_is_valid
from orthomorph.absorbers import selection_schedule
from orthomorph.absorbers import selection_sets
from orthomorph.absorbers import verify_m_absorbs
from orthomorph.exceptions import DomainError
from orthomorph.exceptions import PreconditionError
from orthomorph.group import GroupSpec
from orthomorph.rainbow import ColoredDigraphView
from orthomorph.search import Outcome
from orthomorph.search import SearchBudget
from orthomorph.search import Verdict


def elements(group, indices):
    return [group.element(i) for i in indices]


@pytest.fixture
def triangle_reservoir(z7):
    """ Vertices 1 and 3 with the colours of the cycle (0, 1, 3) """
    return elements(z7, (1, 3)), elements(z7, (6, 5, 3))


def test_empty_instance_passes(z7):
    inst = AbsorberInstance(z7, [], [], [], 0)
    verdict = verify_m_absorbs(inst, ColoredDigraphView.full(z7), 3)
    assert verdict.verdict is Verdict.PASS
    assert verdict.total == 1


def test_single_edge_reservoir_passes(z7):
    inst = AbsorberInstance(z7, elements(z7, (0, 1, 3)), elements(z7, (6, 5, 3)), [], 0)
    assert verify_m_absorbs(inst, ColoredDigraphView.full(z7), 3).verdict is Verdict.PASS


def test_failing_member_is_reported(z7, triangle_reservoir):
    vertices, colors = triangle_reservoir
    inst = AbsorberInstance(z7, vertices, colors, [elements(z7, [0]), elements(z7, [2])], 1)
    verdict = verify_m_absorbs(inst, ColoredDigraphView.full(z7), 3)
    assert verdict.verdict is Verdict.FAIL
    assert verdict.failing == [Absorbable(elements(z7, [2]))]
    assert verdict.checked == 2
    assert verdict.to_dict()['failing'] == [{"vertices": [2], "colors": []}]


def test_reservoir_outside_view(z7, triangle_reservoir):
    vertices, colors = triangle_reservoir
    inst = AbsorberInstance(z7, vertices, colors, [], 0)
    view = ColoredDigraphView(z7, vertices=elements(z7, (0, 1, 2)))
    assert verify_m_absorbs(inst, view, 3).verdict is Verdict.FAIL


def test_unbalanced_member_fails(z7, triangle_reservoir):
    vertices, colors = triangle_reservoir
    inst = AbsorberInstance(z7, vertices, colors, [Absorbable(elements(z7, (0, 2)))], 1)
    assert verify_m_absorbs(inst, ColoredDigraphView.full(z7), 3).verdict is Verdict.FAIL


def test_verify_under_tiny_budget(z7):
    inst = AbsorberInstance(z7, elements(z7, (0, 1, 3)), elements(z7, (6, 5, 3)), [], 0)
    verdict = verify_m_absorbs(inst, ColoredDigraphView.full(z7), 3, SearchBudget(max_nodes=0))
    assert verdict.verdict is Verdict.UNKNOWN


def test_instance_rejects(z7, triangle_reservoir):
    vertices, colors = triangle_reservoir
    with pytest.raises(DomainError):
        AbsorberInstance(z7, vertices, colors, [elements(z7, [1])], 1)
    with pytest.raises(DomainError):
        AbsorberInstance(z7, vertices, colors, [elements(z7, [0])], 2)


def test_instance_dict_round_trip(z7, triangle_reservoir):
    vertices, colors = triangle_reservoir
    inst = AbsorberInstance(z7, vertices, colors, [elements(z7, [0]), Absorbable([], elements(z7, [1]))], 1)
    assert AbsorberInstance.from_dict(z7, inst.to_dict()).to_dict() == inst.to_dict()


def test_find_pair_absorber_z11():
    g = GroupSpec.parse('Z11')
    view = ColoredDigraphView.full(g)
    result = find_pair_absorber(g.element(1), g.element(2), view, 3)
    assert result.outcome is Outcome.FOUND
    inst = result.witness
    assert {v.index for v in inst.reservoir_vertices} == {0, 3}
    assert {c.index for c in inst.reservoir_colors} == {1, 2, 8}
    assert inst.size <= 30
    assert verify_m_absorbs(inst, view, 3).verdict is Verdict.PASS


def test_find_pair_absorber_preconditions(z7):
    view = ColoredDigraphView.full(z7)
    with pytest.raises(PreconditionError):
        find_pair_absorber(z7.element(1), z7.element(1), view, 3)
    small = ColoredDigraphView(z7, vertices=elements(z7, (1, 2)))
    with pytest.raises(PreconditionError):
        find_pair_absorber(z7.element(1), z7.element(3), small, 3)


def test_find_pair_absorber_without_cycles(z7):
    small = ColoredDigraphView(z7, vertices=elements(z7, (1, 2)))
    result = find_pair_absorber(z7.element(1), z7.element(2), small, 3)
    assert result.outcome is Outcome.NONEXISTENT


def test_chain_pair_absorbers_z13():
    g = GroupSpec.parse('Z13')
    view = ColoredDigraphView.full(g)
    result = chain_pair_absorbers(elements(g, (1, 2, 3)), view, 3)
    assert result.outcome is Outcome.FOUND
    inst = result.witness
    assert inst.m == 2
    assert {v.index for v in inst.reservoir_vertices} == {0, 4, 5, 12}
    assert {c.index for c in inst.reservoir_colors} == {2, 3, 5, 8, 10, 11}
    assert verify_m_absorbs(inst, view, 3).verdict is Verdict.PASS


def test_chain_needs_two_vertices(z7):
    with pytest.raises(PreconditionError):
        chain_pair_absorbers(elements(z7, [1]), ColoredDigraphView.full(z7), 3)


@pytest.mark.parametrize('l, deleted, schedule', [
    (3, 3, {1: 1, 2: 2}),
    (2, 1, {2: 1}),
    (5, 2, {1: 1, 3: 2, 4: 3, 5: 4}),
])
def test_selection_schedule(l, deleted, schedule):
    assert selection_schedule(l, deleted) == schedule


def test_selection_schedule_covers_every_d():
    for l in range(2, 13):
        for deleted in range(1, l + 1):
            assert schedule_is_valid(l, deleted, selection_schedule(l, deleted)), (l, deleted)


def test_selection_sets_and_invalid_schedules():
    assert selection_sets(2) == {1: frozenset(['a1', 'd2', 'd1']), 2: frozenset(['a2', 'd1'])}
    assert not schedule_is_valid(3, 3, {1: 1, 2: 1})
    assert not schedule_is_valid(3, 3, {1: 3, 2: 2})
    with pytest.raises(DomainError):
        selection_schedule(1, 1)
    with pytest.raises(DomainError):
        selection_schedule(4, 5)


def test_hopcroft_karp():
    assert HopcroftKarp({'x': ['a', 'b'], 'y': ['a']}).maximum_matching() == {'x': 'b', 'y': 'a'}
    assert HopcroftKarp({'x': ['a'], 'y': ['a']}).maximum_matching_size() == 1
    assert HopcroftKarp({}).maximum_matching_size() == 0


def complete(h, beta):
    extra = int(fractions.Fraction(beta) * h)
    return [(x, y) for x in range(3 * h) for y in range(3 * h + extra)]


def test_complete_rmbg_passes_exhaustively():
    graph = RMBG(1, 1, complete(1, 1))
    verdict = rmbg_verify(graph)
    assert verdict.verdict is Verdict.PASS
    assert verdict.evidence == 'exhaustive'
    assert verdict.checked == 2


def test_isolated_left_vertex_fails():
    edges = [(x, y) for x, y in complete(1, 1) if x != 0]
    verdict = rmbg_verify(RMBG(1, 1, edges))
    assert verdict.verdict is Verdict.FAIL
    assert verdict.failing == (2,)


def test_structural_failures():
    assert rmbg_verify(RMBG(1, 1, [(5, 0)])).evidence == 'structural'
    dense = RMBG(40, 0, complete(40, 0))
    verdict = rmbg_verify(dense)
    assert verdict.verdict is Verdict.FAIL
    assert 'maximum degree' in verdict.reason


def test_rmbg_dict_round_trip():
    graph = RMBG(1, fractions.Fraction(1), complete(1, 1))
    assert RMBG.from_dict(graph.to_dict()).edges == graph.edges
    with pytest.raises(DomainError):
        RMBG(5, fractions.Fraction(1, 2), [])


def test_rmbg_build_small_is_complete():
    result = rmbg_build(1, 1)
    assert result.outcome is Outcome.FOUND
    assert len(result.witness.edges) == 12


def test_rmbg_build_random():
    result = rmbg_build(4, fractions.Fraction(1, 2), seed=3)
    assert result.outcome is Outcome.FOUND
    graph = result.witness
    assert graph.max_degree() <= 100
    assert rmbg_verify(graph).verdict is Verdict.PASS


@pytest.mark.slow
def test_rmbg_build_sampled():
    result = rmbg_build(20, fractions.Fraction(1, 2), seed=0)
    assert result.outcome is Outcome.FOUND
    assert result.reason == 'sampled'


def test_rmbg_build_rejects():
    with pytest.raises(DomainError):
        rmbg_build(0, 1)
    with pytest.raises(DomainError):
        rmbg_build(3, fractions.Fraction(1, 2))
