import random

import pytest

from orthomorph.exceptions import DivisibilityError
from orthomorph.exceptions import DomainError
from orthomorph.exceptions import PreconditionError
from orthomorph.group import GroupSpec
from orthomorph.group import element_sum
from orthomorph.group import enumerate_abelian_groups
from orthomorph.rainbow import ColoredDigraphView
from orthomorph.rainbow import HyperEdge
from orthomorph.rainbow import Matching
from orthomorph.rainbow import cycle_factor
from orthomorph.rainbow import cycle_to_hyperedge
from orthomorph.rainbow import edge_color
from orthomorph.rainbow import enumerate_hyperedges
from orthomorph.rainbow import materialized_matching
from orthomorph.rainbow import near_perfect_matching
from orthomorph.rainbow import parse_view
from orthomorph.rainbow import perfect_matching
from orthomorph.rainbow import typicality_stats
from orthomorph.search import Outcome
from orthomorph.search import SearchBudget
from orthomorph.search import Verdict


def punctured(text):
    return ColoredDigraphView.full(GroupSpec.parse(text), punctured=True)


def test_edge_color(z7):
    assert edge_color(z7.element(0), z7.element(1)).index == 6
    assert edge_color(z7.element(3), z7.element(0)).index == 3
    g = GroupSpec.parse('Z4xZ2')
    assert edge_color(g.element((1, 0)), g.element((0, 1))).coords == (1, 1)
    with pytest.raises(DomainError):
        edge_color(z7.element(2), z7.element(2))


def test_cycle_to_hyperedge(z7):
    view = ColoredDigraphView.full(z7)
    edge = cycle_to_hyperedge([z7.element(i) for i in (0, 1, 3)], view)
    assert {v.index for v in edge.vertex_set} == {0, 1, 3}
    assert [c.index for c in edge.colors] == [6, 5, 3]
    assert element_sum(edge.colors).is_identity


def test_cycle_to_hyperedge_absent(z7):
    z5 = GroupSpec.parse('Z5')
    assert cycle_to_hyperedge([z5.element(i) for i in (0, 1, 2)], ColoredDigraphView.full(z5)) is None

    view = ColoredDigraphView(z7, colors=[e for e in z7.elements() if e.index != 5])
    assert cycle_to_hyperedge([z7.element(i) for i in (0, 1, 3)], view) is None


def test_cycle_to_hyperedge_rejects(z7):
    view = ColoredDigraphView.full(z7)
    with pytest.raises(DomainError):
        cycle_to_hyperedge([z7.element(0), z7.element(1), z7.element(0)], view)
    with pytest.raises(DomainError):
        cycle_to_hyperedge([z7.element(0)], view)


def test_rotation_invariance(z7):
    view = ColoredDigraphView.full(z7)
    first = cycle_to_hyperedge([z7.element(i) for i in (0, 1, 3)], view)
    rotated = cycle_to_hyperedge([z7.element(i) for i in (1, 3, 0)], view)
    assert first == rotated
    assert first.color_set == rotated.color_set


ALL_GROUPS_TO_FIFTY = [g for n in range(3, 51) for g in enumerate_abelian_groups(n)]


def check_random_cycles(rng, groups, count):
    for _ in range(count):
        g = rng.choice(groups)
        k = rng.randrange(2, min(8, g.order) + 1)
        vertices = [g.element(i) for i in rng.sample(range(g.order), k)]
        edge = cycle_to_hyperedge(vertices, ColoredDigraphView.full(g))
        if edge is not None:
            assert element_sum(edge.colors).is_identity, (g, vertices)


def test_random_cycles_have_zero_sum_colours():
    check_random_cycles(random.Random(7), ALL_GROUPS_TO_FIFTY, 500)


@pytest.mark.parametrize('text', ['Z2xZ2xZ4', 'Z3xZ9', 'Z2xZ2xZ2xZ2', 'Z5xZ5'])
def test_random_cycles_in_non_cyclic_groups(text):
    check_random_cycles(random.Random(text), [GroupSpec.parse(text)], 300)


@pytest.mark.slow
def test_ten_thousand_random_cycles():
    check_random_cycles(random.Random(11), ALL_GROUPS_TO_FIFTY, 10 ** 4)



def test_partite_view(z7):
    parts = [[z7.element(0)], [z7.element(1)], [z7.element(3)]]
    view = ColoredDigraphView(z7, parts=parts)
    assert view.has_edge(z7.element(0), z7.element(1))
    assert not view.has_edge(z7.element(1), z7.element(0))
    assert cycle_to_hyperedge([z7.element(i) for i in (0, 1, 3)], view) is not None
    assert cycle_to_hyperedge([z7.element(i) for i in (0, 3, 1)], view) is None


def test_enumerate_two_cycles_z5():
    edges = enumerate_hyperedges(ColoredDigraphView.full(GroupSpec.parse('Z5')), 2)
    assert len(edges.edges) == 10
    assert not edges.truncated


def test_enumerate_cap():
    view = ColoredDigraphView.full(GroupSpec.parse('Z5'))
    capped = enumerate_hyperedges(view, 2, cap=3)
    assert len(capped.edges) == 3 and capped.truncated
    assert not enumerate_hyperedges(view, 2, cap=10).truncated


def test_enumerate_zero_sum_colour_sets():
    edges = enumerate_hyperedges(punctured('Z7'), 3).edges
    assert edges
    for edge in edges:
        assert element_sum(edge.colors).is_identity
        assert edge.cycle[0] == min(edge.cycle)


def test_enumerate_empty_view(z7):
    assert enumerate_hyperedges(ColoredDigraphView(z7, vertices=[]), 3).edges == []
    with pytest.raises(DomainError):
        enumerate_hyperedges(ColoredDigraphView.full(z7), 1)


@pytest.mark.parametrize('text, k', [('Z7', 3), ('Z5', 2), ('Z13', 3), ('Z2xZ2', 3)])
def test_perfect_matching_exists(text, k):
    view = punctured(text)
    result = perfect_matching(view, k)
    assert result.outcome is Outcome.FOUND
    assert len(result.witness) == len(view.vertices) // k
    assert result.witness.violations(view, perfect=True) == []


def test_perfect_matching_z4_absent():
    assert perfect_matching(punctured('Z4'), 3).outcome is Outcome.NONEXISTENT


def test_perfect_matching_preconditions(z7):
    with pytest.raises(DivisibilityError):
        perfect_matching(punctured('Z7'), 4)
    with pytest.raises(PreconditionError):
        perfect_matching(ColoredDigraphView(z7, vertices=z7.elements()[1:]), 3)
    with pytest.raises(DomainError):
        perfect_matching(punctured('Z7'), 1)


def test_perfect_matching_budget():
    result = perfect_matching(punctured('Z13'), 3, SearchBudget(max_nodes=1))
    assert result.outcome is Outcome.UNKNOWN


@pytest.mark.parametrize('text', ['Z7', 'Z13'])
def test_materialized_matching_agrees(text):
    view = punctured(text)
    direct = perfect_matching(view, 3)
    materialized = materialized_matching(view, 3)
    assert direct.outcome is materialized.outcome is Outcome.FOUND
    assert materialized.witness.violations(view, perfect=True) == []


def test_materialized_matching_z4_absent():
    assert materialized_matching(punctured('Z4'), 3).outcome is Outcome.NONEXISTENT


def test_cycle_factor_shapes(z7):
    with pytest.raises(DivisibilityError):
        cycle_factor(punctured('Z7'), {2: 1})
    with pytest.raises(DomainError):
        cycle_factor(punctured('Z7'), {1: 6})
    view = ColoredDigraphView(z7, vertices=z7.elements()[1:], colors=z7.elements()[1:])
    result = cycle_factor(view, {3: 2})
    assert result.outcome is Outcome.FOUND


def test_matching_violations(z7):
    a = HyperEdge(z7, [z7.element(i) for i in (0, 1, 3)])
    b = HyperEdge(z7, [z7.element(i) for i in (0, 2, 6)])
    problems = Matching(z7, [a, b]).violations()
    assert any('reuses a vertex' in p for p in problems)

    z5 = GroupSpec.parse('Z5')
    bad = Matching(z5, [HyperEdge(z5, [z5.element(i) for i in (0, 1, 2)])])
    assert any('not a rainbow cycle' in p for p in bad.violations())

    assert Matching(z7, [a]).violations(perfect=True)


def test_matching_list_round_trip(z7):
    matching = perfect_matching(punctured('Z7'), 3).witness
    restored = Matching.from_list(z7, matching.to_list())
    assert restored.to_list() == matching.to_list()
    assert all(set(item) == {'cycle', 'colors'} for item in matching.to_list())


def test_parse_view():
    view = parse_view('Z7', vertices=[1, 2, 3])
    assert view.vertex_indices() == [1, 2, 3]
    assert view.color_indices() == list(range(7))


def test_near_perfect_matching_empty_view(z7):
    report = near_perfect_matching(ColoredDigraphView(z7, vertices=[], colors=[]), 3)
    assert len(report.matching) == 0
    assert not report.leftover_vertices and not report.leftover_colors


def test_near_perfect_matching_z101():
    view = punctured('Z101')
    report = near_perfect_matching(view, 3, seed=5)
    assert report.matching.violations(view) == []
    covered = report.matching.covered_vertices
    assert covered | report.leftover_vertices == view.vertices
    assert not covered & report.leftover_vertices
    assert report.csv_row() == (101, 3, 5, len(report.leftover_vertices))
    again = near_perfect_matching(view, 3, seed=5)
    assert again.to_dict() == report.to_dict()


@pytest.mark.parametrize('n', [5, 7, 12, 20])
def test_sum_equation_is_typical(n):
    report = typicality_stats(GroupSpec.cyclic(n), (1, 1, 1), gamma=0, p=1)
    assert report.min_degree == report.max_degree == n
    assert report.min_pair_degree == report.max_pair_degree == n
    assert report.verdict is Verdict.PASS


def test_difference_equation_is_typical(z7):
    assert typicality_stats(z7, (1, -1, -1), gamma=0, p=1).verdict is Verdict.PASS
    assert typicality_stats(z7, (1, 1, 1), gamma=0, p='1/2').verdict is Verdict.FAIL


def test_typicality_on_subsets(z7):
    half = z7.elements()[:4]
    report = typicality_stats(z7, parts=(half, half, half))
    assert report.part_sizes == (4, 4, 4)
    assert report.verdict is None
    assert report.to_dict()['verdict'] is None


def test_typicality_rejects(z7):
    with pytest.raises(DomainError):
        typicality_stats(z7, (1, 2, 1))
    with pytest.raises(DomainError):
        typicality_stats(z7, parts=(z7.elements(),))
