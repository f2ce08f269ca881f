import pytest

from orthomorph.exceptions import DivisibilityError
from orthomorph.exceptions import DomainError
from orthomorph.exceptions import IdentityPresentError
from orthomorph.exceptions import PreconditionError
from orthomorph.exceptions import SumNonzeroError
from orthomorph.group import GroupSpec
from orthomorph.search import Outcome
from orthomorph.search import SearchBudget
from orthomorph.zerosum import Partition
from orthomorph.zerosum import generalized_tannenbaum_candidates
from orthomorph.zerosum import partition_fixed_sum_quads
from orthomorph.zerosum import subset_with_sum
from orthomorph.zerosum import tannenbaum_partition
from orthomorph.zerosum import zero_sum_equipartition


def nonzero(group):
    return group.elements()[1:]


def test_equipartition_z7(z7):
    result = zero_sum_equipartition(nonzero(z7), 3)
    assert result.outcome is Outcome.FOUND
    assert result.witness.blocks == ((1, 2, 4), (3, 5, 6))
    assert result.witness.is_valid()


def test_equipartition_small_cases():
    z5 = GroupSpec.parse('Z5')
    assert zero_sum_equipartition([z5.element(1), z5.element(4)], 2).witness.blocks == ((1, 4),)

    z9 = GroupSpec.parse('Z9')
    partition = zero_sum_equipartition(nonzero(z9), 4).witness
    assert len(partition.blocks) == 2
    assert partition.is_valid()


def test_equipartition_preconditions(z7):
    with pytest.raises(IdentityPresentError):
        zero_sum_equipartition(z7.elements(), 7)
    with pytest.raises(SumNonzeroError):
        zero_sum_equipartition([z7.element(1), z7.element(2)], 2)
    with pytest.raises(DivisibilityError):
        zero_sum_equipartition(nonzero(z7), 4)
    with pytest.raises(DomainError):
        zero_sum_equipartition(nonzero(z7), 1)


def test_equipartition_nonexistent():
    # 1 + 2 + 3 + 5 = 11, but 1 has no inverse in the set
    z11 = GroupSpec.parse('Z11')
    result = zero_sum_equipartition([z11.element(i) for i in (1, 2, 3, 5)], 2)
    assert result.outcome is Outcome.NONEXISTENT


def test_equipartition_budget(z7):
    result = zero_sum_equipartition(nonzero(z7), 3, budget=SearchBudget(max_nodes=0))
    assert result.outcome is Outcome.UNKNOWN


@pytest.mark.parametrize('text, sizes, blocks', [
    ('Z7', (3, 3), ((1, 2, 4), (3, 5, 6))),
    ('Z7', (2, 2, 2), ((1, 6), (2, 5), (3, 4))),
    ('Z5', (2, 2), ((1, 4), (2, 3))),
])
def test_tannenbaum_partition(text, sizes, blocks):
    result = tannenbaum_partition(GroupSpec.parse(text), sizes)
    assert result.witness.blocks == blocks


def test_tannenbaum_mixed_sizes(z7):
    partition = tannenbaum_partition(z7, (4, 2)).witness
    assert sorted(len(b) for b in partition.blocks) == [2, 4]
    assert partition.is_valid()


def test_tannenbaum_preconditions(z7):
    with pytest.raises(DivisibilityError):
        tannenbaum_partition(z7, (3, 2))
    with pytest.raises(DomainError):
        tannenbaum_partition(z7, (1, 5))


def test_tannenbaum_refutes_z4():
    # Z4 minus 0 sums to 2, so no zero-sum partition exists
    result = tannenbaum_partition(GroupSpec.parse('Z4'), (3,))
    assert result.outcome is Outcome.NONEXISTENT


def test_fixed_sum_quads():
    z9 = GroupSpec.parse('Z9')
    partition = partition_fixed_sum_quads(nonzero(z9), z9.identity).witness
    assert len(partition.blocks) == 2
    assert partition.is_valid()

    z13 = GroupSpec.parse('Z13')
    quad = [z13.element(i) for i in (1, 2, 3, 8)]
    assert partition_fixed_sum_quads(quad, z13.element(1)).witness.blocks == ((1, 2, 3, 8),)
    with pytest.raises(SumNonzeroError):
        partition_fixed_sum_quads(quad, z13.element(2))


def test_fixed_sum_quads_divisibility():
    z5 = GroupSpec.parse('Z5')
    with pytest.raises(DivisibilityError):
        partition_fixed_sum_quads([z5.element(1), z5.element(2)], z5.identity)


def test_subset_with_sum():
    z5 = GroupSpec.parse('Z5')
    result = subset_with_sum(nonzero(z5), 2, z5.identity)
    assert sorted(e.index for e in result.witness) == [1, 4]

    assert subset_with_sum(nonzero(z5), 0, z5.identity).witness == frozenset()

    z4 = GroupSpec.parse('Z4')
    absent = subset_with_sum([z4.element(1), z4.element(3)], 1, z4.element(2))
    assert absent.outcome is Outcome.NONEXISTENT

    with pytest.raises(DomainError):
        subset_with_sum(nonzero(z5), 5, z5.identity)


def test_subset_with_sum_meet_in_the_middle():
    g = GroupSpec.parse('Z41')
    target = g.element(17)
    result = subset_with_sum(nonzero(g), 5, target)
    assert len(result.witness) == 5
    assert g.sum_indices(e.index for e in result.witness) == 17


def test_generalized_candidates_cycle(z7):
    sequences = generalized_tannenbaum_candidates(nonzero(z7), 3).witness
    assert [sorted(s.indices) for s in sequences] == [[1, 2, 4], [3, 5, 6]]
    assert all(s.is_cycle_candidate() for s in sequences)


def test_generalized_candidates_z13_quads():
    z13 = GroupSpec.parse('Z13')
    sequences = generalized_tannenbaum_candidates(nonzero(z13), 4).witness
    assert len(sequences) == 3
    assert all(s.is_cycle_candidate() and s.is_rainbow() for s in sequences)


def test_generalized_candidates_path_mode():
    z9 = GroupSpec.parse('Z9')
    with pytest.raises(PreconditionError):
        generalized_tannenbaum_candidates(nonzero(z9), 4, mode='path', alpha=z9.identity)

    z13 = GroupSpec.parse('Z13')
    quad = [z13.element(i) for i in (1, 2, 3, 8)]
    sequences = generalized_tannenbaum_candidates(quad, 4, mode='path', alpha=z13.element(1)).witness
    assert len(sequences) == 1 and sequences[0].is_path_candidate()


def test_generalized_candidates_bad_mode(z7):
    with pytest.raises(DomainError):
        generalized_tannenbaum_candidates(nonzero(z7), 3, mode='tree')
    with pytest.raises(PreconditionError):
        generalized_tannenbaum_candidates(nonzero(z7), 2)


def test_partition_violations(z7):
    bad = Partition(z7, [[1, 2, 3], [3, 5, 6]], [0, 0], ground=range(1, 7))
    problems = bad.violations()
    assert any('reuses' in p for p in problems)
    assert any('sums to 6' in p for p in problems)
    assert any('cover' in p for p in problems)

    good = Partition.from_dict({"group": "Z7", "blocks": [[1, 2, 4], [3, 5, 6]], "block_sums": [0, 0]})
    assert good.is_valid()
    assert good.to_dict()["blocks"] == [[1, 2, 4], [3, 5, 6]]
