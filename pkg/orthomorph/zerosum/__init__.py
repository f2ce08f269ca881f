from .partition import Partition
from .partition import generalized_tannenbaum_candidates
from .partition import partition_fixed_sum_quads
from .partition import tannenbaum_partition
from .partition import zero_sum_equipartition
from .subsets import subset_with_sum

__all__ = [
    'Partition', 'generalized_tannenbaum_candidates', 'partition_fixed_sum_quads',
    'subset_with_sum', 'tannenbaum_partition', 'zero_sum_equipartition',
]
