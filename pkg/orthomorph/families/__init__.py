from .good import FamilyReport
from .good import GoodFamilies
from .good import build_good_families
from .good import check_good_families
from .good import choose_z_s
from .good import max_target_count
from .tuples import count_good_tuples
from .tuples import good_tuple_bound_holds

__all__ = [
    'FamilyReport', 'GoodFamilies', 'build_good_families', 'check_good_families',
    'choose_z_s', 'count_good_tuples', 'good_tuple_bound_holds', 'max_target_count',
]
