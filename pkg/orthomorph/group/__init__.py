from .abelian import Element
from .abelian import GroupSpec
from .abelian import add
from .abelian import neg
from .abelian import scalar_mul
from .abelian import unpack
from .structure import check_two_three_lemma
from .structure import count_heavy_translates
from .structure import element_sum
from .structure import enumerate_abelian_groups
from .structure import hall_paige
from .structure import heavy_translates_bound_holds
from .structure import is_isomorphic
from .structure import mult_image_size
from .structure import non_generic_elements
from .structure import primary_decomposition

__all__ = [
    'Element', 'GroupSpec', 'add', 'neg', 'scalar_mul', 'unpack',
    'check_two_three_lemma', 'count_heavy_translates', 'element_sum',
    'enumerate_abelian_groups', 'hall_paige', 'heavy_translates_bound_holds',
    'is_isomorphic', 'mult_image_size', 'non_generic_elements',
    'primary_decomposition',
]
