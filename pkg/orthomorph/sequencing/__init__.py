from .ordering import order_as_cycle_candidate
from .ordering import order_as_path_candidate
from .sequence import ColorSequence
from .sequence import is_cycle_candidate
from .sequence import is_dissociable
from .sequence import is_near_dissociable
from .sequence import is_path_candidate
from .sequence import is_rainbow
from .sequence import separable_at_distance
from .sequence import walk_in
from .sequence import walk_out

__all__ = [
    'ColorSequence', 'order_as_cycle_candidate', 'order_as_path_candidate',
    'is_cycle_candidate', 'is_dissociable', 'is_near_dissociable',
    'is_path_candidate', 'is_rainbow', 'separable_at_distance', 'walk_in',
    'walk_out',
]
