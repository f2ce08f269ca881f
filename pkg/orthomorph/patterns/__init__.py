from .pattern import EdgeColoredSubgraph
from .pattern import Pattern
from .pattern import PatternCopy
from .pattern import copy_to_subgraph
from .pattern import find_copy
from .pattern import is_well_distributed
from .pattern import validate_pattern
from .probe import ProbeReport
from .probe import probe_gadget_availability
from .probe import wilson_interval
from .words import Projection
from .words import Word
from .words import count_non_separating_projections
from .words import count_projections_fixing
from .words import count_projections_hitting
from .words import disjoint_separating_projections
from .words import enumerate_projections
from .words import hitting_bound_holds
from .words import is_pairwise_separable
from .words import non_separating_bound_holds
from .words import word_is_separable_pair

__all__ = [
    'EdgeColoredSubgraph', 'Pattern', 'PatternCopy', 'ProbeReport', 'Projection', 'Word',
    'copy_to_subgraph', 'count_non_separating_projections', 'count_projections_fixing',
    'count_projections_hitting', 'disjoint_separating_projections', 'enumerate_projections',
    'find_copy', 'hitting_bound_holds', 'is_pairwise_separable', 'is_well_distributed',
    'non_separating_bound_holds', 'probe_gadget_availability', 'validate_pattern',
    'wilson_interval', 'word_is_separable_pair',
]
