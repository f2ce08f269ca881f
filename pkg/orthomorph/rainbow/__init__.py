from .digraph import ColoredDigraphView
from .digraph import Enumeration
from .digraph import HyperEdge
from .digraph import Matching
from .digraph import cycle_to_hyperedge
from .digraph import edge_color
from .digraph import enumerate_hyperedges
from .digraph import iter_hyperedges
from .digraph import parse_view
from .factor import NearMatchingReport
from .factor import cycle_factor
from .factor import materialized_matching
from .factor import near_perfect_matching
from .factor import perfect_matching
from .typicality import TypicalityReport
from .typicality import typicality_stats

__all__ = [
    'ColoredDigraphView', 'Enumeration', 'HyperEdge', 'Matching', 'NearMatchingReport',
    'TypicalityReport', 'cycle_factor', 'cycle_to_hyperedge', 'edge_color',
    'enumerate_hyperedges', 'iter_hyperedges', 'materialized_matching',
    'near_perfect_matching', 'parse_view', 'perfect_matching', 'typicality_stats',
]
