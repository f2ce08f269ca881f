from .matchability import EquationSystem
from .matchability import columns
from .matchability import matchable
from .matchability import matching_violations
from .orthomorphism import CycleType
from .orthomorphism import Orthomorphism
from .orthomorphism import OrthomorphismCheck
from .orthomorphism import check_orthomorphism
from .orthomorphism import cycle_type
from .orthomorphism import find_complete_mapping
from .orthomorphism import find_cycle_type_orthomorphism
from .orthomorphism import find_fgt_orthomorphism
from .orthomorphism import find_orthomorphism
from .orthomorphism import verify_complete_mapping
from .orthomorphism import verify_orthomorphism
from .sweep import SweepReport
from .sweep import SweepRow
from .sweep import fgt_sweep
from .sweep import witness_hash

__all__ = [
    'CycleType', 'EquationSystem', 'Orthomorphism', 'OrthomorphismCheck', 'SweepReport',
    'SweepRow', 'check_orthomorphism', 'columns', 'cycle_type', 'fgt_sweep',
    'find_complete_mapping', 'find_cycle_type_orthomorphism', 'find_fgt_orthomorphism',
    'find_orthomorphism', 'matchable', 'matching_violations', 'verify_complete_mapping',
    'verify_orthomorphism', 'witness_hash',
]
