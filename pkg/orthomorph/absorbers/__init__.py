from .absorption import Absorbable
from .absorption import AbsorberInstance
from .absorption import AbsorptionVerdict
from .absorption import chain_pair_absorbers
from .absorption import find_pair_absorber
from .absorption import verify_m_absorbs
from .bipartite import HopcroftKarp
from .rmbg import RMBG
from .rmbg import RMBGVerdict
from .rmbg import rmbg_build
from .rmbg import rmbg_verify
from .schedule import schedule_is_valid
from .schedule import selection_schedule
from .schedule import selection_sets

__all__ = [
    'Absorbable', 'AbsorberInstance', 'AbsorptionVerdict', 'HopcroftKarp', 'RMBG',
    'RMBGVerdict', 'chain_pair_absorbers', 'find_pair_absorber', 'rmbg_build', 'rmbg_verify',
    'schedule_is_valid', 'selection_schedule', 'selection_sets',
]
