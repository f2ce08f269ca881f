"""
Re-verification sweep over all small abelian groups.

For every isomorphism class of order at most max_order that satisfies
Hall-Paige and every k >= 2 dividing n - 1, an orthomorphism with one
fixed point and (n - 1) / k cycles of length k is searched for. Cells are
independent, so they can be spread over a process pool; rows always come
back in (order, class, k) order.
"""
import collections
import concurrent.futures
import hashlib
import logging

from ..exceptions import DomainError
from ..group import GroupSpec
from ..group import enumerate_abelian_groups
from ..group import hall_paige
from ..search import SearchBudget
from .orthomorphism import find_fgt_orthomorphism

# Creates a ClickLogger
logger = logging.getLogger(__name__)

SKIPPED = 'skipped'


class SweepRow(collections.namedtuple('SweepRow', ['group', 'n', 'k', 'outcome', 'witness_hash', 'nodes', 'reason'])):
    """ One (group, k) cell of a sweep """

    FIELDS = ('group', 'n', 'k', 'outcome', 'witness_hash', 'nodes', 'reason')

    @property
    def skipped(self):
        return self.outcome == SKIPPED


class SweepReport(object):
    """ All rows of a sweep in deterministic order """

    def __init__(self, max_order, rows):
        self.max_order = max_order
        self.rows = list(rows)

    @property
    def failures(self):
        return [row for row in self.rows if not row.skipped and row.outcome != 'found']

    @property
    def passed(self):
        return not self.failures

    def counts(self):
        return collections.Counter(row.outcome for row in self.rows)

    def to_dict(self):
        return {
            "max_order": self.max_order,
            "passed": self.passed,
            "rows": [row._asdict() for row in self.rows],
        }


def witness_hash(perm):
    """ First 16 hex digits of the sha256 of the comma-joined permutation """
    return hashlib.sha256(','.join(str(p) for p in perm).encode()).hexdigest()[:16]


def sweep_cells(max_order):
    """ Yields (group, k) for every cell, and (group, None) for skipped groups """
    if max_order < 2:
        raise DomainError("max_order must be at least 2, got {}".format(max_order))
    for n in range(2, max_order + 1):
        for group in enumerate_abelian_groups(n):
            if not hall_paige(group):
                yield group, None
                continue
            for k in range(2, n):
                if (n - 1) % k == 0:
                    yield group, k


def _run_cell(cell):
    group_text, k, budget = cell
    group = GroupSpec.parse(group_text)
    if k is None:
        return SweepRow(group_text, group.order, None, SKIPPED, None, 0, 'hall-paige fails')
    result = find_fgt_orthomorphism(group, k, budget)
    digest = witness_hash(result.witness.perm) if result.is_found else None
    return SweepRow(group_text, group.order, k, result.outcome.label, digest, result.nodes, result.reason)


def fgt_sweep(max_order, budget=None, jobs=1, progress=None):
    """ Runs find_fgt_orthomorphism on every cell up to max_order.

    Args:
        max_order (int): largest group order, at least 2.
        budget (SearchBudget): caps for each cell separately.
        jobs (int): worker processes; 1 runs in this process.
        progress (callable): called with each SweepRow as it is collected.

    Returns:
        SweepReport
    """
    budget = budget or SearchBudget()
    cells = [(str(group), k, budget) for group, k in sweep_cells(max_order)]
    rows = []

    def collect(row):
        logger.debug("sweep %s k=%s: %s (%d nodes)", row.group, row.k, row.outcome, row.nodes)
        if progress is not None:
            progress(row)
        rows.append(row)

    if jobs <= 1:
        for cell in cells:
            collect(_run_cell(cell))
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            for row in pool.map(_run_cell, cells):
                collect(row)
    return SweepReport(max_order, rows)
