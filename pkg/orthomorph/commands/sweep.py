""" Orthomorph command re-verifying every small (group, k) cell """
# standart python imports
import logging

# 3rd party imports
import click

# orthomorph imports
from ..search import Outcome
from ..solver import SweepRow
from ..solver import fgt_sweep
from .util import decorators
from .util import output
from .util import uxstring

# Creates a ClickLogger
logger = logging.getLogger(__name__)


def _log_row(row):
    if row.skipped:
        uxstring.ux('sweep_skip', row.group, row.reason)
    else:
        color = 'green' if row.outcome == Outcome.FOUND.label else 'red'
        uxstring.ux('sweep_row', row.group, row.k, row.outcome, row.nodes, fg=color)


@click.command("sweep")
@click.option('--max-order', type=click.IntRange(min=2), required=True,
              help='Largest group order to sweep.')
@click.option('--jobs', '-j', type=click.IntRange(min=1), default=None,
              help='Worker processes (default: 1).')
@click.pass_context
@decorators.budget_options
@decorators.seed_option
@decorators.output_options(default_format='csv')
@decorators.catch_all
def sweep(ctx, max_order, jobs, budget, seed, out, fmt):
    """Search every Hall-Paige group of order <= max-order for each cycle length.

\b
Usage
-----
$ orthomorph sweep --max-order 15 --format csv

Each row of the report names the group, k, the outcome, a short hash of the
witness permutation and the nodes searched. Groups failing Hall-Paige are
listed as skipped. The searches are deterministic, so the report does not
depend on --jobs or --seed. --jobs is only accepted here; every other
command runs a single search in-process.
"""
    jobs = decorators.config_value(ctx, 'jobs', jobs)
    uxstring.ux('sweep_start', max_order, jobs)
    report = fgt_sweep(max_order, budget, jobs, progress=_log_row)

    uxstring.ux('sweep_summary')
    output.log_table(sorted(report.counts().items()), ['outcome', 'cells'])
    if report.passed:
        uxstring.ux('sweep_passed')
    else:
        uxstring.ux('sweep_failed', len(report.failures))

    doc = report.to_dict()
    doc["seed"] = seed
    output.emit(doc, out, fmt, SweepRow.FIELDS, report.rows)
    if report.passed:
        ctx.exit(0)
    ctx.exit(1 if any(row.outcome == Outcome.NONEXISTENT.label for row in report.failures) else 2)
