""" Orthomorph command building and checking good families of colour tuples """
# standart python imports
import logging

# 3rd party imports
import click

# orthomorph imports
from ..certificates import good_families_certificate
from ..families import build_good_families
from ..families import check_good_families
from ..families import max_target_count
from .util import decorators
from .util import output
from .util import params
from .util import uxstring

# Creates a ClickLogger
logger = logging.getLogger(__name__)


@click.command("families")
@click.option('--group', '-g', 'group', type=params.GROUP, required=True, help='Group spec, e.g. Z1009.')
@click.option('--k', 'k', type=click.IntRange(min=10), required=True, help='Cycle length, at least 10.')
@click.option('--count', type=click.IntRange(min=0), default=None,
              help='Tuples per family (default: the largest admissible, n // (64 k)).')
@click.pass_context
@decorators.budget_options
@decorators.seed_option
@decorators.output_options
@decorators.catch_all
def families(ctx, group, k, count, budget, seed, out, fmt):
    """Greedily build good families F and S, then check all six properties.

\b
Usage
-----
$ orthomorph families --group Z1009 --k 10 --count 1

The checks are logged as a table; the certificate carries f, s, z, q and
both tuple families.
"""
    if count is None:
        count = max_target_count(group.order, k)
    result = build_good_families(group, k, count, seed, budget)
    if result.is_found:
        report = check_good_families(result.witness, group, k)
        uxstring.ux('families_report')
        output.log_table([(name, 'pass' if ok else 'FAIL') for name, ok in report.items()],
                         ['property', 'result'])
    output.finish_search(ctx, 'good families k={} count={}'.format(k, count), result,
                         lambda fam: good_families_certificate(fam, seed), out, fmt,
                         group=str(group), kind='good_families', k=k, count=count)
