""" Orthomorph command ordering a set of colours as a path- or cycle-candidate """
# standart python imports
import logging

# 3rd party imports
import click

# orthomorph imports
from ..certificates import sequence_certificate
from ..search import run_search
from ..sequencing import order_as_cycle_candidate
from ..sequencing import order_as_path_candidate
from .util import decorators
from .util import output
from .util import params

# Creates a ClickLogger
logger = logging.getLogger(__name__)

ORDERINGS = {
    'cycle': order_as_cycle_candidate,
    'path': order_as_path_candidate,
}


@click.command("sequence")
@click.option('--group', '-g', 'group', type=params.GROUP, required=True, help='Group spec, e.g. Z13.')
@click.option('--elements', '-e', type=params.INT_LIST, required=True,
              help='Canonical indices of the colours, e.g. "1,3,9".')
@click.option('--mode', type=click.Choice(sorted(ORDERINGS)), default='cycle', show_default=True,
              help='Order as a cycle-candidate (zero-sum set) or a path-candidate.')
@click.pass_context
@decorators.budget_options
@decorators.seed_option
@decorators.output_options
@decorators.catch_all
def sequence(ctx, group, elements, mode, budget, seed, out, fmt):
    """Order distinct non-identity colours so their partial sums never repeat.

\b
Usage
-----
$ orthomorph sequence --group Z7 --elements 1,2,4
$ orthomorph sequence --group Z7 --elements 1,2 --mode path
"""
    colors = params.to_elements(group, elements)
    result = run_search(budget, ORDERINGS[mode], colors, group)
    output.finish_search(ctx, '{}-candidate ordering'.format(mode), result,
                         lambda seq: sequence_certificate(seq, mode, seed), out, fmt,
                         group=str(group), kind='sequence', mode=mode, elements=sorted(elements))
