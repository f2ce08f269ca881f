""" Orthomorph command deciding matchability of a linear system over a group """
# standart python imports
import logging

# 3rd party imports
import click

# orthomorph imports
from ..certificates import matchability_certificate
from ..solver import matchable as decide_matchable
from .util import decorators
from .util import output
from .util import params

# Creates a ClickLogger
logger = logging.getLogger(__name__)


@click.command("matchable")
@click.option('--group', '-g', 'group', type=params.GROUP, required=True, help='Group spec, e.g. Z5.')
@click.option('--matrix', '-m', 'system', type=params.MATRIX, required=True,
              help='Rows separated by ";" and entries by ",", e.g. "1,1,-1,0;1,-1,0,-1".')
@click.pass_context
@decorators.budget_options
@decorators.seed_option
@decorators.output_options
@decorators.catch_all
def matchable(ctx, group, system, budget, seed, out, fmt):
    """Find n solutions of A v = 0 whose coordinates each run over the group.

\b
Usage
-----
Orthomorphisms of Z5:
$ orthomorph matchable --group Z5 --matrix "1,-1,-1"
Toroidal queens on a 9 x 9 board (none exist):
$ orthomorph matchable --group Z9 --matrix "1,1,-1,0;1,-1,0,-1"
"""
    result = decide_matchable(system, group, budget)
    output.finish_search(ctx, 'matchability of {}'.format(system), result,
                         lambda vectors: matchability_certificate(system, group, vectors, seed), out, fmt,
                         group=str(group), kind='matchability', matrix=system.to_list())
