""" Orthomorph commands searching orthomorphisms with a prescribed cycle type """
# standart python imports
import logging

# 3rd party imports
import click

# orthomorph imports
from ..certificates import orthomorphism_certificate
from ..solver import find_cycle_type_orthomorphism
from ..solver import find_fgt_orthomorphism
from .util import decorators
from .util import output
from .util import params

# Creates a ClickLogger
logger = logging.getLogger(__name__)


@click.command("fgt")
@click.option('--group', '-g', 'group', type=params.GROUP, required=True, help='Group spec, e.g. Z7 or Z3xZ3.')
@click.option('--k', 'k', type=click.INT, required=True, help='Cycle length; must divide n - 1.')
@click.pass_context
@decorators.budget_options
@decorators.seed_option
@decorators.output_options
@decorators.catch_all
def fgt(ctx, group, k, budget, seed, out, fmt):
    """Find an orthomorphism fixing 0 whose other cycles all have length k.

\b
Usage
-----
Search Z7 for an orthomorphism of cycle type 1+3^2 and print its certificate.
$ orthomorph fgt --group Z7 --k 3

Exit codes: 0 found, 1 proved impossible, 2 budget exhausted, 64 bad input.
"""
    result = find_fgt_orthomorphism(group, k, budget)
    output.finish_search(ctx, 'fgt {} k={}'.format(group, k), result,
                         lambda phi: orthomorphism_certificate(phi, seed), out, fmt,
                         group=str(group), kind='orthomorphism', k=k)


@click.command("cycle-type")
@click.option('--group', '-g', 'group', type=params.GROUP, required=True, help='Group spec, e.g. Z7.')
@click.option('--cycle-type', '-t', 'requested', type=params.CYCLE_TYPE, required=True,
              help='Cycle type such as 1+2+4; exactly one fixed point.')
@click.pass_context
@decorators.budget_options
@decorators.seed_option
@decorators.output_options
@decorators.catch_all
def cycle_type(ctx, group, requested, budget, seed, out, fmt):
    """Find an orthomorphism with a given cycle type.

\b
Usage
-----
$ orthomorph cycle-type --group Z7 --cycle-type 1+2+4
"""
    result = find_cycle_type_orthomorphism(group, requested, budget)
    output.finish_search(ctx, 'cycle type {} on {}'.format(requested, group), result,
                         lambda phi: orthomorphism_certificate(phi, seed), out, fmt,
                         group=str(group), kind='orthomorphism', cycle_type=str(requested))
