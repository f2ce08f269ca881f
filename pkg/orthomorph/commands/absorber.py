""" Orthomorph commands for absorbers and robustly matchable bipartite graphs """
# standart python imports
import logging

# 3rd party imports
import click

# orthomorph imports
from ..absorbers import chain_pair_absorbers
from ..absorbers import find_pair_absorber
from ..absorbers import rmbg_build
from ..absorbers import verify_m_absorbs
from ..certificates import absorber_certificate
from ..certificates import rmbg_certificate
from ..rainbow import ColoredDigraphView
from .util import decorators
from .util import exceptions
from .util import output
from .util import params
from .util import uxstring

# Creates a ClickLogger
logger = logging.getLogger(__name__)


@click.command("absorber")
@click.option('--group', '-g', 'group', type=params.GROUP, required=True, help='Group spec, e.g. Z11.')
@click.option('--k', 'k', type=click.IntRange(min=2), required=True, help='Cycle length.')
@click.option('--x', 'x', type=click.INT, default=None, help='First absorbed vertex.')
@click.option('--z', 'z', type=click.INT, default=None, help='Second absorbed vertex.')
@click.option('--chain', type=params.INT_LIST, default=None,
              help='Vertices a1,...,al to absorb l-1 at a time with chained pair absorbers.')
@click.pass_context
@decorators.budget_options
@decorators.seed_option
@decorators.output_options
@decorators.catch_all
def absorber(ctx, group, k, x, z, chain, budget, seed, out, fmt):
    """Find a reservoir absorbing single vertices, and verify it.

\b
Usage
-----
A reservoir that 1-absorbs {1} and {2} in the 3-cycle hypergraph of Z11:
$ orthomorph absorber --group Z11 --k 3 --x 1 --z 2
Chained pair absorbers that 2-absorb {1}, {2} and {3}:
$ orthomorph absorber --group Z13 --k 3 --chain 1,2,3
"""
    pair = x is not None and z is not None
    if pair == (chain is not None) or (x is None) != (z is None):
        raise exceptions.UsageFailure("Give either both --x and --z, or --chain.")
    view = ColoredDigraphView.full(group)
    if pair:
        a, b = params.to_elements(group, [x, z])
        result = find_pair_absorber(a, b, view, k, budget)
        label = 'pair absorber for {} and {}'.format(a, b)
    else:
        result = chain_pair_absorbers(params.to_elements(group, chain), view, k, budget)
        label = 'chained absorber for {}'.format(chain)

    if result.is_found:
        verdict = verify_m_absorbs(result.witness, view, k, budget)
        uxstring.ux('absorber_verdict', result.witness.m, verdict.verdict.label,
                    verdict.checked, verdict.total, fg=verdict.verdict.color)
    output.finish_search(ctx, label, result,
                         lambda inst: absorber_certificate(inst, k, seed), out, fmt,
                         group=str(group), kind='absorber', k=k)


@click.command("rmbg")
@click.option('--h', 'h', type=click.IntRange(min=1), required=True, help='Size parameter: |X| = 3h.')
@click.option('--beta', type=params.FRACTION, default='1/2', show_default=True,
              help='Flexible surplus: |Y\'| = h + beta*h; beta*h must be an integer.')
@click.option('--samples', type=click.IntRange(min=1), default=None,
              help='Sampled h-subsets of Y\' when exhaustive checking is too large.')
@click.option('--retries', type=click.IntRange(min=0), default=None,
              help='Further random candidates after the first is rejected.')
@click.pass_context
@decorators.seed_option
@decorators.output_options
@decorators.catch_all
def rmbg(ctx, h, beta, samples, retries, seed, out, fmt):
    """Build a robustly matchable bipartite graph and verify it.

\b
Usage
-----
$ orthomorph rmbg --h 20 --beta 1/2 --seed 7

The certificate records whether the matching check was exhaustive or
sampled.
"""
    samples = decorators.config_value(ctx, 'rmbg_samples', samples)
    retries = decorators.config_value(ctx, 'rmbg_retries', retries)
    threshold = decorators.config_value(ctx, 'exhaustive_threshold')
    result = rmbg_build(h, beta, seed, retries, samples=samples, exhaustive_threshold=threshold)
    if result.is_found:
        uxstring.ux('rmbg_verdict', 'pass', result.reason, fg='green')
    output.finish_search(ctx, 'rmbg h={} beta={}'.format(h, beta), result,
                         lambda graph: rmbg_certificate(graph, samples, threshold, seed), out, fmt,
                         kind='rmbg', h=h, beta=str(beta))
