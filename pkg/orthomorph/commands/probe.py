""" Orthomorph commands reporting empirical statistics: gadget probes and typicality """
# standart python imports
import collections
import logging

# 3rd party imports
import click

# orthomorph imports
from ..patterns import Pattern
from ..patterns import probe_gadget_availability
from ..rainbow import typicality_stats
from ..sequencing import ColorSequence
from .util import decorators
from .util import exceptions
from .util import output
from .util import params
from .util import uxstring

# Creates a ClickLogger
logger = logging.getLogger(__name__)

GADGETS = ('connecting-path', 'rooted-triangle', 'path', 'cycle')


def _gadget(group, gadget, u, v, colors):
    """ The pattern named by --gadget, built from the endpoint and colour options """
    if gadget in ('connecting-path', 'rooted-triangle'):
        if u is None or (gadget == 'connecting-path' and v is None):
            raise exceptions.UsageFailure("--gadget {} needs --u{}".format(
                gadget, ' and --v' if gadget == 'connecting-path' else ''))
        if gadget == 'rooted-triangle':
            return Pattern.rooted_triangle(params.to_elements(group, [u])[0])
        return Pattern.connecting_path(*params.to_elements(group, [u, v]))
    if not colors:
        raise exceptions.UsageFailure("--gadget {} needs --colors".format(gadget))
    sequence = ColorSequence(params.to_elements(group, colors), group)
    return Pattern.path(sequence) if gadget == 'path' else Pattern.cycle(sequence)


@click.command("probe")
@click.option('--group', '-g', 'group', type=params.GROUP, required=True, help='Group spec, e.g. Z101.')
@click.option('--gadget', type=click.Choice(GADGETS), required=True, help='Pattern to look for.')
@click.option('--u', 'u', type=click.INT, default=None, help='Root vertex of the gadget.')
@click.option('--v', 'v', type=click.INT, default=None, help='End vertex of a connecting path.')
@click.option('--colors', type=params.INT_LIST, default=None, help='Colour indices of a path or cycle.')
@click.option('--p', 'p_random', type=click.FloatRange(0, 1), required=True,
              help='Probability that an element joins each random pool.')
@click.option('--forbidden-size', type=click.IntRange(min=0), default=0, show_default=True,
              help='Size of the random forbidden set.')
@click.option('--trials', type=click.IntRange(min=1), default=100, show_default=True,
              help='Number of independent trials.')
@click.option('--attempts', type=click.IntRange(min=1), default=None,
              help='Random projections tried per trial before giving up.')
@click.pass_context
@decorators.seed_option
@decorators.output_options
@decorators.catch_all
def probe(ctx, group, gadget, u, v, colors, p_random, forbidden_size, trials, attempts, seed, out, fmt):
    """Estimate how often a gadget fits into random vertex and colour pools.

\b
Usage
-----
$ orthomorph probe --group Z101 --gadget rooted-triangle --u 0 --p 0.3 --trials 200

The result is Monte Carlo evidence: a success rate with its 95% Wilson
interval, reproducible from --seed.
"""
    attempts = decorators.config_value(ctx, 'probe_attempts', attempts)
    pattern = _gadget(group, gadget, u, v, colors)
    report = probe_gadget_availability(group, p_random, pattern, forbidden_size, trials, seed, attempts)
    uxstring.ux('evidence_monte_carlo', trials, seed)
    output.log_table([(report.successes, report.trials, '{:.3f}'.format(report.rate),
                       '[{:.3f}, {:.3f}]'.format(report.low, report.high))],
                     ['successes', 'trials', 'rate', 'wilson 95%'])

    doc = collections.OrderedDict([
        ("group", str(group)), ("gadget", gadget), ("p", p_random),
        ("forbidden_size", forbidden_size), ("evidence", "monte-carlo"), ("seed", seed),
    ])
    doc.update(report.to_dict())
    output.emit(doc, out, fmt)
    ctx.exit(0)


@click.command("typicality")
@click.option('--group', '-g', 'group', type=params.GROUP, required=True, help='Group spec, e.g. Z13.')
@click.option('--signs', type=params.INT_LIST, default='1,1,1', show_default=True,
              help='Coefficients s1,s2,s3 of s1*a + s2*b + s3*c = 0, each 1 or -1.')
@click.option('--gamma', type=params.FRACTION, default=None, help='Relative tolerance, e.g. 1/10.')
@click.option('--p', 'p', type=params.FRACTION, default=None, help='Edge density, e.g. 1/13.')
@click.pass_context
@decorators.output_options
@decorators.catch_all
def typicality(ctx, group, signs, gamma, p, out, fmt):
    """Degree statistics of the hypergraph of solutions to a three-term equation.

\b
Usage
-----
$ orthomorph typicality --group Z13 --signs 1,1,-1 --gamma 1/10 --p 1/13

With --gamma and --p the (gamma, p, n)-typicality verdict decides the exit
code; without them the statistics are reported and the exit code is 0.
"""
    if (gamma is None) != (p is None):
        raise exceptions.UsageFailure("Give both --gamma and --p, or neither.")
    report = typicality_stats(group, signs, gamma=gamma, p=p)
    output.log_table([(report.min_degree, report.max_degree, report.min_pair_degree, report.max_pair_degree)],
                     ['min degree', 'max degree', 'min pair degree', 'max pair degree'])

    doc = collections.OrderedDict([("group", str(group)), ("signs", list(signs))])
    if gamma is not None:
        doc["gamma"] = str(gamma)
        doc["p"] = str(p)
    doc.update(report.to_dict())
    output.emit(doc, out, fmt)
    ctx.exit(0 if report.verdict is None else report.verdict.value)
