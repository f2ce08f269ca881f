""" Orthomorph command partitioning elements into blocks with prescribed sums """
# standart python imports
import logging

# 3rd party imports
import click

# orthomorph imports
from ..certificates import partition_certificate
from ..zerosum import partition_fixed_sum_quads
from ..zerosum import tannenbaum_partition
from ..zerosum import zero_sum_equipartition
from .util import decorators
from .util import exceptions
from .util import output
from .util import params
from .util import uxstring

# Creates a ClickLogger
logger = logging.getLogger(__name__)


@click.command("zerosum-partition")
@click.option('--group', '-g', 'group', type=params.GROUP, required=True, help='Group spec, e.g. Z13.')
@click.option('--k', 'k', type=click.INT, default=None, help='Zero-sum blocks of size k.')
@click.option('--sizes', type=params.INT_LIST, default=None,
              help='Zero-sum blocks of these sizes covering G\\{0}, e.g. "2,4".')
@click.option('--alpha', type=click.INT, default=None, help='Blocks of size 4 each summing to this index.')
@click.option('--elements', '-e', type=params.INT_LIST, default=None,
              help='Indices of the set to split (default: every non-identity element).')
@click.pass_context
@decorators.budget_options
@decorators.seed_option
@decorators.output_options
@decorators.catch_all
def zerosum_partition(ctx, group, k, sizes, alpha, elements, budget, seed, out, fmt):
    """Split a set of group elements into blocks with prescribed sums.

\b
Usage
-----
Zero-sum triples covering Z7 minus 0:
$ orthomorph zerosum-partition --group Z7 --k 3
Zero-sum blocks of sizes 2 and 4 covering Z7 minus 0:
$ orthomorph zerosum-partition --group Z7 --sizes 2,4
Four-element blocks summing to 1:
$ orthomorph zerosum-partition --group Z13 --elements 1,2,3,8 --alpha 1
"""
    if [k, sizes, alpha].count(None) != 2:
        raise exceptions.UsageFailure(uxstring.UxString.Error.needs_mode)
    if elements is None:
        chosen = group.elements()[1:]
    else:
        chosen = params.to_elements(group, elements)

    if sizes is not None:
        if elements is not None:
            raise exceptions.UsageFailure("--sizes always covers every non-identity element")
        result = tannenbaum_partition(group, sizes, budget)
        request = dict(sizes=sizes)
    elif k is not None:
        result = zero_sum_equipartition(chosen, k, group, budget)
        request = dict(k=k)
    else:
        target = params.to_elements(group, [alpha])[0]
        result = partition_fixed_sum_quads(chosen, target, group, budget)
        request = dict(alpha=alpha)
    output.finish_search(ctx, 'partition', result,
                         lambda partition: partition_certificate(partition, seed), out, fmt,
                         group=str(group), kind='partition', **request)
