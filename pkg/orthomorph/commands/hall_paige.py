""" Orthomorph commands about whole groups: the Hall-Paige test and classification """
# standart python imports
import collections
import logging

# 3rd party imports
import click

# orthomorph imports
from ..group import check_two_three_lemma
from ..group import enumerate_abelian_groups
from ..group import hall_paige as hall_paige_holds
from ..group import mult_image_size
from ..group import primary_decomposition
from ..search import Outcome
from ..solver import find_orthomorphism
from .util import decorators
from .util import output
from .util import params
from .util import uxstring

# Creates a ClickLogger
logger = logging.getLogger(__name__)


@click.command("hall-paige")
@click.option('--group', '-g', 'group', type=params.GROUP, required=True, help='Group spec, e.g. Z4.')
@click.option('--search', is_flag=True, default=False,
              help='Also look for an orthomorphism without the sum shortcut.')
@click.pass_context
@decorators.budget_options
@decorators.output_options
@decorators.catch_all
def hall_paige(ctx, group, search, budget, out, fmt):
    """Check whether the elements of a group sum to the identity.

\b
Usage
-----
$ orthomorph hall-paige --group Z4
{"group": "Z4", "hall_paige": false}  (exit code 1)

The output names the group under "group" next to the verdict. With --search a plain backtracking search for an orthomorphism is run as
well and its outcome reported under "orthomorphism".
"""
    holds = hall_paige_holds(group)
    total = group.element(group.sum_indices(range(group.order)))
    if holds:
        uxstring.ux('hall_paige_holds', group)
    else:
        uxstring.ux('hall_paige_fails', group, total)
    doc = collections.OrderedDict([("group", str(group)), ("hall_paige", holds)])
    if search:
        result = find_orthomorphism(group, budget, prune_sums=False)
        uxstring.ux('search_outcome', 'orthomorphism', result.outcome.label, result.nodes)
        doc["orthomorphism"] = result.outcome.label
        if result.outcome is Outcome.UNKNOWN:
            output.emit(doc, out, fmt)
            ctx.exit(Outcome.UNKNOWN.value)
    output.emit(doc, out, fmt)
    ctx.exit(0 if holds else 1)


@click.command("groups")
@click.option('--order', '-n', 'order', type=click.IntRange(min=1), required=True,
              help='Order of the groups to list.')
@click.pass_context
@decorators.output_options
@decorators.catch_all
def groups(ctx, order, out, fmt):
    """List the abelian groups of a given order up to isomorphism.

\b
Usage
-----
$ orthomorph groups --order 8

For every class the primary decomposition, the Hall-Paige condition and the
sizes of the images of x -> 2x and x -> 3x are reported.
"""
    header = ['group', 'primary', 'hall_paige', 'image_2', 'image_3', 'two_three']
    rows = []
    for group in enumerate_abelian_groups(order):
        rows.append([str(group), 'x'.join('Z{}'.format(q) for q in primary_decomposition(group)) or 'Z1',
                     hall_paige_holds(group), mult_image_size(2, group), mult_image_size(3, group),
                     check_two_three_lemma(group)])
    uxstring.ux('groups_header', order)
    output.log_table(rows, header)
    doc = collections.OrderedDict([
        ("order", order),
        ("groups", [collections.OrderedDict(zip(header, row)) for row in rows]),
    ])
    output.emit(doc, out, fmt, header, rows)
    ctx.exit(0)
