""" Orthomorph command re-verifying a certificate from scratch """
# standart python imports
import collections
import logging

# 3rd party imports
import click

# orthomorph imports
from ..certificates import load_certificate
from ..certificates import verify_certificate
from ..search import Verdict
from .util import decorators
from .util import output
from .util import uxstring

# Creates a ClickLogger
logger = logging.getLogger(__name__)


@click.command("verify")
@click.argument('certificate', type=click.File('r'))
@click.pass_context
@decorators.budget_options
@decorators.output_options
@decorators.catch_all
def verify(ctx, certificate, budget, out, fmt):
    """Independently re-check a certificate written by another subcommand.

\b
Usage
-----
$ orthomorph fgt --group Z7 --k 3 --out z7.json
$ orthomorph verify z7.json

The stored "verified" flag is ignored. Exit codes: 0 verified, 1 rejected
(the first violated condition is logged), 2 undecided within the budget,
64 for a document that is not a certificate.
"""
    doc = load_certificate(certificate)
    check = verify_certificate(doc, budget)
    kind = doc.get("kind")
    if check.verdict is Verdict.PASS:
        uxstring.ux('verify_pass', kind)
    elif check.verdict is Verdict.FAIL:
        uxstring.ux('verify_fail', kind, check.first_problem)
    else:
        uxstring.ux('verify_unknown', kind, check.first_problem)

    result = collections.OrderedDict([("kind", kind)])
    result.update(check.to_dict())
    output.emit(result, out, fmt)
    ctx.exit(check.verdict.value)
