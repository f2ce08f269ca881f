"""Strings for the orthomorph CLI."""
import logging

import click

# Creates a ClickLogger. This will not
# not work without the import!
from .logger import ClickLogger
logging.setLoggerClass(ClickLogger)
logger = logging.getLogger(__name__)


def ux(name, *args, **kwargs):
    """Format the given ux string and print to the log.

    Instead of doing this:
    >>> logger.info(UxString.search_outcome.format('fgt', 'found', 12))

    You can do this:
    >>> ux('search_outcome', 'fgt', 'found', 12)

    This simplifies much of the CLI UX.
    """
    mystr = getattr(UxString, name)
    if len(args) > 0:
        out = mystr.format(*args)
    else:
        out = mystr
    return logger.info(out, **kwargs)


class UxString:
    """ Class to namespace all user experience strings """

    # general
    search_outcome = "{}: {} after {} nodes"
    search_reason = "  reason: {}"
    written_to = "Wrote {} to {}"
    evidence_monte_carlo = "Monte Carlo evidence over {} trials (seed {})"

    # hall-paige / groups
    hall_paige_holds = click.style("{} satisfies Hall-Paige", fg='green')
    hall_paige_fails = click.style("{} fails Hall-Paige: its elements sum to {}", fg='red')
    groups_header = "Abelian groups of order {}"

    # sweep
    sweep_start = "Sweeping abelian groups of order 2..{} with {} worker(s)"
    sweep_row = "  {:<14} k={:<3} {:<11} {:>10} nodes"
    sweep_skip = "  {:<14} skipped: {}"
    sweep_summary = click.style("Summary", fg='yellow')
    sweep_passed = click.style("All cells found.", fg='green')
    sweep_failed = click.style("{} cell(s) not found.", fg='red')

    # families
    families_report = click.style("Good family checks", fg='yellow')

    # absorbers
    absorber_verdict = "{}-absorption: {} ({} of {} subfamilies checked)"
    rmbg_verdict = "RMBG verification: {} ({} evidence)"

    # verify
    verify_pass = click.style("{} certificate verified.", fg='green')
    verify_fail = click.style("{} certificate rejected: {}", fg='red')
    verify_unknown = click.style("{} certificate undecided: {}", fg='yellow')

    class Error:
        """ Put all Error type uxstrings here """
        # file errors
        file_decode = "There was an error loading {}. It may be a corrupt or poorly formatted file."
        bad_config = "Bad --config value: {}"

        # input errors
        usage = "{}"
        needs_mode = "Give exactly one of --k, --sizes or --alpha."
        budget = "Budget exhausted: {}"

        # unexpected errors
        internal = "You have experienced an internal error."
        internal_debug = "For more detail, run your command with the debug flag: `orthomorph --debug <command>`."
