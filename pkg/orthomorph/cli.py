"""
The orthomorph command line interface.

Every subcommand prints its result (a certificate or a report) as JSON or
CSV on stdout and logs progress to stderr. The exit code carries the
outcome: 0 found or verified, 1 proved impossible or rejected, 2 undecided
within the budget, 64 for bad input and 70 for an internal error.
"""
# standart python imports
import logging
import sys

# 3rd party imports
import click

# orthomorph imports
import orthomorph
from .commands.util import logger as click_logger
from .commands.util import config as orthomorph_config
from .commands.util import decorators
from .commands.util import exceptions
from .commands.util import uxstring
from .commands.absorber import absorber
from .commands.absorber import rmbg
from .commands.families import families
from .commands.fgt import cycle_type
from .commands.fgt import fgt
from .commands.hall_paige import groups
from .commands.hall_paige import hall_paige
from .commands.matchable import matchable
from .commands.probe import probe
from .commands.probe import typicality
from .commands.sequence import sequence
from .commands.sweep import sweep
from .commands.verify import verify
from .commands.zerosum import zerosum_partition

logger = logging.getLogger(__name__)

CONTEXT_SETTINGS = dict(help_option_names=['-h', '--help'])


def parse_config(config_file=orthomorph.ORTHOMORPH_CONFIG_FILE, config_dict=None, debug=False):
    """Get the configuration that drives all orthomorph commands.

    The config_file (typically ~/.orthomorph/config.json) supplies the
    user's defaults and config_dict (the --config KEY VALUE pairs)
    overrides them. Tests can call this directly to build the click
    context object.

    Returns:
        dict: the Config instance under 'config' and the debug flag.
    """
    try:
        config = orthomorph_config.Config(config_file, config_dict)
    except exceptions.FileDecodeError as e:
        raise click.ClickException(uxstring.UxString.Error.file_decode.format(str(e)))
    except ValueError as e:
        raise exceptions.UsageFailure(uxstring.UxString.Error.bad_config.format(e))
    return dict(config=config, debug=debug)


@click.group(context_settings=CONTEXT_SETTINGS)
@click.option('--config-file',
              envvar='ORTHOMORPH_CONFIG_FILE',
              default=orthomorph.ORTHOMORPH_CONFIG_FILE,
              metavar='PATH',
              help='Path to config (default: %s)' % orthomorph.ORTHOMORPH_CONFIG_FILE)
@click.option('--config', 'config_pairs',
              nargs=2,
              multiple=True,
              metavar='KEY VALUE',
              help='Overrides a config key/value pair.')
@click.option('--debug',
              is_flag=True,
              envvar='ORTHOMORPH_DEBUG',
              help='Log search details and display stack traces for errors.')
@click.option('--quiet', '-q',
              is_flag=True,
              help='Only log warnings and errors.')
@click.version_option(orthomorph.ORTHOMORPH_VERSION, message=orthomorph.ORTHOMORPH_VERSION_MESSAGE)
@click.pass_context
@decorators.catch_all
def main(ctx, config_file, config_pairs, debug, quiet):
    """Search and verify orthomorphisms of finite abelian groups.

\b
Groups are written Z7, Z4xZ2 or Z2^3. Every search is deterministic for a
given --seed and stops at --budget-nodes; run any command with -h for its
options.
"""
    click_logger.set_verbosity(quiet, debug)
    ctx.obj = parse_config(config_file=config_file, config_dict=dict(config_pairs), debug=debug)


main.add_command(absorber)
main.add_command(cycle_type)
main.add_command(families)
main.add_command(fgt)
main.add_command(groups)
main.add_command(hall_paige)
main.add_command(matchable)
main.add_command(probe)
main.add_command(rmbg)
main.add_command(sequence)
main.add_command(sweep)
main.add_command(typicality)
main.add_command(verify)
main.add_command(zerosum_partition)


def run(argv=None):
    """ Runs the command line and returns its exit code instead of exiting.

    Usage errors (unknown options, a malformed group spec) exit with 64.
    """
    try:
        rv = main.main(args=argv, prog_name='orthomorph', standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return exceptions.EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo('Aborted!', err=True)
        return 1
    return rv if isinstance(rv, int) else 0


def run_main():
    sys.exit(run())


if __name__ == "__main__":
    run_main()
