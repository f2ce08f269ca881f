""" All orthomorph command line related decorators """
import functools
import logging
import sys
import traceback

import click

import orthomorph
from ...exceptions import BudgetExceededError
from ...exceptions import CertificateError
from ...exceptions import DomainError
from ...exceptions import PreconditionError
from ...search import SearchBudget
from . import exceptions
from . import uxstring
from .config import Config


# Creates a ClickLogger
logger = logging.getLogger(__name__)


def config_value(ctx, name, value=None):
    """ Returns `value` unless it is None, else the configured value for `name`.

    Commands invoked without the main group (e.g. in tests) fall back on
    Config.DEFAULTS.
    """
    if value is not None:
        return value
    obj = ctx.obj or {}
    config = obj.get('config')
    if config is not None and name in config.state:
        return config.state[name]
    return Config.DEFAULTS.get(name)


def budget_options(f):
    """ Adds --budget-nodes / --budget-seconds and passes a SearchBudget as `budget` """

    def _budget_options(ctx, *args, budget_nodes=None, budget_seconds=None, **kwargs):
        budget = SearchBudget(config_value(ctx, 'budget_nodes', budget_nodes),
                              config_value(ctx, 'budget_seconds', budget_seconds))
        return f(ctx, *args, budget=budget, **kwargs)

    wrapper = functools.update_wrapper(_budget_options, f)
    wrapper = click.option('--budget-seconds', type=click.FLOAT, default=None,
                           help='Wall-clock cap per search (default: none).')(wrapper)
    wrapper = click.option('--budget-nodes', type=click.INT, default=None,
                           help='Node cap per search (default: 10^8).')(wrapper)
    return wrapper


def seed_option(f):
    """ Adds --seed, resolved against the config (default 0) """

    def _seed_option(ctx, *args, seed=None, **kwargs):
        return f(ctx, *args, seed=config_value(ctx, 'seed', seed), **kwargs)

    wrapper = functools.update_wrapper(_seed_option, f)
    return click.option('--seed', type=click.INT, default=None,
                        help='Seed for every random choice (default: 0).')(wrapper)


def output_options(f=None, default_format=None):
    """ Adds --out and --format; passes `out` (a path or None) and `fmt`

    Used bare, or as output_options(default_format=...) for commands whose
    natural output is not the configured format.
    """
    if f is None:
        return functools.partial(output_options, default_format=default_format)

    def _output_options(ctx, *args, out=None, fmt=None, **kwargs):
        fmt = fmt or default_format or config_value(ctx, 'format')
        return f(ctx, *args, out=out, fmt=fmt, **kwargs)

    wrapper = functools.update_wrapper(_output_options, f)
    wrapper = click.option('--format', 'fmt', type=click.Choice(['json', 'csv']), default=None,
                           help='Output format (default: json).')(wrapper)
    wrapper = click.option('--out', type=click.Path(dir_okay=False, writable=True), default=None,
                           help='Write the result here instead of stdout.')(wrapper)
    return wrapper


def catch_all(func):
    """
    Maps library exceptions to exit codes and hides tracebacks unless in debug mode.

    Domain, precondition and certificate errors exit with 64, a budget
    exhausted outside a search with 2 and anything else with 70.

    Args:
        func (function): function being decorated
    """
    def _catch_all(ctx, *args, **kwargs):
        """
        Args:
            ctx (click.Context): cli context object
            args (tuple): tuple of args of the fuction
            kwargs (dict): keyword args of the function
        """
        def stderr(msg):
            click.echo(click.style(msg, fg='red'), file=sys.stderr)
        try:
            return func(ctx, *args, **kwargs)
        except click.Abort:
            # on SIGINT click raises click.Abort
            logger.error('')  # just to get a newline
            raise

        except (click.ClickException, click.exceptions.Exit):
            raise  # Let click deal with it

        except CertificateError as e:
            raise exceptions.ValidationError(uxstring.UxString.Error.usage.format(e))

        except (DomainError, PreconditionError) as e:
            raise exceptions.UsageFailure(uxstring.UxString.Error.usage.format(e))

        except BudgetExceededError as e:
            raise exceptions.BudgetFailure(uxstring.UxString.Error.budget.format(e))

        except Exception:
            stderr(uxstring.UxString.Error.internal)

            # only dump the stack traces if the debug flag is set
            if (ctx.obj or {}).get('debug') or orthomorph.ORTHOMORPH_DEBUG:
                stderr("\nFunction: {}.{}".format(func.__module__, func.__name__))
                stderr("Args: {}".format(args))
                stderr("Kwargs: {}".format(kwargs))
                stderr("{}".format(traceback.format_exc()))
            else:
                stderr(uxstring.UxString.Error.internal_debug)
        ctx.exit(exceptions.EXIT_INTERNAL)

    return functools.update_wrapper(_catch_all, func)
