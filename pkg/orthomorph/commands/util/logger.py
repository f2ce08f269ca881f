""" Logger module which when imported changes the default logger class to ClickLogger

    The orthomorph command line tool prints through click.echo() & click.style().
    Importing `orthomorph.commands.util.logger` changes the default class created
    during `logging.getLogger()` to ClickLogger and installs a handler on the
    `orthomorph` logger that echoes every record to stderr, so stdout only ever
    carries the JSON/CSV result of a command.
"""
# standard python imports
import logging

# 3rd party imports
import click


class ClickLogFormatter(logging.Formatter):
    """ Styles messages by calling click.style() """

    # supported click styles
    STYLES = ("fg", "bg", "bold", "dim", "underline", "reverse", "reset", "blink")

    def format(self, record):
        """ Interpolates the record and styles it with any style attributes it carries.

            Style keyword arguments given to a ClickLogger call are set as
            attributes of the record; any of them found in STYLES are passed
            on to click.style().

        Args:
            record (logging.LogRecord): record which gets styled with click.style()

        Returns:
            str: the styled message
        """
        message = record.getMessage()
        kwargs = {name: getattr(record, name) for name in self.STYLES if hasattr(record, name)}
        if kwargs:
            message = click.style(message, **kwargs)
        return message


class ClickLogHandler(logging.Handler):
    """ Logs messages using click.echo(), to stderr unless told otherwise """

    ECHO_KWARGS = ("nl", "err", "color")

    def emit(self, record):
        """ Echos the formatted record with click.echo()

            Any of ECHO_KWARGS found as record attributes override the
            defaults, e.g. logger.info(msg, nl=False).

        Args:
            record (logging.LogRecord): record which gets echoed with click.echo()
        """
        try:
            message = self.format(record)
            kwargs = dict(err=True)
            for kwarg_name in self.ECHO_KWARGS:
                if hasattr(record, kwarg_name):
                    kwargs[kwarg_name] = getattr(record, kwarg_name)
            click.echo(message, **kwargs)
        except (KeyboardInterrupt, SystemExit):
            raise
        except Exception:
            self.handleError(record)


class ClickLogger(logging.getLoggerClass()):
    """ Logging class which handles click input and adds it to the extra param

        By specifying keyword arguments to the log functions, the record will
        have them as attributes, making records easy to style and echo.
    """

    def debug(self, msg, *args, **kwargs):
        """ Calls Logger.debug with extra set to kwargs """
        super(ClickLogger, self).debug(msg, *args, extra=kwargs)

    def info(self, msg, *args, **kwargs):
        """ Calls Logger.info with extra set to kwargs """
        super(ClickLogger, self).info(msg, *args, extra=kwargs)

    def warning(self, msg, *args, **kwargs):
        """ Calls Logger.warning with extra set to kwargs """
        super(ClickLogger, self).warning(msg, *args, extra=kwargs)

    def error(self, msg, *args, **kwargs):
        """ Calls Logger.error with extra set to kwargs """
        super(ClickLogger, self).error(msg, *args, extra=kwargs)

    def critical(self, msg, *args, **kwargs):
        """ Calls Logger.critical with extra set to kwargs """
        super(ClickLogger, self).critical(msg, *args, extra=kwargs)


def set_verbosity(quiet=False, debug=False):
    """ Sets the level of the package logger from the --quiet / --debug flags """
    if debug:
        click_logger.setLevel(logging.DEBUG)
    elif quiet:
        click_logger.setLevel(logging.WARNING)
    else:
        click_logger.setLevel(logging.INFO)


# creates the handler which prints records
click_log_handler = ClickLogHandler()

# creates the formatter which styles the records
click_log_handler.formatter = ClickLogFormatter()

# captures the package logger
click_logger = logging.getLogger('orthomorph')

# adds the handler, formatter, and sets default level to the second lowest
if click_log_handler not in click_logger.handlers:
    click_logger.addHandler(click_log_handler)
click_logger.setLevel(logging.INFO)
logging.setLoggerClass(ClickLogger)
