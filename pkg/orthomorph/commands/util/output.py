""" Writing command results as JSON or CSV, to stdout or to --out """
import collections
import csv
import io
import json
import logging

import click
import tabulate

from . import uxstring


# Creates a ClickLogger
logger = logging.getLogger(__name__)


def _cell(value):
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, separators=(',', ':'))
    return '' if value is None else value


def to_csv(header, rows):
    """ CSV text with a header line; nested values are written as compact JSON """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def render(doc, fmt='json', header=None, rows=None):
    """ The text of a result.

    Args:
        doc (dict): the JSON document.
        fmt (str): 'json' or 'csv'.
        header, rows: the CSV table; when omitted the top-level keys of
            `doc` become a one-row table.
    """
    if fmt == 'csv':
        if rows is None:
            header, rows = list(doc.keys()), [list(doc.values())]
        return to_csv(header, rows)
    return json.dumps(doc, indent=2, separators=(',', ': ')) + '\n'


def emit(doc, out=None, fmt='json', header=None, rows=None):
    """ Writes the result to `out` (a path) or stdout """
    text = render(doc, fmt, header, rows)
    if out is None:
        click.echo(text, nl=False)
    else:
        with click.open_file(out, 'w') as f:
            f.write(text)
        uxstring.ux('written_to', fmt, out)


def log_table(rows, headers):
    """ Logs a human-readable table to stderr """
    logger.info(tabulate.tabulate(rows, headers=headers, tablefmt="simple"))


def finish_search(ctx, label, result, certificate, out=None, fmt='json', **context):
    """ Emits a certificate for a FOUND result, or the outcome otherwise, and exits with its code.

    Args:
        label (str): name of the search for the log line.
        result (SearchResult): the search outcome.
        certificate (callable): witness -> certificate document.
        context: keys describing the request, echoed in a non-FOUND document.
    """
    uxstring.ux('search_outcome', label, result.outcome.label, result.nodes, fg=result.outcome.color)
    if result.is_found:
        doc = certificate(result.witness)
    else:
        uxstring.ux('search_reason', result.reason)
        doc = collections.OrderedDict(context)
        doc["outcome"] = result.outcome.label
        doc["reason"] = result.reason
        doc["nodes"] = result.nodes
    emit(doc, out, fmt)
    ctx.exit(result.outcome.value)
