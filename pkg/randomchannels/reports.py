#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Render laboratory reports as JSON or CSV.

Floats are rounded to REPORT_DIGITS significant digits and exact
rationals are written as "num/den" strings, so a report is byte
identical across runs with the same flags and seed.
"""

## \package randomchannels.reports

from __future__ import absolute_import, print_function, unicode_literals

import io
import sys
import csv
import json
from fractions import Fraction
import numpy as np
import mpmath
from burger import save_text_file

from .config import REPORT_DIGITS
from .validators import CheckResult, all_passed

########################################


def format_rational(value):
    """
    Render a Fraction as "num/den", the denominator is always present.
    """

    value = Fraction(value)
    return '{}/{}'.format(value.numerator, value.denominator)

########################################


def round_float(value):
    """
    Round a float to REPORT_DIGITS significant digits.
    """
    return float('{:.{}g}'.format(float(value), REPORT_DIGITS))

########################################


def to_plain(value):
    """
    Convert a report value into plain JSON types.

    Args:
        value: Nested dict, list, tuple, numpy array or scalar.
    Returns:
        Object made of dict, list, str, int, float, bool and None.
    """

    # Too many return statements
    # pylint: disable=R0911

    if isinstance(value, CheckResult):
        return to_plain(value.to_dict())
    if isinstance(value, dict):
        return {str(key): to_plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(item) for item in value]
    if isinstance(value, np.ndarray):
        return [to_plain(item) for item in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating, mpmath.mpf)):
        return round_float(value)
    return value

########################################


def format_cell(value):
    """
    Render a single CSV cell.
    """

    value = to_plain(value)
    if isinstance(value, float):
        return '{:.{}g}'.format(value, REPORT_DIGITS)
    if value is None:
        return ''
    return str(value)

########################################


def render_json(report):
    """
    UTF-8 JSON with sorted keys and an indent of 2.

    Returns:
        Text ending with a line feed.
    """

    return json.dumps(to_plain(report), sort_keys=True, indent=2,
                      ensure_ascii=False) + '\n'

########################################


def render_csv(header, rows):
    """
    CSV text with a header line, ``,`` separators and ``\\n`` line feeds.

    Args:
        header: Column names.
        rows: Sequence of sequences in column order.
    """

    stream = io.StringIO()
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(item) for item in row])
    return stream.getvalue()

########################################


def write_report(text, out=None, verbose=False):
    """
    Write a rendered report to a file or stdout.

    Args:
        text: Rendered report.
        out: Pathname, None writes to stdout.
        verbose: Print the file name to stderr.
    """

    if out is None:
        sys.stdout.write(text)
        return
    if verbose:
        print('Writing {}'.format(out), file=sys.stderr)
    save_text_file(out, text.splitlines(), line_feed='\n')

########################################


class LabReport(object):
    """
    Result of one subcommand, ready to be rendered.
    """

    def __init__(self, command, data, header=None, rows=None, checks=None):
        """
        Args:
            command: Name of the subcommand.
            data: dict of report values for the JSON form.
            header: CSV column names, None if there is no CSV form.
            rows: CSV rows in column order.
            checks: list of CheckResult.
        """

        ## Name of the subcommand
        self.command = command

        ## JSON payload
        self.data = data

        ## CSV column names
        self.header = header

        ## CSV rows
        self.rows = rows or []

        ## Validation outcomes
        self.checks = checks or []

    def passed(self):
        """
        True if every non advisory check passed.
        """
        return all_passed(self.checks)

    def render(self, report_format='json'):
        """
        Render as 'json' or 'csv'.

        Exception:
            ValueError on an unknown format or a missing CSV form.
        """

        report_format = report_format.lower()
        if report_format == 'json':
            payload = dict(self.data)
            payload['command'] = self.command
            payload['checks'] = self.checks
            payload['passed'] = self.passed()
            return render_json(payload)
        if report_format == 'csv':
            if self.header is None:
                raise ValueError('{} has no CSV form.'.format(self.command))
            return render_csv(self.header, self.rows)
        raise ValueError('Unknown report format "{}".'.format(report_format))
