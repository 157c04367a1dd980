#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Validation records for laboratory checks.

Every comparison between an exact value, a Monte Carlo estimate and an
asymptotic prediction produces a CheckResult. The command line exits
with zero only if every CheckResult passed.
"""

## \package randomchannels.validators

from __future__ import absolute_import, print_function, unicode_literals

from burger import is_string, BooleanProperty, StringProperty, \
    IntegerProperty

## Error code for a passing check
CHECK_PASSED = 0

## Error code for a failing check
CHECK_FAILED = 1

########################################


class CheckResult(object):
    """
    Outcome of a single laboratory check.

    When a check completes, a CheckResult is created and appended to the
    ``checks`` list of a report.
    """

    ## Integer error code, zero if the check passed.
    error = IntegerProperty('_error')

    ## Name of the check.
    name = StringProperty('_name')

    ## Message describing the outcome.
    msg = StringProperty('_msg')

    ## True if the check was only informative.
    advisory = BooleanProperty('_advisory')

    def __init__(self, name, error=CHECK_PASSED, msg=None, advisory=False):
        """
        Initializers for a CheckResult.

        Args:
            name: Name of the check.
            error: Integer error code, zero if no error.
            msg: Message text, if available.
            advisory: True if a failure must not change the exit code.
        """

        self.name = name
        self.error = error
        self.msg = msg
        self.advisory = advisory

    def __repr__(self):
        """
        Convert the check into a string.

        Returns:
            A full status string.
        """

        if self.error and self.advisory:
            result = 'Advisory check "{}" failed'.format(self.name)
        elif self.error:
            result = 'Check "{}" failed'.format(self.name)
        else:
            result = 'Check "{}" passed'.format(self.name)
        if self.msg:
            result += ' "{}"'.format(self.msg)
        return result

    __str__ = __repr__

    def passed(self):
        """
        Return True if the check passed or is advisory.
        """
        return self.advisory or not self.error

    def get_error_code(self):
        """
        Return the integer error code.
        """
        return self.error

    def to_dict(self):
        """
        Return a dict for reports.
        """
        return {
            'name': self.name,
            'passed': not self.error,
            'advisory': self.advisory,
            'msg': self.msg}

########################################


def check_within(name, value, target, tolerance):
    """
    Check that |value - target| <= tolerance.

    Args:
        name: Name of the check.
        value: Measured value.
        target: Expected value.
        tolerance: Allowed absolute deviation.
    Returns:
        CheckResult instance.
    """

    deviation = abs(float(value) - float(target))
    msg = '|{:.6g} - {:.6g}| = {:.3g} <= {:.3g}'.format(
        float(value), float(target), deviation, float(tolerance))
    if deviation <= tolerance:
        return CheckResult(name, CHECK_PASSED, msg)
    return CheckResult(name, CHECK_FAILED, msg.replace('<=', '>'))

########################################


def check_true(name, condition, msg=None):
    """
    Turn a boolean into a CheckResult.

    Args:
        name: Name of the check.
        condition: Truth value of the check.
        msg: Message text.
    Returns:
        CheckResult instance.
    """

    return CheckResult(name, CHECK_PASSED if condition else CHECK_FAILED, msg)

########################################


def check_non_increasing(name, values, skip=1, advisory=False):
    """
    Check that a sequence does not increase.

    The first ``skip`` entries are not compared with their predecessor,
    small dimensions are still pre asymptotic.

    Args:
        name: Name of the check.
        values: Sequence of deviations.
        skip: Number of leading entries exempt from the test.
        advisory: True if an increase must not change the exit code.
    Returns:
        CheckResult instance.
    """

    bad = []
    for index in range(max(skip, 1), len(values)):
        if values[index] > values[index - 1]:
            bad.append(index)
    if bad:
        return CheckResult(
            name, CHECK_FAILED,
            'increase at row(s) {}'.format(', '.join(str(i) for i in bad)),
            advisory)
    return CheckResult(name, CHECK_PASSED, 'non increasing', advisory)

########################################


def all_passed(checks):
    """
    Return True if every non advisory check passed.

    Args:
        checks: Iterable of CheckResult.
    """

    return all(check.passed() for check in checks)

########################################


def parse_int_list(value):
    """
    Convert a comma separated string or a list into a list of integers.

    Args:
        value: '8,16,32', 8, or [8, 16].
    Returns:
        list of int.
    Exception:
        ValueError if an entry is not an integer.
    """

    if value is None:
        return []
    if is_string(value):
        value = [item for item in value.split(',') if item.strip()]
    elif not isinstance(value, (list, tuple)):
        value = [value]
    return [int(item) for item in value]
