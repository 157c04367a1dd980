#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Rules file for the randomchannels command line.

Copy this file with ``randomchannels --generate-rules``, edit it and
pass it back with ``--rules-file lab_rules.py``. Values given on the
command line always win over the values returned here.
"""

## \package randomchannels.lab_rules

from __future__ import absolute_import, print_function, unicode_literals

########################################


def rules(command, **kwargs):
    """
    Return default values for a subcommand.

    Args:
        command: Name of the subcommand, 'wg', 'simulate', 'moments',
            'convergence' or 'hw'.
        kwargs: Reserved for future use.
    Returns:
        dict of option names to values, or None to keep the presets.
    """

    # Unused
    del kwargs

    if command == 'simulate':
        return {
            'pairing': 'conjugate',
            'input': 'bell',
            'n': 200,
            'k': 2,
            'trials': 50,
            'seed': 7}

    if command == 'moments':
        return {
            'model': 'conjugate',
            'n': [8],
            'k': 2,
            'p': 2,
            'trials': 2000}

    if command == 'hw':
        return {
            'n': 64,
            'k': 2,
            'trials': 100}

    return None
