#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that holds the experiment presets of each subcommand.
"""

## \package randomchannels.defaults

from __future__ import absolute_import, print_function, unicode_literals

import sys
from burger import convert_to_array, is_string

from .config import MAX_SEED
from .validators import parse_int_list

## Default settings for each subcommand
# Each key must be lower case
_COMMAND_DEFAULTS = {
    'wg': {
        'n': 4,
        'p': 2,
        'format': 'json'},
    'simulate': {
        'pairing': 'conjugate',
        'input': 'bell',
        'output_type': 'complementary',
        'n': 200,
        'k': 2,
        'din': None,
        't': None,
        'l': 2,
        'm': 1.0,
        'rank': None,
        'trials': 50,
        'seed': 0,
        'format': 'csv'},
    'moments': {
        'model': 'conjugate',
        'n': [8],
        'k': 2,
        'din': None,
        't': None,
        'l': 2,
        'p': 2,
        'trials': 2000,
        'seed': 0,
        'geodesic_only': False,
        'format': 'json'},
    'convergence': {
        'pairing': 'conjugate',
        'input': 'bell',
        'output_type': 'complementary',
        'n': [50, 100, 200],
        'k': 2,
        't': None,
        'l': 2,
        'm': 1.0,
        'rank': None,
        'trials': 50,
        'seed': 0,
        'format': 'csv'},
    'hw': {
        'n': 64,
        'k': 2,
        'din': None,
        'trials': 100,
        'seed': 0,
        'format': 'json'}
}

## Settings that hold a list of dimensions
_LIST_SETTINGS = ('n',)

## Settings shared by every subcommand
_COMMON_SETTINGS = ('jobs', 'bits', 'opt_in', 'out', 'verbose')

########################################


def get_command_names():
    """
    Return the sorted names of the subcommands with presets.
    """
    return sorted(_COMMAND_DEFAULTS)

########################################


def get_command_settings(command, args=None, rules=None):
    """
    Resolve the settings of a subcommand.

    An explicit command line value wins over the value of the rules file,
    which wins over the preset.

    Args:
        command: Name of the subcommand.
        args: argparse namespace, options left as None were not given.
        rules: rules() function of a rules file or None.
    Returns:
        dict of settings.
    Exception:
        ValueError on an unknown command or an invalid seed.
    """

    preset = _COMMAND_DEFAULTS.get(command.lower(), None)
    if preset is None:
        raise ValueError('No presets for command "{}".'.format(command))

    # Use a copy
    settings = dict(preset)
    settings.update({'jobs': 1, 'bits': False, 'opt_in': False,
                     'out': None, 'verbose': False})

    if rules:
        overrides = rules(command)
        if overrides:
            for key, value in overrides.items():
                if key in settings:
                    settings[key] = value
                else:
                    print('Ignoring unknown rule "{}" for {}'.format(
                        key, command), file=sys.stderr)

    if args is not None:
        for key in list(preset) + list(_COMMON_SETTINGS):
            value = getattr(args, key, None)
            if value is not None:
                settings[key] = value

    for key in _LIST_SETTINGS:
        if isinstance(preset.get(key), list):
            value = settings[key]
            if not is_string(value):
                value = convert_to_array(value)
            settings[key] = parse_int_list(value)

    seed = settings.get('seed')
    if seed is not None and not 0 <= int(seed) <= MAX_SEED:
        raise ValueError('Seed {} is not a 64 bit unsigned integer.'.format(
            seed))
    if int(settings['jobs']) < 1:
        raise ValueError('jobs must be at least 1, got {}.'.format(
            settings['jobs']))
    return settings
