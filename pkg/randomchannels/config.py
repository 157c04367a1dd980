#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Package that holds the bounds and tolerances of the laboratory and
reads the optional rules file.
"""

## \package randomchannels.config

from __future__ import absolute_import, print_function, unicode_literals

import os
import sys
from shutil import copyfile
from burger import import_py_script

## lab_rules.py is the optional python rules file
LAB_RULES_PY = 'lab_rules.py'

## Largest m for which S_m may be enumerated element by element
MAX_GROUP_DEGREE = 8

## Largest p for a Weingarten table on S_p
MAX_WEINGARTEN_DEGREE = 8

## Largest moment order without the opt in flag
MAX_MOMENT_ORDER = 3

## Largest moment order with the opt in flag
OPT_IN_MOMENT_ORDER = 4

## Matrices larger than this use LAPACK instead of Jacobi rotations
JACOBI_MAX_DIMENSION = 64

## Stop Jacobi sweeps when off diagonal mass is below this (relative)
JACOBI_TOLERANCE = 1e-12

## Maximum number of Jacobi sweeps before giving up
JACOBI_MAX_SWEEPS = 100

## Tolerance for freshly constructed objects (norms, unitarity)
CONSTRUCTION_TOLERANCE = 1e-10

## Tolerance for checking inputs handed in by callers
VERIFICATION_TOLERANCE = 1e-8

## Negative eigenvalues above this are clamped to zero
NEGATIVE_EIGENVALUE_TOLERANCE = 1e-9

## Number of alpha permutations per unit of work in moment sums
ALPHA_CHUNK_SIZE = 512

## Significant digits for floats in reports
REPORT_DIGITS = 12

## Seeds must fit in an unsigned 64 bit integer
MAX_SEED = (1 << 64) - 1

## Decimal digits carried by mpmath when accumulating floating sums
MPMATH_DIGITS = 40

########################################


def save_default(working_directory=None, destinationfile=LAB_RULES_PY):
    """
    Save a copy of the template lab_rules.py file.

    The template documents every key the rules file may return for each
    command, and can be edited and passed back with ``--rules-file``.

    Args:
        working_directory: Directory to save the destination file
        destinationfile: Pathname of where to save the rules file
    Returns:
        Zero on success, non zero on failure.
    """

    # If the destination is not an absolute path...
    if not os.path.isabs(destinationfile):
        # Prepend the working directory
        if not working_directory:
            working_directory = os.getcwd()
        destinationfile = os.path.join(working_directory, destinationfile)

    # Get the source file path
    src = os.path.join(
        os.path.dirname(
            os.path.abspath(__file__)),
        LAB_RULES_PY)

    try:
        copyfile(src, destinationfile)
    except (IOError, OSError) as error:
        print(error, file=sys.stderr)
        return 1
    return 0

########################################


def import_rules(file_name=None, verbose=False):
    """
    Load in a rules file.

    Only an explicitly named file is loaded, there is no directory scan
    so a run is fully described by its command line.

    Args:
        file_name: File to load, None loads nothing.
        verbose: If True, print the loaded file's name.

    Returns:
        The ``rules`` function of the file or None if no file was given.
    Exception:
        ValueError if the file is missing, corrupt or has no rules().
    """

    if file_name is None:
        return None

    file_name = os.path.abspath(file_name)
    if not os.path.isfile(file_name):
        raise ValueError('Rules file "{}" was not found.'.format(file_name))

    lab_rules = import_py_script(file_name)
    if not lab_rules:
        raise ValueError('Rules file "{}" was corrupt.'.format(file_name))

    rules = getattr(lab_rules, 'rules', None)
    if not callable(rules):
        raise ValueError(
            'Rules file "{}" has no rules() function.'.format(file_name))

    if verbose:
        print('Using rules file {}'.format(file_name), file=sys.stderr)
    return rules
