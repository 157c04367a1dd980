#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Root namespace for the randomchannels laboratory

"""

#
## \package randomchannels
#
# Randomchannels computes exact Weingarten tables, samples tensor
# products of Haar random quantum channels and compares their output
# spectra with exact finite n moments and n -> infinity predictions.
#

#
## \mainpage
#
# \htmlinclude README.html
#
# \par To use in your own script:
#
# \code
# from randomchannels import *
#
# params = ChannelParams(n=200, k=2)
# state = build_input('bell', params)
# spectra = monte_carlo(params, 'conjugate', state, trials=50, seed=7)
# print(spectra.means())
#
# \endcode
#

from __future__ import absolute_import, print_function, unicode_literals

from .__pkginfo__ import NUMVERSION, VERSION, AUTHOR, TITLE, SUMMARY, \
    URI, EMAIL, LICENSE, COPYRIGHT
from .enums import Tier, Pairing, InputTypes, OutputTypes, MomentModels
from .symgroup import Permutation, LabeledIndex
from .weingarten import WeingartenTable, build_table, wg, asymptotic_wg
from .channels import ChannelParams, InputState, EmpiricalSpectrum, \
    build_input, monte_carlo, sample_output, hayden_winter_check
from .moments import MomentRequest, exact_moment, moment_conjugate, \
    moment_identical, moment_mixed, moment_asymptotic_gap
from .asymptotics import SpectralAtoms, ModelLimits, \
    limit_spectrum_conjugate, limit_moment_conjugate, limit_spectrum_flat, \
    limit_spectrum_mixed, predicted_spectrum, entropy_scan
from .validators import CheckResult

########################################

## Current version of the library as a numeric tuple
__numversion__ = NUMVERSION

## Current version of the library
__version__ = VERSION

## Author's name
__author__ = AUTHOR

## Name of the module
__title__ = TITLE

## Summary of the module's use
__summary__ = SUMMARY

## Home page
__uri__ = URI

## Email address for bug reports
__email__ = EMAIL

## Type of license used for distribution
__license__ = LICENSE

## Copyright owner
__copyright__ = COPYRIGHT

## Items to import on "from randomchannels import *"

__all__ = [
    'randomchannels',

    'Tier',
    'Pairing',
    'InputTypes',
    'OutputTypes',
    'MomentModels',

    'Permutation',
    'LabeledIndex',
    'WeingartenTable',
    'build_table',
    'wg',
    'asymptotic_wg',

    'ChannelParams',
    'InputState',
    'EmpiricalSpectrum',
    'build_input',
    'monte_carlo',
    'sample_output',
    'hayden_winter_check',

    'MomentRequest',
    'exact_moment',
    'moment_conjugate',
    'moment_identical',
    'moment_mixed',
    'moment_asymptotic_gap',

    'SpectralAtoms',
    'ModelLimits',
    'limit_spectrum_conjugate',
    'limit_moment_conjugate',
    'limit_spectrum_flat',
    'limit_spectrum_mixed',
    'predicted_spectrum',
    'entropy_scan',

    'CheckResult'
]

########################################


def randomchannels(working_directory=None, args=None):
    """
    Invoke the randomchannels command line from within Python

    Args:
        working_directory: ``None`` for current working directory.
        args: Argument list to pass to the command, None uses sys.argv
    Returns:
        Zero on success, 1 if a check failed, 2 on invalid input.
    See Also:
        randomchannels.__main__
    """
    from .__main__ import main
    return main(working_directory, args)
