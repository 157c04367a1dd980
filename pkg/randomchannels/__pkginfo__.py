#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Randomchannels version data.

Package that contains version specific information for randomchannels
"""

## \package randomchannels.__pkginfo__

from __future__ import unicode_literals

## Numeric version
NUMVERSION = (0, 3, 0)

## String version
VERSION = '.'.join([str(num) for num in NUMVERSION])

## Author's name
AUTHOR = 'Randomchannels developers <randomchannels@users.noreply.github.com>'

## Name of the module
TITLE = 'randomchannels'

## Summary of the module's use
SUMMARY = ('Weingarten calculus, exact moments and Monte Carlo spectra '
           'for tensor products of random quantum channels')

## Home page
URI = 'https://github.com/randomchannels/randomchannels'

## Email address for bug reports
EMAIL = 'randomchannels@users.noreply.github.com'

## Type of license used for distribution
LICENSE = 'MIT License'

## Copyright owner
COPYRIGHT = 'Copyright 2019-2026 Randomchannels developers'
