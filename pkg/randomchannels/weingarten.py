#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exact unitary Weingarten function.

Wg(n, .) is the inverse of sigma -> n^#sigma under convolution on S_p.
It is a class function, so the inverse is found by solving one linear
equation per conjugacy class with unknowns indexed by cycle types, in
exact rational arithmetic. Tables are cached per (n, p).

The large n behaviour is Wg(n, sigma) ~ n^-(p+|sigma|) Mob(sigma) with
the multiplicative Moebius function.
"""

## \package randomchannels.weingarten

from __future__ import absolute_import, print_function, unicode_literals

from fractions import Fraction
from functools import lru_cache
from math import factorial
from threading import Lock
import numpy as np
import sympy
import mpmath

from .config import MAX_WEINGARTEN_DEGREE
from .symgroup import partitions, class_representative, group_table, \
    inverse_table, compose_table, count_cycles_table, ClassIndexer, \
    cycle_type, cycles, length

## Tables already solved, keyed by (n, p)
_TABLE_CACHE = {}

## Guards _TABLE_CACHE
_CACHE_LOCK = Lock()

########################################


class WeingartenTable(object):
    """
    Exact values of Wg(n, .) on the cycle types of S_p.
    """

    def __init__(self, dimension, degree, values):
        """
        Args:
            dimension: The n of Wg(n, .).
            degree: The p of S_p.
            values: dict of cycle type tuple to Fraction.
        """

        ## Dimension n
        self.dimension = dimension

        ## Degree p
        self.degree = degree

        ## dict of cycle type to exact Fraction
        self.values = dict(values)

    def value(self, partition):
        """
        Return Wg for a cycle type.

        Args:
            partition: Weakly decreasing tuple summing to the degree.
        Exception:
            ValueError if the cycle type does not belong to S_p.
        """

        try:
            return self.values[tuple(partition)]
        except KeyError:
            raise ValueError('{} is not a cycle type of S_{}.'.format(
                tuple(partition), self.degree))

    def __call__(self, sigma):
        return wg(self, sigma)

    def as_list(self):
        """
        Values in the order of partitions(degree).
        """
        return [self.values[item] for item in partitions(self.degree)]

    def __repr__(self):
        items = ', '.join('{}: {}'.format(key, value)
                          for key, value in sorted(self.values.items()))
        return 'Wg(n={}, S_{}) {{{}}}'.format(
            self.dimension, self.degree, items)

    __str__ = __repr__

########################################


@lru_cache(maxsize=None)
def _group_data(p):
    """
    Inverses and class numbers of every element of S_p, computed once.
    """

    table = group_table(p, MAX_WEINGARTEN_DEGREE)
    indexer = ClassIndexer(p)
    return inverse_table(table), indexer.classes(table), \
        len(indexer.partitions)

########################################


def _class_cycle_counts(p, sigma_images):
    """
    Count pairs (class of tau, #(tau^-1 sigma)) over tau in S_p.

    Args:
        p: Degree.
        sigma_images: One line notation of sigma.
    Returns:
        (classes, p+1) int64 array of counts.
    """

    inverses, tau_class, class_count = _group_data(p)
    products = compose_table(inverses, np.asarray(sigma_images, dtype=np.intp))
    counts = count_cycles_table(products)
    histogram = np.bincount(tau_class * (p + 1) + counts,
                            minlength=class_count * (p + 1))
    return histogram.reshape(class_count, p + 1)

########################################


def _check_regime(n, p):
    """
    Raise ValueError outside of the invertible, enumerable regime.
    """

    if p < 1:
        raise ValueError('p must be at least 1, got {}.'.format(p))
    if p > MAX_WEINGARTEN_DEGREE:
        raise ValueError('p={} is above the bound {}.'.format(
            p, MAX_WEINGARTEN_DEGREE))
    if n < p:
        raise ValueError(
            'n={} < p={} needs the pseudo inverse, which is not '
            'supported.'.format(n, p))

########################################


def build_table(n, p):
    """
    Solve for the exact Weingarten table of S_p in dimension n.

    Row mu of the system is the convolution identity evaluated at a
    representative sigma_mu, column lambda sums n^#(tau^-1 sigma_mu)
    over tau of cycle type lambda.

    Args:
        n: Dimension, at least p.
        p: Degree of the symmetric group.
    Returns:
        WeingartenTable instance, shared through a cache.
    Exception:
        ValueError if n < p or p is above the bound.
    """

    _check_regime(n, p)
    key = (n, p)
    with _CACHE_LOCK:
        table = _TABLE_CACHE.get(key)
        if table is not None:
            return table

        parts = list(partitions(p))
        powers = [n ** exponent for exponent in range(p + 1)]
        matrix = []
        for partition in parts:
            histogram = _class_cycle_counts(
                p, class_representative(partition).images)
            matrix.append([
                sum(int(count) * power for count, power in zip(row, powers))
                for row in histogram])

        # Only the identity class has a nonzero right hand side
        rhs = [1 if partition == (1,) * p else 0 for partition in parts]
        solution = sympy.Matrix(matrix).LUsolve(sympy.Matrix(rhs))

        values = {}
        for partition, item in zip(parts, solution):
            item = sympy.Rational(item)
            values[partition] = Fraction(int(item.p), int(item.q))
        table = WeingartenTable(n, p, values)
        _TABLE_CACHE[key] = table
    return table

########################################


def wg(table, sigma):
    """
    Return the exact Wg(n, sigma).

    Args:
        table: WeingartenTable of the right degree.
        sigma: Permutation of S_p.
    Returns:
        Fraction.
    Exception:
        ValueError on degree mismatch.
    """

    if sigma.degree != table.degree:
        raise ValueError('Permutation of degree {} used with a table of '
                         'S_{}.'.format(sigma.degree, table.degree))
    return table.values[cycle_type(sigma)]

########################################


def convolution_residuals(table, exhaustive=False):
    """
    Evaluate sum_tau Wg(tau) n^#(tau^-1 sigma) - [sigma = id].

    Both sides are class functions, so class representatives are
    enough; ``exhaustive`` runs over every sigma of S_p.

    Args:
        table: WeingartenTable instance.
        exhaustive: Check every element instead of representatives.
    Returns:
        list of Fraction residuals, all zero for a correct table.
    """

    p = table.degree
    n = table.dimension
    weights = table.as_list()
    powers = [n ** exponent for exponent in range(p + 1)]
    if exhaustive:
        sigmas = [tuple(row) for row in group_table(p, MAX_WEINGARTEN_DEGREE)]
    else:
        sigmas = [class_representative(item).images for item in partitions(p)]

    residuals = []
    for images in sigmas:
        histogram = _class_cycle_counts(p, images)
        total = Fraction(0)
        for weight, row in zip(weights, histogram):
            total += weight * sum(int(count) * power
                                  for count, power in zip(row, powers))
        if list(images) == list(range(p)):
            total -= 1
        residuals.append(total)
    return residuals

########################################


def verify_table(table, exhaustive=False):
    """
    Return True if the convolution identity holds exactly.
    """
    return not any(convolution_residuals(table, exhaustive))

########################################


def catalan(i):
    """
    Return the Catalan number (2i)! / ((i+1)! i!).

    Args:
        i: Nonnegative integer.
    """

    if i < 0:
        raise ValueError(
            'Catalan index must be nonnegative, got {}.'.format(i))
    return factorial(2 * i) // (factorial(i + 1) * factorial(i))

########################################


def mobius(sigma):
    """
    Return Mob(sigma), the product over cycles of (-1)^(L-1) c_(L-1).
    """

    result = 1
    for cycle in cycles(sigma):
        size = len(cycle)
        result *= (-1) ** (size - 1) * catalan(size - 1)
    return result

########################################


def asymptotic_wg(n, sigma):
    """
    Return the leading term n^-(p+|sigma|) Mob(sigma).

    Args:
        n: Dimension, at least 1.
        sigma: Permutation of S_p.
    Returns:
        mpmath.mpf value.
    """

    if n < 1:
        raise ValueError('n must be at least 1, got {}.'.format(n))
    exponent = sigma.degree + length(sigma)
    return mpmath.mpf(mobius(sigma)) / mpmath.mpf(n) ** exponent

########################################


def single_cycle_wg(n, d):
    """
    Exact Wg(n, c) for a d-cycle c of S_d.

    (-1)^(d-1) c_(d-1) / prod_{j=-(d-1)}^{d-1} (n - j)

    Args:
        n: Dimension, at least d.
        d: Cycle length.
    Returns:
        Fraction.
    """

    _check_regime(n, d)
    denominator = 1
    for j in range(-(d - 1), d):
        denominator *= n - j
    return Fraction((-1) ** (d - 1) * catalan(d - 1), denominator)

########################################


def cycle_product_wg(n, sigma):
    """
    Product over the cycles of sigma of single_cycle_wg().

    Agrees with Wg(n, sigma) up to a factor 1 + O(n^-2).
    """

    result = Fraction(1)
    for cycle in cycles(sigma):
        result *= single_cycle_wg(n, len(cycle))
    return result
