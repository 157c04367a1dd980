#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Symmetric group elements, the Cayley graph metric and the fixed wirings
of the product channel diagrams.

Permutations are stored in one line notation on {0..m-1}. On S_2p the
labeled index i^T maps to i-1 and i^B maps to p+i-1, positions run
cyclically on {1..p}.

Besides the element by element API, the module offers whole group
tables (one permutation per row of a numpy array) with vectorized
composition and cycle counting, used by the moment sums.
"""

## \package randomchannels.symgroup

from __future__ import absolute_import, print_function, unicode_literals

from itertools import combinations, permutations
from math import factorial
import numpy as np

from .config import MAX_GROUP_DEGREE
from .enums import Tier, validate_enum_type

########################################


class Permutation(object):
    """
    Element of the symmetric group S_m in one line notation.

    Instances are immutable and hashable, so they can be shared between
    threads and used as dict keys.
    """

    __slots__ = ('_images',)

    def __init__(self, images):
        """
        Create a permutation from its images.

        Args:
            images: Sequence with images[i] = sigma(i), a bijection of
                {0..m-1}.
        Exception:
            ValueError if images is not a bijection.
        """

        images = tuple(int(item) for item in images)
        if not images:
            raise ValueError('A permutation needs a positive degree.')
        if sorted(images) != list(range(len(images))):
            raise ValueError(
                '{} is not a bijection of 0..{}.'.format(
                    images, len(images) - 1))
        object.__setattr__(self, '_images', images)

    def __setattr__(self, name, value):
        raise AttributeError('Permutation is immutable.')

    @property
    def images(self):
        """
        One line notation as a tuple.
        """
        return self._images

    @property
    def degree(self):
        """
        The m of S_m.
        """
        return len(self._images)

    def __call__(self, index):
        return self._images[index]

    def __eq__(self, other):
        return isinstance(other, Permutation) and \
            self._images == other._images

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._images)

    def __mul__(self, other):
        return compose(self, other)

    def __repr__(self):
        """
        Cycle notation, fixed points omitted, identity is '()'.
        """

        parts = []
        for cycle in cycles(self):
            if len(cycle) > 1:
                parts.append('(' + ' '.join(str(i) for i in cycle) + ')')
        return ''.join(parts) or '()'

    __str__ = __repr__

    def inverse(self):
        """
        Return the inverse permutation.
        """
        return inverse(self)

    def count_cycles(self):
        """
        Return the number of cycles, fixed points included.
        """
        return count_cycles(self)

    def length(self):
        """
        Return the minimal number of transpositions.
        """
        return length(self)

    def cycle_type(self):
        """
        Return the cycle type as a weakly decreasing tuple.
        """
        return cycle_type(self)

########################################


class LabeledIndex(object):
    """
    Index i^T or i^B of S_2p.
    """

    def __init__(self, position, tier):
        """
        Args:
            position: Integer position in {1..p}.
            tier: @ref randomchannels.enums.Tier or its name.
        """

        ## Position in {1..p}
        self.position = int(position)

        ## Top or bottom row
        self.tier = validate_enum_type(tier, Tier)

    def to_index(self, p):
        """
        Return the zero based index in {0..2p-1}.

        Args:
            p: Number of positions.
        Exception:
            ValueError if the position is out of range.
        """

        if not 1 <= self.position <= p:
            raise ValueError(
                'Position {} is not in 1..{}.'.format(self.position, p))
        if self.tier is Tier.T:
            return self.position - 1
        return p + self.position - 1

    @staticmethod
    def from_index(index, p):
        """
        Inverse of to_index().

        Args:
            index: Zero based index in {0..2p-1}.
            p: Number of positions.
        """

        if not 0 <= index < 2 * p:
            raise ValueError(
                'Index {} is not in 0..{}.'.format(index, 2 * p - 1))
        if index < p:
            return LabeledIndex(index + 1, Tier.T)
        return LabeledIndex(index - p + 1, Tier.B)

    def __eq__(self, other):
        return isinstance(other, LabeledIndex) and \
            (self.position, self.tier) == (other.position, other.tier)

    def __hash__(self):
        return hash((self.position, int(self.tier)))

    def __repr__(self):
        return '{}{}'.format(self.position, self.tier)

    __str__ = __repr__

########################################


def _check_degrees(sigma, tau):
    """
    Raise ValueError if two permutations live in different groups.
    """

    if sigma.degree != tau.degree:
        raise ValueError(
            'Degree mismatch {} != {}.'.format(sigma.degree, tau.degree))

########################################


def identity(m):
    """
    Return the identity of S_m.
    """
    return Permutation(range(m))

########################################


def from_cycles(m, cycle_list):
    """
    Build a permutation of S_m from disjoint cycles.

    Args:
        m: Degree.
        cycle_list: Iterable of sequences, each (a b c) maps a->b->c->a.
    Returns:
        Permutation instance.
    """

    images = list(range(m))
    for cycle in cycle_list:
        cycle = list(cycle)
        for index, item in enumerate(cycle):
            images[item] = cycle[(index + 1) % len(cycle)]
    return Permutation(images)

########################################


def compose(sigma, tau):
    """
    Return sigma o tau, the permutation i -> sigma(tau(i)).

    Args:
        sigma: Permutation applied last.
        tau: Permutation applied first.
    Exception:
        ValueError on degree mismatch.
    """

    _check_degrees(sigma, tau)
    images = sigma.images
    return Permutation([images[item] for item in tau.images])

########################################


def inverse(sigma):
    """
    Return the inverse of sigma.
    """

    result = [0] * sigma.degree
    for index, item in enumerate(sigma.images):
        result[item] = index
    return Permutation(result)

########################################


def cycles(sigma):
    """
    Return the cycles of sigma.

    Each cycle starts at its smallest element and lists i, sigma(i),
    sigma(sigma(i)), ... Cycles are ordered by their first element and
    fixed points are included.

    Returns:
        list of tuples.
    """

    images = sigma.images
    seen = [False] * len(images)
    result = []
    for start in range(len(images)):
        if not seen[start]:
            cycle = []
            item = start
            while not seen[item]:
                seen[item] = True
                cycle.append(item)
                item = images[item]
            result.append(tuple(cycle))
    return result

########################################


def count_cycles(sigma):
    """
    Return #sigma, the number of cycles including fixed points.
    """
    return len(cycles(sigma))

########################################


def length(sigma):
    """
    Return |sigma| = m - #sigma, the minimal number of transpositions.
    """
    return sigma.degree - count_cycles(sigma)

########################################


def cycle_type(sigma):
    """
    Return the cycle type of sigma as a weakly decreasing tuple.
    """
    return tuple(sorted((len(cycle) for cycle in cycles(sigma)), reverse=True))

########################################


def distance(sigma, tau):
    """
    Return the Cayley distance |sigma^-1 tau|.

    Args:
        sigma: First permutation.
        tau: Second permutation.
    Exception:
        ValueError on degree mismatch.
    """

    _check_degrees(sigma, tau)
    return length(compose(inverse(sigma), tau))

########################################


def is_geodesic(points):
    """
    Test whether a path of permutations is a geodesic.

    Args:
        points: Sequence of at least two permutations of equal degree.
    Returns:
        True if the consecutive distances add up to the distance between
        the endpoints.
    Exception:
        ValueError if fewer than two points are given.
    """

    points = list(points)
    if len(points) < 2:
        raise ValueError('A geodesic needs at least two points.')
    total = 0
    for first, second in zip(points[:-1], points[1:]):
        total += distance(first, second)
    return total == distance(points[0], points[-1])

########################################


def partitions(m):
    """
    Iterate over the partitions of m.

    Partitions are weakly decreasing tuples, yielded in reverse
    lexicographic order starting with (m,).

    Args:
        m: Positive integer.
    """

    def _partitions(remaining, largest):
        if not remaining:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for tail in _partitions(remaining - part, part):
                yield (part,) + tail

    for item in _partitions(m, m):
        yield item

########################################


def class_size(partition):
    """
    Return the number of permutations with a given cycle type.

    Args:
        partition: Weakly decreasing tuple.
    """

    m = sum(partition)
    result = factorial(m)
    for part in set(partition):
        multiplicity = partition.count(part)
        result //= part ** multiplicity * factorial(multiplicity)
    return result

########################################


def class_representative(partition):
    """
    Return a permutation with the given cycle type.

    Consecutive blocks of indices form the cycles.
    """

    cycle_list = []
    start = 0
    for part in partition:
        cycle_list.append(range(start, start + part))
        start += part
    return from_cycles(start, cycle_list)

########################################


def wiring_gamma(p):
    """
    Return gamma in S_2p: i^T -> (i-1)^T and i^B -> (i+1)^B.

    Two p-cycles, positions taken cyclically.
    """

    images = [0] * (2 * p)
    for i in range(p):
        images[i] = (i - 1) % p
        images[p + i] = p + (i + 1) % p
    return Permutation(images)

########################################


def wiring_delta(p):
    """
    Return delta in S_2p: the p transpositions (i^T i^B).
    """

    images = [0] * (2 * p)
    for i in range(p):
        images[i] = p + i
        images[p + i] = i
    return Permutation(images)

########################################


def wiring_tilde_gamma(p):
    """
    Return tilde gamma in S_2p: i^T -> (i+1)^T and i^B -> (i+1)^B.
    """

    images = [0] * (2 * p)
    for i in range(p):
        images[i] = (i + 1) % p
        images[p + i] = p + (i + 1) % p
    return Permutation(images)

########################################


def tier_transpositions(p, positions):
    """
    Return the product of (i^T i^B) over the given positions.

    Args:
        p: Number of positions.
        positions: Iterable of positions in {1..p}.
    """

    images = list(range(2 * p))
    for position in positions:
        images[position - 1] = p + position - 1
        images[p + position - 1] = position - 1
    return Permutation(images)

########################################


def enumerate_geodesic_pairs(p):
    """
    Iterate over the geodesic pairs of id -> alpha -> beta -> delta.

    For every A subset of B subset of {1..p} the pair
    alpha = prod_{i in A} (i^T i^B), beta = prod_{i in B} (i^T i^B)
    is yielded, 3^p pairs in all.

    Args:
        p: Number of positions, at least 1.
    Yields:
        (A, B, alpha, beta) with A and B tuples of positions.
    """

    if p < 1:
        raise ValueError('p must be at least 1, got {}.'.format(p))
    positions = range(1, p + 1)
    for size_b in range(p + 1):
        for subset_b in combinations(positions, size_b):
            beta = tier_transpositions(p, subset_b)
            for size_a in range(size_b + 1):
                for subset_a in combinations(subset_b, size_a):
                    yield subset_a, subset_b, \
                        tier_transpositions(p, subset_a), beta

########################################


def _check_group_degree(m, limit):
    """
    Raise ValueError if S_m is too large to enumerate.
    """

    if limit is None:
        limit = MAX_GROUP_DEGREE
    if m < 1:
        raise ValueError('Degree must be positive, got {}.'.format(m))
    if m > limit:
        raise ValueError(
            'S_{} has {} elements, the enumeration bound is S_{}.'.format(
                m, factorial(m), limit))

########################################


def enumerate_group(m, limit=None):
    """
    Iterate over all m! permutations of S_m in lexicographic order.

    Args:
        m: Degree.
        limit: Largest allowed degree, None uses MAX_GROUP_DEGREE.
    Exception:
        ValueError if m exceeds the bound.
    """

    _check_group_degree(m, limit)
    for images in permutations(range(m)):
        yield Permutation(images)

########################################


def group_table(m, limit=None):
    """
    Return S_m as an (m!, m) integer array, rows in lexicographic order.

    Row r is the one line notation of the r-th element of
    enumerate_group(m).
    """

    _check_group_degree(m, limit)
    return np.array(list(permutations(range(m))), dtype=np.intp)

########################################


def compose_table(sigma, tau):
    """
    Row wise composition of permutation tables.

    Args:
        sigma: (N, m) array or a single (m,) row, applied last.
        tau: (N, m) array or a single (m,) row, applied first.
    Returns:
        (N, m) array with result[r, i] = sigma[r, tau[r, i]].
    """

    sigma = np.asarray(sigma)
    tau = np.asarray(tau)
    if sigma.ndim == 1 and tau.ndim == 1:
        return sigma[tau]
    if sigma.ndim == 1:
        return sigma[tau]
    if tau.ndim == 1:
        return sigma[:, tau]
    return np.take_along_axis(sigma, tau, axis=1)

########################################


def inverse_table(table):
    """
    Row wise inverse of a permutation table.
    """
    return np.argsort(np.asarray(table), axis=-1)

########################################


def orbit_lengths(table):
    """
    Length of the cycle containing each index, row by row.

    Args:
        table: (N, m) permutation array.
    Returns:
        (N, m) integer array.
    """

    table = np.atleast_2d(np.asarray(table))
    m = table.shape[1]
    start = np.arange(m)
    lengths = np.zeros(table.shape, dtype=np.intp)
    current = table
    for step in range(1, m + 1):
        closed = (current == start) & (lengths == 0)
        lengths[closed] = step
        current = np.take_along_axis(table, current, axis=1)
    return lengths

########################################


def count_cycles_table(table):
    """
    Number of cycles of each row of a permutation table.

    An index opens a cycle if it is the smallest element of its orbit.
    """

    table = np.atleast_2d(np.asarray(table))
    m = table.shape[1]
    smallest = np.broadcast_to(np.arange(m), table.shape).copy()
    current = table
    for _ in range(m - 1):
        np.minimum(smallest, current, out=smallest)
        current = np.take_along_axis(table, current, axis=1)
    return np.count_nonzero(smallest == np.arange(m), axis=1)

########################################


def cycle_type_key(partition):
    """
    Integer key of a cycle type.

    Every element lying on a cycle of length L contributes (m+1)^(L-1),
    the sum is unique per cycle type since a digit never exceeds m.
    """

    base = sum(partition) + 1
    return sum(part * base ** (part - 1) for part in partition)

########################################


def cycle_type_keys(table):
    """
    Vectorized cycle_type_key() of every row of a permutation table.
    """

    table = np.atleast_2d(np.asarray(table))
    base = table.shape[1] + 1
    powers = np.power(base, np.arange(table.shape[1] + 1), dtype=np.int64)
    return powers[orbit_lengths(table) - 1].sum(axis=1)

########################################


class ClassIndexer(object):
    """
    Map permutation tables to conjugacy class numbers of S_m.

    Classes are numbered in the order of partitions(m).
    """

    def __init__(self, m):
        """
        Args:
            m: Degree of the group.
        """

        ## Degree
        self.m = m

        ## Partitions of m, class number i is partitions[i]
        self.partitions = list(partitions(m))

        keys = np.array([cycle_type_key(item) for item in self.partitions],
                        dtype=np.int64)
        order = np.argsort(keys)

        ## Sorted keys for searchsorted
        self._sorted_keys = keys[order]

        ## Class number of each sorted key
        self._class_of_sorted = order

    def classes(self, table):
        """
        Return the class number of every row of a table.
        """

        keys = cycle_type_keys(table)
        return self._class_of_sorted[np.searchsorted(self._sorted_keys, keys)]

    def index(self, partition):
        """
        Return the class number of a partition.
        """
        return self.partitions.index(tuple(partition))

########################################


def count_geodesic_pairs(p):
    """
    Count every pair (alpha, beta) of S_2p with id -> alpha -> beta -> delta
    a geodesic.

    The whole group is scanned. Both points of such a pair lie on a
    geodesic from id to delta, so pairs are only formed among those
    elements.

    Args:
        p: Number of positions, 2p at most MAX_GROUP_DEGREE.
    Returns:
        Integer count, 3^p.
    """

    table = group_table(2 * p)
    inverses = inverse_table(table)
    delta = np.asarray(wiring_delta(p).images, dtype=np.intp)
    lengths = 2 * p - count_cycles_table(table)
    to_delta = 2 * p - count_cycles_table(compose_table(inverses, delta))
    on_path = np.nonzero(lengths + to_delta == p)[0]

    candidates = table[on_path]
    total = 0
    for alpha in on_path:
        between = 2 * p - count_cycles_table(
            compose_table(inverses[alpha], candidates))
        total += int(np.count_nonzero(
            lengths[alpha] + between + to_delta[on_path] == p))
    return total
