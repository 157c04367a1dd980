#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exact finite dimensional moments E Tr[Z^p] of the product channel
outputs.

Every model is a double sum over alpha, beta in S_2p of
a(alpha) b(beta) Wg(nk, alpha^-1 beta). The alpha factor only depends
on two cycle counts and, for rational inputs, so does the beta factor.
The sum is therefore reduced to an integer histogram
H[alpha key, class of alpha^-1 beta, beta key] that is filled with
numpy and combined in exact rational arithmetic at the end. For a
general coefficient matrix A the beta factor is a complex number per
beta, histogram cells then hold floating sums and the final combination
runs in mpmath.

The alpha range is cut in chunks of ALPHA_CHUNK_SIZE that may run on
several threads. Chunks are merged in index order so the result does
not depend on the number of workers.
"""

## \package randomchannels.moments

from __future__ import absolute_import, print_function, unicode_literals

import sys
from fractions import Fraction
from functools import lru_cache
from concurrent.futures import ThreadPoolExecutor
import numpy as np
import mpmath
from burger import IntegerProperty, BooleanProperty

from .config import MAX_MOMENT_ORDER, OPT_IN_MOMENT_ORDER, \
    ALPHA_CHUNK_SIZE, MPMATH_DIGITS
from .enums import MomentModels, validate_enum_type
from .symgroup import Permutation, group_table, inverse_table, \
    compose_table, count_cycles_table, ClassIndexer, cycles, compose, \
    inverse, count_cycles, length, wiring_gamma, wiring_delta, \
    wiring_tilde_gamma, enumerate_geodesic_pairs
from .weingarten import build_table, wg
from .asymptotics import limit_moment_conjugate, limit_spectrum_flat, \
    limit_spectrum_mixed

########################################


class MomentRequest(object):
    """
    Parameters of one exact moment.
    """

    ## Output dimension
    n = IntegerProperty('_n')

    ## Environment dimension
    k = IntegerProperty('_k')

    ## Input dimension of each channel
    d_in = IntegerProperty('_d_in')

    ## Number of maximally mixed levels of the mixed Bell input
    l = IntegerProperty('_l')

    ## Moment order
    p = IntegerProperty('_p')

    ## Allow p above MAX_MOMENT_ORDER
    opt_in = BooleanProperty('_opt_in')

    def __init__(self, model, n, k, p, d_in=None, l=1, matrix=None,
                 opt_in=False):
        """
        Args:
            model: @ref randomchannels.enums.MomentModels or its name.
            n: Output dimension.
            k: Environment dimension.
            p: Moment order.
            d_in: Input dimension, None means n.
            l: Mixed Bell parameter, must divide n.
            matrix: Coefficient matrix A, None is the Bell state.
            opt_in: Allow p up to OPT_IN_MOMENT_ORDER.
        Exception:
            ValueError if a precondition fails.
        """

        ## @ref randomchannels.enums.MomentModels
        self.model = validate_enum_type(model, MomentModels)
        self.n = n
        self.k = k
        self.p = p
        self.d_in = n if d_in is None else d_in
        self.l = l
        self.opt_in = opt_in

        ## Coefficient matrix A or None for the Bell state
        self.matrix = None if matrix is None else \
            np.asarray(matrix, dtype=np.complex128)
        self._validate()

    def _validate(self):
        """
        Check the preconditions of the moment formulas.
        """

        limit = OPT_IN_MOMENT_ORDER if self.opt_in else MAX_MOMENT_ORDER
        if not 1 <= self.p <= limit:
            raise ValueError(
                'p={} is not in 1..{}{}.'.format(
                    self.p, limit,
                    '' if self.opt_in else ' (use the opt in flag for p=4)'))
        if self.n < 1 or self.k < 1:
            raise ValueError('n and k must be positive.')
        if self.n * self.k < 2 * self.p:
            raise ValueError('nk={} is smaller than 2p={}.'.format(
                self.n * self.k, 2 * self.p))
        if not 1 <= self.d_in <= self.n * self.k:
            raise ValueError('d_in={} is not in 1..{}.'.format(
                self.d_in, self.n * self.k))
        if self.model.is_mixed():
            if self.l < 1 or self.n % self.l:
                raise ValueError('l={} must divide n={}.'.format(
                    self.l, self.n))
            if self.d_in != self.n:
                raise ValueError('Mixed Bell models need d_in = n.')
            if self.matrix is not None:
                raise ValueError('Mixed Bell models take no matrix.')
        if self.matrix is not None:
            if self.matrix.shape != (self.d_in, self.d_in):
                raise ValueError('Matrix shape {} does not match d_in={}.'
                                 .format(self.matrix.shape, self.d_in))
            norm = np.sum(np.abs(self.matrix) ** 2)
            if abs(norm - 1.0) > 1e-10:
                raise ValueError('Matrix has Tr[AA*] = {}.'.format(norm))

    def is_exact(self):
        """
        True if every factor of the sum is rational.
        """
        return self.matrix is None

    def __repr__(self):
        return '{} n={} k={} d_in={} l={} p={}'.format(
            self.model, self.n, self.k, self.d_in, self.l, self.p)

    __str__ = __repr__

########################################


def _word_trace(matrices, dimension):
    """
    Trace of an ordered product of matrices.
    """

    product = np.eye(dimension, dtype=np.complex128)
    for item in matrices:
        product = product.dot(item)
    return complex(np.trace(product))

########################################


def f_necklace(beta, matrix):
    """
    Necklace factor of the conjugate pairing.

    Product over the cycles of beta^-1 delta of Tr of the word read along
    the cycle v -> beta^-1 delta(v), where a top index contributes A and a
    bottom index contributes A^dagger.

    Args:
        beta: Permutation of S_2p.
        matrix: Square coefficient matrix A.
    Returns:
        complex.
    """

    if beta.degree % 2:
        raise ValueError('beta must live in S_2p, degree is {}.'.format(
            beta.degree))
    matrix = np.asarray(matrix, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError('Matrix of shape {} is not square.'.format(
            matrix.shape))
    p = beta.degree // 2
    adjoint = matrix.conj().T
    route = compose(inverse(beta), wiring_delta(p))
    result = 1.0 + 0.0j
    for cycle in cycles(route):
        result *= _word_trace(
            [matrix if index < p else adjoint for index in cycle],
            matrix.shape[0])
    return result

########################################


class Necklace(object):
    """
    Closed walk of the identical pairing diagram.
    """

    def __init__(self, start, steps, positions):
        """
        Args:
            start: Index the walk starts from.
            steps: list of (letter, index) with letter 'A', 'At',
                'Abar' or 'Ad' in walk order.
            positions: Set of positions {1..p} the walk touches.
        """

        ## Starting index
        self.start = start

        ## Letters along the walk
        self.steps = steps

        ## Positions of the factors met on the walk
        self.positions = frozenset(positions)

    def word(self):
        """
        Letters of the cyclic word.
        """
        return [letter for letter, _ in self.steps]

    def trace(self, matrix):
        """
        Tr of the word evaluated on a coefficient matrix.
        """

        matrix = np.asarray(matrix, dtype=np.complex128)
        letters = {
            'A': matrix,
            'At': matrix.T,
            'Abar': matrix.conj(),
            'Ad': matrix.conj().T}
        return _word_trace([letters[item] for item in self.word()],
                           matrix.shape[0])

    def __repr__(self):
        return 'Tr[{}]'.format(' '.join(self.word()))

    __str__ = __repr__

########################################


def necklaces(beta):
    """
    Closed walks of the identical pairing diagram for a given beta.

    The walk alternates A edges v -> delta(v) and conjugate edges
    w -> beta^-1 delta beta(w). An A edge leaving a top index reads A,
    leaving a bottom index reads A^T. A conjugate edge leaving w reads
    conj(A) if beta(w) is a top index and A^dagger otherwise.

    Args:
        beta: Permutation of S_2p.
    Returns:
        list of Necklace, together they use every edge once.
    """

    p = beta.degree // 2
    delta = wiring_delta(p)
    beta_inverse = inverse(beta)
    conjugate_edge = compose(beta_inverse, compose(delta, beta))
    visited = [False] * (2 * p)
    result = []
    for start in range(p):
        if visited[start]:
            continue
        steps = []
        positions = set()
        vertex = start
        while True:
            visited[vertex] = True
            middle = delta(vertex)
            visited[middle] = True
            steps.append(('A' if vertex < p else 'At', vertex))
            positions.add(vertex % p + 1)
            image = beta(middle)
            steps.append(('Abar' if image < p else 'Ad', middle))
            positions.add(image % p + 1)
            vertex = conjugate_edge(middle)
            if vertex == start:
                break
        result.append(Necklace(start, steps, positions))
    return result

########################################


def necklace_blocks(beta):
    """
    Group the positions {1..p} into blocks joined by necklaces.

    Args:
        beta: Permutation of S_2p.
    Returns:
        list of (block, necklaces) with block a sorted tuple of
        positions, blocks partition {1..p}.
    """

    p = beta.degree // 2
    parent = list(range(p + 1))

    def find(item):
        while parent[item] != item:
            parent[item] = parent[parent[item]]
            item = parent[item]
        return item

    walks = necklaces(beta)
    for walk in walks:
        positions = sorted(walk.positions)
        for item in positions[1:]:
            parent[find(item)] = find(positions[0])

    blocks = {}
    for position in range(1, p + 1):
        blocks.setdefault(find(position), []).append(position)
    result = []
    for members in sorted(blocks.values()):
        root = find(members[0])
        result.append((tuple(members), [
            walk for walk in walks if find(min(walk.positions)) == root]))
    return result

########################################


def g_necklace(beta, matrix):
    """
    Necklace factor of the identical pairing, product of necklace traces.
    """

    result = 1.0 + 0.0j
    for walk in necklaces(beta):
        result *= walk.trace(matrix)
    return result

########################################


@lru_cache(maxsize=None)
def _group_data(p):
    """
    S_2p as a table with the cycle data every model needs.
    """

    table = group_table(2 * p)
    inverses = inverse_table(table)
    gamma = np.asarray(wiring_gamma(p).images, dtype=np.intp)
    gamma_inverse = np.argsort(gamma)
    delta = np.asarray(wiring_delta(p).images, dtype=np.intp)
    tilde_gamma = np.asarray(wiring_tilde_gamma(p).images, dtype=np.intp)
    return {
        'table': table,
        'inverses': inverses,
        'indexer': ClassIndexer(2 * p),
        'cycles': count_cycles_table(table),
        'gamma_alpha': count_cycles_table(compose_table(gamma_inverse, table)),
        'tilde_gamma_alpha': count_cycles_table(
            compose_table(tilde_gamma, table)),
        'beta_delta': count_cycles_table(compose_table(inverses, delta))}

########################################


@lru_cache(maxsize=None)
def _necklace_counts(p):
    """
    Number of necklaces of every beta of S_2p, in table order, read only.
    """

    table = _group_data(p)['table']
    counts = np.array([len(necklaces(Permutation(row))) for row in table],
                      dtype=np.intp)
    counts.setflags(write=False)
    return counts

########################################


def _chunks(size):
    """
    Fixed alpha ranges, independent of the number of workers.
    """
    return [range(start, min(start + ALPHA_CHUNK_SIZE, size))
            for start in range(0, size, ALPHA_CHUNK_SIZE)]

########################################


def _pair_histogram(p, alpha_keys, alpha_key_count, beta_keys=None,
                    beta_key_count=1, beta_weights=None, jobs=1,
                    verbose=False):
    """
    Sum over alpha, beta grouped by alpha key, class of alpha^-1 beta and
    beta key.

    With beta_weights the beta key is dropped and the weights are summed
    instead of counted.

    Returns:
        int64 array (alpha keys, classes, beta keys) or complex array
        (alpha keys, classes).
    """

    data = _group_data(p)
    table = data['table']
    inverses = data['inverses']
    indexer = data['indexer']
    class_count = len(indexer.partitions)
    exact = beta_weights is None

    def work(chunk):
        if exact:
            partial = np.zeros((alpha_key_count, class_count * beta_key_count),
                               dtype=np.int64)
        else:
            partial = np.zeros((alpha_key_count, class_count),
                               dtype=np.complex128)
        for alpha in chunk:
            classes = indexer.classes(compose_table(inverses[alpha], table))
            if exact:
                partial[alpha_keys[alpha]] += np.bincount(
                    classes * beta_key_count + beta_keys,
                    minlength=class_count * beta_key_count)
            else:
                partial[alpha_keys[alpha]] += np.bincount(
                    classes, weights=beta_weights.real,
                    minlength=class_count) + 1j * np.bincount(
                        classes, weights=beta_weights.imag,
                        minlength=class_count)
        return partial

    chunks = _chunks(table.shape[0])
    if verbose:
        print('Summing {}x{} pairs in {} chunk(s) with {} job(s)'.format(
            table.shape[0], table.shape[0], len(chunks), jobs),
            file=sys.stderr)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            partials = list(executor.map(work, chunks))
    else:
        partials = [work(chunk) for chunk in chunks]

    total = partials[0]
    for partial in partials[1:]:
        total = total + partial
    if exact:
        return total.reshape(alpha_key_count, class_count, beta_key_count)
    return total

########################################


def _alpha_factors(request):
    """
    Alpha keys and the rational factor of each key.

    Returns:
        (keys per alpha, list of factors indexed by key)
    """

    p = request.p
    data = _group_data(p)
    if request.model is MomentModels.identical:
        second = data['tilde_gamma_alpha']
    else:
        second = data['gamma_alpha']
    size = 2 * p
    keys = (data['cycles'] - 1) * size + (second - 1)

    factors = []
    for first_count in range(1, size + 1):
        for second_count in range(1, size + 1):
            if request.model is MomentModels.mixed_direct:
                factors.append(request.k ** first_count *
                               request.n ** second_count)
            else:
                factors.append(request.n ** first_count *
                               request.k ** second_count)
    return keys, factors

########################################


def _beta_data(request):
    """
    Beta keys with rational factors, or complex beta weights.

    Returns:
        (keys, key count, factors, weights), weights is None on the
        rational path.
    """

    p = request.p
    data = _group_data(p)
    table = data['table']
    size = 2 * p

    if request.model.is_mixed():
        inner = request.n // request.l
        keys = data['cycles'] * (size + 1) + data['beta_delta']
        factors = [Fraction(request.l) ** (key // (size + 1)) *
                   Fraction(inner) ** (key % (size + 1))
                   for key in range((size + 1) ** 2)]
        return keys, (size + 1) ** 2, factors, None

    if request.is_exact():
        if request.model is MomentModels.identical:
            keys = _necklace_counts(p)
        else:
            keys = data['beta_delta']
        factors = [Fraction(request.d_in) ** (key - p)
                   for key in range(size + 1)]
        return keys, size + 1, factors, None

    if request.model is MomentModels.identical:
        function = g_necklace
    else:
        function = f_necklace
    weights = np.array([function(Permutation(row), request.matrix)
                        for row in table], dtype=np.complex128)
    return None, 1, None, weights

########################################


def _prefactor(request):
    """
    Normalization in front of the sum.
    """

    if request.model.is_mixed():
        inner = request.n // request.l
        return Fraction(1, request.l ** (2 * request.p) * inner ** request.p)
    return Fraction(1)

########################################


def exact_moment(request, jobs=1, verbose=False):
    """
    Evaluate E Tr[Z^p] for any MomentRequest.

    Args:
        request: MomentRequest instance.
        jobs: Number of worker threads.
        verbose: Print progress to stderr.
    Returns:
        Fraction on the rational path, mpmath.mpf otherwise.
    """

    table = build_table(request.n * request.k, 2 * request.p)
    weingarten = table.as_list()
    alpha_keys, alpha_factors = _alpha_factors(request)
    beta_keys, beta_key_count, beta_factors, beta_weights = \
        _beta_data(request)
    histogram = _pair_histogram(
        request.p, alpha_keys, len(alpha_factors), beta_keys,
        beta_key_count, beta_weights, jobs, verbose)

    if beta_weights is None:
        total = Fraction(0)
        for alpha_key, class_index, beta_key in zip(*np.nonzero(histogram)):
            total += int(histogram[alpha_key, class_index, beta_key]) * \
                alpha_factors[alpha_key] * weingarten[class_index] * \
                beta_factors[beta_key]
        return total * _prefactor(request)

    with mpmath.workdps(MPMATH_DIGITS):
        total = mpmath.mpc(0)
        for alpha_key, class_index in zip(*np.nonzero(histogram)):
            value = histogram[alpha_key, class_index]
            coefficient = mpmath.mpf(alpha_factors[alpha_key]) * \
                mpmath.mpf(weingarten[class_index].numerator) / \
                weingarten[class_index].denominator
            total += coefficient * mpmath.mpc(value.real, value.imag)
        return +total.real

########################################


def _geodesic_moment_conjugate(request):
    """
    Conjugate model sum restricted to the 3^p geodesic pairs.
    """

    p = request.p
    table = build_table(request.n * request.k, 2 * p)
    gamma_inverse = inverse(wiring_gamma(p))
    delta = wiring_delta(p)
    exact = request.is_exact()
    total = Fraction(0) if exact else mpmath.mpc(0)
    for _, _, alpha, beta in enumerate_geodesic_pairs(p):
        weight = request.n ** count_cycles(alpha) * \
            request.k ** count_cycles(compose(gamma_inverse, alpha)) * \
            wg(table, compose(inverse(alpha), beta))
        if exact:
            total += weight * Fraction(request.d_in) ** (
                count_cycles(compose(inverse(beta), delta)) - p)
        else:
            necklace = f_necklace(beta, request.matrix)
            total += mpmath.mpf(weight.numerator) / weight.denominator * \
                mpmath.mpc(necklace.real, necklace.imag)
    if exact:
        return total
    return +total.real

########################################


def moment_conjugate(request, jobs=1, geodesic_only=False, verbose=False):
    """
    E Tr[Z^p] for the conjugate pairing with a generalized Bell input.

    sum over alpha, beta of n^#alpha k^#(gamma^-1 alpha) f(beta)
    Wg(nk, alpha^-1 beta).

    Args:
        request: MomentRequest with model conjugate.
        jobs: Number of worker threads.
        geodesic_only: Keep only the pairs of enumerate_geodesic_pairs().
        verbose: Print progress to stderr.
    Returns:
        Fraction for the Bell input, mpmath.mpf otherwise.
    """

    if request.model is not MomentModels.conjugate:
        raise ValueError('moment_conjugate() got a {} request.'.format(
            request.model))
    if geodesic_only:
        return _geodesic_moment_conjugate(request)
    return exact_moment(request, jobs, verbose)

########################################


def moment_identical(request, jobs=1, verbose=False):
    """
    E Tr[Z^p] for the identical pairing with a generalized Bell input.

    sum over alpha, beta of n^#alpha k^#(tilde_gamma alpha) g(beta)
    Wg(nk, alpha^-1 beta).
    """

    if request.model is not MomentModels.identical:
        raise ValueError('moment_identical() got a {} request.'.format(
            request.model))
    return exact_moment(request, jobs, verbose)

########################################


def moment_mixed(request, jobs=1, verbose=False):
    """
    E Tr[Z^p] for the mixed Bell input, either output side.

    Complementary output:
    l^-2p (n/l)^-p sum n^#alpha k^#(alpha^-1 gamma) l^#beta
    (n/l)^#(beta^-1 delta) Wg(nk, alpha^-1 beta).
    The direct output swaps the roles of n and k in the alpha factor.

    Returns:
        Fraction.
    """

    if not request.model.is_mixed():
        raise ValueError('moment_mixed() got a {} request.'.format(
            request.model))
    return exact_moment(request, jobs, verbose)

########################################


def limit_moment(model, p, k, t=None, m_abs=1.0, l=1):
    """
    Closed form n -> infinity limit of a model's p-th moment.

    Args:
        model: @ref randomchannels.enums.MomentModels.
        p: Moment order.
        k: Environment dimension.
        t: d_in / (nk) of the conjugate model.
        m_abs: |Tr[A]| / sqrt(d_in) of the conjugate model.
        l: Mixed Bell parameter.
    Returns:
        float.
    """

    model = validate_enum_type(model, MomentModels)
    if model is MomentModels.conjugate:
        return limit_moment_conjugate(t, m_abs, k, p)
    if model is MomentModels.identical:
        atoms = limit_spectrum_flat(k)
    else:
        atoms = limit_spectrum_mixed(k, l, model.output_type())
    return atoms.moment(p)

########################################


def moment_asymptotic_gap(model, p, n_values, k, t=None, l=1, jobs=1,
                          verbose=False):
    """
    Table of |exact - limit| for Bell or mixed Bell inputs.

    Args:
        model: @ref randomchannels.enums.MomentModels.
        p: Moment order.
        n_values: Increasing output dimensions.
        k: Environment dimension.
        t: d_in / (nk), None means 1/k.
        l: Mixed Bell parameter.
        jobs: Worker threads per sum.
        verbose: Print progress to stderr.
    Returns:
        list of dict with keys n, d_in, exact, limit, gap.
    """

    model = validate_enum_type(model, MomentModels)
    n_values = list(n_values)
    if any(second <= first for first, second in zip(n_values, n_values[1:])):
        raise ValueError('n values must be increasing, got {}.'.format(
            n_values))
    if t is None:
        t = 1.0 / k

    rows = []
    for n in n_values:
        d_in = n if model.is_mixed() else max(1, int(round(t * n * k)))
        request = MomentRequest(model, n, k, p, d_in=d_in, l=l)
        exact = exact_moment(request, jobs, verbose)
        limit = limit_moment(model, p, k, d_in / float(n * k), 1.0, l)
        rows.append({
            'n': n,
            'd_in': d_in,
            'exact': exact,
            'limit': limit,
            'gap': abs(float(exact) - limit)})
    return rows

########################################


def loop_count(model, alpha, beta):
    """
    Number of loops and necklaces L(alpha, beta) of a diagram.

    Conjugate pairing: #alpha + #(beta^-1 delta).
    Identical pairing: #alpha + number of necklaces of beta.
    """

    model = validate_enum_type(model, MomentModels)
    p = alpha.degree // 2
    if model is MomentModels.identical:
        return count_cycles(alpha) + len(necklaces(beta))
    if model is MomentModels.conjugate:
        return count_cycles(alpha) + \
            count_cycles(compose(inverse(beta), wiring_delta(p)))
    raise ValueError('No loop count for {}.'.format(model))

########################################


def leading_exponent(model, alpha, beta):
    """
    Power of n carried by a term at t = 1/k with the Bell input.

    -3p - |alpha^-1 beta| + L(alpha, beta), never positive.
    """

    p = alpha.degree // 2
    return -3 * p - length(compose(inverse(alpha), beta)) + \
        loop_count(model, alpha, beta)

########################################


def surviving_pairs(model, p):
    """
    All (alpha, beta) of S_2p x S_2p with a zero leading exponent.

    Args:
        model: conjugate or identical.
        p: Moment order, at most MAX_MOMENT_ORDER.
    Returns:
        Sorted list of (alpha, beta) image tuples.
    """

    model = validate_enum_type(model, MomentModels)
    if model.is_mixed():
        raise ValueError('No power counting for {}.'.format(model))
    if not 1 <= p <= MAX_MOMENT_ORDER:
        raise ValueError('p={} is not in 1..{}.'.format(p, MAX_MOMENT_ORDER))

    data = _group_data(p)
    table = data['table']
    inverses = data['inverses']
    if model is MomentModels.identical:
        beta_loops = _necklace_counts(p)
    else:
        beta_loops = data['beta_delta']

    result = []
    for alpha in range(table.shape[0]):
        distance = 2 * p - count_cycles_table(
            compose_table(inverses[alpha], table))
        exponent = data['cycles'][alpha] + beta_loops - 3 * p - distance
        for beta in np.nonzero(exponent == 0)[0]:
            result.append((tuple(int(i) for i in table[alpha]),
                           tuple(int(i) for i in table[beta])))
    return sorted(result)

