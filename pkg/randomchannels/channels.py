#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Random channels from Haar unitaries, their inputs and Monte Carlo
spectra.

A unitary U on C^(nk) truncated to its first d_in columns is the
Stinespring isometry V of a channel. The range of V is ordered
environment (x) output, C^k (x) C^n, so the Kraus operators are the row
blocks K_e = V[e n:(e+1) n, :].

Inputs of the product channel are stored as weighted coefficient
matrices: a pure input sum a_ij |i>|j> is a single matrix A, the mixed
Bell input is a uniform mixture of l^2 such matrices.
"""

## \package randomchannels.channels

from __future__ import absolute_import, print_function, unicode_literals

import sys
from concurrent.futures import ThreadPoolExecutor
import numpy as np
from burger import IntegerProperty

from .config import CONSTRUCTION_TOLERANCE, VERIFICATION_TOLERANCE
from .enums import Pairing, InputTypes, OutputTypes, validate_enum_type
from .linalg import haar_unitary, hermitian_eigenvalues, gram_spectrum, \
    partial_trace, trial_rng, von_neumann_entropy, check_density_matrix

########################################


class ChannelParams(object):
    """
    Dimensions of one channel of the product.
    """

    ## Output dimension
    n = IntegerProperty('_n')

    ## Environment dimension
    k = IntegerProperty('_k')

    ## Input dimension
    d_in = IntegerProperty('_d_in')

    def __init__(self, n, k, d_in=None):
        """
        Args:
            n: Output dimension.
            k: Environment dimension.
            d_in: Input dimension, None means n (t = 1/k).
        Exception:
            ValueError unless 1 <= d_in <= nk.
        """

        self.n = n
        self.k = k
        self.d_in = n if d_in is None else d_in
        if self.n < 1 or self.k < 1:
            raise ValueError('n={} and k={} must be positive.'.format(
                self.n, self.k))
        if not 1 <= self.d_in <= self.n * self.k:
            raise ValueError('d_in={} is not in 1..nk={}.'.format(
                self.d_in, self.n * self.k))

    @property
    def t(self):
        """
        Ratio d_in / (nk) in (0, 1].
        """
        return self.d_in / float(self.n * self.k)

    @staticmethod
    def from_ratio(n, k, t):
        """
        Create params with d_in = round(t n k).
        """
        return ChannelParams(n, k, max(1, int(round(t * n * k))))

    def __repr__(self):
        return 'n={} k={} d_in={}'.format(self.n, self.k, self.d_in)

    __str__ = __repr__

########################################


class InputState(object):
    """
    Input of the product channel on C^d_in (x) C^d_in.

    The state is sum_c w_c |A_c><A_c| with |A> = sum a_ij |i>|j> and
    Tr[A A^dagger] = 1 for every component.
    """

    def __init__(self, input_type, components, **parameters):
        """
        Args:
            input_type: @ref randomchannels.enums.InputTypes.
            components: list of (weight, matrix) pairs.
            parameters: Values used to build the state, kept for reports.
        Exception:
            ValueError if a component is not normalized or the weights do
            not sum to 1.
        """

        ## Kind of input
        self.input_type = validate_enum_type(input_type, InputTypes)

        ## list of (weight, coefficient matrix)
        self.components = [(float(weight), np.asarray(matrix, np.complex128))
                           for weight, matrix in components]

        ## Construction parameters (rank, l, m)
        self.parameters = parameters

        total = sum(weight for weight, _ in self.components)
        if abs(total - 1.0) > CONSTRUCTION_TOLERANCE:
            raise ValueError('Input weights sum to {}.'.format(total))
        for _, matrix in self.components:
            norm = np.sum(np.abs(matrix) ** 2)
            if abs(norm - 1.0) > CONSTRUCTION_TOLERANCE:
                raise ValueError(
                    'Coefficient matrix has Tr[AA*] = {}.'.format(norm))

    @property
    def dimension(self):
        """
        d_in of each factor.
        """
        return self.components[0][1].shape[0]

    def is_pure(self):
        """
        True if the state has a single component.
        """
        return len(self.components) == 1

    def matrix(self):
        """
        Coefficient matrix A of a pure state.
        """

        if not self.is_pure():
            raise ValueError('{} input is not pure.'.format(self.input_type))
        return self.components[0][1]

    def m_value(self):
        """
        Tr[A] / sqrt(d_in) of a pure state.
        """
        return complex(np.trace(self.matrix()) / np.sqrt(self.dimension))

    def to_vector(self):
        """
        Amplitudes of a pure state, index i d_in + j.
        """
        return self.matrix().reshape(-1).copy()

    def to_density(self):
        """
        Density matrix on C^(d_in^2).
        """

        size = self.dimension ** 2
        result = np.zeros((size, size), dtype=np.complex128)
        for weight, matrix in self.components:
            vector = matrix.reshape(-1)
            result += weight * np.outer(vector, vector.conj())
        return result

    def __repr__(self):
        return '{} on {}x{}'.format(
            self.input_type, self.dimension, self.dimension)

    __str__ = __repr__

########################################


def _mixed_bell_components(n, l):
    """
    The l^2 pure components of (I_l/l) (x) |phi_{n/l}><phi_{n/l}| (x) (I_l/l).

    Both channels index i = a (n/l) + b with a the maximally mixed level,
    the Bell pair joins the inner indices b of the two channels.
    """

    inner = n // l
    amplitude = 1.0 / np.sqrt(inner)
    components = []
    for a_outer in range(l):
        for a_second in range(l):
            matrix = np.zeros((n, n), dtype=np.complex128)
            for b_inner in range(inner):
                matrix[a_outer * inner + b_inner,
                       a_second * inner + b_inner] = amplitude
            components.append((1.0 / (l * l), matrix))
    return components

########################################


def dephasing_diagonal(d):
    """
    Return the roots of unity exp(2 pi i j / d), j = 0..d-1.
    """
    return np.exp(2j * np.pi * np.arange(d) / d)

########################################


def build_input(input_type, params, matrix=None, rank=None, l=None, m=None):
    """
    Build one of the input states of the product channel.

    Args:
        input_type: @ref randomchannels.enums.InputTypes or its name.
        params: ChannelParams, d_in is the size of each factor.
        matrix: Coefficient matrix for InputTypes.generalized.
        rank: Block size r < d_in for InputTypes.low_rank.
        l: Number of maximally mixed levels for InputTypes.mixed_bell.
        m: Value of Tr[A]/sqrt(d_in) in [0, 1] for InputTypes.tilted.
    Returns:
        InputState instance.
    Exception:
        ValueError on invalid parameters, TypeError on an unknown type.
    """

    # Too many branches
    # pylint: disable=R0912

    input_type = validate_enum_type(input_type, InputTypes)
    d_in = params.d_in
    identity = np.eye(d_in, dtype=np.complex128)

    if input_type is InputTypes.bell:
        return InputState(input_type, [(1.0, identity / np.sqrt(d_in))])

    if input_type is InputTypes.dephased:
        return InputState(input_type, [
            (1.0, np.diag(dephasing_diagonal(d_in)) / np.sqrt(d_in))])

    if input_type is InputTypes.tilted:
        if m is None or not 0.0 <= m <= 1.0:
            raise ValueError(
                'Tilted input needs 0 <= m <= 1, got {}.'.format(m))
        if d_in < 2 and m != 1.0:
            raise ValueError('Tilted input with m < 1 needs d_in >= 2.')
        diagonal = m + np.sqrt(1.0 - m * m) * dephasing_diagonal(d_in)
        return InputState(input_type,
                          [(1.0, np.diag(diagonal) / np.sqrt(d_in))], m=m)

    if input_type is InputTypes.product:
        matrix = np.zeros((d_in, d_in), dtype=np.complex128)
        matrix[0, 0] = 1.0
        return InputState(input_type, [(1.0, matrix)])

    if input_type is InputTypes.low_rank:
        if rank is None:
            rank = int(np.ceil(np.sqrt(d_in)))
        if not 1 <= rank < d_in:
            raise ValueError('Rank {} is not in 1..{}.'.format(rank, d_in - 1))
        matrix = np.zeros((d_in, d_in), dtype=np.complex128)
        matrix[:rank, :rank] = np.eye(rank) / np.sqrt(rank)
        return InputState(input_type, [(1.0, matrix)], rank=rank)

    if input_type is InputTypes.mixed_bell:
        if l is None or l < 1 or params.n % l:
            raise ValueError('l={} must divide n={}.'.format(l, params.n))
        if d_in != params.n:
            raise ValueError('Mixed Bell input requires d_in = n, got '
                             'd_in={} n={}.'.format(d_in, params.n))
        return InputState(input_type, _mixed_bell_components(params.n, l), l=l)

    # Generalized
    if matrix is None:
        raise ValueError('Generalized Bell input needs a coefficient matrix.')
    matrix = np.asarray(matrix, dtype=np.complex128)
    if matrix.shape != (d_in, d_in):
        raise ValueError(
            'Coefficient matrix has shape {}, expected {}.'.format(
                matrix.shape, (d_in, d_in)))
    return InputState(input_type, [(1.0, matrix)])

########################################


def make_isometry(unitary, d_in):
    """
    Keep the first d_in columns of a unitary.

    Exception:
        ValueError if d_in exceeds the size of the unitary.
    """

    unitary = np.asarray(unitary)
    if not 1 <= d_in <= unitary.shape[1]:
        raise ValueError('d_in={} is not in 1..{}.'.format(
            d_in, unitary.shape[1]))
    return unitary[:, :d_in]

########################################


def kraus_operators(isometry, k):
    """
    Split an isometry into its k Kraus blocks, shape (k, n, d_in).
    """

    isometry = np.asarray(isometry)
    rows = isometry.shape[0]
    if rows % k:
        raise ValueError(
            '{} rows do not split into {} blocks.'.format(rows, k))
    return isometry.reshape(k, rows // k, isometry.shape[1])

########################################


def _dilate(isometry, rho):
    """
    Return V rho V^dagger after checking the sizes.
    """

    isometry = np.asarray(isometry)
    rho = np.asarray(rho)
    if rho.shape != (isometry.shape[1], isometry.shape[1]):
        raise ValueError('State of shape {} does not fit an isometry on '
                         'C^{}.'.format(rho.shape, isometry.shape[1]))
    return isometry.dot(rho).dot(isometry.conj().T)

########################################


def apply_direct(isometry, rho, k):
    """
    Tr_env[V rho V^dagger], an n x n density matrix.

    Args:
        isometry: (nk, d_in) array.
        rho: (d_in, d_in) density matrix.
        k: Environment dimension.
    """

    n = isometry.shape[0] // k
    return partial_trace(_dilate(isometry, rho), k, n, keep='B')

########################################


def apply_complementary(isometry, rho, k):
    """
    Tr_out[V rho V^dagger], a k x k density matrix.
    """

    n = isometry.shape[0] // k
    return partial_trace(_dilate(isometry, rho), k, n, keep='A')

########################################


def second_unitary(unitary, pairing):
    """
    Unitary of the second channel of the product.

    Args:
        unitary: First channel's unitary U.
        pairing: @ref randomchannels.enums.Pairing or its name.
    Returns:
        conj(U), U, U^dagger or U^T.
    """

    pairing = validate_enum_type(pairing, Pairing)
    unitary = np.asarray(unitary)
    if pairing is Pairing.conjugate:
        return unitary.conj()
    if pairing is Pairing.identical:
        return unitary
    if pairing is Pairing.star:
        return unitary.conj().T
    return unitary.T

########################################


def _output_tensors(unitary, params, pairing, input_state):
    """
    Yield (weight, T) with T[e, o, f, q] the amplitude of K_e A L_f^T.
    """

    first = kraus_operators(make_isometry(unitary, params.d_in), params.k)
    second = kraus_operators(
        make_isometry(second_unitary(unitary, pairing), params.d_in),
        params.k)
    for weight, matrix in input_state.components:
        left = np.einsum('eoi,ij->eoj', first, matrix)
        yield weight, np.einsum('eoj,fqj->eofq', left, second)

########################################


def output_spectrum(unitary, params, pairing, input_state,
                    output_type=OutputTypes.complementary):
    """
    Spectrum of the product channel output for a fixed unitary.

    The complementary output is the k^2 x k^2 matrix of the two
    environments. The direct output lives on C^(n^2) and has rank at most
    k^2 times the number of input components, its nonzero spectrum comes
    from gram_spectrum().

    Returns:
        Descending eigenvalues.
    """

    output_type = validate_enum_type(output_type, OutputTypes)
    k = params.k
    if output_type is OutputTypes.complementary:
        result = np.zeros((k * k, k * k), dtype=np.complex128)
        for weight, tensor in _output_tensors(
                unitary, params, pairing, input_state):
            result += weight * np.einsum(
                'eofq,gohq->efgh', tensor, tensor.conj()).reshape(k * k, k * k)
        result = 0.5 * (result + result.conj().T)
        return hermitian_eigenvalues(result)

    vectors = []
    weights = []
    for weight, tensor in _output_tensors(unitary, params, pairing,
                                              input_state):
        for env_first in range(k):
            for env_second in range(k):
                vectors.append(tensor[env_first, :, env_second, :].reshape(-1))
                weights.append(weight)
    return gram_spectrum(vectors, weights)

########################################


def sample_output(params, pairing, input_state, rng,
                  output_type=OutputTypes.complementary):
    """
    Draw a Haar unitary on C^(nk) and return the output spectrum.

    Args:
        params: ChannelParams.
        pairing: @ref randomchannels.enums.Pairing.
        input_state: InputState on d_in.
        rng: numpy Generator owned by the caller.
        output_type: Which side of the dilation is kept.
    Returns:
        Descending eigenvalues.
    """

    if input_state.dimension != params.d_in:
        raise ValueError('Input on C^{} used with d_in={}.'.format(
            input_state.dimension, params.d_in))
    unitary = haar_unitary(params.n * params.k, rng)
    return output_spectrum(unitary, params, pairing, input_state, output_type)

########################################


def hayden_winter_check(unitary, params):
    """
    Bell state overlap of the conjugate product channel.

    The overlap <phi_n| (Phi (x) conj(Phi))(|phi_d><phi_d|) |phi_n> equals
    sum_{e,f} |Tr[K_e K_f^dagger]|^2 / (n d_in) and is at least
    d_in / (n k).

    Args:
        unitary: Haar unitary on C^(nk).
        params: ChannelParams.
    Returns:
        (overlap, bound, ok) tuple.
    """

    kraus = kraus_operators(make_isometry(unitary, params.d_in), params.k)
    traces = np.einsum('eoi,foi->ef', kraus, kraus.conj())
    overlap = float(np.sum(np.abs(traces) ** 2) / (params.n * params.d_in))
    bound = params.d_in / float(params.n * params.k)
    return overlap, bound, overlap >= bound - CONSTRUCTION_TOLERANCE

########################################


class EmpiricalSpectrum(object):
    """
    Sorted spectra of independent trials and their statistics.
    """

    def __init__(self, spectra, bits=False):
        """
        Args:
            spectra: Sequence of descending spectra of equal length.
            bits: Report entropies in bits instead of nats.
        Exception:
            ValueError if a spectrum is not finite or does not sum to 1.
        """

        ## (trials, rank) array of descending eigenvalues
        self.spectra = np.array(spectra, dtype=np.float64)
        if not np.all(np.isfinite(self.spectra)):
            raise ValueError('Trial spectra have non finite entries.')
        for row in self.spectra:
            if abs(np.sum(row) - 1.0) > 1e-6:
                raise ValueError('Trial spectrum sums to {}.'.format(
                    np.sum(row)))

        ## Entropy of every trial
        self.entropies = np.array(
            [von_neumann_entropy(row, bits) for row in self.spectra])

    @property
    def trials(self):
        """
        Number of trials.
        """
        return self.spectra.shape[0]

    def means(self):
        """
        Mean eigenvalue per rank position.
        """
        return self.spectra.mean(axis=0)

    def deviations(self):
        """
        Sample standard deviation per rank position.
        """

        if self.trials < 2:
            return np.zeros(self.spectra.shape[1])
        return self.spectra.std(axis=0, ddof=1)

    def trace_powers(self, p):
        """
        Tr[Z^p] of every trial.
        """
        return np.sum(np.clip(self.spectra, 0.0, None) ** p, axis=1)

    def moment_estimate(self, p):
        """
        Mean of Tr[Z^p] and its standard error.
        """

        values = self.trace_powers(p)
        if self.trials < 2:
            return float(values.mean()), 0.0
        return float(values.mean()), \
            float(values.std(ddof=1) / np.sqrt(self.trials))

########################################


def monte_carlo(params, pairing, input_state, trials, seed,
                output_type=OutputTypes.complementary, jobs=1, bits=False,
                verbose=False):
    """
    Sample the output spectrum over independent Haar unitaries.

    Trial i draws from trial_rng(seed, i), results are kept in trial
    order, so the outcome does not depend on ``jobs``.

    Args:
        params: ChannelParams.
        pairing: @ref randomchannels.enums.Pairing.
        input_state: InputState.
        trials: Number of trials, at least 1.
        seed: Master seed.
        output_type: Which side of the dilation is kept.
        jobs: Number of worker threads.
        bits: Entropies in bits.
        verbose: Print progress to stderr.
    Returns:
        EmpiricalSpectrum instance.
    """

    if trials < 1:
        raise ValueError('trials must be at least 1, got {}.'.format(trials))
    pairing = validate_enum_type(pairing, Pairing)
    output_type = validate_enum_type(output_type, OutputTypes)

    def run_trial(index):
        return sample_output(params, pairing, input_state,
                             trial_rng(seed, index), output_type)

    if verbose:
        print('Sampling {} trials of {} {} ({}) with {} job(s)'.format(
            trials, pairing, input_state, params, jobs), file=sys.stderr)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            spectra = list(executor.map(run_trial, range(trials)))
    else:
        spectra = [run_trial(index) for index in range(trials)]
    return EmpiricalSpectrum(spectra, bits)

########################################


def check_output_state(rho):
    """
    Verify an explicit output is a density matrix within the verification
    tolerance.
    """
    return check_density_matrix(rho, VERIFICATION_TOLERANCE)
