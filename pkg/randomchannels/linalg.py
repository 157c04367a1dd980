#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Small dense complex linear algebra.

Kronecker products and partial traces share the row major convention
(i_A i_B), (j_A j_B). Hermitian spectra come from a cyclic complex
Jacobi solver, Haar unitaries from a phase fixed QR factorization of a
complex Ginibre matrix.
"""

## \package randomchannels.linalg

from __future__ import absolute_import, print_function, unicode_literals

import numpy as np
from scipy.linalg import qr
from scipy.stats import entropy

from .config import JACOBI_MAX_DIMENSION, JACOBI_TOLERANCE, \
    JACOBI_MAX_SWEEPS, CONSTRUCTION_TOLERANCE, VERIFICATION_TOLERANCE, \
    NEGATIVE_EIGENVALUE_TOLERANCE

########################################


def kron(a_matrix, b_matrix):
    """
    Kronecker product, rows (i_A i_B), columns (j_A j_B).
    """
    return np.kron(np.asarray(a_matrix), np.asarray(b_matrix))

########################################


def partial_trace(matrix, dim_a, dim_b, keep='A'):
    """
    Trace out one factor of C^dim_a (x) C^dim_b.

    Args:
        matrix: Square array of size dim_a * dim_b.
        dim_a: Dimension of the first factor.
        dim_b: Dimension of the second factor.
        keep: 'A' keeps the first factor, 'B' the second.
    Returns:
        The reduced matrix.
    Exception:
        ValueError on a size mismatch or an unknown side.
    """

    matrix = np.asarray(matrix)
    size = dim_a * dim_b
    if matrix.shape != (size, size):
        raise ValueError('Matrix of shape {} does not act on {} x {}.'.format(
            matrix.shape, dim_a, dim_b))

    tensor = matrix.reshape(dim_a, dim_b, dim_a, dim_b)
    side = str(keep).upper()
    if side == 'A':
        return np.einsum('ijkj->ik', tensor)
    if side == 'B':
        return np.einsum('ijil->jl', tensor)
    raise ValueError('keep must be "A" or "B", got "{}".'.format(keep))

########################################


def is_hermitian(matrix, tolerance=VERIFICATION_TOLERANCE):
    """
    Return True if matrix is square and Hermitian within tolerance.
    """

    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    return bool(np.max(np.abs(matrix - matrix.conj().T), initial=0.0)
                <= tolerance)

########################################


def jacobi_eigenvalues(matrix, tolerance=JACOBI_TOLERANCE,
                       max_sweeps=JACOBI_MAX_SWEEPS):
    """
    Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.

    Each rotation first rotates the phase of a_pq away, then applies the
    real symmetric 2x2 rotation that annihilates it. Sweeps run until
    the off diagonal Frobenius mass drops below
    tolerance * max(1, ||M||_F).

    Args:
        matrix: Hermitian array.
        tolerance: Relative stopping threshold.
        max_sweeps: Upper bound on sweeps.
    Returns:
        Unsorted real eigenvalues.
    """

    work = np.array(matrix, dtype=np.complex128)
    size = work.shape[0]
    threshold = tolerance * max(1.0, np.linalg.norm(work))
    # Entries below this floor are left alone, together they stay under
    # the stopping threshold
    floor = threshold / (2.0 * max(size, 1))

    for _ in range(max_sweeps):
        off = np.sqrt(max(np.sum(np.abs(work) ** 2) -
                          np.sum(np.abs(np.diag(work)) ** 2), 0.0))
        if off < threshold:
            break
        for p in range(size - 1):
            for q in range(p + 1, size):
                a_pq = work[p, q]
                modulus = abs(a_pq)
                if modulus < floor:
                    continue
                phase = np.exp(1j * np.angle(a_pq))
                theta = 0.5 * np.arctan2(
                    2.0 * modulus, work[q, q].real - work[p, p].real)
                cosine = np.cos(theta)
                sine = np.sin(theta)
                rotation = np.array(
                    [[cosine, sine],
                     [-sine * phase.conjugate(), cosine * phase.conjugate()]])
                index = [p, q]
                work[:, index] = work[:, index].dot(rotation)
                work[index, :] = rotation.conj().T.dot(work[index, :])
                work[p, q] = 0.0
                work[q, p] = 0.0
                work[p, p] = work[p, p].real
                work[q, q] = work[q, q].real
    return np.diag(work).real.copy()

########################################


def hermitian_eigenvalues(matrix, tolerance=VERIFICATION_TOLERANCE):
    """
    All eigenvalues of a Hermitian matrix, in descending order.

    Matrices up to JACOBI_MAX_DIMENSION use jacobi_eigenvalues(), larger
    ones LAPACK.

    Args:
        matrix: Square array.
        tolerance: Hermiticity tolerance.
    Returns:
        1D float array, descending.
    Exception:
        ValueError if the matrix is not Hermitian.
    """

    matrix = np.asarray(matrix)
    if not is_hermitian(matrix, tolerance):
        raise ValueError(
            'Matrix is not Hermitian within {}.'.format(tolerance))
    if matrix.shape[0] > JACOBI_MAX_DIMENSION:
        values = np.linalg.eigvalsh(matrix)
    else:
        values = jacobi_eigenvalues(matrix)
    return np.sort(values)[::-1]

########################################


def trial_rng(seed, trial):
    """
    Independent generator for one trial of an experiment.

    The stream depends only on (seed, trial), never on which worker runs
    the trial.
    """
    return np.random.default_rng(
        np.random.SeedSequence([int(seed), int(trial)]))

########################################


def haar_unitary(d, rng):
    """
    Sample a Haar distributed unitary of size d.

    Args:
        d: Dimension, at least 1.
        rng: numpy Generator.
    Returns:
        Complex (d, d) array.
    """

    if d < 1:
        raise ValueError('Dimension must be at least 1, got {}.'.format(d))
    ginibre = (rng.standard_normal((d, d)) +
               1j * rng.standard_normal((d, d))) / np.sqrt(2.0)
    q_matrix, r_matrix = qr(ginibre)

    # Make the diagonal of R real and positive
    diagonal = np.diag(r_matrix)
    phases = diagonal / np.abs(diagonal)
    return q_matrix * phases

########################################


def unitarity_residual(matrix):
    """
    Return max |U U^dagger - I|.
    """

    matrix = np.asarray(matrix)
    return float(np.max(np.abs(
        matrix.dot(matrix.conj().T) - np.eye(matrix.shape[0]))))

########################################


def normalize_spectrum(spectrum):
    """
    Clamp tiny negative values and check the total mass.

    Args:
        spectrum: Eigenvalues of a density matrix.
    Returns:
        float array with no negative entries.
    Exception:
        ValueError if an entry is not finite, clearly negative or the sum
        is not 1.
    """

    values = np.asarray(spectrum, dtype=np.float64)
    if values.size == 0:
        raise ValueError('Empty spectrum.')
    if not np.all(np.isfinite(values)):
        raise ValueError('Spectrum has non finite entries.')
    if np.min(values) < -NEGATIVE_EIGENVALUE_TOLERANCE:
        raise ValueError('Negative eigenvalue {}.'.format(np.min(values)))
    values = np.clip(values, 0.0, None)
    total = float(np.sum(values))
    if abs(total - 1.0) > VERIFICATION_TOLERANCE:
        raise ValueError('Spectrum sums to {}, not 1.'.format(total))
    return values

########################################


def von_neumann_entropy(spectrum, bits=False):
    """
    Entropy -sum lambda log lambda of a spectrum.

    Args:
        spectrum: Nonnegative values summing to 1.
        bits: Use base 2 instead of nats.
    Returns:
        float.
    """

    values = normalize_spectrum(spectrum)
    return float(entropy(values, base=2 if bits else None))

########################################


def gram_spectrum(vectors, weights):
    """
    Eigenvalues of sum_m w_m v_m v_m^dagger from its Gram matrix.

    The nonzero spectrum equals that of the small matrix
    G_{m,m'} = sqrt(w_m w_m') <v_m, v_m'>.

    Args:
        vectors: Sequence of equal length complex vectors.
        weights: Positive weights, one per vector.
    Returns:
        Descending eigenvalues of G, one per vector.
    Exception:
        ValueError on empty or inconsistent input.
    """

    if len(vectors) == 0:
        raise ValueError('gram_spectrum() needs at least one vector.')
    if len(vectors) != len(weights):
        raise ValueError('{} vectors but {} weights.'.format(
            len(vectors), len(weights)))
    columns = np.column_stack([np.asarray(item, dtype=np.complex128)
                               for item in vectors])
    scaled = columns * np.sqrt(np.asarray(weights, dtype=np.float64))
    gram = scaled.conj().T.dot(scaled)
    gram = 0.5 * (gram + gram.conj().T)
    return hermitian_eigenvalues(gram)

########################################


def check_pure_state(vector, tolerance=CONSTRUCTION_TOLERANCE):
    """
    Raise ValueError unless vector has unit norm.
    """

    norm = np.linalg.norm(vector)
    if abs(norm - 1.0) > tolerance:
        raise ValueError('State has norm {}, not 1.'.format(norm))
    return vector

########################################


def check_density_matrix(matrix, tolerance=CONSTRUCTION_TOLERANCE):
    """
    Raise ValueError unless matrix is a density matrix.

    Hermitian and unit trace within tolerance, eigenvalues above
    -NEGATIVE_EIGENVALUE_TOLERANCE.
    """

    matrix = np.asarray(matrix)
    if not is_hermitian(matrix, tolerance):
        raise ValueError('Density matrix is not Hermitian.')
    trace = np.trace(matrix).real
    if abs(trace - 1.0) > tolerance:
        raise ValueError('Density matrix has trace {}, not 1.'.format(trace))
    lowest = np.min(np.linalg.eigvalsh(matrix))
    if lowest < -NEGATIVE_EIGENVALUE_TOLERANCE:
        raise ValueError('Density matrix has eigenvalue {}.'.format(lowest))
    return matrix
