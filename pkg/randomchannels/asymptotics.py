#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Limiting spectra and moments as n goes to infinity with k, l, t fixed.

Closed forms are evaluated in exact rational arithmetic whenever the
parameters are rational, and every closed form moment has a companion
oracle that sums the surviving subset pairs A subset B subset {1..p}
explicitly.
"""

## \package randomchannels.asymptotics

from __future__ import absolute_import, print_function, unicode_literals

from fractions import Fraction
from itertools import combinations
import numpy as np

from .enums import Pairing, InputTypes, OutputTypes, validate_enum_type
from .linalg import von_neumann_entropy

## Allowed slack on the total mass of an atomic distribution
MASS_TOLERANCE = 1e-12

########################################


class SpectralAtoms(object):
    """
    Atomic spectrum, eigenvalue lambda repeated multiplicity times.
    """

    def __init__(self, atoms):
        """
        Args:
            atoms: Iterable of (eigenvalue, multiplicity). Atoms with zero
                multiplicity are dropped.
        Exception:
            ValueError on a negative eigenvalue or a mass different from 1.
        """

        ## list of (eigenvalue, multiplicity)
        self.atoms = [(value, int(count)) for value, count in atoms if count]
        for value, count in self.atoms:
            if value < 0 or count < 0:
                raise ValueError('Invalid atom ({}, {}).'.format(value, count))
        mass = self.total_mass()
        if abs(float(mass) - 1.0) > MASS_TOLERANCE:
            raise ValueError('Atoms have total mass {}.'.format(mass))

    def total_mass(self):
        """
        Sum of multiplicity * eigenvalue.
        """
        return sum(value * count for value, count in self.atoms)

    def rank(self):
        """
        Number of eigenvalues, multiplicities included.
        """
        return sum(count for _, count in self.atoms)

    def moment(self, p):
        """
        Sum of multiplicity * eigenvalue^p.
        """
        return sum(count * value ** p for value, count in self.atoms)

    def expand(self):
        """
        All eigenvalues as floats, descending.
        """

        values = []
        for value, count in self.atoms:
            values.extend([float(value)] * count)
        return np.sort(np.array(values))[::-1]

    def top(self):
        """
        Largest eigenvalue.
        """
        return max(value for value, _ in self.atoms)

    def entropy(self, bits=False):
        """
        Von Neumann entropy of the distribution.
        """
        return von_neumann_entropy(self.expand(), bits)

    def __repr__(self):
        return ', '.join('{} x{}'.format(value, count)
                         for value, count in self.atoms)

    __str__ = __repr__

########################################


class ModelLimits(object):
    """
    Parameters of the limiting regime.
    """

    def __init__(self, t=1, m_abs=1, k=2, l=1):
        """
        Args:
            t: d_in / (nk) in (0, 1].
            m_abs: |Tr[A]| / sqrt(d_in) in [0, 1].
            k: Environment dimension, at least 2.
            l: Mixed Bell parameter.
        Exception:
            ValueError if a value is out of range, t |m|^2 <= 1 follows.
        """

        if not 0 < t <= 1:
            raise ValueError('t={} is not in (0, 1].'.format(t))
        if not 0 <= m_abs <= 1:
            raise ValueError('|m|={} is not in [0, 1].'.format(m_abs))
        if k < 2 or l < 1:
            raise ValueError('k={} must be at least 2 and l={} positive.'
                             .format(k, l))

        ## Input ratio
        self.t = t

        ## Modulus of the m functional
        self.m_abs = m_abs

        ## Environment dimension
        self.k = k

        ## Mixed Bell parameter
        self.l = l

    @property
    def strength(self):
        """
        t |m|^2, the weight of the large eigenvalue.
        """
        return self.t * self.m_abs ** 2

########################################


def limit_spectrum_conjugate(t, m_abs, k):
    """
    Limit of the conjugate pairing with a generalized Bell input.

    Atoms t|m|^2 + (1 - t|m|^2)/k^2 once and (1 - t|m|^2)/k^2 with
    multiplicity k^2 - 1.
    """

    strength = ModelLimits(t, m_abs, k).strength
    k_square = k * k
    rest = (1 - strength) / Fraction(k_square) \
        if isinstance(strength, (int, Fraction)) else \
        (1.0 - strength) / k_square
    return SpectralAtoms([(strength + rest, 1), (rest, k_square - 1)])

########################################


def limit_moment_conjugate(t, m_abs, k, p):
    """
    [1/k^2 + (k^2-1) t|m|^2/k^2]^p + (k^2-1) [1/k^2 - t|m|^2/k^2]^p
    """

    strength = ModelLimits(t, m_abs, k).strength
    k_square = k * k
    if isinstance(strength, (int, Fraction)):
        k_square = Fraction(k_square)
    return ((1 + (k_square - 1) * strength) / k_square) ** p + \
        (k_square - 1) * ((1 - strength) / k_square) ** p

########################################


def _subset_pairs(p):
    """
    Yield (|A|, |B|) for every A subset B subset {1..p}.
    """

    positions = range(p)
    for size_b in range(p + 1):
        for subset_b in combinations(positions, size_b):
            for size_a in range(size_b + 1):
                for _ in combinations(subset_b, size_a):
                    yield size_a, size_b

########################################


def _as_number(value):
    """
    Keep rationals exact, promote everything else to float.
    """

    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return float(value)

########################################


def subset_sum_oracle(t, m_abs, k, p):
    """
    Limit moment of the conjugate model by explicit subset summation.

    Term k^c (tk|m|^2)^|B| k^(-2p-|B\\A|) (-1)^|B\\A| where c counts the
    cycles of gamma^-1 alpha: |A|, or 2 when A is empty. The sum is
    taken as (a) - (b) + (c): (a) uses k^|A| for every pair, (b) removes
    the A = empty terms and (c) adds them back with k^2.
    """

    strength = _as_number(ModelLimits(t, m_abs, k).strength)
    k = _as_number(k)
    part_a = part_b = part_c = 0
    for size_a, size_b in _subset_pairs(p):
        difference = size_b - size_a
        common = (strength * k) ** size_b * k ** (-2 * p - difference) * \
            (-1) ** difference
        part_a += k ** size_a * common
        if not size_a:
            part_b += common
            part_c += k ** 2 * common
    return part_a - part_b + part_c

########################################


def limit_spectrum_flat(k):
    """
    Flat limit, the single atom 1/k^2 with multiplicity k^2.
    """

    if k < 2:
        raise ValueError('k={} must be at least 2.'.format(k))
    return SpectralAtoms([(Fraction(1, k * k), k * k)])

########################################


def limit_spectrum_mixed(k, l, variant=OutputTypes.complementary):
    """
    Limit of the conjugate pairing with the mixed Bell input.

    Args:
        k: Environment dimension.
        l: Mixed Bell parameter.
        variant: complementary output (k^2 x k^2) or direct output
            (nonzero part, rank k^2 l^2).
    Returns:
        SpectralAtoms with exact Fractions.
    """

    variant = validate_enum_type(variant, OutputTypes)
    if k < 2 or l < 1:
        raise ValueError('k={} must be at least 2 and l={} positive.'.format(
            k, l))
    k_square = k * k
    l_square = l * l
    if variant is OutputTypes.complementary:
        return SpectralAtoms([
            (Fraction(1, k * l_square) + Fraction(1, k_square) -
             Fraction(1, k ** 3 * l_square), 1),
            (Fraction(1, k_square) - Fraction(1, k ** 3 * l_square),
             k_square - 1)])
    return SpectralAtoms([
        (Fraction(1, k * l_square) + Fraction(1, k_square * l_square) -
         Fraction(1, k ** 3 * l_square), 1),
        (Fraction(1, k_square * l_square), k_square * l_square - k_square),
        (Fraction(1, k_square * l_square) - Fraction(1, k ** 3 * l_square),
         k_square - 1)])

########################################


def mixed_moment_oracle(k, l, p, variant=OutputTypes.complementary):
    """
    Limit moment of a mixed Bell model by explicit subset summation.

    Complementary output: S1 + S3 - S2, direct output:
    S1 - S2 + S3 - S4 + S5, see the docstrings of the two helpers.

    Returns:
        Fraction.
    """

    variant = validate_enum_type(variant, OutputTypes)
    if variant is OutputTypes.complementary:
        return _mixed_complementary_oracle(Fraction(k), Fraction(l), p)
    return _mixed_direct_oracle(Fraction(k), Fraction(l), p)

########################################


def _mixed_complementary_oracle(k, l, p):
    """
    S1 = sum_{A empty} l^-2|B| k^(2-2p-|B|) (-1)^|B|
    S2 = sum_{A empty} l^-2|B| k^(-2p-|B|) (-1)^|B|
    S3 = sum_{A, B} l^-2|B| k^(|A|-2p-|B\\A|) (-1)^|B\\A|
    """

    first = second = third = 0
    for size_a, size_b in _subset_pairs(p):
        difference = size_b - size_a
        if not size_a:
            first += l ** (-2 * size_b) * k ** (2 - 2 * p - size_b) * \
                (-1) ** size_b
            second += l ** (-2 * size_b) * k ** (-2 * p - size_b) * \
                (-1) ** size_b
        third += l ** (-2 * size_b) * k ** (size_a - 2 * p - difference) * \
            (-1) ** difference
    return first + third - second

########################################


def _mixed_direct_oracle(k, l, p):
    """
    With the common factor (kl)^-2p:
    S1 = sum_{A, B} k^|A| (-1/k)^|B\\A|, S2 = sum_{A empty} (-1/k)^|B|,
    S3 = sum_{A empty} k^2 (-1/k)^|B|, S4 = k^2 and S5 = k^2 l^2 for
    A = B = empty.
    """

    scale = (k * l) ** (-2 * p)
    first = second = third = 0
    for size_a, size_b in _subset_pairs(p):
        difference = size_b - size_a
        first += k ** size_a * (-1 / k) ** difference
        if not size_a:
            second += (-1 / k) ** size_b
            third += k ** 2 * (-1 / k) ** size_b
    fourth = k ** 2
    fifth = k ** 2 * l ** 2
    return scale * (first - second + third - fourth + fifth)

########################################


def entropy_scan(t, k, m_grid, bits=False):
    """
    Top eigenvalue and entropy of the conjugate limit along |m|.

    Args:
        t: d_in / (nk).
        k: Environment dimension.
        m_grid: Values of |m| in [0, 1].
        bits: Entropy in bits.
    Returns:
        list of dict with keys m, top, entropy.
    """

    rows = []
    for m_abs in m_grid:
        atoms = limit_spectrum_conjugate(t, m_abs, k)
        rows.append({
            'm': m_abs,
            'top': float(atoms.top()),
            'entropy': atoms.entropy(bits)})
    return rows

########################################


def scan_is_monotone(rows):
    """
    True if the top eigenvalue strictly increases and the entropy strictly
    decreases along the scan, past a leading |m| = 0 row.
    """

    rows = [row for row in rows if row['m'] > 0]
    for first, second in zip(rows[:-1], rows[1:]):
        if not second['top'] > first['top']:
            return False
        if not second['entropy'] < first['entropy']:
            return False
    return True

########################################


def predicted_spectrum(pairing, input_state, params,
                       output_type=OutputTypes.complementary):
    """
    Limiting nonzero spectrum of a simulated experiment.

    Args:
        pairing: @ref randomchannels.enums.Pairing.
        input_state: channels.InputState.
        params: channels.ChannelParams.
        output_type: Side of the dilation kept.
    Returns:
        SpectralAtoms.
    """

    pairing = validate_enum_type(pairing, Pairing)
    output_type = validate_enum_type(output_type, OutputTypes)
    input_type = input_state.input_type
    if input_type is InputTypes.mixed_bell:
        if pairing is not Pairing.conjugate:
            raise ValueError('No limit for the mixed Bell input under {}.'
                             .format(pairing))
        return limit_spectrum_mixed(params.k, input_state.parameters['l'],
                                    output_type)
    if pairing.is_flat() or input_type in (InputTypes.product,
                                           InputTypes.low_rank):
        return limit_spectrum_flat(params.k)

    t = params.t
    m_abs = min(abs(input_state.m_value()), 1.0)
    return limit_spectrum_conjugate(t, m_abs, params.k)

########################################


def loop_count_bound(pairing, p):
    """
    Largest number of loops and necklaces of a diagram, 4p for the
    conjugate pairing and 3p for the identical, star and transpose ones.
    """

    pairing = validate_enum_type(pairing, Pairing)
    if pairing is Pairing.conjugate:
        return 4 * p
    return 3 * p
