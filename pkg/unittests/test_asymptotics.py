#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Unit tests for randomchannels limiting spectra

"""

from fractions import Fraction
import numpy as np
import pytest
from randomchannels.enums import OutputTypes, Pairing
from randomchannels.channels import ChannelParams, build_input
from randomchannels.asymptotics import SpectralAtoms, ModelLimits, \
    limit_spectrum_conjugate, limit_moment_conjugate, subset_sum_oracle, \
    limit_spectrum_flat, limit_spectrum_mixed, mixed_moment_oracle, \
    entropy_scan, scan_is_monotone, predicted_spectrum, loop_count_bound

########################################


def test_spectral_atoms():
    """
    Test SpectralAtoms bookkeeping.
    """

    atoms = SpectralAtoms([(Fraction(1, 4), 2), (Fraction(1, 2), 1),
                           (Fraction(1, 3), 0)])
    assert atoms.rank() == 3
    assert atoms.total_mass() == 1
    assert atoms.top() == Fraction(1, 2)
    assert atoms.moment(2) == Fraction(3, 8)
    assert np.allclose(atoms.expand(), [0.5, 0.25, 0.25])
    assert str(atoms) == '1/4 x2, 1/2 x1'
    assert atoms.entropy(bits=True) == pytest.approx(1.5)

    with pytest.raises(ValueError):
        SpectralAtoms([(Fraction(1, 2), 1)])
    with pytest.raises(ValueError):
        SpectralAtoms([(Fraction(3, 2), 1), (Fraction(-1, 2), 1)])

########################################


def test_model_limits():
    """
    Test ModelLimits ranges.
    """

    assert ModelLimits(Fraction(1, 2), 1, 2).strength == Fraction(1, 2)
    assert ModelLimits(0.5, 0.5).strength == pytest.approx(0.125)
    for t, m_abs, k, l in ((0, 1, 2, 1), (1.5, 1, 2, 1), (0.5, -0.1, 2, 1),
                           (0.5, 1.2, 2, 1), (0.5, 1, 0, 1), (0.5, 1, 1, 1),
                           (0.5, 1, 2, 0)):
        with pytest.raises(ValueError):
            ModelLimits(t, m_abs, k, l)

########################################


def test_conjugate_atoms():
    """
    Test the conjugate limit on the reference cases.
    """

    atoms = limit_spectrum_conjugate(Fraction(1, 2), 1, 2)
    assert atoms.atoms == [(Fraction(5, 8), 1), (Fraction(1, 8), 3)]
    assert atoms.moment(2) == Fraction(7, 16)
    assert atoms.entropy() == pytest.approx(1.0735, abs=1e-4)

    # Flat at |m| = 0, pure at t |m|^2 = 1
    assert limit_spectrum_conjugate(Fraction(1, 2), 0, 2).atoms == \
        [(Fraction(1, 4), 1), (Fraction(1, 4), 3)]
    pure = limit_spectrum_conjugate(1, 1, 3)
    assert pure.top() == 1
    assert pure.moment(2) == 1
    assert pure.entropy() == 0.0

    floating = limit_spectrum_conjugate(0.5, 0.5, 2)
    assert floating.top() == pytest.approx(0.34375)

########################################


def test_conjugate_moment_grid():
    """
    Test the closed form against the subset sum and the atoms.
    """

    for k in (2, 3, 4):
        for t in (Fraction(1, 4), Fraction(1, 2), Fraction(1)):
            for m_abs in (0, Fraction(1, 3), 1):
                atoms = limit_spectrum_conjugate(t, m_abs, k)
                for p in range(1, 7):
                    closed = limit_moment_conjugate(t, m_abs, k, p)
                    assert closed == subset_sum_oracle(t, m_abs, k, p)
                    assert closed == atoms.moment(p)

    assert subset_sum_oracle(0.3, 0.8, 3, 4) == pytest.approx(
        limit_moment_conjugate(0.3, 0.8, 3, 4))

########################################


def test_flat_atoms():
    """
    Test limit_spectrum_flat().
    """

    atoms = limit_spectrum_flat(3)
    assert atoms.atoms == [(Fraction(1, 9), 9)]
    assert atoms.entropy() == pytest.approx(np.log(9.0))
    with pytest.raises(ValueError):
        limit_spectrum_flat(0)
    with pytest.raises(ValueError):
        limit_spectrum_flat(1)

########################################


def test_mixed_atoms():
    """
    Test the mixed Bell limits on the reference cases.
    """

    complementary = limit_spectrum_mixed(2, 2)
    assert complementary.atoms == [(Fraction(11, 32), 1),
                                   (Fraction(7, 32), 3)]
    direct = limit_spectrum_mixed(2, 2, 'direct')
    assert direct.atoms == [(Fraction(5, 32), 1), (Fraction(1, 16), 12),
                            (Fraction(1, 32), 3)]
    assert direct.rank() == 16

    # One level is the Bell input at t = 1/k
    for k in (2, 3):
        bell = limit_spectrum_conjugate(Fraction(1, k), 1, k)
        for variant in OutputTypes:
            assert limit_spectrum_mixed(k, 1, variant).moment(3) == \
                bell.moment(3)

    with pytest.raises(ValueError):
        limit_spectrum_mixed(0, 2)
    with pytest.raises(ValueError):
        limit_spectrum_mixed(1, 2)
    with pytest.raises(ValueError):
        limit_spectrum_conjugate(1, 1, 1)

########################################


def test_mixed_moment_grid():
    """
    Test the mixed subset sums against the atoms.
    """

    for k in (2, 3):
        for l in (1, 2, 3):
            for variant in (OutputTypes.complementary, OutputTypes.direct):
                atoms = limit_spectrum_mixed(k, l, variant)
                for p in range(1, 7):
                    assert mixed_moment_oracle(k, l, p, variant) == \
                        atoms.moment(p)

########################################


def test_entropy_scan():
    """
    Test the |m| scan of the conjugate limit.
    """

    grid = [0.0, 0.25, 0.5, 0.75, 1.0]
    rows = entropy_scan(0.5, 2, grid)
    assert [row['m'] for row in rows] == grid
    assert rows[0]['top'] == pytest.approx(0.25)
    assert rows[0]['entropy'] == pytest.approx(np.log(4.0))
    assert rows[-1]['top'] == pytest.approx(0.625)
    assert scan_is_monotone(rows)
    assert not scan_is_monotone(list(reversed(rows)))

    rows = entropy_scan(0.5, 2, grid, bits=True)
    assert rows[0]['entropy'] == pytest.approx(2.0)

########################################


def test_predicted_spectrum():
    """
    Test the limit picked for each experiment.
    """

    params = ChannelParams(8, 2)
    bell = build_input('bell', params)
    assert predicted_spectrum('conjugate', bell, params).top() == \
        pytest.approx(0.625)
    for pairing in ('identical', 'star', 'transpose'):
        assert predicted_spectrum(pairing, bell, params).atoms == \
            [(Fraction(1, 4), 4)]
    for state in (build_input('product', params),
                  build_input('low_rank', params)):
        assert predicted_spectrum('conjugate', state, params).rank() == 4
        assert predicted_spectrum('conjugate', state, params).top() == \
            Fraction(1, 4)

    tilted = build_input('tilted', params, m=0.5)
    assert predicted_spectrum(Pairing.conjugate, tilted, params).top() == \
        pytest.approx(0.34375)
    dephased = build_input('dephased', params)
    assert predicted_spectrum('conjugate', dephased, params).top() == \
        pytest.approx(0.25)

    mixed = build_input('mixed_bell', params, l=2)
    assert predicted_spectrum('conjugate', mixed, params).top() == \
        Fraction(11, 32)
    assert predicted_spectrum('conjugate', mixed, params,
                              'direct').top() == Fraction(5, 32)
    with pytest.raises(ValueError):
        predicted_spectrum('identical', mixed, params)

########################################


def test_loop_count_bound():
    """
    Test loop_count_bound().
    """

    assert loop_count_bound('conjugate', 3) == 12
    assert loop_count_bound(Pairing.identical, 3) == 9
    assert loop_count_bound('star', 3) == 9
    assert loop_count_bound(Pairing.transpose, 2) == 6
    with pytest.raises(TypeError):
        loop_count_bound('nonsense', 3)
