#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Unit tests for randomchannels exact moments

"""

from fractions import Fraction
from math import factorial
import numpy as np
import pytest
from randomchannels.enums import MomentModels
from randomchannels.symgroup import Permutation, identity, from_cycles, \
    compose, inverse, cycles, count_cycles, enumerate_group, \
    enumerate_geodesic_pairs, wiring_delta
from randomchannels.channels import ChannelParams, build_input, monte_carlo
from randomchannels.moments import MomentRequest, exact_moment, \
    moment_conjugate, moment_identical, moment_mixed, limit_moment, \
    moment_asymptotic_gap, f_necklace, g_necklace, necklaces, \
    necklace_blocks, loop_count, leading_exponent, surviving_pairs, \
    _necklace_counts

## Every model name
ALL_MODELS = ('conjugate', 'identical', 'mixed_direct',
              'mixed_complementary')

########################################


def test_first_moment():
    """
    Test E Tr[Z] is exactly one.
    """

    for model in ALL_MODELS:
        request = MomentRequest(model, 4, 2, 1, l=2)
        assert exact_moment(request) == Fraction(1)

########################################


def test_single_environment():
    """
    Test k = 1, where the complementary output is one dimensional.
    """

    for model in ('conjugate', 'identical', 'mixed_complementary'):
        for p in (2, 3):
            assert exact_moment(MomentRequest(model, 6, 1, p, l=2)) == 1
    # The direct output is l^2 equal eigenvalues
    for p in (2, 3):
        assert exact_moment(MomentRequest('mixed_direct', 6, 1, p, l=2)) == \
            Fraction(1, 2 ** (2 * p - 2))

########################################


def test_full_isometry():
    """
    Test d_in = nk, where the conjugate product fixes the Bell state.
    """

    assert moment_conjugate(MomentRequest('conjugate', 2, 2, 2, d_in=4)) == 1
    assert moment_conjugate(MomentRequest('conjugate', 3, 2, 3, d_in=6)) == 1

########################################


def test_mixed_with_one_level():
    """
    Test l = 1 reduces both mixed models to the conjugate Bell moment.
    """

    for p in (2, 3):
        expected = moment_conjugate(MomentRequest('conjugate', 4, 2, p))
        assert moment_mixed(MomentRequest(
            'mixed_complementary', 4, 2, p, l=1)) == expected
        assert moment_mixed(MomentRequest(
            'mixed_direct', 4, 2, p, l=1)) == expected

########################################


def test_model_dispatch():
    """
    Test the model functions refuse requests of another model.
    """

    request = MomentRequest('conjugate', 4, 2, 2)
    with pytest.raises(ValueError):
        moment_identical(request)
    with pytest.raises(ValueError):
        moment_mixed(request)
    with pytest.raises(ValueError):
        moment_conjugate(MomentRequest('identical', 4, 2, 2))

########################################


@pytest.mark.parametrize('model', ALL_MODELS)
def test_monte_carlo_oracle(model):
    """
    Test exact moments against sampled trace powers.
    """

    model = MomentModels.lookup(model)
    params = ChannelParams(8, 2)
    if model.is_mixed():
        state = build_input('mixed_bell', params, l=2)
    else:
        state = build_input('bell', params)
    exact = float(exact_moment(MomentRequest(model, 8, 2, 2, l=2)))
    spectra = monte_carlo(params, model.pairing(), state, trials=2000,
                          seed=17, output_type=model.output_type())
    mean, error = spectra.moment_estimate(2)
    assert abs(mean - exact) <= 4.0 * error

########################################


@pytest.mark.parametrize('model', ('conjugate', 'identical'))
def test_general_matrix_oracle(model):
    """
    Test the complex matrix path against sampled trace powers.

    A generic complex A with A^T, conj(A) and A^dagger all different
    checks every letter of the necklace words.
    """

    model = MomentModels.lookup(model)
    params = ChannelParams(6, 2)
    rng = np.random.default_rng(19)
    matrix = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
    matrix /= np.linalg.norm(matrix)
    assert not np.allclose(matrix, matrix.T)
    state = build_input('generalized', params, matrix=matrix)
    spectra = monte_carlo(params, model.pairing(), state, trials=2000,
                          seed=19)
    for p in (2, 3):
        exact = float(exact_moment(MomentRequest(
            model, 6, 2, p, matrix=matrix)))
        mean, error = spectra.moment_estimate(p)
        assert abs(mean - exact) <= 4.0 * error

########################################


def test_general_matrix_matches_rational():
    """
    Test the Bell matrix gives the rational result on the complex path.
    """

    bell = np.eye(4) / 2.0
    for model in ('conjugate', 'identical'):
        for p in (2, 3):
            rational = exact_moment(MomentRequest(model, 4, 2, p))
            general = exact_moment(MomentRequest(model, 4, 2, p, matrix=bell))
            assert isinstance(rational, Fraction)
            assert float(general) == pytest.approx(float(rational), rel=1e-9)

    request = MomentRequest('conjugate', 4, 2, 2, matrix=bell)
    assert not request.is_exact()
    assert float(moment_conjugate(request, geodesic_only=True)) == \
        pytest.approx(float(moment_conjugate(
            MomentRequest('conjugate', 4, 2, 2), geodesic_only=True)))

########################################


def test_threads_do_not_change_result():
    """
    Test the chunked sum is independent of the number of jobs.
    """

    for model in ALL_MODELS:
        request = MomentRequest(model, 4, 2, 3, l=2)
        assert exact_moment(request, jobs=1) == exact_moment(request, jobs=2)

########################################


def test_geodesic_dominance():
    """
    Test the geodesic pairs carry the moment up to O(n^-2).
    """

    gaps = []
    for n in (32, 64):
        request = MomentRequest('conjugate', n, 2, 2)
        full = moment_conjugate(request)
        geodesic = moment_conjugate(request, geodesic_only=True)
        gaps.append(abs(float(full - geodesic)))
    assert gaps[1] > 0.0
    assert 2.5 < gaps[0] / gaps[1] < 6.0

########################################


def test_asymptotic_gap():
    """
    Test moment_asymptotic_gap() rows and their decay.
    """

    rows = moment_asymptotic_gap('conjugate', 2, [8, 16], 2)
    assert [row['n'] for row in rows] == [8, 16]
    assert [row['d_in'] for row in rows] == [8, 16]
    assert rows[0]['limit'] == pytest.approx(7.0 / 16)
    assert 2.5 < rows[0]['gap'] / rows[1]['gap'] < 6.0

    for row in moment_asymptotic_gap('identical', 1, [4, 8], 2):
        assert row['gap'] < 1e-12

    rows = moment_asymptotic_gap('mixed_complementary', 2, [8], 2, l=2)
    assert rows[0]['limit'] == pytest.approx(
        limit_moment('mixed_complementary', 2, 2, l=2))

    with pytest.raises(ValueError):
        moment_asymptotic_gap('conjugate', 2, [16, 8], 2)

########################################


def test_limit_moment():
    """
    Test limit_moment() for every model.
    """

    assert limit_moment('conjugate', 2, 2, t=0.5) == pytest.approx(7.0 / 16)
    assert limit_moment('identical', 2, 2) == pytest.approx(0.25)
    assert limit_moment('mixed_complementary', 2, 2, l=2) == \
        pytest.approx(121.0 / 1024 + 3 * 49.0 / 1024)
    assert limit_moment('mixed_direct', 2, 2, l=2) == \
        pytest.approx(25.0 / 1024 + 12.0 / 256 + 3.0 / 1024)

########################################


def test_request_validation():
    """
    Test MomentRequest preconditions.
    """

    with pytest.raises(ValueError):
        MomentRequest('conjugate', 4, 2, 4)
    assert MomentRequest('conjugate', 4, 2, 4, opt_in=True).p == 4
    with pytest.raises(ValueError):
        MomentRequest('conjugate', 4, 2, 5, opt_in=True)
    with pytest.raises(ValueError):
        MomentRequest('conjugate', 1, 2, 2)
    with pytest.raises(ValueError):
        MomentRequest('conjugate', 4, 2, 2, d_in=9)
    with pytest.raises(ValueError):
        MomentRequest('mixed_direct', 8, 2, 2, l=3)
    with pytest.raises(ValueError):
        MomentRequest('mixed_direct', 8, 2, 2, d_in=4, l=2)
    with pytest.raises(ValueError):
        MomentRequest('mixed_complementary', 4, 2, 2, l=2,
                      matrix=np.eye(4) / 2.0)
    with pytest.raises(ValueError):
        MomentRequest('conjugate', 4, 2, 2, matrix=np.eye(3) / np.sqrt(3))
    with pytest.raises(ValueError):
        MomentRequest('conjugate', 4, 2, 2, matrix=np.eye(4))
    with pytest.raises(TypeError):
        MomentRequest('nonsense', 4, 2, 2)

########################################


def test_necklace_examples():
    """
    Test the necklaces of a few simple betas.
    """

    for p in (1, 2, 3):
        walks = necklaces(identity(2 * p))
        assert len(walks) == p
        assert all(walk.word() == ['A', 'Ad'] for walk in walks)
        walks = necklaces(wiring_delta(p))
        assert len(walks) == p
        assert all(walk.word() == ['A', 'Abar'] for walk in walks)
        assert [block for block, _ in necklace_blocks(identity(2 * p))] == \
            [(position,) for position in range(1, p + 1)]

    beta = from_cycles(4, [(0, 1)])
    walks = necklaces(beta)
    assert len(walks) == 1
    assert walks[0].word() == ['A', 'Ad', 'A', 'Ad']
    assert str(walks[0]) == 'Tr[A Ad A Ad]'
    blocks = necklace_blocks(beta)
    assert len(blocks) == 1
    assert blocks[0][0] == (1, 2)

    for beta in enumerate_group(6):
        blocks = necklace_blocks(beta)
        assert sorted(position for block, _ in blocks
                      for position in block) == [1, 2, 3]
        walks = necklaces(beta)
        assert sum(len(walk.word()) for walk in walks) == 6
        assert sum(len(items) for _, items in blocks) == len(walks)

    # Necklace counts per order are built once and shared
    counts = _necklace_counts(2)
    assert counts is _necklace_counts(2)
    assert not counts.flags.writeable
    assert counts.max() == 2
    assert len(counts) == 24

########################################


def test_necklace_factors():
    """
    Test f_necklace() and g_necklace() on known inputs.
    """

    rng = np.random.default_rng(21)
    matrix = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    matrix /= np.linalg.norm(matrix)
    for p in (1, 2):
        delta = wiring_delta(p)
        trace = np.trace(matrix)
        assert f_necklace(delta, matrix) == pytest.approx(
            trace ** p * trace.conjugate() ** p)
        assert f_necklace(identity(2 * p), matrix) == pytest.approx(1.0)
        assert g_necklace(identity(2 * p), matrix) == pytest.approx(1.0)
        assert g_necklace(delta, matrix) == pytest.approx(
            np.trace(matrix.dot(matrix.conj())) ** p)

    # Bell state: d^(#(beta^-1 delta) - p)
    bell = np.eye(3) / np.sqrt(3)
    delta = wiring_delta(2)
    for beta in enumerate_group(4):
        expected = 3.0 ** (count_cycles(compose(inverse(beta), delta)) - 2)
        assert f_necklace(beta, bell) == pytest.approx(expected)
    for _, subset_b, _, beta in enumerate_geodesic_pairs(2):
        assert f_necklace(beta, bell) == pytest.approx(3.0 ** len(subset_b))

    with pytest.raises(ValueError):
        f_necklace(identity(3), bell)

########################################


def test_necklace_start_invariance():
    """
    Test that moving the start of every cycle or walk keeps the factors.
    """

    rng = np.random.default_rng(23)
    for p in (2, 3):
        delta = wiring_delta(p)
        for _ in range(10):
            beta = Permutation(rng.permutation(2 * p))
            matrix = rng.standard_normal((3, 3)) + \
                1j * rng.standard_normal((3, 3))
            matrix /= np.linalg.norm(matrix)
            letters = {
                'A': matrix,
                'At': matrix.T,
                'Abar': matrix.conj(),
                'Ad': matrix.conj().T}

            expected = 1.0 + 0.0j
            for cycle in cycles(compose(inverse(beta), delta)):
                shift = int(rng.integers(len(cycle)))
                rotated = cycle[shift:] + cycle[:shift]
                word = [letters['A'] if index < p else letters['Ad']
                        for index in rotated]
                expected *= np.trace(np.linalg.multi_dot(word + [np.eye(3)]))
            assert f_necklace(beta, matrix) == pytest.approx(expected)

            expected = 1.0 + 0.0j
            for walk in necklaces(beta):
                word = walk.word()
                shift = 2 * int(rng.integers(len(word) // 2))
                rotated = word[shift:] + word[:shift]
                expected *= np.trace(np.linalg.multi_dot(
                    [letters[letter] for letter in rotated] + [np.eye(3)]))
            assert g_necklace(beta, matrix) == pytest.approx(expected)

########################################


def test_power_counting():
    """
    Test loop counts and the pairs that survive n -> infinity.
    """

    for p in (1, 2):
        delta = wiring_delta(p)
        unit = identity(2 * p)
        assert loop_count('conjugate', unit, delta) == 4 * p
        assert loop_count('identical', unit, unit) == 3 * p
        commuting = [beta for beta in enumerate_group(2 * p)
                     if compose(beta, delta) == compose(delta, beta)]
        assert len(commuting) == 2 ** p * factorial(p)
        maxima = [(alpha, beta) for alpha in enumerate_group(2 * p)
                  for beta in enumerate_group(2 * p)
                  if loop_count('identical', alpha, beta) == 3 * p]
        assert sorted(beta.images for _, beta in maxima) == \
            sorted(beta.images for beta in commuting)
        assert all(alpha == unit for alpha, _ in maxima)
        assert loop_count('identical', unit, delta) == 3 * p
        assert leading_exponent('identical', unit, delta) == -p
        for alpha in enumerate_group(2 * p):
            for beta in enumerate_group(2 * p):
                assert leading_exponent('conjugate', alpha, beta) <= 0
                assert leading_exponent('identical', alpha, beta) <= 0

    for p in (1, 2, 3):
        geodesic = sorted((alpha.images, beta.images) for _, _, alpha, beta
                          in enumerate_geodesic_pairs(p))
        assert surviving_pairs('conjugate', p) == geodesic
        assert len(geodesic) == 3 ** p
        unit = identity(2 * p).images
        assert surviving_pairs(MomentModels.identical, p) == [(unit, unit)]

    with pytest.raises(ValueError):
        surviving_pairs('mixed_direct', 2)
    with pytest.raises(ValueError):
        loop_count('mixed_direct', identity(2), identity(2))
