#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the code for the command line "randomchannels".

Run a laboratory experiment on random quantum channels and print a
machine readable report comparing Monte Carlo spectra, exact moments and
their n -> infinity predictions.

Subcommands are wg, simulate, moments, convergence and hw. Every
random draw comes from ``--seed``, the same flags and seed always give
the same bytes, whatever ``--jobs`` is.

See Also:
    randomchannels.defaults, randomchannels.reports
"""

## \package randomchannels.__main__

from __future__ import absolute_import, print_function, unicode_literals

import sys
import os
import argparse
from concurrent.futures import ThreadPoolExecutor
import numpy as np

from .__pkginfo__ import VERSION
from .config import LAB_RULES_PY, save_default, import_rules
from .defaults import get_command_settings, get_command_names
from .enums import Pairing, InputTypes, OutputTypes, MomentModels, \
    validate_enum_type
from .validators import check_true, check_within, check_non_increasing
from .reports import LabReport, write_report
from .symgroup import class_representative, partitions
from .weingarten import build_table, verify_table, asymptotic_wg
from .linalg import trial_rng, haar_unitary
from .channels import ChannelParams, build_input, monte_carlo, \
    hayden_winter_check
from .moments import MomentRequest, moment_conjugate, moment_identical, \
    moment_mixed, limit_moment
from .asymptotics import predicted_spectrum

## Exit code when every check passed
EXIT_SUCCESS = 0

## Exit code when a check failed
EXIT_CHECK_FAILED = 1

## Exit code on invalid input
EXIT_USAGE = 2

########################################


def make_params(settings, n):
    """
    Channel dimensions from --din, --t or the default d_in = n.
    """

    if settings.get('din') is not None:
        return ChannelParams(n, settings['k'], settings['din'])
    if settings.get('t') is not None:
        return ChannelParams.from_ratio(n, settings['k'], settings['t'])
    return ChannelParams(n, settings['k'])

########################################


def make_input(settings, params):
    """
    Input state from --input, --rank, --l and --m.
    """

    return build_input(settings['input'], params, rank=settings.get('rank'),
                       l=settings.get('l'), m=settings.get('m'))

########################################


def predicted_values(pairing, input_state, params, output_type, bits):
    """
    Return (predicted eigenvalues, predicted entropy) or (None, None) when
    no limit is known.
    """

    try:
        atoms = predicted_spectrum(pairing, input_state, params, output_type)
    except ValueError:
        return None, None
    return atoms.expand(), atoms.entropy(bits)

########################################


def cmd_wg(settings):
    """
    Exact Weingarten table of S_p in dimension n.

    Every cycle type comes with its exact value, the leading asymptotic
    term and their relative error. The convolution identity is checked
    again on the emitted table.
    """

    n = settings['n']
    p = settings['p']
    table = build_table(n, p)

    entries = []
    for partition in partitions(p):
        exact = table.value(partition)
        approximation = float(
            asymptotic_wg(n, class_representative(partition)))
        entries.append({
            'cycle_type': list(partition),
            'exact': exact,
            'decimal': float(exact),
            'asymptotic': approximation,
            'relative_error': abs(approximation - float(exact)) /
                              abs(float(exact))})

    checks = [check_true('convolution identity', verify_table(table),
                         'exact on {} cycle types'.format(len(entries)))]
    return LabReport(
        'wg', {'n': n, 'p': p, 'table': entries},
        ['cycle_type', 'exact', 'decimal', 'asymptotic', 'relative_error'],
        [['.'.join(str(i) for i in item['cycle_type']), item['exact'],
          item['decimal'], item['asymptotic'], item['relative_error']]
         for item in entries],
        checks)

########################################


def cmd_simulate(settings):
    """
    Monte Carlo output spectra, one row per trial.
    """

    pairing = validate_enum_type(settings['pairing'], Pairing)
    output_type = validate_enum_type(settings['output_type'], OutputTypes)
    params = make_params(settings, settings['n'])
    input_state = make_input(settings, params)
    bits = settings['bits']

    empirical = monte_carlo(
        params, pairing, input_state, settings['trials'], settings['seed'],
        output_type, settings['jobs'], bits, settings['verbose'])
    means = empirical.means()
    predicted, predicted_entropy = predicted_values(
        pairing, input_state, params, output_type, bits)

    data = {
        'pairing': pairing.name,
        'input': input_state.input_type.name,
        'output_type': output_type.name,
        'n': params.n,
        'k': params.k,
        'd_in': params.d_in,
        'trials': empirical.trials,
        'seed': settings['seed'],
        'entropy_unit': 'bits' if bits else 'nats',
        'means': means,
        'deviations': empirical.deviations(),
        'mean_entropy': float(empirical.entropies.mean()),
        'predicted': predicted,
        'predicted_entropy': predicted_entropy,
        'absolute_deviations': None}
    if predicted is not None:
        size = min(len(predicted), len(means))
        data['absolute_deviations'] = np.abs(means[:size] - predicted[:size])

    rank = empirical.spectra.shape[1]
    header = ['trial'] + ['lambda_{}'.format(i + 1) for i in range(rank)] + \
        ['entropy']
    rows = [[index] + list(row) + [entropy] for index, (row, entropy) in
            enumerate(zip(empirical.spectra, empirical.entropies))]
    return LabReport('simulate', data, header, rows)

########################################


def _exact_moment(request, settings):
    """
    Dispatch a MomentRequest to its model.
    """

    model = request.model
    if model is MomentModels.conjugate:
        return moment_conjugate(request, settings['jobs'],
                                bool(settings.get('geodesic_only')),
                                settings['verbose'])
    if model is MomentModels.identical:
        return moment_identical(request, settings['jobs'],
                                settings['verbose'])
    return moment_mixed(request, settings['jobs'], settings['verbose'])

########################################


def cmd_moments(settings):
    """
    Exact moments against Monte Carlo and the n -> infinity limit.

    With --trials 0 the Monte Carlo columns are left empty.
    """

    # Too many locals
    # pylint: disable=R0914

    model = validate_enum_type(settings['model'], MomentModels)
    k = settings['k']
    p = settings['p']
    l = settings['l'] if model.is_mixed() else 1
    trials = settings['trials']

    rows = []
    checks = []
    for n in settings['n']:
        params = ChannelParams(n, k) if model.is_mixed() else \
            make_params(settings, n)
        request = MomentRequest(model, n, k, p, d_in=params.d_in, l=l,
                                opt_in=settings['opt_in'])
        exact = _exact_moment(request, settings)
        limit = limit_moment(model, p, k, params.t, 1.0, l)

        row = {
            'n': n,
            'd_in': params.d_in,
            'exact': exact,
            'exact_decimal': float(exact),
            'limit': float(limit),
            'gap_exact_limit': abs(float(exact) - float(limit)),
            'monte_carlo': None,
            'standard_error': None,
            'gap_exact_mc': None,
            'gap_mc_limit': None}

        if trials:
            input_type = InputTypes.mixed_bell if model.is_mixed() else \
                InputTypes.bell
            input_state = build_input(input_type, params, l=l)
            estimate, error = monte_carlo(
                params, model.pairing(), input_state, trials,
                settings['seed'], model.output_type(), settings['jobs'],
                verbose=settings['verbose']).moment_estimate(p)
            row['monte_carlo'] = estimate
            row['standard_error'] = error
            row['gap_exact_mc'] = abs(float(exact) - estimate)
            row['gap_mc_limit'] = abs(estimate - float(limit))
            checks.append(check_within(
                'exact vs Monte Carlo at n={}'.format(n), estimate,
                float(exact), max(3.0 * error, 1e-9)))
        rows.append(row)

    if len(rows) > 1:
        checks.append(check_non_increasing(
            'exact to limit gap', [row['gap_exact_limit'] for row in rows]))

    header = ['n', 'd_in', 'exact', 'exact_decimal', 'monte_carlo',
              'standard_error', 'limit', 'gap_exact_mc', 'gap_exact_limit',
              'gap_mc_limit']
    return LabReport(
        'moments',
        {'model': model.name, 'k': k, 'l': l, 'p': p, 'trials': trials,
         'seed': settings['seed'], 'rows': rows},
        header, [[row[key] for key in header] for row in rows], checks)

########################################


def cmd_convergence(settings):
    """
    Mean spectrum and its deviation from the limit along increasing n.
    """

    # Too many locals
    # pylint: disable=R0914

    n_values = settings['n']
    if any(second <= first for first, second in
           zip(n_values, n_values[1:])):
        raise ValueError('n values must be increasing, got {}.'.format(
            n_values))
    pairing = validate_enum_type(settings['pairing'], Pairing)
    output_type = validate_enum_type(settings['output_type'], OutputTypes)
    bits = settings['bits']

    rows = []
    for n in n_values:
        params = make_params(dict(settings, din=None), n)
        input_state = make_input(settings, params)
        predicted, predicted_entropy = predicted_values(
            pairing, input_state, params, output_type, bits)
        if predicted is None:
            raise ValueError('No limiting spectrum for {} with {}.'.format(
                pairing, input_state))
        empirical = monte_carlo(
            params, pairing, input_state, settings['trials'],
            settings['seed'], output_type, settings['jobs'], bits,
            settings['verbose'])
        means = empirical.means()
        size = min(len(predicted), len(means))
        rows.append({
            'n': n,
            'd_in': params.d_in,
            'means': means,
            'deviation': float(np.max(np.abs(means[:size] -
                                             predicted[:size]))),
            'entropy_gap': abs(float(empirical.entropies.mean()) -
                               predicted_entropy)})

    checks = [
        check_non_increasing(
            'deviation trend', [row['deviation'] for row in rows], skip=2),
        check_non_increasing(
            'entropy gap trend', [row['entropy_gap'] for row in rows],
            skip=2, advisory=True)]
    rank = len(rows[0]['means'])
    header = ['n', 'd_in'] + \
        ['lambda_{}'.format(i + 1) for i in range(rank)] + \
        ['deviation', 'entropy_gap']
    return LabReport(
        'convergence',
        {'pairing': pairing.name, 'input': settings['input'],
         'output_type': output_type.name, 'k': settings['k'],
         'trials': settings['trials'], 'seed': settings['seed'],
         'entropy_unit': 'bits' if bits else 'nats', 'rows': rows},
        header,
        [[row['n'], row['d_in']] + list(row['means']) +
         [row['deviation'], row['entropy_gap']] for row in rows],
        checks)

########################################


def cmd_hw(settings):
    """
    Bell overlap of the conjugate product channel against d_in / (nk).
    """

    params = make_params(settings, settings['n'])
    seed = settings['seed']

    def run_trial(index):
        unitary = haar_unitary(params.n * params.k, trial_rng(seed, index))
        return hayden_winter_check(unitary, params)

    trials = range(settings['trials'])
    if settings['jobs'] > 1:
        with ThreadPoolExecutor(max_workers=settings['jobs']) as executor:
            results = list(executor.map(run_trial, trials))
    else:
        results = [run_trial(index) for index in trials]

    rows = [{'trial': index, 'overlap': overlap, 'bound': bound, 'pass': ok}
            for index, (overlap, bound, ok) in enumerate(results)]
    passes = sum(1 for row in rows if row['pass'])
    pass_rate = passes / float(len(rows)) if rows else 0.0
    bound = params.d_in / float(params.n * params.k)
    checks = [check_true(
        'overlap bound', bool(rows) and passes == len(rows),
        '{}/{} trials'.format(passes, len(rows)))]
    return LabReport(
        'hw',
        {'n': params.n, 'k': params.k, 'd_in': params.d_in,
         'seed': seed, 'bound': bound, 'pass_rate': pass_rate,
         'trials': rows},
        ['trial', 'overlap', 'bound', 'pass'],
        [[row['trial'], row['overlap'], row['bound'], row['pass']]
         for row in rows],
        checks)

## Subcommand dispatch table
_COMMANDS = {
    'wg': cmd_wg,
    'simulate': cmd_simulate,
    'moments': cmd_moments,
    'convergence': cmd_convergence,
    'hw': cmd_hw
}

########################################


def _common_parser():
    """
    Options shared by every subcommand.

    Defaults are suppressed so an absent option never hides a rules file
    value.
    """

    parser = argparse.ArgumentParser(add_help=False,
                                     argument_default=argparse.SUPPRESS)
    parser.add_argument('-v', '-verbose', dest='verbose', action='store_true',
                        help='Verbose output on stderr.')
    parser.add_argument('--rules-file', dest='rules_file', metavar='<file>',
                        help='Load defaults from a rules file.')
    parser.add_argument('--jobs', dest='jobs', type=int, metavar='<N>',
                        help='Number of worker threads.')
    parser.add_argument('--seed', dest='seed', type=int, metavar='<seed>',
                        help='Master seed, a 64 bit unsigned integer.')
    parser.add_argument('--out', dest='out', metavar='<file>',
                        help='Write the report to a file instead of stdout.')
    parser.add_argument('--format', dest='format', choices=('json', 'csv'),
                        help='Report format.')
    parser.add_argument('--bits', dest='bits', action='store_true',
                        help='Entropies in bits instead of nats.')
    parser.add_argument('--opt-in', dest='opt_in', action='store_true',
                        help='Allow moment order 4.')
    return parser

########################################


def _add_channel_options(parser, n_list=False):
    """
    Options describing the channel and its input.
    """

    if n_list:
        parser.add_argument('--n', dest='n', metavar='<n,n,...>',
                            help='Increasing output dimensions.')
    else:
        parser.add_argument('--n', dest='n', type=int, metavar='<n>',
                            help='Output dimension.')
    parser.add_argument('--k', dest='k', type=int, metavar='<k>',
                        help='Environment dimension.')
    parser.add_argument('--t', dest='t', type=float, metavar='<t>',
                        help='Input ratio d_in / (nk).')
    parser.add_argument('--l', dest='l', type=int, metavar='<l>',
                        help='Maximally mixed levels of the mixed Bell input.')
    parser.add_argument('--trials', dest='trials', type=int,
                        metavar='<trials>', help='Number of Haar samples.')

########################################


def _add_input_options(parser):
    """
    Options selecting the pairing, the input and the output side.
    """

    parser.add_argument('--pairing', dest='pairing',
                        choices=[item.name for item in Pairing],
                        help='Second unitary of the product channel.')
    parser.add_argument('--input', dest='input',
                        choices=[item.name for item in InputTypes
                                 if item is not InputTypes.generalized],
                        help='Input state.')
    parser.add_argument('--output-type', dest='output_type',
                        choices=[item.name for item in OutputTypes],
                        help='Side of the dilation kept.')
    parser.add_argument('--m', dest='m', type=float, metavar='<m>',
                        help='Value of |m| of the tilted input.')
    parser.add_argument('--rank', dest='rank', type=int, metavar='<r>',
                        help='Rank of the low rank input.')

########################################


def build_parser():
    """
    Create the argparse parser of the command line.
    """

    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog='randomchannels', description=(
            'Random quantum channel laboratory. Exact Weingarten tables, '
            'Monte Carlo output spectra, exact moments and their '
            'asymptotic limits.'))
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + VERSION)
    parser.add_argument('--generate-rules', dest='generate_rules',
                        action='store_true', default=False,
                        help='Generate a sample {} and exit.'.format(
                            LAB_RULES_PY))
    subparsers = parser.add_subparsers(dest='command', metavar='<command>')

    sub = subparsers.add_parser('wg', parents=[common],
                                help='Exact Weingarten table.')
    sub.add_argument('--n', dest='n', type=int, metavar='<n>',
                     help='Dimension.')
    sub.add_argument('--p', dest='p', type=int, metavar='<p>',
                     help='Degree of the symmetric group.')

    sub = subparsers.add_parser('simulate', parents=[common],
                                help='Monte Carlo output spectra.')
    _add_channel_options(sub)
    _add_input_options(sub)
    sub.add_argument('--din', dest='din', type=int, metavar='<d_in>',
                     help='Input dimension.')

    sub = subparsers.add_parser('moments', parents=[common],
                                help='Exact moments against Monte Carlo.')
    _add_channel_options(sub, n_list=True)
    sub.add_argument('--model', dest='model',
                     choices=[item.name for item in MomentModels],
                     help='Moment model.')
    sub.add_argument('--din', dest='din', type=int, metavar='<d_in>',
                     help='Input dimension.')
    sub.add_argument('--p', dest='p', type=int, metavar='<p>',
                     help='Moment order.')
    sub.add_argument('--geodesic-only', dest='geodesic_only',
                     action='store_true',
                     help='Keep only the geodesic pairs (conjugate model).')

    sub = subparsers.add_parser('convergence', parents=[common],
                                help='Spectrum convergence along n.')
    _add_channel_options(sub, n_list=True)
    _add_input_options(sub)

    sub = subparsers.add_parser('hw', parents=[common],
                                help='Bell overlap inequality.')
    sub.add_argument('--n', dest='n', type=int, metavar='<n>',
                     help='Output dimension.')
    sub.add_argument('--k', dest='k', type=int, metavar='<k>',
                     help='Environment dimension.')
    sub.add_argument('--din', dest='din', type=int, metavar='<d_in>',
                     help='Input dimension.')
    sub.add_argument('--trials', dest='trials', type=int, metavar='<trials>',
                     help='Number of Haar samples.')
    return parser

########################################


def run_command(command, settings):
    """
    Run a subcommand on resolved settings.

    Args:
        command: Name of the subcommand.
        settings: dict from defaults.get_command_settings().
    Returns:
        LabReport instance.
    """

    function = _COMMANDS.get(command, None)
    if function is None:
        raise ValueError('Unknown command "{}", use one of {}.'.format(
            command, ', '.join(get_command_names())))
    if settings['verbose']:
        print('Running {} with {}'.format(
            command, ', '.join('{}={}'.format(key, settings[key])
                               for key in sorted(settings))),
              file=sys.stderr)
    return function(settings)

########################################


def main(working_directory=None, args=None):
    """
    Main entry point when invoked as a tool.

    Args:
        working_directory: Directory for relative output paths or None.
        args: Command line to use instead of ``sys.argv``.
    Returns:
        Zero if every check passed, 1 if a check failed, 2 on invalid
        input.
    """

    # Make sure working_directory is properly set
    if working_directory is None:
        working_directory = os.getcwd()

    parser = build_parser()
    args = parser.parse_args(args=args)
    verbose = getattr(args, 'verbose', False)

    # Output default configuration
    if args.generate_rules:
        if verbose:
            print('Saving {}'.format(
                os.path.join(working_directory, LAB_RULES_PY)),
                  file=sys.stderr)
        return save_default(working_directory)

    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        rules = import_rules(getattr(args, 'rules_file', None), verbose)
        settings = get_command_settings(args.command, args, rules)
        report = run_command(args.command, settings)
        text = report.render(settings['format'])
    except (ValueError, TypeError) as error:
        print('Error: {}'.format(error), file=sys.stderr)
        return EXIT_USAGE

    out = settings['out']
    if out is not None and not os.path.isabs(out):
        out = os.path.join(working_directory, out)
    write_report(text, out, verbose)

    for check in report.checks:
        if check.get_error_code() or verbose:
            print(check, file=sys.stderr)
    return EXIT_SUCCESS if report.passed() else EXIT_CHECK_FAILED


# If called as a function and not a class,
# call my main

if __name__ == "__main__":
    sys.exit(main())
