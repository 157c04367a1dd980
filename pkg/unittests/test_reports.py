#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Unit tests for randomchannels reports, checks and settings

"""

import os
import json
from argparse import Namespace
from fractions import Fraction
import numpy as np
import mpmath
import pytest
from randomchannels.reports import format_rational, round_float, to_plain, \
    format_cell, render_json, render_csv, write_report, LabReport
from randomchannels.validators import CheckResult, check_within, \
    check_true, check_non_increasing, all_passed, parse_int_list
from randomchannels.defaults import get_command_names, get_command_settings
from randomchannels.config import save_default, import_rules, LAB_RULES_PY

########################################


def test_format_values():
    """
    Test rational and float formatting.
    """

    assert format_rational(Fraction(1)) == '1/1'
    assert format_rational(Fraction(-2, 6)) == '-1/3'
    assert format_rational(3) == '3/1'
    assert round_float(1.0 / 3.0) == 0.333333333333
    assert round_float(2.0) == 2.0
    assert format_cell(None) == ''
    assert format_cell(Fraction(1, 15)) == '1/15'
    assert format_cell(0.1 + 0.2) == '0.3'
    assert format_cell(True) == 'True'
    assert format_cell(7) == '7'

########################################


def test_to_plain():
    """
    Test conversion of report values into JSON types.
    """

    value = {
        'array': np.array([0.5, 0.25]),
        'int': np.int64(3),
        'flag': np.bool_(True),
        'exact': Fraction(1, 60),
        'mp': mpmath.mpf('0.125'),
        'check': CheckResult('a', 0, 'ok'),
        'nested': (1, [2.0])}
    plain = to_plain(value)
    assert plain == {
        'array': [0.5, 0.25],
        'int': 3,
        'flag': True,
        'exact': '1/60',
        'mp': 0.125,
        'check': {'name': 'a', 'passed': True, 'advisory': False,
                  'msg': 'ok'},
        'nested': [1, [2.0]]}
    assert isinstance(plain['flag'], bool)

########################################


def test_render():
    """
    Test the JSON and CSV renderers.
    """

    text = render_json({'b': 1, 'a': Fraction(1, 2)})
    assert text == '{\n  "a": "1/2",\n  "b": 1\n}\n'
    text = render_csv(['x', 'y'], [[1, 0.5], [2, None]])
    assert text == 'x,y\n1,0.5\n2,\n'

    report = LabReport('demo', {'value': 1}, ['value'], [[1]],
                       [check_true('first', True)])
    assert report.passed()
    payload = json.loads(report.render('json'))
    assert payload['command'] == 'demo'
    assert payload['passed'] is True
    assert payload['checks'][0]['name'] == 'first'
    assert report.render('CSV') == 'value\n1\n'
    with pytest.raises(ValueError):
        report.render('xml')
    with pytest.raises(ValueError):
        LabReport('demo', {}).render('csv')

    failing = LabReport('demo', {}, checks=[check_true('second', False)])
    assert not failing.passed()
    assert json.loads(failing.render())['passed'] is False

########################################


def test_write_report(tmpdir, capsys):
    """
    Test write_report() to stdout and to a file.
    """

    write_report('a,b\n1,2\n')
    assert capsys.readouterr().out == 'a,b\n1,2\n'
    path = os.path.join(str(tmpdir), 'out.csv')
    write_report('a,b\n1,2\n', path)
    with open(path, 'r') as fileref:
        assert fileref.read().splitlines() == ['a,b', '1,2']

########################################


def test_check_result():
    """
    Test CheckResult and the check helpers.
    """

    check = check_within('close', 1.05, 1.0, 0.1)
    assert check.passed()
    assert check.get_error_code() == 0
    assert '<=' in check.msg
    assert str(check).startswith('Check "close" passed')

    check = check_within('far', 1.5, 1.0, 0.1)
    assert not check.passed()
    assert '>' in check.msg
    assert str(check).startswith('Check "far" failed')

    advisory = CheckResult('note', 1, 'informative', advisory=True)
    assert advisory.passed()
    assert advisory.to_dict()['passed'] is False
    assert str(advisory).startswith('Advisory check "note" failed')
    assert all_passed([check_true('a', True), advisory])
    assert not all_passed([check_true('a', True), check])

    trend = check_non_increasing('gap', [1.0, 0.5, 0.7], advisory=True)
    assert trend.get_error_code()
    assert trend.passed()
    assert LabReport('demo', {}, checks=[trend]).passed()
    assert not LabReport('demo', {}, checks=[trend, check]).passed()

########################################


def test_check_non_increasing():
    """
    Test check_non_increasing() and its skip count.
    """

    assert check_non_increasing('trend', [3.0, 2.0, 2.0, 1.0]).passed()
    assert not check_non_increasing('trend', [3.0, 2.0, 2.5]).passed()
    assert check_non_increasing('trend', [1.0, 2.0, 1.5], skip=2).passed()
    assert not check_non_increasing('trend', [1.0, 2.0, 2.5],
                                    skip=2).passed()
    assert check_non_increasing('trend', []).passed()
    assert 'row(s) 2' in check_non_increasing('trend', [3.0, 2.0, 2.5]).msg

########################################


def test_parse_int_list():
    """
    Test parse_int_list().
    """

    assert parse_int_list('8,16, 32') == [8, 16, 32]
    assert parse_int_list('8,') == [8]
    assert parse_int_list(8) == [8]
    assert parse_int_list([8, '16']) == [8, 16]
    assert parse_int_list(None) == []
    with pytest.raises(ValueError):
        parse_int_list('8,x')

########################################


def test_command_settings():
    """
    Test presets, rules and command line precedence.
    """

    assert get_command_names() == ['convergence', 'hw', 'moments',
                                   'simulate', 'wg']
    settings = get_command_settings('moments')
    assert settings['n'] == [8]
    assert settings['jobs'] == 1
    assert settings['format'] == 'json'

    def rules(command, **kwargs):
        del kwargs
        if command == 'moments':
            return {'n': '16,32', 'trials': 10}
        return None

    settings = get_command_settings('moments', rules=rules)
    assert settings['n'] == [16, 32]
    assert settings['trials'] == 10

    args = Namespace(n='64', trials=None, jobs=3)
    settings = get_command_settings('moments', args, rules)
    assert settings['n'] == [64]
    assert settings['trials'] == 10
    assert settings['jobs'] == 3

    with pytest.raises(ValueError):
        get_command_settings('nonsense')
    with pytest.raises(ValueError):
        get_command_settings('hw', Namespace(seed=-1))
    with pytest.raises(ValueError):
        get_command_settings('hw', Namespace(jobs=0))

########################################


def test_rules_template(tmpdir):
    """
    Test the rules template can be saved and loaded back.
    """

    assert import_rules(None) is None
    assert save_default(str(tmpdir)) == 0
    path = os.path.join(str(tmpdir), LAB_RULES_PY)
    rules = import_rules(path)
    assert rules('moments')['n'] == [8]
    assert rules('hw')['trials'] == 100
    assert rules('wg') is None

    for name in get_command_names():
        get_command_settings(name, rules=rules)

    with pytest.raises(ValueError):
        import_rules(os.path.join(str(tmpdir), 'missing.py'))
    assert save_default(os.path.join(str(tmpdir), 'missing_dir')) == 1
