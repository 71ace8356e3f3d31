#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Copyright 2026 The lfpp authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import unittest
from lfpp.exc import InvalidArgument
from lfpp.experiments import ExperimentReport, get_experiment, registry
from lfpp.experiments.report import experiment, verdict

NAMES = ('weyl_shift_test', 'scale_covariance_test',
         'translation_invariance_test', 'convergence_diagnostic',
         'localized_gap', 'gmc_mass', 'field_continuity_check',
         'field_sup_bound_check', 'small_segment_sup', 'ball_comparison',
         'annulus_event_stats')


class TestReport(unittest.TestCase):

    def test_rows_match_columns(self):
        report = ExperimentReport('x', {}, ['a', 'b'],
                                  [{'a': 1, 'b': 0.1}], verdict.PASS)
        self.assertTrue(report.passed)
        self.assertEqual(report.column('b'), [0.1])
        self.assertRaises(InvalidArgument, ExperimentReport, 'x', {},
                          ['a', 'b'], [{'a': 1}], verdict.PASS)

    def test_to_dict(self):
        report = ExperimentReport('x', {'k': 1}, ['a'], [{'a': 1}],
                                  verdict.FAIL, 1.5, {'kind': 'test'})
        self.assertFalse(report.passed)
        self.assertEqual(report.to_dict()['runtime_secs'], 1.5)
        self.assertNotIn('runtime_secs', report.to_dict(runtime=False))
        self.assertEqual(report.to_dict()['notes'], {'kind': 'test'})

    def test_csv(self):
        report = ExperimentReport('x', {}, ['eps', 'value', 'diff'],
                                  [{'eps': 0.5, 'value': 1 / 3.0,
                                    'diff': None},
                                   {'eps': 0.25, 'value': 2, 'diff': True}],
                                  verdict.INFORMATIONAL)
        self.assertEqual(report.to_csv(),
                         "eps,value,diff\n"
                         "0.5,0.3333333333333333,\n"
                         "0.25,2,True\n")


class TestRegistry(unittest.TestCase):

    def test_registered(self):
        for name in NAMES:
            self.assertIn(name, registry)
            self.assertTrue(get_experiment(name).columns)
            self.assertTrue(get_experiment(name).doc)
        self.assertRaises(InvalidArgument, get_experiment, 'nope')

    def test_decorator(self):
        @experiment(['a'])
        def probe_experiment(value):
            """ probe """
            return {'value': value}, [{'a': value}], verdict.PASS, None

        try:
            report = probe_experiment(3)
            self.assertEqual(report.name, 'probe_experiment')
            self.assertEqual(report.params, {'value': 3})
            self.assertEqual(report.notes, {})
            self.assertGreaterEqual(report.runtime_secs, 0.0)
            self.assertEqual(probe_experiment.columns, ['a'])
            self.assertEqual(get_experiment('probe_experiment').doc, 'probe')

        finally:
            registry.pop('probe_experiment', None)
