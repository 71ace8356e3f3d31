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

import math
import unittest
from lfpp.exc import InsufficientTrials
from lfpp.experiments import (scale_covariance_test,
                              translation_invariance_test,
                              weyl_shift_test)
from lfpp.experiments.identities import DEFAULT_PAIRS
from lfpp.experiments.report import verdict
from lfpp.gff import LatticeSpec, Params, sample_torus_gff
from lfpp.renorm import MCConfig
from . import prefilled_cache


class TestWeylShift(unittest.TestCase):

    def setUp(self):
        self.params = Params(0.2)
        self.field = sample_torus_gff(LatticeSpec.auto(64), 3)

    def test_constant(self):
        report = weyl_shift_test(self.field, 0.25, 1.0, DEFAULT_PAIRS,
                                 self.params)
        self.assertEqual(report.verdict, verdict.PASS)
        self.assertEqual(len(report.rows), len(DEFAULT_PAIRS))
        for row in report.rows:
            self.assertAlmostEqual(row['ratio'] / math.exp(0.2), 1.0,
                                   places=10)
        self.assertEqual(report.params['c'], 1.0)

    def test_function_sandwich(self):
        report = weyl_shift_test(self.field, 0.25, 0.0, DEFAULT_PAIRS,
                                 self.params, f=lambda x, y: 0.5 * x)
        self.assertEqual(report.verdict, verdict.PASS)
        for row in report.rows:
            self.assertLessEqual(row['ratio_lo'], row['ratio'])
            self.assertLessEqual(row['ratio'], row['ratio_hi'])


class TestTranslation(unittest.TestCase):

    def test_exact(self):
        field = sample_torus_gff(LatticeSpec.auto(64), 8)
        report = translation_invariance_test(field, 0.25, (3, -2),
                                             DEFAULT_PAIRS, Params(0.2))
        self.assertEqual(report.verdict, verdict.PASS)
        self.assertTrue(all(row['equal'] for row in report.rows))
        self.assertEqual(report.params['shift'], [3, -2])


class TestScaleCovariance(unittest.TestCase):

    def setUp(self):
        self.params = Params(0.2)
        self.mc = MCConfig(20, 5, LatticeSpec.auto(64))

    def test_unit_scale_is_exact(self):
        cache = prefilled_cache(self.params, self.mc, {0.25: 2.0})
        report = scale_covariance_test(1.0, 0.25, self.params, self.mc, 2.0,
                                       cache=cache)
        self.assertEqual(report.verdict, verdict.INFORMATIONAL)
        self.assertEqual(len(report.rows), 20 * len(DEFAULT_PAIRS))
        for row in report.rows:
            self.assertEqual(row['lhs'], row['rhs'])
        self.assertFalse(report.notes['rejected'])
        self.assertEqual(report.notes['a_eps'], 2.0)
        self.assertEqual(report.notes['median_lhs'],
                         report.notes['median_rhs'])

    def test_trials(self):
        mc = MCConfig(5, 5, LatticeSpec.auto(64))
        self.assertRaises(InsufficientTrials, scale_covariance_test, 1.0,
                          0.25, self.params, mc, 2.0)
