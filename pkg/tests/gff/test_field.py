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
import numpy as np
from lfpp.exc import InvalidArgument, InvalidSpec, OutOfDomain
from lfpp.gff import (FieldSample,
                      LatticeSpec,
                      add_function,
                      circle_average,
                      fieldkind,
                      rescale_field,
                      sample_dirichlet_gff,
                      sample_torus_gff,
                      translate_field)
from lfpp.gff.field import dirichlet_covariance, torus_covariance
from .. import constant_field, linear_field


class TestFieldSample(unittest.TestCase):

    def test_frozen(self):
        field = constant_field(16, 1.5)
        self.assertFalse(field.values.flags.writeable)
        with self.assertRaises(ValueError):
            field.values[0, 0] = 0.0

    def test_invalid(self):
        spec = LatticeSpec.auto(16)
        self.assertRaises(InvalidSpec, FieldSample, spec, np.zeros((8, 8)),
                          fieldkind.TORUS, 0)
        values = np.zeros((16, 16))
        values[3, 3] = np.nan
        self.assertRaises(InvalidArgument, FieldSample, spec, values,
                          fieldkind.TORUS, 0)
        self.assertRaises(InvalidArgument, FieldSample, spec,
                          np.zeros((16, 16)), 'Sphere', 0)


class TestTorusGFF(unittest.TestCase):

    def test_deterministic(self):
        spec = LatticeSpec.auto(32)
        a = sample_torus_gff(spec, 7)
        b = sample_torus_gff(spec, 7)
        c = sample_torus_gff(spec, 8)
        np.testing.assert_array_equal(a.values, b.values)
        self.assertFalse(np.array_equal(a.values, c.values))
        self.assertTrue(a.mean_removed)
        self.assertFalse(a.derived)
        self.assertLess(abs(a.values.mean()), 1e-12)

    def test_minimum_side(self):
        self.assertRaises(InvalidSpec, sample_torus_gff, LatticeSpec(4, 1.0),
                          1)

    def test_covariance_is_logarithmic(self):
        spec = LatticeSpec(128, 1.0 / 128)
        c0 = torus_covariance(spec, (0, 0))
        c4 = torus_covariance(spec, (4, 0))
        c16 = torus_covariance(spec, (16, 0))
        self.assertAlmostEqual(c4 - c16, math.log(4.0), delta=0.15)
        self.assertGreater(c0, c4)
        self.assertAlmostEqual(c4, torus_covariance(spec, (0, 4)),
                               places=10)

    def test_increment_variance(self):
        spec = LatticeSpec.auto(32)
        expected = 2.0 * (torus_covariance(spec, (0, 0)) -
                          torus_covariance(spec, (1, 0)))
        squares = []
        for seed in range(100):
            h = sample_torus_gff(spec, seed).values
            squares.append(np.mean((np.roll(h, -1, axis=0) - h) ** 2))
        self.assertAlmostEqual(np.mean(squares) / expected, 1.0, delta=0.1)


class TestDirichletGFF(unittest.TestCase):

    def test_boundary(self):
        field = sample_dirichlet_gff(LatticeSpec(16, 1.0 / 15), 3)
        self.assertEqual(field.kind, fieldkind.DIRICHLET)
        for edge in (field.values[0], field.values[-1],
                     field.values[:, 0], field.values[:, -1]):
            np.testing.assert_array_equal(edge, 0.0)
        self.assertTrue(np.any(field.values[1:-1, 1:-1] != 0))

    def test_covariance(self):
        spec = LatticeSpec(16, 1.0 / 15)
        self.assertEqual(dirichlet_covariance(spec, (0, 5), (7, 7)), 0.0)
        self.assertAlmostEqual(dirichlet_covariance(spec, (3, 5), (7, 8)),
                               dirichlet_covariance(spec, (7, 8), (3, 5)))

        expected = dirichlet_covariance(spec, (8, 8), (8, 8))
        squares = [sample_dirichlet_gff(spec, seed).values[8, 8] ** 2
                   for seed in range(800)]
        self.assertAlmostEqual(np.mean(squares) / expected, 1.0, delta=0.2)


class TestFieldOperations(unittest.TestCase):

    def test_circle_average(self):
        field = constant_field(64, 2.5)
        self.assertAlmostEqual(circle_average(field, (0.5, 0.5), 0.3), 2.5,
                               places=12)
        field = linear_field(64, (1.0, -2.0))
        self.assertAlmostEqual(circle_average(field, (0.4, 0.6), 0.25),
                               0.4 - 1.2, places=9)

        self.assertRaises(InvalidArgument, circle_average, field,
                          (0.5, 0.5), 0.01)
        self.assertRaises(OutOfDomain, circle_average, field, (0.5, 0.5),
                          3.0)

    def test_add_function(self):
        field = constant_field(16, 1.0)
        shifted = add_function(field, 2.0)
        np.testing.assert_array_equal(shifted.values, 3.0)
        self.assertTrue(shifted.derived)

        added = add_function(field, lambda x, y: x + y)
        x, y = field.spec.coordinates()
        np.testing.assert_allclose(added.values, 1.0 + x + y)
        self.assertRaises(InvalidArgument, add_function, field,
                          lambda x, y: 1.0 / (x - x))

    def test_rescale_identity(self):
        field = sample_torus_gff(LatticeSpec.auto(32), 5)
        same = rescale_field(field, 1.0, (0.0, 0.0), 2.0)
        np.testing.assert_array_equal(same.values, field.values)
        self.assertEqual(same.spec, field.spec)

    def test_rescale_coarse(self):
        field = sample_torus_gff(LatticeSpec.auto(32), 5)
        q = 1.7
        coarse = rescale_field(field, 2.0, (0.0, 0.0), q)
        self.assertEqual(coarse.spec.n, 16)
        self.assertEqual(coarse.spec.spacing, field.spec.spacing)
        np.testing.assert_allclose(coarse.values,
                                   field.values[::2, ::2] + q * math.log(2))
        # site (i, j) of the output sits at the preimage of site (2i, 2j)
        x, y = field.spec.point(6, 10)
        u, v = coarse.spec.point(3, 5)
        self.assertAlmostEqual(2 * u, x)
        self.assertAlmostEqual(2 * v, y)

    def test_rescale_invalid(self):
        field = constant_field(32)
        self.assertRaises(InvalidArgument, rescale_field, field, 3.0,
                          (0.0, 0.0), 1.0)
        self.assertRaises(InvalidArgument, rescale_field, field, 2.0,
                          (0.01, 0.0), 1.0)
        self.assertRaises(OutOfDomain, rescale_field, field, 2.0,
                          (0.0, 0.0), 1.0, n_out=32)

    def test_translate(self):
        field = sample_torus_gff(LatticeSpec.auto(16), 2)
        moved = translate_field(field, (1, -2))
        self.assertEqual(moved.values[3, 5], field.values[4, 3])
        self.assertEqual(moved.values[15, 0], field.values[0, 14])
        self.assertTrue(moved.mean_removed)
