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
from lfpp.exc import DegenerateAnnulus, EmptyRegion, InvalidArgument
from lfpp.gff import LatticeSpec
from lfpp.metric import Region, boundary_ring, regionvariant, window_mask


class TestRegion(unittest.TestCase):

    def setUp(self):
        self.spec = LatticeSpec(8, 1.0)

    def test_rect_is_closed(self):
        bits = Region.rect((1.0, 1.0), (3.0, 3.0)).resolve(self.spec)
        self.assertEqual(bits.sum(), 9)
        self.assertTrue(bits[1, 1] and bits[3, 3])
        self.assertFalse(bits[4, 3])

    def test_disk_is_open(self):
        bits = Region.disk((3.0, 3.0), 1.0).resolve(self.spec)
        self.assertEqual(bits.sum(), 1)
        bits = Region.disk((3.0, 3.0), 1.5).resolve(self.spec)
        self.assertEqual(bits.sum(), 9)

    def test_annulus(self):
        ann = Region.annulus((4.0, 4.0), 1.0, 2.0)
        self.assertEqual(ann.variant, regionvariant.ANNULUS)
        bits = ann.resolve(self.spec)
        self.assertEqual(bits.sum(), 4)
        self.assertTrue(bits[5, 5])
        self.assertRaises(DegenerateAnnulus, Region.annulus, (0, 0), 2, 1)
        self.assertRaises(DegenerateAnnulus, Region.annulus, (0, 0), 0, 1)

    def test_empty(self):
        disk = Region.disk((20.0, 20.0), 1.0)
        self.assertRaises(EmptyRegion, disk.resolve, self.spec)
        self.assertFalse(disk.resolve(self.spec, require=False).any())

    def test_mask(self):
        bits = np.zeros((8, 8), dtype=bool)
        bits[2:4, 5] = True
        region = Region.mask(bits)
        np.testing.assert_array_equal(region.resolve(self.spec), bits)
        self.assertRaises(InvalidArgument, region.resolve, LatticeSpec(16, 1))
        self.assertEqual(repr(region), '<Region Mask sites=2>')

    def test_invalid(self):
        self.assertRaises(InvalidArgument, Region.rect, (1, 1), (0, 2))
        self.assertRaises(InvalidArgument, Region.disk, (1, 1), 0)
        self.assertEqual(Region.unit_square().geometry,
                         ((0.0, 0.0), (1.0, 1.0)))

    def test_window_is_half_open(self):
        rect = Region.rect((0.0, 0.0), (2.0, 2.0))
        self.assertEqual(window_mask(self.spec, rect).sum(), 4)
        self.assertEqual(rect.resolve(self.spec).sum(), 9)
        self.assertRaises(EmptyRegion, window_mask, self.spec,
                          Region.rect((0.2, 0.2), (0.8, 0.8)))

    def test_boundary_ring(self):
        spec = LatticeSpec(32, 1.0)
        bits = boundary_ring(spec, (16.0, 16.0), 8.0).resolve(spec)
        x, y = spec.coordinates()
        d = np.hypot(x - 16.0, y - 16.0)
        self.assertTrue(np.all(np.abs(d[bits] - 8.0) <= math.sqrt(2) / 2))
        for i, j in ((24, 16), (16, 8), (8, 16)):
            self.assertTrue(bits[i, j])
