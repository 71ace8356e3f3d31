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

import itertools
import math
import unittest
import numpy as np
from lfpp.exc import OutOfRegion
from lfpp.metric import (Region,
                         build_weighted_grid,
                         dist_balls,
                         dist_internal,
                         dist_point,
                         dist_sets,
                         lr_crossing)
from . import all_pairs, moll_of, random_moll

WHOLE = Region.rect((0, 0), (7, 7))


class ShortestTestsBase(unittest.TestCase):

    def assertGeodesic(self, grid, result, start=None, end=None):
        sites = result.path.sites
        for u, v in zip(sites[:-1], sites[1:]):
            self.assertLessEqual(max(abs(u[0] - v[0]), abs(u[1] - v[1])), 1)
            self.assertTrue(grid.in_mask(v))
        if start is not None:
            self.assertEqual(sites[0], start)
        if end is not None:
            self.assertEqual(sites[-1], end)
        # the path is re-summed in travel order
        self.assertEqual(result.path.length, result.value)
        self.assertEqual(result.path.cumulative(grid)[-1], result.value)


class TestDistPoint(ShortestTestsBase):

    def test_matches_all_pairs(self):
        for seed in range(3):
            grid = build_weighted_grid(random_moll(8, seed), 0.7, WHOLE)
            oracle = all_pairs(grid)
            for z, w in ((0, 63), (9, 50), (7, 56), (27, 36)):
                zi, wi = divmod(z, 8), divmod(w, 8)
                result = dist_point(grid, zi, wi, want_path=True)
                self.assertAlmostEqual(result.value, oracle[z, w],
                                       delta=1e-12 * oracle[z, w])
                self.assertGeodesic(grid, result, zi, wi)

    def test_symmetric(self):
        grid = build_weighted_grid(random_moll(8, 5), 0.7, WHOLE)
        forward = dist_point(grid, (1, 2), (6, 5)).value
        backward = dist_point(grid, (6, 5), (1, 2)).value
        self.assertAlmostEqual(forward, backward, delta=1e-12 * forward)

    def test_same_site(self):
        grid = build_weighted_grid(random_moll(8), 0.7, WHOLE)
        result = dist_point(grid, (3.1, 2.9), (2.9, 3.2), want_path=True)
        self.assertEqual(result.value, 0.0)
        self.assertEqual(result.path.sites, [(3, 3)])

    def test_constant_field(self):
        grid = build_weighted_grid(moll_of(np.zeros((16, 16)), 0.25), 0.4,
                                   Region.rect((0, 0), (3.75, 3.75)))
        # four diagonal steps, then two straight ones
        result = dist_point(grid, (0.0, 0.0), (1.5, 1.0))
        self.assertAlmostEqual(result.value,
                               0.25 * (4 * math.sqrt(2) + 2), places=12)

    def test_disconnected(self):
        bits = np.zeros((8, 8), dtype=bool)
        bits[:3, :3] = True
        bits[5:, 5:] = True
        grid = build_weighted_grid(random_moll(8), 0.7, Region.mask(bits))
        result = dist_point(grid, (0, 0), (7, 7), want_path=True)
        self.assertTrue(result.infinite)
        self.assertIsNone(result.path)

    def test_out_of_region(self):
        grid = build_weighted_grid(random_moll(8), 0.7,
                                   Region.rect((0, 0), (3, 3)))
        self.assertRaises(OutOfRegion, dist_point, grid, (0, 0), (6, 6))


class TestDistSets(ShortestTestsBase):

    def test_matches_all_pairs(self):
        grid = build_weighted_grid(random_moll(8, 1), 0.7, WHOLE)
        oracle = all_pairs(grid)
        A = Region.rect((0, 0), (1, 2))
        B = Region.rect((5, 4), (7, 5))
        a = [i * 8 + j for i, j in itertools.product(range(0, 2),
                                                     range(0, 3))]
        b = [i * 8 + j for i, j in itertools.product(range(5, 8),
                                                     range(4, 6))]
        expected = min(oracle[s, t] for s in a for t in b)
        result = dist_sets(grid, A, B, want_path=True)
        self.assertAlmostEqual(result.value, expected, delta=1e-12 * expected)
        self.assertGeodesic(grid, result)
        self.assertIn(result.path.sites[0][0], (0, 1))
        self.assertIn(result.path.sites[-1][0], (5, 6, 7))

    def test_overlap(self):
        grid = build_weighted_grid(random_moll(8), 0.7, WHOLE)
        self.assertEqual(dist_sets(grid, Region.rect((0, 0), (4, 4)),
                                   Region.rect((3, 3), (7, 7))).value, 0.0)

    def test_missing_set(self):
        grid = build_weighted_grid(random_moll(8), 0.7, WHOLE)
        self.assertRaises(OutOfRegion, dist_sets, grid,
                          Region.disk((20, 20), 1), WHOLE)


class TestDistInternal(ShortestTestsBase):

    def test_matches_restricted_all_pairs(self):
        grid = build_weighted_grid(random_moll(8, 2), 0.7, WHOLE)
        sub = Region.rect((0, 0), (7, 2))
        oracle = all_pairs(grid, sub.resolve(grid.spec))
        result = dist_internal(grid, (0, 0), (7, 2), sub, want_path=True)
        self.assertAlmostEqual(result.value, oracle[0, 58],
                               delta=1e-12 * oracle[0, 58])
        self.assertTrue(all(j <= 2 for i, j in result.path.sites))
        self.assertGreaterEqual(result.value + 1e-12,
                                dist_point(grid, (0, 0), (7, 2)).value)

    def test_endpoint_outside(self):
        grid = build_weighted_grid(random_moll(8), 0.7, WHOLE)
        self.assertRaises(OutOfRegion, dist_internal, grid, (0, 0), (7, 7),
                          Region.rect((0, 0), (7, 2)))


class TestCrossing(ShortestTestsBase):

    def test_constant_field(self):
        grid = build_weighted_grid(moll_of(np.zeros((16, 16))), 0.5,
                                   Region.rect((0, 0), (15, 15)))
        result = lr_crossing(grid, Region.rect((2, 2), (6, 6)),
                             want_path=True)
        self.assertAlmostEqual(result.value, 4.0, places=12)
        self.assertEqual(result.path.sites[0][0], 2)
        self.assertEqual(result.path.sites[-1][0], 6)

    def test_matches_all_pairs(self):
        grid = build_weighted_grid(random_moll(8, 3), 0.7, WHOLE)
        square = Region.rect((1, 1), (5, 5))
        oracle = all_pairs(grid, square.resolve(grid.spec))
        expected = min(oracle[1 * 8 + j, 5 * 8 + k]
                       for j in range(1, 6) for k in range(1, 6))
        result = lr_crossing(grid, square)
        self.assertAlmostEqual(result.value, expected, delta=1e-12 * expected)


class TestDistBalls(ShortestTestsBase):

    def setUp(self):
        self.grid = build_weighted_grid(moll_of(np.zeros((16, 16))), 0.5,
                                        Region.rect((0, 0), (15, 15)))

    def test_balls(self):
        result = dist_balls(self.grid, (3, 8), (9, 8), 1.5)
        self.assertAlmostEqual(result.value, 4.0, places=12)

    def test_small_ball_uses_nearest_site(self):
        result = dist_balls(self.grid, (3, 8), (9, 8), 0.1)
        self.assertAlmostEqual(result.value, 6.0, places=12)

    def test_within(self):
        values = np.zeros((16, 16))
        values[:, 9:] = 3.0
        grid = build_weighted_grid(moll_of(values), 1.0,
                                   Region.rect((0, 0), (15, 15)))
        free = dist_balls(grid, (3, 8), (9, 8), 1.5).value
        inside = dist_balls(grid, (3, 8), (9, 8), 1.5,
                            within=Region.rect((0, 0), (15, 8))).value
        self.assertLess(free, inside + 1e-12)
        self.assertAlmostEqual(inside, 4.0, places=12)
