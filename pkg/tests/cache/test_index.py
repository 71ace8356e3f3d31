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
import os
import numpy as np
from lfpp.cache import CacheIndex, EstimateStore, cache_lookup, digest
from lfpp.cache.index import decode_estimate, encode_estimate
from lfpp.exc import CacheError, CorruptedArtifact
from lfpp.gff import LatticeSpec, Params, sample_torus_gff
from lfpp.renorm import EstimateCache, MCConfig, MedianEstimate
from .. import LfppTestsBase


class TestDigest(LfppTestsBase):

    def test_one_ulp_changes_the_key(self):
        params = {'xi': 0.2, 'n': 64, 'spacing': 0.0625}
        bumped = dict(params, xi=math.nextafter(0.2, 1.0))
        self.assertNotEqual(digest(params), digest(bumped))

    def test_order_does_not_matter(self):
        self.assertEqual(digest({'a': 1.0, 'b': [1, 2.5]}),
                         digest({'b': [1, 2.5], 'a': 1.0}))
        self.assertNotEqual(digest({'a': 1}), digest({'a': 1.0}))


class TestCacheIndex(LfppTestsBase):

    def setUp(self):
        super(TestCacheIndex, self).setUp()
        self.index = CacheIndex(self.path('cache'))
        self.field = sample_torus_gff(LatticeSpec.auto(16), 9)
        self.params = {'op': 'field', 'kind': 'torus', 'n': 16,
                       'spacing': 0.25, 'seed': 9}

    def test_field_round_trip(self):
        self.assertIsNone(self.index.load_field(self.params))
        path = self.index.save_field(self.params, self.field)
        self.assertTrue(os.path.exists(path))
        self.assertTrue(path.endswith('.lfpf'))
        self.assertEqual(self.index.lookup(self.params, 'field'), path)
        self.assertEqual(cache_lookup(self.index, self.params, 'field'),
                         path)
        self.assertIsNone(self.index.lookup(self.params, 'estimate'))

        loaded = self.index.load_field(self.params)
        np.testing.assert_array_equal(loaded.values, self.field.values)
        self.assertEqual(len(self.index.entries), 1)
        self.assertEqual(self.index.entries[0]['kind'], 'field')

        # a fresh index over the same root sees the entry
        self.assertEqual(CacheIndex(self.index.root)
                         .lookup(self.params, 'field'), path)

    def test_one_ulp_miss(self):
        self.index.save_field(self.params, self.field)
        bumped = dict(self.params, spacing=math.nextafter(0.25, 1.0))
        self.assertIsNone(self.index.lookup(bumped, 'field'))

    def test_corrupted_artifact_is_evicted(self):
        path = self.index.save_field(self.params, self.field)
        with open(path, 'r+b') as f:
            f.write(b'XXXX')

        with self.assertLogs('lfpp.cache.index', 'WARNING'):
            self.assertIsNone(self.index.lookup(self.params, 'field'))
        self.assertEqual(len(self.index.warnings), 1)
        self.assertFalse(os.path.exists(path))
        self.assertEqual(self.index.entries, [])

        # a later store repopulates it
        self.index.save_field(self.params, self.field)
        self.assertIsNotNone(self.index.load_field(self.params))

    def test_missing_artifact_is_evicted(self):
        path = self.index.save_field(self.params, self.field)
        os.unlink(path)
        self.assertIsNone(self.index.lookup(self.params, 'field'))
        self.assertEqual(self.index.entries, [])

    def test_unknown_kind(self):
        self.assertRaises(CacheError, self.index.lookup, self.params, 'plot')

    def test_no_temporary_files_left(self):
        self.index.save_field(self.params, self.field)
        names = os.listdir(os.path.join(self.index.root, 'field'))
        self.assertEqual(len(names), 1)
        self.assertFalse(names[0].startswith('._'))


class TestEstimateStore(LfppTestsBase):

    def test_encoding(self):
        data = {'epsilon': 0.5, 'median': 1.25}
        self.assertEqual(decode_estimate(encode_estimate(data), 'x'), data)
        for text in ('not json', '[]', '{"magic": "LFPE", "version": 2}',
                     '{"magic": "LFPF", "version": 1, "estimate": {}}',
                     '{"magic": "LFPE", "version": 1}'):
            self.assertRaises(CorruptedArtifact, decode_estimate, text, 'x')

    def test_estimate_cache_backend(self):
        index = CacheIndex(self.path('cache'))
        params = Params(0.2)
        mc = MCConfig(20, 4, LatticeSpec.auto(16), localized=False)
        estimate = MedianEstimate(0.5, 1.5, 20, 1.0, 2.0, 4, 0.2, 16, False)
        key = EstimateCache.key(0.5, params, mc)

        store = EstimateStore(index)
        self.assertIsNone(store.load(key))
        store.save(key, estimate.to_dict())

        cache = EstimateCache(EstimateStore(index))
        self.assertEqual(cache.get(0.5, params, mc), estimate)
