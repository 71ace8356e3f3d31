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

import os
import numpy as np
from lfpp.exc import CorruptedArtifact
from lfpp.gff import LatticeSpec, sample_dirichlet_gff, sample_torus_gff
from lfpp.gff import codec
from .. import LfppTestsBase


class TestCodec(LfppTestsBase):

    def test_file_round_trip(self):
        field = sample_torus_gff(LatticeSpec.auto(32), 12345)
        path = self.path('field.lfpf')
        codec.write(field, path)
        self.assertEqual(os.path.getsize(path),
                         codec.HEADER.size + 8 * 32 ** 2)

        loaded = codec.read(path)
        np.testing.assert_array_equal(loaded.values, field.values)
        self.assertEqual(loaded.spec, field.spec)
        self.assertEqual((loaded.kind, loaded.seed),
                         (field.kind, field.seed))
        self.assertEqual(codec.read_header(path),
                         (field.kind, 32, field.spec.spacing, 12345))

    def test_dirichlet_kind(self):
        field = sample_dirichlet_gff(LatticeSpec.centered(16, 1.0 / 15), 2)
        loaded = codec.loads(codec.dumps(field))
        self.assertEqual(loaded.kind, field.kind)
        self.assertFalse(loaded.mean_removed)

    def test_origin_is_not_stored(self):
        field = sample_torus_gff(LatticeSpec(16, 0.25), 1)
        with self.assertLogs('lfpp.gff.codec', 'WARNING'):
            data = codec.dumps(field)
        self.assertEqual(codec.loads(data).spec,
                         LatticeSpec.centered(16, 0.25))

    def test_corrupted(self):
        data = codec.dumps(sample_torus_gff(LatticeSpec.auto(16), 1))
        for broken in (data[:10], b'XXXX' + data[4:], data[:-8],
                       data + b'\0' * 8):
            self.assertRaises(CorruptedArtifact, codec.loads, broken)

        header = bytearray(data)
        header[4] = 2
        with self.assertRaises(CorruptedArtifact) as ctx:
            codec.loads(bytes(header), 'x.lfpf')
        self.assertEqual(ctx.exception.path, 'x.lfpf')
        header = bytearray(data)
        header[6] = 9
        self.assertRaises(CorruptedArtifact, codec.loads, bytes(header))
