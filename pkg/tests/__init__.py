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
import shutil
import tempfile
import unittest
import numpy as np
from lfpp.gff import FieldSample, LatticeSpec, Params, fieldkind

SLOW_TESTS = os.environ.get('LFPP_SLOW_TESTS') == '1'
slow = unittest.skipUnless(SLOW_TESTS, 'set LFPP_SLOW_TESTS=1 to run')


def constant_field(n=64, c=0.0, spacing=None, kind=fieldkind.TORUS):
    spec = LatticeSpec.auto(n) if spacing is None \
            else LatticeSpec.centered(n, spacing)
    return FieldSample.constant(spec, c, kind)


def linear_field(n=64, slope=(1.0, 0.0)):
    spec = LatticeSpec.auto(n)
    x, y = spec.coordinates()
    return FieldSample(spec, slope[0] * x + slope[1] * y, fieldkind.TORUS, 0,
                       derived=True)


class LfppTestsBase(unittest.TestCase):

    params = Params(0.2)

    def setUp(self):
        self.tempdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tempdir)

    def path(self, *parts):
        return os.path.join(self.tempdir, *parts)

    def assertAllClose(self, a, b, atol=1e-12, rtol=0.0):
        np.testing.assert_allclose(a, b, atol=atol, rtol=rtol)
