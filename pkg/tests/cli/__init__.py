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

import io
import json
import os
import mock
from lfpp.cli import parse_and_dispatch
from .. import LfppTestsBase


class CliTestsBase(LfppTestsBase):

    def setUp(self):
        super(CliTestsBase, self).setUp()
        self.cache_dir = self.path('cache')
        patcher = mock.patch.dict(os.environ, clear=False)
        patcher.start()
        self.addCleanup(patcher.stop)
        os.environ.pop('LFPP_CACHE', None)
        os.environ.pop('LFPP_THREADS', None)

    def lfpp(self, *argv, **kwargs):
        """ run the command line; returns (status, stdout, stderr) """
        cache = ['--no-cache'] if kwargs.get('no_cache') \
                else ['--cache-dir', self.cache_dir]
        stdout, stderr = io.StringIO(), io.StringIO()
        with mock.patch('sys.stdout', stdout), \
                mock.patch('sys.stderr', stderr):
            status = parse_and_dispatch(cache + list(argv))
        return status, stdout.getvalue(), stderr.getvalue()

    def load(self, *parts):
        with open(self.path(*parts)) as f:
            return json.load(f)

    def write_json(self, name, data):
        path = self.path(name)
        with open(path, 'w') as f:
            json.dump(data, f)
        return path
