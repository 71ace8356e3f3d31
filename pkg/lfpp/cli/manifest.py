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

import collections
import datetime
import json
import logging
import time
from lfpp.cache import ActivityLog, CacheIndex, EstimateStore, write
from lfpp.renorm import EstimateCache
from lfpp.version import version_string

__all__ = ['RunConfig', 'command', 'RunContext', 'dumps', 'manifest_path']

Command = collections.namedtuple('Command', ['FIELD_SAMPLE', 'DIST', 'A_EPS',
                                             'FIT', 'RATIO', 'EXPERIMENT',
                                             'CACHE_INFO'])
command = Command(FIELD_SAMPLE='FieldSample', DIST='Dist', A_EPS='AEps',
                  FIT='Fit', RATIO='Ratio', EXPERIMENT='Experiment',
                  CACHE_INFO='CacheInfo')

RunConfig = collections.namedtuple('RunConfig', ['command', 'params',
                                                 'master_seed', 'threads',
                                                 'out_path'])

log = logging.getLogger(__name__)


def dumps(data):
    return json.dumps(data, sort_keys=True, indent=2) + '\n'


def manifest_path(out_path):
    return '{}.manifest.json'.format(out_path)


class RunContext(object):
    """ State of one CLI invocation: resolved settings, the optional cache,
        result warnings and the pending output files. """

    def __init__(self, settings):
        self.settings = settings
        self.log = logging.getLogger("{}.{}".format(__name__,
                                                    self.__class__.__name__))
        self.warnings = []
        self.outputs = ActivityLog()
        self.started_at = datetime.datetime.now(datetime.timezone.utc)
        self.started = time.perf_counter()
        self._index = None

    @property
    def threads(self):
        return self.settings['threads']

    @property
    def index(self):
        if not self.settings['cache.enabled']:
            return None
        if self._index is None:
            self._index = CacheIndex(self.settings['cache.root'])
        return self._index

    def estimates(self):
        index = self.index
        store = EstimateStore(index) if index is not None else None
        return EstimateCache(
            store, resamples=self.settings['bootstrap.resamples'],
            confidence=self.settings['bootstrap.confidence'])

    def warn(self, message, *args):
        message = message % args if args else message
        self.log.warning(message)
        self.warnings.append(message)

    def check_params(self, params):
        if params.supercritical:
            self.warn('supercritical xi=%s (>= %s)', params.xi,
                      params.xi_crit_ref)

    def write(self, path, content):
        self.outputs.add(write, path, content)

    def finish(self, run):
        """ queue the manifest of ``run`` and commit every output """
        if self._index is not None:
            self.warnings.extend(self._index.warnings)
        if run is not None and run.out_path:
            manifest = {
                'command': run.command,
                'resolved_params': run.params,
                'master_seed': run.master_seed,
                'version': version_string(),
                'started_at': self.started_at.isoformat(),
                'runtime_secs': time.perf_counter() - self.started,
                'threads': run.threads,
                'settings': {k: v for k, v in self.settings.items()},
                'warnings': self.warnings}
            self.write(manifest_path(run.out_path), dumps(manifest))
        self.outputs.commit()

    def abort(self):
        if len(self.outputs):
            self.outputs.rollback()
