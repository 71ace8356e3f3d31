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
import csv
import functools
import io
import logging
from lfpp.exc import InvalidArgument
from lfpp.utils.decorators import timed

__all__ = ['ExperimentReport', 'verdict', 'experiment', 'registry',
           'get_experiment']

Verdict = collections.namedtuple('Verdict', ['PASS', 'FAIL', 'INFORMATIONAL'])
verdict = Verdict(PASS='Pass', FAIL='Fail', INFORMATIONAL='Informational')

log = logging.getLogger(__name__)


class ExperimentReport(collections.namedtuple('ExperimentReport',
                                              ['name', 'params', 'columns',
                                               'rows', 'verdict',
                                               'runtime_secs', 'notes'])):
    """ Rows are dicts over the experiment's fixed ``columns``; ``notes``
        carries summaries and labels (proxy metrics, q_hat used, seeds). """
    __slots__ = ()

    def __new__(cls, name, params, columns, rows, verdict, runtime_secs=0.0,
                notes=None):
        for row in rows:
            if set(row) != set(columns):
                raise InvalidArgument('row {} does not match columns {}'
                                      .format(sorted(row), columns))
        return super(ExperimentReport, cls).__new__(
            cls, name, params, list(columns), list(rows), verdict,
            runtime_secs, notes or {})

    @property
    def passed(self):
        return self.verdict == verdict.PASS

    def column(self, name):
        return [row[name] for row in self.rows]

    def to_dict(self, runtime=True):
        data = {'name': self.name, 'params': self.params,
                'columns': self.columns, 'rows': self.rows,
                'verdict': self.verdict, 'notes': self.notes}
        if runtime:
            data['runtime_secs'] = self.runtime_secs
        return data

    def to_csv(self):
        """ rows in column order; floats keep every digit """
        out = io.StringIO()
        writer = csv.DictWriter(out, fieldnames=self.columns,
                                lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: _cell(v) for k, v in row.items()})
        return out.getvalue()


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return value


Experiment = collections.namedtuple('Experiment', ['name', 'function',
                                                   'columns', 'doc'])

registry = collections.OrderedDict()


def experiment(columns):
    """ Register a harness under its function name.

        The wrapped function returns (params, rows, verdict, notes); the
        decorator assembles the report and stamps its runtime.
    """
    def decorate(function):
        name = function.__name__

        @timed
        @functools.wraps(function)
        def run(*args, **kwargs):
            params, rows, outcome, notes = function(*args, **kwargs)
            return ExperimentReport(name, params, columns, rows, outcome,
                                    0.0, notes)

        run.columns = list(columns)
        registry[name] = Experiment(name, run, list(columns),
                                    (function.__doc__ or '').strip())
        return run

    return decorate


def get_experiment(name):
    try:
        return registry[name]

    except KeyError:
        raise InvalidArgument('unknown experiment {!r}; known: {}'
                              .format(name, ', '.join(registry)))
