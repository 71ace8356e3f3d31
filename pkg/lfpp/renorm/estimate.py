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
import concurrent.futures
import json
import logging
import numpy as np
from lfpp.exc import InvalidArgument, MollificationTooFine
from lfpp.gff.field import sample_torus_gff
from lfpp.gff.mollify import mollifier
from lfpp.metric import Region, build_weighted_grid, lr_crossing
from lfpp.utils.seeds import split
from lfpp.utils.stats import (BOOTSTRAP_CONFIDENCE,
                              BOOTSTRAP_RESAMPLES,
                              bootstrap_median_ci)

__all__ = ['MedianEstimate', 'EstimateCache', 'estimate_a_eps',
           'crossing_samples', 'crossing_trial', 'map_trials']

log = logging.getLogger(__name__)


class MedianEstimate(collections.namedtuple('MedianEstimate',
                                            ['epsilon', 'median', 'trials',
                                             'ci_lo', 'ci_hi', 'master_seed',
                                             'xi', 'n', 'localized'])):
    """ Sample median of the unit-square crossing distance and its
        percentile bootstrap interval. """
    __slots__ = ()

    def scaled(self, c):
        """ every crossing multiplied by ``c`` > 0 """
        return self._replace(median=self.median * c, ci_lo=self.ci_lo * c,
                             ci_hi=self.ci_hi * c)

    def to_dict(self):
        return self._asdict()

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(**{name: data[name] for name in cls._fields})

        except KeyError as e:
            raise InvalidArgument('estimate is missing field {}'.format(e))


def crossing_trial(task):
    """ left-right crossing of the unit square for one field sample """
    epsilon, xi, lattice, localized, seed = task
    field = sample_torus_gff(lattice, seed)
    moll = mollifier(localized)(field, epsilon)
    square = Region.unit_square()
    return lr_crossing(build_weighted_grid(moll, xi, square), square).value


def map_trials(worker, tasks, mc):
    """ Run ``worker`` over ``tasks`` and return results in task order.

        With ``mc.parallel`` the tasks go to a process pool; the ordered
        ``map`` keeps the reduction independent of completion order.
    """
    tasks = list(tasks)
    if not mc.parallel or len(tasks) < 2:
        return [worker(task) for task in tasks]

    with concurrent.futures.ProcessPoolExecutor(max_workers=mc.threads) \
            as executor:
        return list(executor.map(worker, tasks))


def _check_square(lattice):
    (x0, y0), (x1, y1) = lattice.central_quarter()
    tol = 1e-9 * lattice.spacing
    if x0 > tol or y0 > tol or x1 < 1.0 - tol or y1 < 1.0 - tol:
        raise InvalidArgument('the unit square is not inside the central '
                              'quarter of {}'.format(lattice))


def crossing_samples(epsilon, params, mc):
    """ crossing distances of trials 0..M-1; trial i uses the field of seed
        split(master_seed, i) whatever ``epsilon`` is """
    lattice = mc.lattice
    if not epsilon >= 2.0 * lattice.spacing:
        raise MollificationTooFine(epsilon, lattice.spacing)
    _check_square(lattice)

    tasks = [(epsilon, params.xi, lattice, mc.localized,
              split(mc.master_seed, i)) for i in range(mc.trials)]
    samples = map_trials(crossing_trial, tasks, mc)
    log.debug("eps=%s: %d crossings", epsilon, len(samples))
    return samples


def estimate_a_eps(epsilon, params, mc, resamples=BOOTSTRAP_RESAMPLES,
                   confidence=BOOTSTRAP_CONFIDENCE):
    """ Monte Carlo median of the LFPP crossing distance of [0,1]^2. """
    mc.require_trials()
    samples = crossing_samples(epsilon, params, mc)
    median = float(np.median(samples))
    lo, hi = bootstrap_median_ci(samples, mc.master_seed, resamples,
                                 confidence)
    log.info("a_eps(%s) = %.6g [%.6g, %.6g] over %d trials", epsilon,
             median, lo, hi, mc.trials)
    return MedianEstimate(float(epsilon), median, mc.trials, lo, hi,
                          mc.master_seed, params.xi, mc.lattice.n,
                          mc.localized)


class EstimateCache(object):
    """ MedianEstimates keyed by (epsilon, params, Monte Carlo config).

        ``store``, when given, is a persistent backend with ``load(key)``
        returning a dict or None and ``save(key, data)``.
    """

    def __init__(self, store=None, **kwargs):
        self.store = store
        self.entries = {}
        self.options = kwargs
        self.log = logging.getLogger("{}.{}".format(__name__,
                                                    self.__class__.__name__))

    @staticmethod
    def key(epsilon, params, mc):
        return {'operation': 'a_eps', 'epsilon': float(epsilon),
                'xi': params.xi, 'mc': mc.key()}

    def _memory_key(self, epsilon, params, mc):
        return json.dumps(self.key(epsilon, params, mc), sort_keys=True)

    def put(self, estimate, params, mc):
        self.entries[self._memory_key(estimate.epsilon, params, mc)] = \
                estimate

    def get(self, epsilon, params, mc):
        """ a cached estimate, computed and stored on a miss """
        mkey = self._memory_key(epsilon, params, mc)
        if mkey in self.entries:
            return self.entries[mkey]

        key = self.key(epsilon, params, mc)
        data = self.store.load(key) if self.store is not None else None
        if data is not None:
            self.log.debug("Loaded a_eps(%s) from the store", epsilon)
            estimate = MedianEstimate.from_dict(data)

        else:
            estimate = estimate_a_eps(epsilon, params, mc, **self.options)
            if self.store is not None:
                self.store.save(key, estimate.to_dict())

        self.entries[mkey] = estimate
        return estimate

    def __len__(self):
        return len(self.entries)
