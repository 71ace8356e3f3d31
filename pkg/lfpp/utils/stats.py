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
import logging
import numpy as np
from scipy import stats
from . seeds import pair_generator

__all__ = ['TREND_ALPHA', 'TWO_SAMPLE_ALPHA', 'bootstrap_median_ci',
           'trend_test', 'non_increasing', 'two_sample_test', 'quantiles']

# significance levels of the verdicts; not configurable
TREND_ALPHA = 0.10
TWO_SAMPLE_ALPHA = 0.01
BOOTSTRAP_RESAMPLES = 1000
BOOTSTRAP_CONFIDENCE = 0.95

log = logging.getLogger(__name__)

TrendResult = collections.namedtuple('TrendResult',
                                     ['rho', 'pvalue', 'increasing'])
TwoSampleResult = collections.namedtuple('TwoSampleResult',
                                         ['statistic', 'pvalue', 'reject'])


def bootstrap_median_ci(samples, seed, resamples=BOOTSTRAP_RESAMPLES,
                        confidence=BOOTSTRAP_CONFIDENCE):
    """ Percentile bootstrap interval for the median of ``samples``.

        Resampling draws from a generator derived from ``seed`` so that the
        interval is a pure function of (samples, seed).
    """
    samples = np.asarray(samples, dtype=float)
    if samples.size == 0:
        raise ValueError('cannot bootstrap an empty sample')

    rng = pair_generator(seed, 'bootstrap')
    idx = rng.integers(0, samples.size, size=(resamples, samples.size))
    medians = np.median(samples[idx], axis=1)
    tail = (1.0 - confidence) / 2.0
    lo, hi = np.quantile(medians, [tail, 1.0 - tail])
    median = float(np.median(samples))
    return min(float(lo), median), max(float(hi), median)


def trend_test(values, alpha=TREND_ALPHA):
    """ One-sided Spearman test of an increasing trend along the sequence.

        ``increasing`` is True only when the correlation between position
        and value is positive and significant at level ``alpha``; a flat
        or too short sequence never counts as increasing.
    """
    values = np.asarray(values, dtype=float)
    if values.size < 3 or np.all(values == values[0]):
        return TrendResult(0.0, 1.0, False)

    rho, pvalue = stats.spearmanr(np.arange(values.size), values,
                                  alternative='greater')
    rho, pvalue = float(rho), float(pvalue)
    if not np.isfinite(rho):
        return TrendResult(0.0, 1.0, False)

    return TrendResult(rho, pvalue, bool(rho > 0 and pvalue < alpha))


def non_increasing(values, tolerance=0.05, inversions=1):
    """ True when ``values`` never increases, except for at most
        ``inversions`` steps that grow by less than ``tolerance`` (relative)
    """
    allowed = inversions
    for prev, cur in zip(values[:-1], values[1:]):
        if cur <= prev:
            continue

        if allowed > 0 and cur - prev <= tolerance * abs(prev):
            allowed -= 1
            continue

        return False

    return True


def two_sample_test(x, y, alpha=TWO_SAMPLE_ALPHA):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.array_equal(np.sort(x), np.sort(y)):
        return TwoSampleResult(float(x.size * y.size) / 2.0, 1.0, False)

    statistic, pvalue = stats.mannwhitneyu(x, y, alternative='two-sided')
    return TwoSampleResult(float(statistic), float(pvalue),
                           bool(pvalue < alpha))


def quantiles(values, levels=(0.5, 0.9, 0.99)):
    values = np.asarray(values, dtype=float)
    return {'q{:g}'.format(100 * q): float(np.quantile(values, q))
            for q in levels}
