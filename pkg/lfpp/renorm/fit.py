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
import math
import numpy as np
from scipy import stats
from lfpp.exc import DegenerateFit, InvalidArgument, UnstableLadder
from lfpp.utils.stats import TREND_ALPHA, trend_test

__all__ = ['ExponentFit', 'LogCorrectionReport', 'LatticeStability',
           'fit_exponent', 'log_correction_check', 'lattice_stability',
           'MIN_POINTS', 'MIN_SPAN']

MIN_POINTS = 4
MIN_SPAN = 8.0

log = logging.getLogger(__name__)


class ExponentFit(collections.namedtuple('ExponentFit',
                                         ['slope', 'intercept',
                                          'stderr_slope', 'q_hat', 'xi',
                                          'points'])):
    """ least squares line through (log eps, log a_eps); the slope estimates
        1 - xi Q """
    __slots__ = ()

    @property
    def dof(self):
        return len(self.points) - 2

    def q_hat_interval(self, confidence=0.95):
        """ two-sided interval for q_hat from the t distribution of the
            slope """
        if self.dof < 1:
            return (self.q_hat, self.q_hat)
        t = stats.t.ppf(0.5 + confidence / 2.0, self.dof)
        lo = (1.0 - (self.slope + t * self.stderr_slope)) / self.xi
        hi = (1.0 - (self.slope - t * self.stderr_slope)) / self.xi
        return (lo, hi)

    def q_hat_lower(self, confidence=0.95):
        """ one-sided lower confidence bound for q_hat """
        if self.dof < 1:
            return self.q_hat
        t = stats.t.ppf(confidence, self.dof)
        return (1.0 - (self.slope + t * self.stderr_slope)) / self.xi

    def to_dict(self):
        data = self._asdict()
        data['points'] = [list(p) for p in self.points]
        data['q_hat_lower_95'] = self.q_hat_lower()
        return data


LogCorrectionReport = collections.namedtuple('LogCorrectionReport',
                                             ['b', 'q_hat', 'upper',
                                              'lower', 'constant', 'passed',
                                              'rows'])


LatticeStability = collections.namedtuple('LatticeStability',
                                          ['rows', 'stable'])


def _by_epsilon(estimates):
    grouped = collections.OrderedDict()
    for e in sorted(estimates, key=lambda e: (-e.epsilon, e.n)):
        lattices = grouped.setdefault(e.epsilon, collections.OrderedDict())
        if e.n in lattices:
            raise DegenerateFit('duplicate epsilon {} on lattice {}'
                                .format(e.epsilon, e.n))
        lattices[e.n] = e
    return grouped


def lattice_stability(estimates):
    """ Compare the confidence intervals of every epsilon estimated on more
        than one lattice size; the ladder is stable when all of them
        overlap. """
    rows = []
    for eps, lattices in _by_epsilon(estimates).items():
        if len(lattices) < 2:
            continue
        lo = max(e.ci_lo for e in lattices.values())
        hi = min(e.ci_hi for e in lattices.values())
        rows.append({'epsilon': eps, 'lattices': list(lattices),
                     'medians': [e.median for e in lattices.values()],
                     'overlap': bool(lo <= hi)})

    stable = bool(rows) and all(row['overlap'] for row in rows)
    log.debug("Lattice stability over %d shared epsilon: %s", len(rows),
              stable)
    return LatticeStability(rows, stable)


def _finest(estimates):
    """ one estimate per epsilon, from the largest lattice """
    return [list(lattices.values())[-1]
            for lattices in _by_epsilon(estimates).values()]


def _ladder(estimates):
    """ estimates sorted by decreasing epsilon """
    estimates = sorted(estimates, key=lambda e: -e.epsilon)
    eps = [e.epsilon for e in estimates]
    if len(set(eps)) < 2:
        raise DegenerateFit('estimates need at least two distinct epsilon, '
                            'got {}'.format(eps))
    if len(set(eps)) != len(eps):
        raise DegenerateFit('duplicate epsilon in {}'.format(eps))
    if len(eps) < MIN_POINTS:
        raise InvalidArgument('at least {} estimates are required, got {}'
                              .format(MIN_POINTS, len(eps)))
    if eps[0] / eps[-1] < MIN_SPAN:
        raise InvalidArgument('epsilon must span a factor of {}, got {}'
                              .format(MIN_SPAN, eps[0] / eps[-1]))
    return estimates


def fit_exponent(estimates, params, require_stable=True):
    """ Ordinary least squares of log a_eps on log eps.

        When the estimates come from several lattice sizes, each shared
        epsilon must have overlapping confidence intervals across them
        (UnstableLadder otherwise, or a warning when ``require_stable`` is
        false) and the fit uses the largest lattice for every epsilon.
    """
    estimates = list(estimates)
    if len({e.n for e in estimates}) > 1:
        stability = lattice_stability(estimates)
        if not stability.stable:
            if require_stable:
                raise UnstableLadder(stability)
            log.warning("Ladder is not stable across lattices %s",
                        sorted({e.n for e in estimates}))
        estimates = _finest(estimates)
    estimates = _ladder(estimates)
    points = [(math.log(e.epsilon), math.log(e.median)) for e in estimates]
    x, y = np.array(points).T
    result = stats.linregress(x, y)
    slope = float(result.slope)
    fit = ExponentFit(slope, float(result.intercept),
                      float(result.stderr), (1.0 - slope) / params.xi,
                      params.xi, points)
    if not math.isfinite(fit.q_hat):
        raise DegenerateFit('fitted q_hat is not finite')

    log.info("Fitted slope %.4f +- %.4f over %d rungs, q_hat=%.4f",
             fit.slope, fit.stderr_slope, len(points), fit.q_hat)
    return fit


def log_correction_check(estimates, params, b, q_hat, alpha=TREND_ALPHA):
    """ Test the two-sided logarithmic correction
        C^-1 eps^(1-xi q) L^-b <= a_eps <= C eps^(1-xi q) L^b, L = log 1/eps.

        With s = a_eps / eps^(1-xi q), the upper envelope s L^-b and the
        lower envelope 1 / (s L^b) must not grow as eps decreases (Spearman
        trend at level ``alpha``); C = max(upper, 1/lower) is the constant
        that certifies both inequalities over the ladder.
    """
    if not b > 0:
        raise InvalidArgument('b must be positive, got {}'.format(b))

    estimates = _ladder(_finest(estimates))
    exponent = 1.0 - params.xi * q_hat
    rows = []
    for e in estimates:
        L = math.log(1.0 / e.epsilon)
        s = e.median / e.epsilon ** exponent
        rows.append({'epsilon': e.epsilon, 's': s,
                     'upper': s * L ** -b, 'lower': s * L ** b})

    upper = max(row['upper'] for row in rows)
    lower = min(row['lower'] for row in rows)
    constant = max(upper, 1.0 / lower)
    up_trend = trend_test([row['upper'] for row in rows], alpha)
    low_trend = trend_test([1.0 / row['lower'] for row in rows], alpha)
    passed = not (up_trend.increasing or low_trend.increasing)

    log.info("Log correction b=%s: C=%.4g %s", b, constant,
             'passes' if passed else 'fails')
    return LogCorrectionReport(b, q_hat, upper, lower, constant, passed, rows)
