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

import logging
import math
import numpy as np
from lfpp.gff.field import (add_function,
                            rescale_field,
                            sample_torus_gff,
                            translate_field)
from lfpp.gff.mollify import mollifier, mollify_localized
from lfpp.metric import Region
from lfpp.renorm import EstimateCache, map_trials
from lfpp.utils.seeds import split
from lfpp.utils.stats import TWO_SAMPLE_ALPHA, two_sample_test
from . report import experiment, verdict
from . sampling import check_pairs, describe, pair_distances

__all__ = ['weyl_shift_test', 'scale_covariance_test',
           'translation_invariance_test', 'DEFAULT_PAIRS']

WEYL_TOLERANCE = 1e-10
SANDWICH_TOLERANCE = 1e-12

# on the lattice for every n >= 64 with the default 4/n spacing
DEFAULT_PAIRS = [((0.25, 0.25), (0.75, 0.75)),
                 ((0.25, 0.5), (0.75, 0.5)),
                 ((0.5, 0.25), (0.5, 0.75)),
                 ((0.375, 0.625), (0.625, 0.375))]

log = logging.getLogger(__name__)


@experiment(['z_x', 'z_y', 'w_x', 'w_y', 'd', 'd_shifted', 'ratio',
             'ratio_lo', 'ratio_hi'])
def weyl_shift_test(field, epsilon, c, pairs, params, f=None, window=None):
    """ Weyl scaling: adding f to the field multiplies distances by a
        factor between exp(xi min f) and exp(xi max f); exactly exp(xi c)
        for a constant """
    pairs = check_pairs(pairs)
    window = window or Region.unit_square()
    shifted = add_function(field, f if f is not None else c)
    added = shifted.values - field.values
    lo, hi = float(added.min()), float(added.max())
    ratio_lo, ratio_hi = math.exp(params.xi * lo), math.exp(params.xi * hi)

    before = pair_distances(mollify_localized(field, epsilon), params.xi,
                            window, pairs)
    after = pair_distances(mollify_localized(shifted, epsilon), params.xi,
                           window, pairs)

    rows, ok = [], True
    for (z, w), d, d2 in zip(pairs, before, after):
        ratio = d2 / d
        if f is None:
            expected = math.exp(params.xi * c)
            ok = ok and abs(ratio / expected - 1.0) <= WEYL_TOLERANCE
        else:
            ok = ok and \
                ratio_lo * (1 - SANDWICH_TOLERANCE) <= ratio and \
                ratio <= ratio_hi * (1 + SANDWICH_TOLERANCE)
        rows.append({'z_x': z[0], 'z_y': z[1], 'w_x': w[0], 'w_y': w[1],
                     'd': d, 'd_shifted': d2, 'ratio': ratio,
                     'ratio_lo': ratio_lo, 'ratio_hi': ratio_hi})

    params_echo = {'field': describe(field), 'epsilon': epsilon, 'c': c,
                   'f': describe(f), 'pairs': describe(pairs),
                   'params': describe(params), 'window': describe(window)}
    notes = {'kind': 'exact identity',
             'tolerance': WEYL_TOLERANCE if f is None else SANDWICH_TOLERANCE}
    return params_echo, rows, verdict.PASS if ok else verdict.FAIL, notes


@experiment(['z_x', 'z_y', 'w_x', 'w_y', 'd', 'd_translated', 'equal'])
def translation_invariance_test(field, epsilon, shift, pairs, params,
                                window=None):
    """ localized LFPP commutes with lattice translations: the distance
        between z + b and w + b for h equals that between z and w for
        h(. + b) """
    pairs = check_pairs(pairs)
    window = window or Region.unit_square()
    spec = field.spec
    di, dj = (int(s) for s in shift)
    bx, by = di * spec.spacing, dj * spec.spacing
    (x0, y0), (x1, y1) = window.geometry
    moved = Region.rect((x0 + bx, y0 + by), (x1 + bx, y1 + by))

    translated = translate_field(field, (di, dj))
    d = pair_distances(mollify_localized(field, epsilon), params.xi, moved,
                       [((z[0] + bx, z[1] + by), (w[0] + bx, w[1] + by))
                        for z, w in pairs])
    d2 = pair_distances(mollify_localized(translated, epsilon), params.xi,
                        window, pairs)

    rows = [{'z_x': z[0], 'z_y': z[1], 'w_x': w[0], 'w_y': w[1],
             'd': a, 'd_translated': b, 'equal': a == b}
            for (z, w), a, b in zip(pairs, d, d2)]
    ok = all(row['equal'] for row in rows)
    params_echo = {'field': describe(field), 'epsilon': epsilon,
                   'shift': [di, dj], 'pairs': describe(pairs),
                   'params': describe(params), 'window': describe(window)}
    return params_echo, rows, verdict.PASS if ok else verdict.FAIL, \
            {'kind': 'exact identity'}


def _covariance_trial(task):
    """ both sides of the scaling relation for one seed, unnormalized """
    epsilon, a, xi, q_hat, lattice, localized, pairs, seed = task
    mollify = mollifier(localized)
    field = sample_torus_gff(lattice, seed)
    big = Region.rect((-0.25 * a, -0.25 * a), (1.25 * a, 1.25 * a))
    lhs = pair_distances(mollify(field, epsilon), xi, big,
                         [((a * z[0], a * z[1]), (a * w[0], a * w[1]))
                          for z, w in pairs])

    rescaled = rescale_field(field, a, (0.0, 0.0), q_hat)
    small = Region.rect((-0.25, -0.25), (1.25, 1.25))
    rhs = pair_distances(mollify(rescaled, epsilon / a), xi, small, pairs)
    prefactor = a ** (1.0 - xi * q_hat)
    return lhs, [prefactor * d for d in rhs]


@experiment(['trial', 'seed', 'pair', 'lhs', 'rhs'])
def scale_covariance_test(a, epsilon, params, mc, q_hat, pairs=None,
                          cache=None):
    """ Coordinate change in law: D^eps(az, aw) against
        a^(1 - xi q) D^(eps/a) of h(a .) + q log a, both divided by the
        median crossing a_eps; compared with a two-sample test """
    pairs = check_pairs(pairs or DEFAULT_PAIRS)
    mc.require_trials()
    cache = cache if cache is not None else EstimateCache()
    a_eps = cache.get(epsilon, params, mc).median

    seeds = [split(mc.master_seed, i) for i in range(mc.trials)]
    tasks = [(epsilon, float(a), params.xi, q_hat, mc.lattice, mc.localized,
              pairs, seed) for seed in seeds]
    results = map_trials(_covariance_trial, tasks, mc)

    rows, lhs, rhs = [], [], []
    for i, (seed, (left, right)) in enumerate(zip(seeds, results)):
        for k, (x, y) in enumerate(zip(left, right)):
            lhs.append(x / a_eps)
            rhs.append(y / a_eps)
            rows.append({'trial': i, 'seed': seed, 'pair': k,
                         'lhs': x / a_eps, 'rhs': y / a_eps})

    test = two_sample_test(lhs, rhs)
    notes = {'kind': 'identity in law', 'a_eps': a_eps, 'q_hat_used': q_hat,
             'median_lhs': float(np.median(lhs)),
             'median_rhs': float(np.median(rhs)),
             'iqr_lhs': float(np.subtract(*np.percentile(lhs, [75, 25]))),
             'iqr_rhs': float(np.subtract(*np.percentile(rhs, [75, 25]))),
             'mann_whitney_u': test.statistic, 'pvalue': test.pvalue,
             'alpha': TWO_SAMPLE_ALPHA, 'rejected': test.reject}
    params_echo = {'a': a, 'epsilon': epsilon, 'params': describe(params),
                   'mc': describe(mc), 'q_hat': q_hat,
                   'pairs': describe(pairs)}
    return params_echo, rows, verdict.INFORMATIONAL, notes
