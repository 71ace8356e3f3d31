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
from lfpp.exc import InvalidArgument
from lfpp.gff.field import sample_torus_gff
from lfpp.gff.mollify import mollifier
from lfpp.metric import Region, build_weighted_grid, dist_balls, dist_point
from lfpp.renorm import EstimateCache
from lfpp.utils.seeds import split
from lfpp.utils.stats import non_increasing, trend_test
from . report import experiment, verdict
from . sampling import (check_pairs,
                        describe,
                        finest_dyadic,
                        halving,
                        pair_distances,
                        random_pairs)

__all__ = ['convergence_diagnostic', 'small_segment_sup', 'ball_comparison']

SEGMENT_PAIRS = 100
MIN_RUNGS = 4

log = logging.getLogger(__name__)


def _fixed_field(field, mc):
    """ the realization every rung is computed on """
    if field is not None:
        return field
    return sample_torus_gff(mc.lattice, split(mc.master_seed, 0))


@experiment(['epsilon', 'pair', 'value', 'difference'])
def convergence_diagnostic(pairs, eps_ladder, params, mc, field=None,
                           window=None, cache=None):
    """ Cauchy surrogate for almost sure convergence: on one realization,
        a_eps^-1 D^_eps(z, w) along a halving ladder; the maximal successive
        differences must show no increasing Spearman trend """
    pairs = check_pairs(pairs)
    ladder = halving(eps_ladder, MIN_RUNGS)
    field = _fixed_field(field, mc)
    window = window or Region.unit_square()
    cache = cache if cache is not None else EstimateCache()
    smooth = mollifier(mc.localized)

    values, norms = [], []
    for eps in ladder:
        a_eps = cache.get(eps, params, mc).median
        norms.append(a_eps)
        values.append([d / a_eps for d in
                       pair_distances(smooth(field, eps), params.xi, window,
                                      pairs)])

    rows, max_diffs = [], []
    for r, eps in enumerate(ladder):
        diffs = []
        for k in range(len(pairs)):
            diff = None if r == 0 else abs(values[r][k] - values[r - 1][k])
            if diff is not None:
                diffs.append(diff)
            rows.append({'epsilon': eps, 'pair': k, 'value': values[r][k],
                         'difference': diff})
        if diffs:
            max_diffs.append(max(diffs))

    trend = trend_test(max_diffs)
    ok = not trend.increasing
    notes = {'kind': 'single fixed seed', 'field_seed': field.seed,
             'max_differences': max_diffs, 'a_eps': norms,
             'spearman_rho': trend.rho, 'spearman_pvalue': trend.pvalue,
             'increasing_trend': trend.increasing}
    params_echo = {'pairs': describe(pairs), 'eps_ladder': ladder,
                   'params': describe(params), 'mc': describe(mc),
                   'window': describe(window)}
    return params_echo, rows, verdict.PASS if ok else verdict.FAIL, notes


@experiment(['epsilon', 'separation', 'a_eps', 'max_normalized'])
def small_segment_sup(field, eps_ladder, zeta, window, params, mc,
                      count=SEGMENT_PAIRS, cache=None):
    """ largest normalized distance between sites at most 4 eps^(1 - zeta)
        apart, along a halving ladder """
    if not 0 < zeta < 1:
        raise InvalidArgument('zeta must lie in (0, 1), got {}'.format(zeta))
    ladder = halving(eps_ladder)
    cache = cache if cache is not None else EstimateCache()
    smooth = mollifier(mc.localized)
    spec = field.spec

    rows = []
    for eps in ladder:
        separation = 4.0 * eps ** (1.0 - zeta)
        if separation < 4.0 * spec.spacing:
            raise InvalidArgument('separation {} is below four lattice '
                                  'spacings'.format(separation))
        pairs = random_pairs(spec, window, count, field.seed, separation)
        a_eps = cache.get(eps, params, mc).median
        d = pair_distances(smooth(field, eps), params.xi, window, pairs)
        rows.append({'epsilon': eps, 'separation': separation,
                     'a_eps': a_eps, 'max_normalized': max(d) / a_eps})

    ok = non_increasing([row['max_normalized'] for row in rows],
                        inversions=0)
    params_echo = {'field': describe(field), 'eps_ladder': ladder,
                   'zeta': zeta, 'window': describe(window),
                   'params': describe(params), 'mc': describe(mc),
                   'count': count}
    return params_echo, rows, verdict.PASS if ok else verdict.FAIL, \
            {'kind': 'single fixed seed'}


@experiment(['z_x', 'z_y', 'w_x', 'w_y', 'radius', 'balls_eps_over_proxy',
             'balls_proxy_over_eps'])
def ball_comparison(field, epsilon, zeta, pairs, params, mc, eps_proxy=None,
                    window=None, cache=None):
    """ Up-to-constants comparison of the normalized metric at eps with the
        proxy metric at the finest eps, using balls of radius
        eps^(1 - zeta) around the endpoints """
    if not 0 < zeta < 1:
        raise InvalidArgument('zeta must lie in (0, 1), got {}'.format(zeta))
    pairs = check_pairs(pairs)
    window = window or Region.unit_square()
    cache = cache if cache is not None else EstimateCache()
    eps_proxy = eps_proxy or finest_dyadic(field.spec.spacing)
    smooth = mollifier(mc.localized)
    radius = epsilon ** (1.0 - zeta)

    grids, norms = {}, {}
    for name, eps in (('eps', epsilon), ('proxy', eps_proxy)):
        grids[name] = build_weighted_grid(smooth(field, eps), params.xi,
                                          window)
        norms[name] = cache.get(eps, params, mc).median

    def normalized(name, z, w, balls):
        grid = grids[name]
        if balls:
            d = dist_balls(grid, z, w, radius)
        else:
            d = dist_point(grid, z, w)
        return d.value / norms[name]

    rows = []
    for z, w in pairs:
        rows.append({'z_x': z[0], 'z_y': z[1], 'w_x': w[0], 'w_y': w[1],
                     'radius': radius,
                     'balls_eps_over_proxy':
                         normalized('eps', z, w, True) /
                         normalized('proxy', z, w, False),
                     'balls_proxy_over_eps':
                         normalized('proxy', z, w, True) /
                         normalized('eps', z, w, False)})

    c0 = max(max(row['balls_eps_over_proxy'], row['balls_proxy_over_eps'])
             for row in rows)
    notes = {'kind': 'single fixed seed', 'proxy': 'D_h',
             'proxy_epsilon': eps_proxy, 'lipschitz_constant': c0}
    params_echo = {'field': describe(field), 'epsilon': epsilon,
                   'zeta': zeta, 'pairs': describe(pairs),
                   'params': describe(params), 'mc': describe(mc),
                   'eps_proxy': eps_proxy, 'window': describe(window)}
    return params_echo, rows, verdict.INFORMATIONAL, notes
