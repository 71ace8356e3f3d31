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
from lfpp.exc import InvalidArgument, ValidationError
from lfpp.gff.field import sample_torus_gff
from lfpp.gff.mollify import mollifier
from lfpp.metric import (Region,
                         boundary_ring,
                         build_weighted_grid,
                         dist_around_annulus,
                         dist_point,
                         dist_sets)
from lfpp.renorm import map_trials
from lfpp.utils.seeds import split
from lfpp.utils.stats import quantiles
from lfpp.validators import validate_dyadic, validate_point
from . report import experiment, verdict
from . sampling import describe, finest_dyadic

__all__ = ['annulus_event_stats', 'ALPHA_RANGE']

ALPHA_RANGE = (7.0 / 8.0, 1.0)

log = logging.getLogger(__name__)


def _radii_grid(r_set):
    """ 'powers of 8' when every radius is 8^j, else 'dyadic' """
    for r in r_set:
        if validate_dyadic(r) % 3:
            return 'dyadic'
    return 'powers of 8'


def _ratios(moll, xi, center, alpha, r):
    """ around / across for the annulus A(alpha r, r), and the geodesic
        endpoints of the across distance """
    spec = moll.spec
    cover = Region.disk(center, r + 2.0 * spec.spacing)
    grid = build_weighted_grid(moll, xi, cover)
    around = dist_around_annulus(grid, Region.annulus(center, alpha * r, r))
    across = dist_sets(grid, boundary_ring(spec, center, alpha * r),
                       boundary_ring(spec, center, r), want_path=True)
    ends = (across.path.sites[0], across.path.sites[-1])
    return around.value / across.value, grid, ends


def _annulus_trial(task):
    (epsilon, eps_proxy, xi, alpha, r_set, center, lattice, localized,
     seed, field) = task
    if field is None:
        field = sample_torus_gff(lattice, seed)
    smooth = mollifier(localized)
    moll, proxy = smooth(field, epsilon), smooth(field, eps_proxy)

    out = []
    for r in r_set:
        ratio_eps, grid_eps, _ = _ratios(moll, xi, center, alpha, r)
        ratio_proxy, grid_proxy, (u, v) = _ratios(proxy, xi, center, alpha,
                                                  r)
        u, v = field.spec.point(*u), field.spec.point(*v)
        ratio_1 = dist_point(grid_eps, u, v).value / \
                dist_point(grid_proxy, u, v).value
        out.append((ratio_eps, ratio_proxy, ratio_1))
    return out


@experiment(['trial', 'seed', 'r', 'ratio3_eps', 'ratio3_proxy',
             'ratio1'])
def annulus_event_stats(epsilon, r_set, alpha, params, mc, center=None,
                        eps_proxy=None, field=None):
    """ Empirical laws of the annulus-event ratios: around / across for the
        annulus A(alpha r, r) at eps and for the proxy metric at the finest
        eps, and D^_eps / D^_proxy between the endpoints of the proxy
        across geodesic """
    lo, hi = ALPHA_RANGE
    if not lo < alpha < hi:
        raise InvalidArgument('alpha must lie in (7/8, 1), got {}'
                              .format(alpha))
    try:
        r_set = sorted(float(r) for r in r_set)
        grid_name = _radii_grid(r_set)
        center = validate_point(center or (0.5, 0.5))

    except ValidationError as e:
        raise InvalidArgument(str(e))

    lattice = mc.lattice if field is None else field.spec
    eps_proxy = eps_proxy or finest_dyadic(lattice.spacing)
    seeds = [split(mc.master_seed, i) for i in range(mc.trials)]
    tasks = [(epsilon, eps_proxy, params.xi, alpha, r_set, center, lattice,
              mc.localized, seed, field) for seed in seeds]
    results = map_trials(_annulus_trial, tasks, mc)

    rows = []
    for i, (seed, per_r) in enumerate(zip(seeds, results)):
        for r, (ratio_eps, ratio_proxy, ratio_1) in zip(r_set, per_r):
            rows.append({'trial': i, 'seed': seed, 'r': r,
                         'ratio3_eps': ratio_eps,
                         'ratio3_proxy': ratio_proxy, 'ratio1': ratio_1})

    summary = {}
    for r in r_set:
        mine = [row for row in rows if row['r'] == r]
        summary[repr(r)] = {
            name: quantiles([row[name] for row in mine])
            for name in ('ratio3_eps', 'ratio3_proxy', 'ratio1')}
    finite = all(math.isfinite(row['ratio3_eps']) and row['ratio3_eps'] > 0
                 for row in rows)

    notes = {'kind': 'Monte Carlo', 'proxy': 'D_h',
             'proxy_epsilon': eps_proxy, 'radii_grid': grid_name,
             'ratio1': 'unnormalized', 'quantiles': summary,
             'a_hat': {key: value['ratio3_eps']['q99']
                       for key, value in summary.items()},
             'all_finite_positive': finite,
             'fixed_field': field is not None}
    params_echo = {'epsilon': epsilon, 'r_set': r_set, 'alpha': alpha,
                   'params': describe(params), 'mc': describe(mc),
                   'center': list(center), 'eps_proxy': eps_proxy,
                   'field': describe(field)}
    return params_echo, rows, verdict.INFORMATIONAL, notes
