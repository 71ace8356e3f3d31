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
from lfpp.exc import InvalidArgument, ValidationError
from lfpp.gff.kernels import EPSILON_MAX
from lfpp.gff.mollify import mollify, mollify_localized
from lfpp.metric import window_mask
from lfpp.validators import validate_dyadic, validate_gamma
from lfpp.utils.stats import non_increasing
from . report import experiment, verdict
from . sampling import describe, halving, pair_distances, random_pairs

__all__ = ['localized_gap', 'gmc_mass', 'field_continuity_check',
           'field_sup_bound_check']

GAP_PAIRS = 50

log = logging.getLogger(__name__)


def _sup(values, bits):
    return float(np.abs(values[bits]).max())


@experiment(['epsilon', 'sup_gap', 'max_ratio_deviation', 'min_ratio',
             'max_ratio', 'within_sandwich'])
def localized_gap(field, eps_ladder, window, params, pairs=None):
    """ sup over the window of |h*_eps - h^*_eps| and the largest
        |D^/D - 1| over random pairs, along a halving ladder """
    ladder = halving(eps_ladder)
    bits = window.resolve(field.spec)
    if pairs is None:
        pairs = random_pairs(field.spec, window, GAP_PAIRS, field.seed)

    rows = []
    for eps in ladder:
        full, loc = mollify(field, eps), mollify_localized(field, eps)
        gap = _sup(full.values - loc.values, bits)
        ratios = [b / a for a, b in
                  zip(pair_distances(full, params.xi, window, pairs),
                      pair_distances(loc, params.xi, window, pairs))]
        lo, hi = min(ratios), max(ratios)
        bound = math.exp(params.xi * gap)
        rows.append({'epsilon': eps, 'sup_gap': gap,
                     'max_ratio_deviation': max(abs(r - 1.0)
                                                for r in ratios),
                     'min_ratio': lo, 'max_ratio': hi,
                     'within_sandwich': bool(lo >= (1 - 1e-12) / bound and
                                             hi <= bound * (1 + 1e-12))})
        log.info("eps=%s: gap %.4g, ratio deviation %.4g", eps, gap,
                 rows[-1]['max_ratio_deviation'])

    ok = non_increasing([row['sup_gap'] for row in rows]) and \
            non_increasing([row['max_ratio_deviation'] for row in rows])
    params_echo = {'field': describe(field), 'eps_ladder': ladder,
                   'window': describe(window), 'params': describe(params),
                   'pairs': describe(pairs)}
    return params_echo, rows, verdict.PASS if ok else verdict.FAIL, \
            {'kind': 'single fixed seed'}


def _relative_differences(values):
    return [None] + [abs(b - a) / abs(a) for a, b in
                     zip(values[:-1], values[1:])]


@experiment(['epsilon', 'mass', 'relative_difference'])
def gmc_mass(field, gamma, eps_ladder, window, localized=False):
    """ total mass of eps^(gamma^2/2) exp(gamma h*_eps) dz over the window
        along a dyadic ladder """
    try:
        gamma = validate_gamma(gamma)
        for eps in eps_ladder:
            validate_dyadic(eps)

    except ValidationError as e:
        raise InvalidArgument(str(e))

    if gamma is None:
        raise InvalidArgument('gmc_mass needs gamma')

    ladder = sorted((float(e) for e in eps_ladder), reverse=True)
    bits = window_mask(field.spec, window)
    cell = field.spec.spacing ** 2
    smooth = mollify_localized if localized else mollify
    masses = []
    for eps in ladder:
        moll = smooth(field, eps)
        masses.append(eps ** (gamma ** 2 / 2.0) *
                      float(np.exp(gamma * moll.values[bits]).sum()) * cell)

    diffs = _relative_differences(masses)
    rows = [{'epsilon': eps, 'mass': m, 'relative_difference': d}
            for eps, m, d in zip(ladder, masses, diffs)]
    ok = len(diffs) >= 3 and diffs[-1] < diffs[1]
    params_echo = {'field': describe(field), 'gamma': gamma,
                   'eps_ladder': ladder, 'window': describe(window),
                   'localized': localized}
    return params_echo, rows, verdict.PASS if ok else verdict.FAIL, \
            {'kind': 'single fixed seed', 'sites': int(bits.sum())}


def continuity_shape(a, n):
    """ a log(n + 1) (((n + 1) / n)^a - 1) """
    return a * math.log(n + 1) * (((n + 1.0) / n) ** a - 1.0)


@experiment(['n', 'eps_hi', 'eps_lo', 'gap', 'gap_localized', 'shape',
             'c_needed'])
def field_continuity_check(field, a, n_ladder, window):
    """ sup over the window of the change of the mollified field between
        eps = n^-a and (n+1)^-a, against the bound shape
        a log(n+1) (((n+1)/n)^a - 1) """
    if not a > 0:
        raise InvalidArgument('a must be positive, got {}'.format(a))
    bits = window.resolve(field.spec)

    rows = []
    for n in sorted(int(n) for n in n_ladder):
        hi, lo = float(n) ** -a, float(n + 1) ** -a
        gap = _sup(mollify(field, hi).values - mollify(field, lo).values,
                   bits)
        gap_loc = None
        if hi < EPSILON_MAX:
            gap_loc = _sup(mollify_localized(field, hi).values -
                           mollify_localized(field, lo).values, bits)
        shape = continuity_shape(a, n)
        rows.append({'n': n, 'eps_hi': hi, 'eps_lo': lo, 'gap': gap,
                     'gap_localized': gap_loc, 'shape': shape,
                     'c_needed': max(gap, gap_loc or 0.0) / shape})

    constant = max(row['c_needed'] for row in rows)
    ok = math.isfinite(constant)
    params_echo = {'field': describe(field), 'a': a,
                   'n_ladder': [row['n'] for row in rows],
                   'window': describe(window)}
    return params_echo, rows, verdict.PASS if ok else verdict.FAIL, \
            {'kind': 'single fixed seed', 'fitted_c': constant}


@experiment(['epsilon', 'sup_full', 'sup_localized', 'log_term', 'c_rung'])
def field_sup_bound_check(field, eps_ladder, eta, window):
    """ sup over the window of |h*_eps| and |h^*_eps| against
        (1 + eta)(2 + eta) log(1/eps) + C """
    if not eta > 0:
        raise InvalidArgument('eta must be positive, got {}'.format(eta))
    ladder = sorted((float(e) for e in eps_ladder), reverse=True)
    if len(ladder) < 3:
        raise InvalidArgument('the ladder needs at least 3 rungs')
    bits = window.resolve(field.spec)

    rows = []
    for eps in ladder:
        full = _sup(mollify(field, eps).values, bits)
        loc = _sup(mollify_localized(field, eps).values, bits)
        term = (1 + eta) * (2 + eta) * math.log(1.0 / eps)
        rows.append({'epsilon': eps, 'sup_full': full, 'sup_localized': loc,
                     'log_term': term, 'c_rung': max(full, loc) - term})

    c_rungs = [row['c_rung'] for row in rows]
    ok = non_increasing(c_rungs[-3:])
    params_echo = {'field': describe(field), 'eps_ladder': ladder,
                   'eta': eta, 'window': describe(window)}
    return params_echo, rows, verdict.PASS if ok else verdict.FAIL, \
            {'kind': 'single fixed seed', 'fitted_c': max(c_rungs)}
