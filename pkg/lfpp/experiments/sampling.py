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
from lfpp.exc import InvalidArgument
from lfpp.gff.field import FieldSample
from lfpp.gff.params import LatticeSpec, Params
from lfpp.metric import Region, build_weighted_grid, dist_point
from lfpp.renorm import EstimateCache, MCConfig
from lfpp.utils.seeds import pair_generator

__all__ = ['describe', 'random_pairs', 'pair_distances', 'check_pairs',
           'halving', 'finest_dyadic']

log = logging.getLogger(__name__)


def describe(value):
    """ JSON-friendly echo of an experiment argument """
    if isinstance(value, FieldSample):
        return {'kind': value.kind, 'n': value.spec.n,
                'spacing': value.spec.spacing, 'seed': value.seed,
                'derived': value.derived}
    if isinstance(value, (Params, LatticeSpec, MCConfig)):
        return value.to_dict()
    if isinstance(value, Region):
        return repr(value)
    if isinstance(value, EstimateCache):
        return None
    if callable(value):
        return getattr(value, '__name__', repr(value))
    if isinstance(value, (list, tuple)):
        return [describe(v) for v in value]
    if isinstance(value, np.generic):
        return value.item()
    return value


def check_pairs(pairs):
    try:
        pairs = [(tuple(map(float, z)), tuple(map(float, w)))
                 for z, w in pairs]

    except (TypeError, ValueError):
        raise InvalidArgument('pairs must be a list of ((x, y), (x, y))')

    if not pairs:
        raise InvalidArgument('at least one pair is required')
    return pairs


def random_pairs(spec, window, count, seed, max_separation=None):
    """ ``count`` distinct-site pairs inside ``window``, reproducible from
        ``seed``; with ``max_separation`` the second site lies within that
        distance of the first """
    rng = pair_generator(seed, 'pairs')
    bits = window.resolve(spec)
    sites = np.argwhere(bits)
    offsets = None
    if max_separation is not None:
        reach = int(math.floor(max_separation / spec.spacing))
        if reach < 1:
            raise InvalidArgument('separation {} is below the lattice '
                                  'spacing'.format(max_separation))
        span = np.arange(-reach, reach + 1)
        di, dj = np.meshgrid(span, span, indexing='ij')
        keep = (di ** 2 + dj ** 2 <= reach ** 2) & ((di != 0) | (dj != 0))
        offsets = np.column_stack((di[keep], dj[keep]))

    pairs = []
    while len(pairs) < count:
        u = sites[rng.integers(len(sites))]
        if offsets is None:
            v = sites[rng.integers(len(sites))]
        else:
            v = u + offsets[rng.integers(len(offsets))]
        if (u == v).all() or not spec.contains_index(*v) or not bits[tuple(v)]:
            continue
        pairs.append((spec.point(*u), spec.point(*v)))
    return pairs


def pair_distances(moll, xi, window, pairs):
    grid = build_weighted_grid(moll, xi, window)
    return [dist_point(grid, z, w).value for z, w in pairs]


def halving(eps_ladder, minimum=2):
    """ the ladder sorted by decreasing epsilon, each rung half the last """
    ladder = sorted((float(e) for e in eps_ladder), reverse=True)
    if len(ladder) < minimum:
        raise InvalidArgument('the ladder needs at least {} rungs'
                              .format(minimum))
    for hi, lo in zip(ladder[:-1], ladder[1:]):
        if hi != 2.0 * lo:
            raise InvalidArgument('{} is not a halving ladder'.format(ladder))
    return ladder


def finest_dyadic(spacing):
    """ the smallest eps = 2^-k admissible on a lattice of this spacing """
    return 2.0 ** math.ceil(math.log2(2.0 * spacing))
