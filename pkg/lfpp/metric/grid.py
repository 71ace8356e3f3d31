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
from lfpp.exc import InvalidArgument, OutOfRegion
from . region import Region

__all__ = ['WeightedGrid', 'Path', 'DistResult', 'build_weighted_grid',
           'NEIGHBOURS']

# 8-neighbour stencil in lexicographic order; index d and 7 - d are opposite
NEIGHBOURS = ((-1, -1), (-1, 0), (-1, 1), (0, -1),
              (0, 1), (1, -1), (1, 0), (1, 1))

log = logging.getLogger(__name__)


class Path(collections.namedtuple('Path', ['sites', 'length'])):
    """ lattice sites (i, j) in travel order and their weighted length """
    __slots__ = ()

    def points(self, spec):
        return [spec.point(i, j) for i, j in self.sites]

    def cumulative(self, grid):
        """ running length after each site, summed in travel order """
        total, out = 0.0, [0.0]
        for u, v in zip(self.sites[:-1], self.sites[1:]):
            total = total + grid.edge_weight(u, v)
            out.append(total)
        return out


class DistResult(collections.namedtuple('DistResult',
                                        ['value', 'path', 'settled'])):
    """ A distance, +infinity when the endpoints are disconnected.

        ``path`` is None unless requested, and always None for infinite
        distances.
    """
    __slots__ = ()

    @property
    def infinite(self):
        return math.isinf(self.value)

    @classmethod
    def disconnected(cls, settled):
        return cls(math.inf, None, settled)

    def to_dict(self):
        return {'value': None if self.infinite else self.value,
                'infinite': self.infinite,
                'settled': self.settled,
                'path_sites': None if self.path is None
                              else [list(s) for s in self.path.sites]}


class WeightedGrid(object):
    """ The discrete LFPP environment on the sites of a region.

        ``site_cost`` is exp(xi * mollified value) on the whole lattice; the
        graph only uses the sites of ``mask``. Edge weights follow the
        trapezoid rule along the edge and are stored per direction over the
        bounding box of the mask.
    """

    def __init__(self, spec, xi, site_cost, mask):
        self.spec = spec
        self.xi = xi
        self.site_cost = site_cost
        self.mask = mask
        self.log = logging.getLogger("{}.{}".format(__name__,
                                                    self.__class__.__name__))

        rows = np.flatnonzero(mask.any(axis=1))
        cols = np.flatnonzero(mask.any(axis=0))
        self.box = (int(rows[0]), int(cols[0]),
                    int(rows[-1] - rows[0] + 1), int(cols[-1] - cols[0] + 1))
        i0, j0, ni, nj = self.box
        cost = site_cost[i0:i0 + ni, j0:j0 + nj]
        self.allowed = mask[i0:i0 + ni, j0:j0 + nj].ravel().tolist()

        # weights[d][s] is the weight of the edge from local site s in
        # direction NEIGHBOURS[d]; +inf when the neighbour is off the box
        self.weights = []
        for di, dj in NEIGHBOURS:
            shifted = np.full_like(cost, np.inf)
            src = (slice(max(0, -di), ni - max(0, di)),
                   slice(max(0, -dj), nj - max(0, dj)))
            dst = (slice(max(0, di), ni - max(0, -di)),
                   slice(max(0, dj), nj - max(0, -dj)))
            shifted[src] = cost[dst]
            length = spec.spacing * math.sqrt(di * di + dj * dj)
            self.weights.append((length * (cost + shifted) / 2.0)
                                .ravel().tolist())

        self.log.debug("Built grid over box %s (%d sites)", self.box,
                       int(mask.sum()))

    @property
    def n_sites(self):
        return int(self.mask.sum())

    def local(self, site):
        i0, j0, ni, nj = self.box
        return (site[0] - i0) * nj + (site[1] - j0)

    def site(self, local):
        i0, j0, ni, nj = self.box
        i, j = divmod(local, nj)
        return (i + i0, j + j0)

    def in_mask(self, site):
        i, j = site
        return self.spec.contains_index(i, j) and bool(self.mask[i, j])

    def snap(self, point):
        site = self.spec.snap(point)
        if not self.in_mask(site):
            raise OutOfRegion(point)
        return site

    def edge_weight(self, u, v):
        du, dv = v[0] - u[0], v[1] - u[1]
        try:
            d = NEIGHBOURS.index((du, dv))
        except ValueError:
            raise InvalidArgument('{} and {} are not neighbours'.format(u, v))
        return self.weights[d][self.local(u)]

    def local_mask(self, region_bits):
        """ allowed flags of the box restricted to ``region_bits`` """
        i0, j0, ni, nj = self.box
        bits = self.mask[i0:i0 + ni, j0:j0 + nj] & \
                region_bits[i0:i0 + ni, j0:j0 + nj]
        return bits.ravel().tolist()

    def sites_of(self, region_bits):
        """ local indices of mask sites inside ``region_bits``, sorted """
        i0, j0, ni, nj = self.box
        bits = self.mask[i0:i0 + ni, j0:j0 + nj] & \
                region_bits[i0:i0 + ni, j0:j0 + nj]
        return np.flatnonzero(bits).tolist()

    def min_edge_weight(self, region_bits=None):
        allowed = self.allowed if region_bits is None \
                else self.local_mask(region_bits)
        i0, j0, ni, nj = self.box
        best = math.inf
        for d, (di, dj) in enumerate(NEIGHBOURS):
            for s, ok in enumerate(allowed):
                if not ok:
                    continue
                i, j = divmod(s, nj)
                ti, tj = i + di, j + dj
                if 0 <= ti < ni and 0 <= tj < nj and allowed[ti * nj + tj]:
                    best = min(best, self.weights[d][s])
        return best

    def __repr__(self):
        return "<WeightedGrid n={} xi={} sites={}>".format(
            self.spec.n, self.xi, self.n_sites)


def build_weighted_grid(moll, xi, region):
    """ site cost exp(xi * h) over the sites of ``region`` """
    if not xi > 0:
        raise InvalidArgument('xi must be positive, got {}'.format(xi))
    if not isinstance(region, Region):
        raise InvalidArgument('{!r} is not a Region'.format(region))

    mask = region.resolve(moll.spec)
    site_cost = np.exp(xi * moll.values)
    if not np.all(np.isfinite(site_cost[mask])) or \
       not np.all(site_cost[mask] > 0):
        raise InvalidArgument('site costs must be positive and finite')
    return WeightedGrid(moll.spec, xi, site_cost, mask)
