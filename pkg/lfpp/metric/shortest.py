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

import heapq
import logging
import math
import numpy as np
from lfpp.exc import OutOfRegion
from . grid import DistResult, NEIGHBOURS, Path
from . region import Region

__all__ = ['dist_point', 'dist_sets', 'dist_internal', 'lr_crossing',
           'dist_balls', 'search', 'trace']

log = logging.getLogger(__name__)


def search(grid, sources, targets, allowed):
    """ Dijkstra from the local ``sources`` until a local site flagged in
        ``targets`` is settled.

        Heap entries are (distance, local index) so equal distances settle
        in lexicographic site order; on equal tentative distances the
        smaller predecessor wins. Returns (value, target, pred, settled),
        with target None when no target is reachable.
    """
    i0, j0, ni, nj = grid.box
    size = ni * nj
    dist = [math.inf] * size
    pred = [-1] * size
    done = bytearray(size)
    steps = [(k, di * nj + dj, di, dj)
             for k, (di, dj) in enumerate(NEIGHBOURS)]
    weights = grid.weights

    heap = []
    for s in sources:
        dist[s] = 0.0
        heap.append((0.0, s))
    heapq.heapify(heap)

    settled = 0
    while heap:
        d, s = heapq.heappop(heap)
        if done[s]:
            continue
        done[s] = 1
        settled += 1
        if targets[s]:
            return d, s, pred, settled

        i, j = divmod(s, nj)
        for k, offset, di, dj in steps:
            ti, tj = i + di, j + dj
            if ti < 0 or ti >= ni or tj < 0 or tj >= nj:
                continue
            t = s + offset
            if done[t] or not allowed[t]:
                continue
            nd = d + weights[k][s]
            if nd < dist[t]:
                dist[t] = nd
                pred[t] = s
                heapq.heappush(heap, (nd, t))
            elif nd == dist[t] and s < pred[t]:
                pred[t] = s

    return math.inf, None, pred, settled


def trace(grid, pred, target):
    """ the geodesic ending at ``target``, re-summed in travel order """
    chain = [target]
    while pred[chain[-1]] != -1:
        chain.append(pred[chain[-1]])
    sites = [grid.site(s) for s in reversed(chain)]
    length = 0.0
    for u, v in zip(sites[:-1], sites[1:]):
        length = length + grid.edge_weight(u, v)
    return Path(sites, length)


def _flags(grid, locals_):
    i0, j0, ni, nj = grid.box
    flags = bytearray(ni * nj)
    for s in locals_:
        flags[s] = 1
    return flags


def _run(grid, sources, targets, allowed, want_path):
    value, target, pred, settled = search(grid, sources,
                                          _flags(grid, targets), allowed)
    if target is None:
        log.debug("No path on %r after settling %d sites", grid, settled)
        return DistResult.disconnected(settled)
    path = trace(grid, pred, target) if want_path else None
    return DistResult(value, path, settled)


def _region_sites(grid, region, name):
    bits = region.resolve(grid.spec, require=False)
    sites = grid.sites_of(bits)
    if not sites:
        raise OutOfRegion('{} {} does not meet the grid region'
                          .format(name, region))
    return sites


def dist_point(grid, z, w, want_path=False):
    """ graph distance between the sites nearest to ``z`` and ``w`` """
    u, v = grid.snap(z), grid.snap(w)
    return _run(grid, [grid.local(u)], [grid.local(v)], grid.allowed,
                want_path)


def dist_sets(grid, A, B, want_path=False):
    """ D(A, B): multi-source search from the sites of A to those of B """
    sources = _region_sites(grid, A, 'set')
    targets = _region_sites(grid, B, 'set')
    return _run(grid, sources, targets, grid.allowed, want_path)


def dist_internal(grid, z, w, sub, want_path=False):
    """ distance along paths that stay in ``sub`` """
    bits = sub.resolve(grid.spec, require=False)
    u, v = grid.snap(z), grid.snap(w)
    for point, site in ((z, u), (w, v)):
        if not bits[site]:
            raise OutOfRegion(point)
    return _run(grid, [grid.local(u)], [grid.local(v)],
                grid.local_mask(bits), want_path)


def lr_crossing(grid, square, want_path=False):
    """ left-right crossing distance of a rectangle, internal to it """
    bits = square.resolve(grid.spec) & grid.mask
    if not bits.any():
        raise OutOfRegion('{} does not meet the grid region'.format(square))

    columns = np.flatnonzero(bits.any(axis=1))
    left = np.zeros_like(bits)
    right = np.zeros_like(bits)
    left[columns[0]] = bits[columns[0]]
    right[columns[-1]] = bits[columns[-1]]
    return _run(grid, grid.sites_of(left), grid.sites_of(right),
                grid.local_mask(bits), want_path)


def dist_balls(grid, z, w, radius, within=None, want_path=False):
    """ D(B_r(z), B_r(w)), optionally internal to ``within``.

        A ball too small to hold a site is replaced by its nearest site.
    """
    region = grid.mask
    if within is not None:
        region = region & within.resolve(grid.spec)

    def ball(center):
        bits = Region.disk(center, radius).resolve(grid.spec, require=False)
        bits = bits & region
        if not bits.any():
            bits[grid.snap(center)] = True
        return grid.sites_of(bits)

    return _run(grid, ball(z), ball(w), grid.local_mask(region), want_path)
