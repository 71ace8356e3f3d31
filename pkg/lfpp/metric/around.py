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
from lfpp.exc import DegenerateAnnulus, OutOfRegion
from . grid import DistResult, NEIGHBOURS, Path
from . region import regionvariant

__all__ = ['dist_around_annulus', 'SHEETS']

# a separating cycle may cross the cut back and forth; lifts are kept on
# sheets -SHEETS..SHEETS
SHEETS = 2

log = logging.getLogger(__name__)


def _crossing(cx, cy, u, v):
    """ +1 when the edge u -> v crosses the ray {y = cy + 1/2, x > cx}
        upwards, -1 downwards, 0 otherwise (site index units) """
    if u[0] + v[0] <= 2 * cx:
        return 0
    if u[1] == cy and v[1] == cy + 1:
        return 1
    if u[1] == cy + 1 and v[1] == cy:
        return -1
    return 0


def _lifted_search(grid, allowed, cx, cy, source, bound, sheets):
    """ Dijkstra on the sheeted cover from (source, 0) to (source, 1),
        abandoned once the frontier reaches ``bound`` """
    i0, j0, ni, nj = grid.box
    size = ni * nj
    layers = 2 * sheets + 1
    dist = [math.inf] * (size * layers)
    pred = [-1] * (size * layers)
    done = bytearray(size * layers)
    weights = grid.weights
    lcx, lcy = cx - i0, cy - j0

    start = sheets * size + source
    goal = (sheets + 1) * size + source
    dist[start] = 0.0
    heap = [(0.0, start)]
    settled = 0
    while heap:
        d, state = heapq.heappop(heap)
        if done[state]:
            continue
        if d >= bound:
            break
        done[state] = 1
        settled += 1
        if state == goal:
            return d, pred, settled

        layer, s = divmod(state, size)
        i, j = divmod(s, nj)
        for k, (di, dj) in enumerate(NEIGHBOURS):
            ti, tj = i + di, j + dj
            if ti < 0 or ti >= ni or tj < 0 or tj >= nj:
                continue
            t = ti * nj + tj
            if not allowed[t]:
                continue
            tl = layer + _crossing(lcx, lcy, (i, j), (ti, tj))
            if tl < 0 or tl >= layers:
                continue
            target = tl * size + t
            if done[target]:
                continue
            nd = d + weights[k][s]
            if nd < dist[target]:
                dist[target] = nd
                pred[target] = state
                heapq.heappush(heap, (nd, target))
            elif nd == dist[target] and state < pred[target]:
                pred[target] = state

    return math.inf, pred, settled


def dist_around_annulus(grid, ann, want_path=False, sheets=SHEETS):
    """ Length of the shortest cycle in the annulus that separates its two
        boundary circles.

        The annulus is cut along the rightward horizontal ray from its
        center; a separating cycle is a path in the sheeted cover of the cut
        graph that starts and ends at the same site one sheet apart. The
        search runs from every site just above the cut and keeps the best.
    """
    if ann.variant != regionvariant.ANNULUS:
        raise DegenerateAnnulus('{} is not an annulus'.format(ann))
    spec = grid.spec
    center, r1, r2 = ann.geometry
    if r2 - r1 < 3.0 * spec.spacing:
        raise DegenerateAnnulus('annulus width {} is below three lattice '
                                'spacings ({})'.format(r2 - r1, spec.spacing))

    bits = ann.resolve(spec)
    if (bits & ~grid.mask).any():
        raise OutOfRegion('{} is not inside the grid region'.format(ann))
    cx, cy = spec.snap(center)
    if not spec.contains_index(cx, cy + 1) or bits[cx, cy]:
        raise DegenerateAnnulus('annulus hole around {} holds no lattice '
                                'site'.format(center))

    allowed = grid.local_mask(bits)
    sources = [grid.local((i, cy + 1)) for i in range(cx, spec.n)
               if bits[i, cy + 1]]
    i0, j0, ni, nj = grid.box
    size = ni * nj

    best, best_pred, best_source, settled = math.inf, None, None, 0
    for source in sources:
        value, pred, count = _lifted_search(grid, allowed, cx, cy, source,
                                            best, sheets)
        settled += count
        if value < best:
            best, best_pred, best_source = value, pred, source

    log.debug("Around %r: %s after %d sources, %d settled", ann, best,
              len(sources), settled)
    if best_source is None:
        return DistResult.disconnected(settled)
    if not want_path:
        return DistResult(best, None, settled)

    state = (sheets + 1) * size + best_source
    chain = [state]
    while best_pred[chain[-1]] != -1:
        chain.append(best_pred[chain[-1]])
    sites = [grid.site(s % size) for s in reversed(chain)]
    length = 0.0
    for u, v in zip(sites[:-1], sites[1:]):
        length = length + grid.edge_weight(u, v)
    return DistResult(best, Path(sites, length), settled)
