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

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph
from lfpp.gff import LatticeSpec
from lfpp.gff.mollify import MollifiedField
from lfpp.metric.grid import NEIGHBOURS


def moll_of(values, spacing=1.0, origin=(0.0, 0.0)):
    values = np.asarray(values, dtype=float)
    spec = LatticeSpec(values.shape[0], spacing, origin)
    return MollifiedField(spec, 2 * spacing, values, False, 1.0, 0)


def random_moll(n=8, seed=0, spacing=1.0):
    rng = np.random.default_rng(seed)
    return moll_of(rng.normal(size=(n, n)), spacing)


def all_pairs(grid, bits=None):
    """ Floyd-Warshall distances between lattice sites of ``grid`` (or of
        ``bits``), indexed by i * n + j """
    spec = grid.spec
    n = spec.n
    bits = grid.mask if bits is None else grid.mask & bits
    rows, cols, data = [], [], []
    for i in range(n):
        for j in range(n):
            if not bits[i, j]:
                continue
            for di, dj in NEIGHBOURS:
                ti, tj = i + di, j + dj
                if spec.contains_index(ti, tj) and bits[ti, tj]:
                    rows.append(i * n + j)
                    cols.append(ti * n + tj)
                    data.append(grid.edge_weight((i, j), (ti, tj)))
    graph = sparse.csr_matrix((data, (rows, cols)), shape=(n * n, n * n))
    return csgraph.floyd_warshall(graph, directed=True)
