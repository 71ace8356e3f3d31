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
import struct
import numpy as np
from lfpp.exc import CorruptedArtifact
from . field import FieldSample, fieldkind
from . params import LatticeSpec

__all__ = ['MAGIC', 'FORMAT_VERSION', 'dumps', 'loads', 'read', 'write',
           'read_header']

MAGIC = b'LFPF'
FORMAT_VERSION = 1
HEADER = struct.Struct('<4sHBIdQ')
KINDS = (fieldkind.TORUS, fieldkind.DIRICHLET)

log = logging.getLogger(__name__)


def dumps(field):
    """ Encode a field: header, then n^2 little-endian f64 row-major.

        The format has no room for the origin; lattices are stored as
        centered on (0.5, 0.5) and read back that way.
    """
    spec = field.spec
    expected = LatticeSpec.centered(spec.n, spec.spacing)
    if spec.origin != expected.origin:
        log.warning("origin %s is not stored in LFPF; it will be read "
                    "back as %s", spec.origin, expected.origin)

    header = HEADER.pack(MAGIC, FORMAT_VERSION, KINDS.index(field.kind),
                         spec.n, spec.spacing, field.seed)
    return header + field.values.astype('<f8').tobytes(order='C')


def _unpack_header(data, path):
    if len(data) < HEADER.size:
        raise CorruptedArtifact(path, 'truncated header')

    magic, version, kind, n, spacing, seed = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise CorruptedArtifact(path, 'bad magic {!r}'.format(magic))
    if version != FORMAT_VERSION:
        raise CorruptedArtifact(path, 'unsupported version {}'
                                .format(version))
    if kind >= len(KINDS):
        raise CorruptedArtifact(path, 'unknown kind {}'.format(kind))
    return KINDS[kind], n, spacing, seed


def loads(data, path='<bytes>'):
    kind, n, spacing, seed = _unpack_header(data, path)
    body = data[HEADER.size:]
    if len(body) != 8 * n * n:
        raise CorruptedArtifact(path, 'expected {} value bytes, found {}'
                                .format(8 * n * n, len(body)))

    values = np.frombuffer(body, dtype='<f8').reshape(n, n)
    spec = LatticeSpec.centered(n, spacing)
    return FieldSample(spec, values.astype(float), kind, seed,
                       mean_removed=(kind == fieldkind.TORUS))


def read_header(path):
    with open(path, 'rb') as f:
        return _unpack_header(f.read(HEADER.size), path)


def read(path):
    with open(path, 'rb') as f:
        return loads(f.read(), path)


def write(field, path):
    with open(path, 'wb') as f:
        f.write(dumps(field))
