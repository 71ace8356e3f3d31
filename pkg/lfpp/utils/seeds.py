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

import zlib
import numpy as np

__all__ = ['split', 'generator', 'pair_generator']


def split(master_seed, index):
    """ Derive the uint64 seed of stream ``index`` from ``master_seed``.

        The derivation only depends on the two integers, so trial i gets the
        same field whatever the number of workers or the completion order.
    """
    sequence = np.random.SeedSequence(entropy=int(master_seed),
                                      spawn_key=(int(index),))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def generator(seed):
    return np.random.Generator(np.random.PCG64(int(seed)))


def pair_generator(seed, purpose):
    """ a generator for auxiliary draws (random pairs, bootstrap) which
        never collides with the field stream of the same seed """
    key = 2 ** 32 + zlib.crc32(purpose.encode())
    sequence = np.random.SeedSequence(entropy=int(seed), spawn_key=(key,))
    return np.random.Generator(np.random.PCG64(sequence))
