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

import argparse
import json
import logging
from lfpp.exc import ParamsError, ValidationError
from lfpp.gff import LatticeSpec, Params, sample_dirichlet_gff, \
        sample_torus_gff
from lfpp.gff import codec
from lfpp.gff.field import fieldkind
from lfpp.validators import (validate_kind,
                             validate_point,
                             validate_positive_float,
                             validate_power_of_two,
                             validate_seed)

__all__ = ['add_lattice_arguments', 'lattice_from', 'read_json',
           'obtain_field', 'read_field', 'params_from', 'floats', 'point',
           'seed', 'xi']

log = logging.getLogger(__name__)


def _argtype(validator, name):
    """ an argparse type from a validator """
    def convert(value):
        try:
            return validator(value)

        except ValidationError as e:
            raise argparse.ArgumentTypeError(str(e))

    convert.__name__ = name
    return convert


point = _argtype(validate_point, 'point')
seed = _argtype(validate_seed, 'seed')
xi = _argtype(validate_positive_float, 'xi')


def floats(value):
    try:
        return [float(v) for v in str(value).split(',') if v.strip()]

    except ValueError:
        raise argparse.ArgumentTypeError(
            '{} is not a comma separated list of numbers'.format(value))


def add_lattice_arguments(parser, n_default=None):
    parser.add_argument('--n', type=int, required=n_default is None,
                        default=n_default, help='lattice side (power of 2)')
    parser.add_argument('--spacing', default='auto',
                        help="mesh, or 'auto' for 4/n")


def lattice_from(n, spacing='auto'):
    try:
        n = validate_power_of_two(n)
        if spacing == 'auto':
            return LatticeSpec.auto(n)
        return LatticeSpec.centered(n, validate_positive_float(spacing))

    except ValidationError as e:
        raise ParamsError(str(e))


def read_json(path):
    """ a JSON document; syntax errors are reported with their position """
    try:
        with open(path) as f:
            text = f.read()

    except OSError as e:
        raise ParamsError('cannot read {}: {}'.format(path, e))

    try:
        return json.loads(text)

    except json.JSONDecodeError as e:
        raise ParamsError('malformed JSON in {}: line {} column {}: {}'
                          .format(path, e.lineno, e.colno, e.msg))


def params_from(xi, gamma=None):
    return Params(xi, gamma)


def obtain_field(context, kind, spec, field_seed):
    """ the sample of (kind, spec, seed), from the cache when possible """
    kind = validate_kind(kind) if kind not in fieldkind else kind
    key = {'operation': 'field', 'kind': kind, 'lattice': spec.to_dict(),
           'seed': field_seed}
    index = context.index
    if index is not None:
        field = index.load_field(key)
        if field is not None and field.spec == spec:
            return field

    sampler = sample_torus_gff if kind == fieldkind.TORUS \
            else sample_dirichlet_gff
    field = sampler(spec, field_seed)
    if index is not None and spec == LatticeSpec.centered(spec.n,
                                                          spec.spacing):
        index.save_field(key, field)
    return field


def read_field(path):
    try:
        return codec.read(path)

    except OSError as e:
        raise ParamsError('cannot read field {}: {}'.format(path, e))
