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
from lfpp.gff import codec
from lfpp.validators import validate_kind
from .. manifest import RunConfig, command
from . import add_lattice_arguments, lattice_from, obtain_field, seed

log = logging.getLogger(__name__)


def register(subparsers, name):
    parser = subparsers.add_parser(name, help='Gaussian free field samples')
    actions = parser.add_subparsers(dest='action', metavar='ACTION',
                                    parser_class=type(parser))
    actions.required = True

    sample = actions.add_parser('sample', help='sample a field to LFPF')
    sample.add_argument('--kind', default='torus',
                        help='torus (whole-plane proxy) or dirichlet')
    add_lattice_arguments(sample)
    sample.add_argument('--seed', type=seed, required=True)
    sample.add_argument('--out', required=True, help='LFPF output path')
    sample.set_defaults(run=run)


def run(context, args):
    kind = validate_kind(args.kind)
    spec = lattice_from(args.n, args.spacing)
    field = obtain_field(context, kind, spec, args.seed)
    context.write(args.out, codec.dumps(field))
    log.info("Sampled %r to %s", field, args.out)
    return RunConfig(command.FIELD_SAMPLE,
                     {'kind': kind, 'lattice': spec.to_dict(),
                      'seed': args.seed},
                     args.seed, context.threads, args.out)
