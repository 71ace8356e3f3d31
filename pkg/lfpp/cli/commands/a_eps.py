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
from lfpp.renorm import MCConfig
from .. manifest import RunConfig, command, dumps
from . import add_lattice_arguments, lattice_from, params_from, seed, xi

log = logging.getLogger(__name__)


def register(subparsers, name):
    parser = subparsers.add_parser(name, help='Monte Carlo median of the '
                                              'unit-square crossing')
    parser.add_argument('--xi', type=xi, required=True)
    parser.add_argument('--eps', type=float, required=True)
    add_lattice_arguments(parser)
    add_mc_arguments(parser)
    parser.add_argument('--out', required=True, help='JSON output path')
    parser.set_defaults(run=run)


def add_mc_arguments(parser):
    parser.add_argument('--trials', type=int, required=True)
    parser.add_argument('--seed', type=seed, required=True,
                        help='master seed of the trial streams')
    parser.add_argument('--localized', action='store_true',
                        help='use the truncated, renormalized mollifier')


def mc_from(context, args):
    threads = context.threads
    return MCConfig(args.trials, args.seed, lattice_from(args.n,
                                                         args.spacing),
                    localized=args.localized, parallel=threads > 1,
                    threads=threads)


def run(context, args):
    params = params_from(args.xi)
    context.check_params(params)
    mc = mc_from(context, args)
    estimate = context.estimates().get(args.eps, params, mc)
    context.write(args.out, dumps(estimate.to_dict()))
    return RunConfig(command.A_EPS,
                     {'epsilon': args.eps, 'params': params.to_dict(),
                      'mc': mc.key()},
                     mc.master_seed, context.threads, args.out)
