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
from lfpp.renorm import scaling_ratio
from .. manifest import RunConfig, command, dumps
from . import add_lattice_arguments, floats, params_from, xi
from . a_eps import add_mc_arguments, mc_from

log = logging.getLogger(__name__)


def register(subparsers, name):
    parser = subparsers.add_parser(name, help='scaling ratio diagnostic '
                                              'from cached a-eps estimates')
    parser.add_argument('--xi', type=xi, required=True)
    parser.add_argument('--eps-ladder', type=floats, required=True,
                        help='comma separated epsilons')
    parser.add_argument('--r', type=float, required=True,
                        help='dyadic scale factor')
    parser.add_argument('--q-hat', type=float, required=True)
    add_lattice_arguments(parser)
    add_mc_arguments(parser)
    parser.add_argument('--out', required=True)
    parser.set_defaults(run=run)


def run(context, args):
    params = params_from(args.xi)
    context.check_params(params)
    mc = mc_from(context, args)
    series = scaling_ratio(args.eps_ladder, args.r, params, mc, args.q_hat,
                           cache=context.estimates())
    context.write(args.out, dumps(series.to_dict()))
    return RunConfig(command.RATIO,
                     {'eps_ladder': args.eps_ladder, 'r': args.r,
                      'q_hat': args.q_hat, 'params': params.to_dict(),
                      'mc': mc.key()},
                     mc.master_seed, context.threads, args.out)
