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

import glob
import logging
import os
from lfpp.exc import ParamsError
from lfpp.gff import Params
from lfpp.renorm import (MedianEstimate, fit_exponent, lattice_stability,
                         log_correction_check)
from .. manifest import RunConfig, command, dumps
from . import read_json

log = logging.getLogger(__name__)


def register(subparsers, name):
    parser = subparsers.add_parser(name, help='fit the exponent 1 - xi Q '
                                              'from a-eps results')
    parser.add_argument('--in', dest='indir', required=True,
                        help='directory of a-eps JSON results')
    parser.add_argument('--log-correction', type=float, default=None,
                        metavar='B', help='also check the (log 1/eps)^B '
                                          'corrected bounds')
    parser.add_argument('--out', required=True)
    parser.set_defaults(run=run)


def load_estimates(indir):
    estimates = []
    for path in sorted(glob.glob(os.path.join(indir, '*.json'))):
        if path.endswith('.manifest.json'):
            continue
        data = read_json(path)
        if isinstance(data, dict) and 'median' in data:
            estimates.append(MedianEstimate.from_dict(data))
        else:
            log.debug("Skipping %s: not an a-eps result", path)

    if not estimates:
        raise ParamsError('no a-eps results in {}'.format(indir))
    xis = {e.xi for e in estimates}
    if len(xis) != 1:
        raise ParamsError('a-eps results mix xi values {}'
                          .format(sorted(xis)))
    return estimates


def run(context, args):
    estimates = load_estimates(args.indir)
    params = Params(estimates[0].xi)
    fit = fit_exponent(estimates, params)
    output = fit.to_dict()
    lattices = sorted({e.n for e in estimates})
    if len(lattices) > 1:
        output['lattice_stability'] = \
                lattice_stability(estimates)._asdict()
    if args.log_correction is not None:
        check = log_correction_check(estimates, params, args.log_correction,
                                     fit.q_hat)
        output['log_correction'] = check._asdict()

    context.write(args.out, dumps(output))
    seeds = sorted({e.master_seed for e in estimates})
    return RunConfig(command.FIT,
                     {'inputs': sorted(e.epsilon for e in estimates),
                      'xi': params.xi, 'lattices': lattices,
                      'log_correction': args.log_correction},
                     seeds[0] if len(seeds) == 1 else seeds,
                     context.threads, args.out)
