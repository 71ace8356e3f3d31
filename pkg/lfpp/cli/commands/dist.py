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

import csv
import io
import logging
from lfpp.gff import mollify, mollify_localized
from lfpp.metric import (Region,
                         build_weighted_grid,
                         dist_internal,
                         dist_point)
from lfpp.validators import validate_region
from .. manifest import RunConfig, command, dumps
from . import params_from, point, read_field, xi

log = logging.getLogger(__name__)


def register(subparsers, name):
    parser = subparsers.add_parser(name, help='LFPP distance between two '
                                              'points of a field')
    parser.add_argument('--field', required=True, help='LFPF field file')
    parser.add_argument('--eps', type=float, required=True)
    parser.add_argument('--xi', type=xi, required=True)
    parser.add_argument('--from', dest='z', type=point, required=True)
    parser.add_argument('--to', dest='w', type=point, required=True)
    parser.add_argument('--within', default=None,
                        help='region for the internal metric, e.g. '
                             'annulus:0.5,0.5,0.1,0.3')
    parser.add_argument('--full', action='store_true',
                        help='heat-kernel mollification instead of the '
                             'localized one')
    parser.add_argument('--emit-path', default=None, metavar='CSV')
    parser.add_argument('--out', default=None, help='JSON result path')
    parser.set_defaults(run=run)


def path_csv(path, spec, grid):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(['idx', 'x', 'y', 'cum_length'])
    for idx, ((x, y), length) in enumerate(zip(path.points(spec),
                                               path.cumulative(grid))):
        writer.writerow([idx, repr(x), repr(y), repr(length)])
    return out.getvalue()


def run(context, args):
    params = params_from(args.xi)
    context.check_params(params)
    field = read_field(args.field)
    spec = field.spec
    smooth = mollify if args.full else mollify_localized
    moll = smooth(field, args.eps)

    lo = spec.point(0, 0)
    hi = spec.point(spec.n - 1, spec.n - 1)
    grid = build_weighted_grid(moll, params.xi, Region.rect(lo, hi))
    want_path = args.emit_path is not None
    if args.within:
        result = dist_internal(grid, args.z, args.w,
                               validate_region(args.within), want_path)
    else:
        result = dist_point(grid, args.z, args.w, want_path)

    resolved = {'field': args.field, 'field_seed': field.seed,
                'lattice': spec.to_dict(), 'epsilon': args.eps,
                'localized': not args.full, 'params': params.to_dict(),
                'from': list(args.z), 'to': list(args.w),
                'within': args.within}
    output = dict(resolved, result=result.to_dict())
    if args.out:
        context.write(args.out, dumps(output))
    else:
        print(dumps(output), end='')
    if want_path and result.path is not None:
        context.write(args.emit_path, path_csv(result.path, spec, grid))

    return RunConfig(command.DIST, resolved, field.seed, context.threads,
                     args.out or args.emit_path)
