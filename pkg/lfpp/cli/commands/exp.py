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

import inspect
import io
import logging
import os
from importlib import resources
from mako.template import Template
from lfpp import experiments
from lfpp.exc import ParamsError
from lfpp.gff import FieldSample, Params
from lfpp.metric import Region
from lfpp.renorm import MCConfig
from lfpp.cache import render
from lfpp.validators import validate_region
from lfpp.version import version_string
from .. manifest import RunConfig, command, dumps
from . import lattice_from, obtain_field, read_field, read_json

log = logging.getLogger(__name__)


def register(subparsers, name):
    parser = subparsers.add_parser(name, help='run a named experiment')
    parser.add_argument('name', help="experiment name, or 'list'")
    parser.add_argument('--config', default=None,
                        help='JSON object of the experiment parameters')
    parser.add_argument('--out', default=None, help='report JSON path')
    parser.add_argument('--csv', default=None, help='rows CSV path')
    parser.add_argument('--emit-gnuplot', action='store_true',
                        help='write a gnuplot script next to the CSV')
    parser.add_argument('--markdown', default=None,
                        help="with 'list': write the columns reference")
    parser.set_defaults(run=run)


def to_field(context, value):
    """ {"path": f.lfpf}, {"kind", "n", "spacing", "seed"} or
        {"constant": c, "n", "spacing"} """
    if not isinstance(value, dict):
        raise ParamsError('field must be an object, got {!r}'.format(value))
    if 'path' in value:
        return read_field(value['path'])

    spec = lattice_from(value.get('n'), value.get('spacing', 'auto'))
    if 'constant' in value:
        return FieldSample.constant(spec, float(value['constant']))
    if 'seed' not in value:
        raise ParamsError('field needs a path, a seed or a constant')
    return obtain_field(context, value.get('kind', 'torus'), spec,
                        value['seed'])


def to_params(context, value):
    params = Params(value['xi'], value.get('gamma'))
    context.check_params(params)
    return params


def to_mc(context, value):
    threads = context.threads
    return MCConfig(value['trials'], value['seed'],
                    lattice_from(value.get('n'), value.get('spacing',
                                                           'auto')),
                    localized=value.get('localized', True),
                    parallel=threads > 1, threads=threads)


def to_region(context, value):
    if isinstance(value, str):
        return validate_region(value)
    x0, y0, x1, y1 = value
    return Region.rect((x0, y0), (x1, y1))


def to_pairs(context, value):
    return [(tuple(z), tuple(w)) for z, w in value]


CONVERTERS = {'field': to_field,
              'params': to_params,
              'mc': to_mc,
              'window': to_region,
              'pairs': to_pairs}


def resolve_arguments(context, entry, config):
    """ keyword arguments of the experiment from its JSON config """
    if not isinstance(config, dict):
        raise ParamsError('the experiment config must be a JSON object')

    signature = inspect.signature(entry.function)
    unknown = set(config) - set(signature.parameters)
    if unknown:
        raise ParamsError('{} does not take {}'.format(
            entry.name, ', '.join(sorted(unknown))))

    kwargs = {}
    try:
        for key, value in config.items():
            convert = CONVERTERS.get(key)
            kwargs[key] = convert(context, value) if convert and \
                    value is not None else value

    except (KeyError, TypeError, ValueError) as e:
        raise ParamsError('invalid {} config: {}'.format(entry.name, e))

    if 'cache' in signature.parameters:
        kwargs['cache'] = context.estimates()

    missing = [name for name, p in signature.parameters.items()
               if p.default is inspect.Parameter.empty and name not in kwargs]
    if missing:
        raise ParamsError('{} needs {}'.format(entry.name,
                                               ', '.join(missing)))
    return kwargs


def render_markdown():
    source = resources.files('lfpp.templates')\
            .joinpath('experiments.md').read_text()
    return Template(source).render(
        experiments=list(experiments.registry.values()))


def list_experiments(context, args):
    if args.markdown:
        context.write(args.markdown, render_markdown())
        return None

    out = io.StringIO()
    for entry in experiments.registry.values():
        out.write('{}: {}\n'.format(entry.name, ', '.join(entry.columns)))
    print(out.getvalue(), end='')
    return None


def run(context, args):
    if args.name == 'list':
        return list_experiments(context, args)

    entry = experiments.get_experiment(args.name)
    if not args.out:
        raise ParamsError('--out is required to run an experiment')
    config = read_json(args.config) if args.config else {}
    report = entry.function(**resolve_arguments(context, entry, config))

    context.write(args.out, dumps(report.to_dict(runtime=False)))
    if args.csv:
        context.write(args.csv, report.to_csv())
        if args.emit_gnuplot or context.settings['plot.gnuplot']:
            emit_gnuplot(context, report, args.csv)

    seed = None
    for key in ('mc', 'field'):
        value = report.params.get(key)
        if isinstance(value, dict):
            seed = value.get('master_seed', value.get('seed'))
            break

    return RunConfig(command.EXPERIMENT,
                     dict(report.params, name=report.name),
                     seed, context.threads, args.out)


def emit_gnuplot(context, report, csv_path):
    numeric = [c for c in report.columns[1:] if report.rows and
               isinstance(report.rows[0][c], (int, float)) and
               not isinstance(report.rows[0][c], bool)]
    base, _ = os.path.splitext(csv_path)
    script = base + '.gp'
    context.outputs.add(render, 'series.gnuplot', script,
                        title=report.name, version=version_string(),
                        script_name=os.path.basename(script),
                        png_name=os.path.basename(base) + '.png',
                        csv_name=os.path.basename(csv_path),
                        x=report.columns[0], ys=numeric[:3],
                        logscale=report.columns[0] == 'epsilon')
