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
from lfpp.exc import ParamsError
from .. manifest import dumps

log = logging.getLogger(__name__)


def register(subparsers, name):
    parser = subparsers.add_parser(name, help='inspect the artifact cache')
    actions = parser.add_subparsers(dest='action', metavar='ACTION',
                                    parser_class=type(parser))
    actions.required = True
    info = actions.add_parser('info', help='list the cache index')
    info.set_defaults(run=run)


def run(context, args):
    index = context.index
    if index is None:
        raise ParamsError('the cache is disabled')
    print(dumps({'root': index.root, 'entries': index.entries}), end='')
    return None
