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
import logging
import sys
from lfpp.exc import ValidationError
from lfpp.version import version_string
from . manifest import RunContext
from . settings import load_settings, setup_logging

__all__ = ['start', 'main', 'parse_and_dispatch', 'COMMANDS']

# subcommand name -> module of lfpp.cli.commands
COMMANDS = (('field', 'field'),
            ('dist', 'dist'),
            ('a-eps', 'a_eps'),
            ('fit', 'fit'),
            ('ratio', 'ratio'),
            ('exp', 'exp'),
            ('cache', 'cache'))

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_RUNTIME = 2


class ArgumentParser(argparse.ArgumentParser):
    """ usage errors exit with status 1 """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_VALIDATION, '{}: error: {}\n'.format(self.prog,
                                                           message))


def _command_module(name):
    module_name = 'lfpp.cli.commands.{}'.format(name)
    return __import__(module_name, fromlist=['register', 'run'])


def build_parser():
    parser = ArgumentParser(prog='lfpp',
                            description='Liouville first passage '
                                        'percolation on the lattice')
    parser.add_argument('--version', action='version',
                        version=version_string())
    parser.add_argument('--config-file', metavar='INI',
                        help='ini file with an [app:lfpp] section')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    parser.add_argument('--threads', type=int, default=None,
                        help='worker processes for trial loops')
    parser.add_argument('--cache-dir', default=None)
    parser.add_argument('--no-cache', action='store_true')

    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND',
                                       parser_class=ArgumentParser)
    subparsers.required = True
    for name, module in COMMANDS:
        _command_module(module).register(subparsers, name)
    return parser


def parse_and_dispatch(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)

    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_VALIDATION

    setup_logging(args.config_file, args.verbose)
    log = logging.getLogger("{}:main".format(__name__))

    context = None
    try:
        if args.threads is not None and args.threads < 1:
            raise ValidationError('--threads must be positive')
        settings = load_settings(args.config_file,
                                 cache_dir=args.cache_dir,
                                 no_cache=args.no_cache,
                                 threads=args.threads)
        context = RunContext(settings)
        run = args.run(context, args)

    except ValidationError as e:
        log.debug("Validation error", exc_info=True)
        sys.stderr.write('lfpp: error: {}\n'.format(e))
        exit_status = EXIT_VALIDATION

    except KeyboardInterrupt:
        log.info("Interrupted")
        exit_status = EXIT_RUNTIME

    except Exception as e:
        log.exception('Error while running %s', args.command)
        sys.stderr.write('lfpp: runtime error: {}\n'.format(e))
        exit_status = EXIT_RUNTIME

    else:
        exit_status = EXIT_OK

    finally:
        if context is not None:
            try:
                if exit_status == EXIT_OK:
                    context.finish(run)
                else:
                    context.abort()

            except Exception as e:
                log.exception('Cannot write outputs')
                sys.stderr.write('lfpp: cannot write outputs: {}\n'
                                 .format(e))
                exit_status = EXIT_RUNTIME

    return exit_status


main = parse_and_dispatch


def start():
    sys.exit(parse_and_dispatch(sys.argv[1:]))
