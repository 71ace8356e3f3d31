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

import configparser
import logging
import logging.config
import os
from lfpp.exc import ParamsError, ValidationError
from lfpp.utils.stats import (BOOTSTRAP_CONFIDENCE,
                              BOOTSTRAP_RESAMPLES,
                              TREND_ALPHA,
                              TWO_SAMPLE_ALPHA)
from lfpp.validators import validate_positive_int

__all__ = ['load_settings', 'setup_logging', 'SECTION', 'DEFAULTS']

SECTION = 'app:lfpp'
DEFAULTS = {'cache.root': os.path.join('~', '.cache', 'lfpp'),
            'cache.enabled': 'true',
            'threads': '1',
            'bootstrap.resamples': str(BOOTSTRAP_RESAMPLES),
            'bootstrap.confidence': str(BOOTSTRAP_CONFIDENCE),
            'trend.alpha': str(TREND_ALPHA),
            'twosample.alpha': str(TWO_SAMPLE_ALPHA),
            'plot.gnuplot': 'false'}

log = logging.getLogger(__name__)


def _read(config_file):
    parser = configparser.ConfigParser(interpolation=None)
    parser.read_dict({SECTION: DEFAULTS})
    if config_file:
        try:
            with open(config_file) as f:
                parser.read_file(f)

        except (OSError, configparser.Error) as e:
            raise ParamsError('cannot read config file {}: {}'
                              .format(config_file, e))
    return parser


def setup_logging(config_file, verbosity):
    """ logging sections of the ini file, or a stderr fallback """
    if config_file:
        parser = configparser.ConfigParser()
        parser.read(config_file)
        if parser.has_section('loggers'):
            logging.config.fileConfig(config_file,
                                      disable_existing_loggers=False)
            return

    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity,
                                                      logging.DEBUG)
    logging.basicConfig(level=level,
                        format='%(asctime)s %(levelname)-5.5s '
                               '[%(name)s] %(message)s')


def load_settings(config_file=None, environ=None, cache_dir=None,
                  no_cache=False, threads=None):
    """ Resolve settings: flags, then environment, then ini, then
        defaults. """
    environ = os.environ if environ is None else environ
    section = _read(config_file)[SECTION]

    try:
        settings = {
            'cache.root': section.get('cache.root'),
            'cache.enabled': section.getboolean('cache.enabled'),
            'threads': validate_positive_int(section.get('threads')),
            'bootstrap.resamples':
                validate_positive_int(section.get('bootstrap.resamples')),
            'bootstrap.confidence': section.getfloat('bootstrap.confidence'),
            'trend.alpha': section.getfloat('trend.alpha'),
            'twosample.alpha': section.getfloat('twosample.alpha'),
            'plot.gnuplot': section.getboolean('plot.gnuplot')}

    except (ValueError, ValidationError) as e:
        raise ParamsError('invalid setting in [{}]: {}'.format(SECTION, e))

    for key, fixed in (('trend.alpha', TREND_ALPHA),
                       ('twosample.alpha', TWO_SAMPLE_ALPHA)):
        if settings[key] != fixed:
            raise ParamsError('{} is fixed at {}, got {}'
                              .format(key, fixed, settings[key]))
    if not 0 < settings['bootstrap.confidence'] < 1:
        raise ParamsError('bootstrap.confidence must lie in (0, 1)')

    if 'LFPP_CACHE' in environ:
        settings['cache.root'] = environ['LFPP_CACHE']
    if 'LFPP_THREADS' in environ:
        try:
            settings['threads'] = validate_positive_int(
                environ['LFPP_THREADS'])
        except ValidationError as e:
            raise ParamsError('LFPP_THREADS: {}'.format(e))

    if cache_dir:
        settings['cache.root'] = cache_dir
    if no_cache:
        settings['cache.enabled'] = False
    if threads is not None:
        settings['threads'] = threads

    settings['cache.root'] = os.path.expanduser(settings['cache.root'])
    return settings
