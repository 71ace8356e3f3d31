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

import functools
import logging
import time

__all__ = ['classproperty', 'timed']


class classproperty(property):
    """ a property decorator for classmethods """
    def __get__(self, obj, type_):
        return self.fget.__get__(None, type_)()


def timed(function):
    """ Run an experiment and stamp the wall-clock time on its report.

        The wrapped function must return an object with a ``_replace``
        method and a ``runtime_secs`` field (namedtuple reports).
    """
    log = logging.getLogger("{}.{}".format(function.__module__,
                                           function.__name__))

    @functools.wraps(function)
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        log.info("Starting %s", function.__name__)
        report = function(*args, **kwargs)
        elapsed = time.perf_counter() - start
        log.info("%s finished in %.2fs: %s", function.__name__, elapsed,
                 report.verdict)
        return report._replace(runtime_secs=elapsed)

    return wrapper
