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

import collections
import logging
from lfpp.exc import InvalidArgument, InsufficientTrials, ValidationError
from lfpp.gff.params import LatticeSpec
from lfpp.validators import validate_positive_int, validate_seed

__all__ = ['MCConfig', 'MIN_TRIALS']

MIN_TRIALS = 20

log = logging.getLogger(__name__)


class MCConfig(collections.namedtuple('MCConfig',
                                      ['trials', 'master_seed', 'lattice',
                                       'localized', 'parallel', 'threads'])):
    """ Monte Carlo settings shared by every trial loop.

        ``threads`` is a hint for the worker pool only; results never depend
        on it, nor on ``parallel``.
    """
    __slots__ = ()

    def __new__(cls, trials, master_seed, lattice, localized=True,
                parallel=False, threads=None):
        try:
            trials = validate_positive_int(trials)
            master_seed = validate_seed(master_seed)
            if threads is not None:
                threads = validate_positive_int(threads)

        except ValidationError as e:
            raise InvalidArgument(str(e))

        if not isinstance(lattice, LatticeSpec):
            raise InvalidArgument('{!r} is not a LatticeSpec'.format(lattice))

        return super(MCConfig, cls).__new__(cls, trials, master_seed,
                                            lattice, bool(localized),
                                            bool(parallel), threads)

    def require_trials(self, minimum=MIN_TRIALS):
        if self.trials < minimum:
            raise InsufficientTrials(self.trials, minimum)
        return self

    def key(self):
        """ the fields results depend on; ``parallel`` and ``threads`` are
            left out """
        return {'trials': self.trials, 'master_seed': self.master_seed,
                'lattice': self.lattice.to_dict(),
                'localized': self.localized}

    def to_dict(self):
        data = self.key()
        data.update(parallel=self.parallel, threads=self.threads)
        return data
