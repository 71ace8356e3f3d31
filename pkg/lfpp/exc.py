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


class LfppError(Exception):
    pass


class ValidationError(LfppError):
    pass


class InvalidSpec(ValidationError):
    pass


class InvalidArgument(ValidationError):
    pass


class InsufficientTrials(ValidationError):

    def __init__(self, trials, minimum, msg=None):
        self.trials = trials
        self.minimum = minimum
        msg = msg or 'at least {} trials are required, got {}'\
                .format(minimum, trials)
        super(InsufficientTrials, self).__init__(msg)


class MollificationTooFine(ValidationError):

    def __init__(self, epsilon, spacing):
        self.epsilon = epsilon
        self.spacing = spacing
        super(MollificationTooFine, self).__init__(
            'epsilon {!r} is below two lattice cells (spacing {!r})'
            .format(epsilon, spacing))


class DegenerateAnnulus(ValidationError):
    pass


class DegenerateFit(ValidationError):
    pass


class UnstableLadder(DegenerateFit):

    def __init__(self, stability, msg=None):
        self.stability = stability
        unstable = [row['epsilon'] for row in stability.rows
                    if not row['overlap']]
        if not msg and not stability.rows:
            msg = 'the lattices share no epsilon'
        super(UnstableLadder, self).__init__(
            msg or 'confidence intervals disagree across lattices at '
                   'epsilon {}'.format(unstable))


class ParamsError(ValidationError):
    pass


class OperationalError(LfppError):
    pass


class OutOfDomain(OperationalError):
    pass


class OutOfRegion(OperationalError):

    def __init__(self, point, msg=None):
        self.point = point
        super(OutOfRegion, self).__init__(
            msg or '{} is outside the region'.format(point))


class EmptyRegion(OperationalError):
    pass


class CacheError(LfppError):
    pass


class CorruptedArtifact(CacheError):

    def __init__(self, path, msg):
        self.path = path
        super(CorruptedArtifact, self).__init__(
            '{}: {}'.format(path, msg))


class TransactionError(CacheError):
    pass
