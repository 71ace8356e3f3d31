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
import math
import numpy as np
from lfpp.exc import InvalidSpec, ValidationError, InvalidArgument
from lfpp.validators import (validate_xi,
                             validate_gamma,
                             validate_power_of_two,
                             validate_positive_float,
                             validate_point)

__all__ = ['Params', 'LatticeSpec', 'XI_CRIT_REF']

XI_CRIT_REF = 0.41
MIN_SIDE = 8

log = logging.getLogger(__name__)


class Params(collections.namedtuple('Params', ['xi', 'gamma'])):
    """ LFPP coupling ``xi`` and the optional LQG parameter ``gamma``
        (only used by the area measure). """

    __slots__ = ()
    xi_crit_ref = XI_CRIT_REF

    def __new__(cls, xi, gamma=None):
        try:
            xi = validate_xi(xi)
            gamma = validate_gamma(gamma)

        except ValidationError as e:
            raise InvalidArgument(str(e))

        params = super(Params, cls).__new__(cls, xi, gamma)
        if params.supercritical:
            log.warning("xi=%s is at or above xi_crit ~ %s: convergence "
                        "claims do not cover this regime", xi, XI_CRIT_REF)
        return params

    @property
    def supercritical(self):
        return self.xi >= XI_CRIT_REF

    def to_dict(self):
        return {'xi': self.xi, 'gamma': self.gamma,
                'supercritical': self.supercritical}


class LatticeSpec(collections.namedtuple('LatticeSpec',
                                         ['n', 'spacing', 'origin'])):
    """ An n x n lattice with mesh ``spacing``; site (i, j) sits at
        ``origin + (i, j) * spacing``. The first array axis is x. """

    __slots__ = ()

    def __new__(cls, n, spacing, origin=(0.0, 0.0)):
        try:
            n = validate_power_of_two(n)
            spacing = validate_positive_float(spacing)
            origin = validate_point(origin)

        except ValidationError as e:
            raise InvalidSpec(str(e))

        return super(LatticeSpec, cls).__new__(cls, n, spacing, origin)

    @classmethod
    def centered(cls, n, spacing, center=(0.5, 0.5)):
        """ a lattice whose central site is ``center`` """
        cx, cy = validate_point(center)
        half = (n // 2) * spacing
        return cls(n, spacing, (cx - half, cy - half))

    @classmethod
    def auto(cls, n):
        """ spacing 4/n: the unit square fills the central quarter """
        return cls.centered(n, 4.0 / n)

    @property
    def side(self):
        return self.n * self.spacing

    def point(self, i, j):
        return (self.origin[0] + i * self.spacing,
                self.origin[1] + j * self.spacing)

    def coordinates(self):
        """ x and y coordinate arrays of every site, shape (n, n) """
        axis = np.arange(self.n, dtype=float) * self.spacing
        return np.meshgrid(self.origin[0] + axis, self.origin[1] + axis,
                           indexing='ij')

    def fractional_index(self, point):
        x, y = point
        return ((x - self.origin[0]) / self.spacing,
                (y - self.origin[1]) / self.spacing)

    def snap(self, point):
        """ nearest site; exact half-way ties go to the smaller index """
        fi, fj = self.fractional_index(point)
        return (int(math.ceil(fi - 0.5)), int(math.ceil(fj - 0.5)))

    def contains_index(self, i, j):
        return 0 <= i < self.n and 0 <= j < self.n

    def central_quarter(self):
        """ (lo, hi) corners of the central quarter of the domain """
        lo = (self.origin[0] + self.side / 4.0,
              self.origin[1] + self.side / 4.0)
        return lo, (lo[0] + self.side / 2.0, lo[1] + self.side / 2.0)

    def require_minimum(self, minimum=MIN_SIDE):
        if self.n < minimum:
            raise InvalidSpec('lattice side {} is below the minimum {}'
                              .format(self.n, minimum))
        return self

    def to_dict(self):
        return {'n': self.n, 'spacing': self.spacing,
                'origin': list(self.origin)}
