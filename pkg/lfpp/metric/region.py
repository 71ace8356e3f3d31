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
import math
import numpy as np
from lfpp.exc import DegenerateAnnulus, EmptyRegion, InvalidArgument
from lfpp.validators import validate_point

__all__ = ['Region', 'boundary_ring', 'window_mask']

RegionVariant = collections.namedtuple('RegionVariant',
                                       ['DISK', 'ANNULUS', 'RECT', 'MASK'])
regionvariant = RegionVariant(DISK='Disk', ANNULUS='Annulus', RECT='Rect',
                              MASK='Mask')

# closed rectangles include sites lying on their sides up to rounding
SNAP_TOLERANCE = 1e-9


class Region(collections.namedtuple('Region', ['variant', 'geometry'])):
    """ A plane region resolved to lattice sites on demand.

        Disks and annuli are open (B_r(z) and B_r2(z) minus the closed
        B_r1(z)); rectangles are closed.
    """
    __slots__ = ()

    @classmethod
    def disk(cls, center, radius):
        if not radius > 0:
            raise InvalidArgument('disk radius must be positive')
        return cls(regionvariant.DISK,
                   (validate_point(center), float(radius)))

    @classmethod
    def annulus(cls, center, r1, r2):
        if not 0 < r1 < r2:
            raise DegenerateAnnulus('annulus needs 0 < r1 < r2, got {}, {}'
                                    .format(r1, r2))
        return cls(regionvariant.ANNULUS,
                   (validate_point(center), float(r1), float(r2)))

    @classmethod
    def rect(cls, corner_lo, corner_hi):
        lo, hi = validate_point(corner_lo), validate_point(corner_hi)
        if not (lo[0] <= hi[0] and lo[1] <= hi[1]):
            raise InvalidArgument('rectangle corners {} {} are not ordered'
                                  .format(lo, hi))
        return cls(regionvariant.RECT, (lo, hi))

    @classmethod
    def mask(cls, bits):
        bits = np.array(bits, dtype=bool)
        bits.flags.writeable = False
        return cls(regionvariant.MASK, bits)

    @classmethod
    def unit_square(cls):
        return cls.rect((0.0, 0.0), (1.0, 1.0))

    @property
    def center(self):
        return self.geometry[0]

    def _distance(self, spec):
        x, y = spec.coordinates()
        cx, cy = self.center
        return np.hypot(x - cx, y - cy)

    def resolve(self, spec, require=True):
        """ boolean n x n array of the sites inside the region """
        if self.variant == regionvariant.DISK:
            bits = self._distance(spec) < self.geometry[1]

        elif self.variant == regionvariant.ANNULUS:
            d = self._distance(spec)
            bits = (d > self.geometry[1]) & (d < self.geometry[2])

        elif self.variant == regionvariant.RECT:
            x, y = spec.coordinates()
            (x0, y0), (x1, y1) = self.geometry
            tol = SNAP_TOLERANCE * spec.spacing
            bits = (x >= x0 - tol) & (x <= x1 + tol) & \
                    (y >= y0 - tol) & (y <= y1 + tol)

        else:
            bits = np.asarray(self.geometry, dtype=bool)
            if bits.shape != (spec.n, spec.n):
                raise InvalidArgument('mask of shape {} does not match the '
                                      'lattice'.format(bits.shape))

        if require and not bits.any():
            raise EmptyRegion('{} contains no lattice site'.format(self))
        return bits

    def __repr__(self):
        if self.variant == regionvariant.MASK:
            return "<Region Mask sites={}>".format(int(self.geometry.sum()))
        return "<Region {} {}>".format(self.variant, self.geometry)


def boundary_ring(spec, center, radius):
    """ sites within half a diagonal of the circle |z - center| = radius;
        an 8-connected discrete circle """
    x, y = spec.coordinates()
    d = np.hypot(x - center[0], y - center[1])
    return Region.mask(np.abs(d - radius) <= spec.spacing * math.sqrt(2) / 2)


def window_mask(spec, rect):
    """ sites of the half-open window [x0, x1) x [y0, y1), one per cell """
    x, y = spec.coordinates()
    (x0, y0), (x1, y1) = rect.geometry
    tol = SNAP_TOLERANCE * spec.spacing
    bits = (x >= x0 - tol) & (x < x1 - tol) & (y >= y0 - tol) & (y < y1 - tol)
    if not bits.any():
        raise EmptyRegion('window {} contains no lattice site'.format(rect))
    return bits
