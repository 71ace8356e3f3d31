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

import math
import re
from . exc import ValidationError

UINT64_MAX = 2 ** 64 - 1

float_re = r'[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?'
point_re = re.compile(r'^\s*({f})\s*,\s*({f})\s*$'.format(f=float_re))
region_re = re.compile(r'^(disk|annulus|rect):(.+)$')


def validate_positive_int(number):
    try:
        number = int(number)
        assert number > 0

    except (TypeError, ValueError, AssertionError):
        raise ValidationError('{} is not a positive integer'.format(number))

    return number


def validate_power_of_two(number):
    number = validate_positive_int(number)
    if number & (number - 1):
        raise ValidationError('{} is not a power of two'.format(number))
    return number


def validate_positive_float(number):
    try:
        number = float(number)
        assert number > 0 and math.isfinite(number)

    except (TypeError, ValueError, AssertionError):
        raise ValidationError('{} is not a positive real'.format(number))

    return number


def validate_seed(seed):
    try:
        seed = int(seed)
        assert 0 <= seed <= UINT64_MAX

    except (TypeError, ValueError, AssertionError):
        raise ValidationError('{} is not an unsigned 64-bit seed'
                              .format(seed))

    return seed


def validate_xi(xi):
    try:
        return validate_positive_float(xi)

    except ValidationError:
        raise ValidationError('xi must be positive, got {}'.format(xi))


def validate_gamma(gamma):
    if gamma is None:
        return None

    try:
        gamma = float(gamma)
        assert 0 < gamma < 2

    except (TypeError, ValueError, AssertionError):
        raise ValidationError('gamma must lie in (0, 2), got {}'
                              .format(gamma))

    return gamma


def validate_dyadic(a, max_exponent=None):
    """ return the integer k such that a == 2 ** k """
    try:
        a = float(a)
        mantissa, exponent = math.frexp(a)
        assert a > 0 and mantissa == 0.5

    except (TypeError, ValueError, AssertionError):
        raise ValidationError('{} is not a dyadic scale 2^k'.format(a))

    k = exponent - 1
    if max_exponent is not None and abs(k) > max_exponent:
        raise ValidationError('dyadic scale {} exceeds 2^{}'
                              .format(a, max_exponent))
    return k


def validate_point(point):
    if isinstance(point, (tuple, list)) and len(point) == 2:
        try:
            return (float(point[0]), float(point[1]))
        except (TypeError, ValueError):
            pass

    else:
        match = point_re.match(str(point))
        if match:
            return (float(match.group(1)), float(match.group(2)))

    raise ValidationError('Invalid point {}, expected x,y'.format(point))


def validate_region(spec):
    """ parse 'disk:cx,cy,r', 'annulus:cx,cy,r1,r2' or 'rect:x0,y0,x1,y1' """
    from lfpp.metric.region import Region

    match = region_re.match(str(spec).strip())
    if not match:
        raise ValidationError('Invalid region {}'.format(spec))

    kind, args = match.groups()
    try:
        values = [float(v) for v in args.split(',')]
    except ValueError:
        raise ValidationError('Invalid region {}'.format(spec))

    expected = {'disk': 3, 'annulus': 4, 'rect': 4}[kind]
    if len(values) != expected:
        raise ValidationError('{} region needs {} numbers, got {}'
                              .format(kind, expected, len(values)))

    if kind == 'disk':
        return Region.disk(values[:2], values[2])
    elif kind == 'annulus':
        return Region.annulus(values[:2], values[2], values[3])
    return Region.rect(values[:2], values[2:])


def validate_kind(kind):
    kinds = {'torus': 'TorusWholePlane', 'dirichlet': 'DirichletSquare'}
    try:
        return kinds[str(kind).lower()]

    except KeyError:
        raise ValidationError('Invalid field kind {}, use one of {}'
                              .format(kind, ', '.join(sorted(kinds))))
