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
import math
import numpy as np
from scipy import integrate
from lfpp.exc import InvalidArgument

__all__ = ['heat_kernel', 'bump', 'truncation_radius', 'normalizer_Z',
           'z_bound', 'lattice_heat_kernel', 'lattice_truncated_kernel']

log = logging.getLogger(__name__)
EPSILON_MAX = math.exp(-1.0)


def heat_kernel(t, x):
    """ p_t at radial distance x: exp(-x^2 / 2t) / (2 pi t) """
    if not t > 0:
        raise InvalidArgument('heat kernel time must be positive, got {}'
                              .format(t))
    x = np.asarray(x, dtype=float)
    value = np.exp(-x * x / (2.0 * t)) / (2.0 * math.pi * t)
    return float(value) if value.ndim == 0 else value


def _check_epsilon(epsilon):
    if not 0 < epsilon < EPSILON_MAX:
        raise InvalidArgument('epsilon must lie in (0, 1/e), got {}'
                              .format(epsilon))


def truncation_radius(epsilon):
    """ epsilon * log(1/epsilon): the support radius of the bump """
    _check_epsilon(epsilon)
    return epsilon * math.log(1.0 / epsilon)


def _smooth_step(s):
    with np.errstate(divide='ignore', over='ignore'):
        return np.where(s > 0, np.exp(-1.0 / np.where(s > 0, s, 1.0)), 0.0)


def bump(epsilon, x):
    """ Radial bump psi_epsilon: 1 up to rho/2, 0 from rho on, smooth
        in between, with rho = epsilon * log(1/epsilon). """
    rho = truncation_radius(epsilon)
    t = np.asarray(x, dtype=float) / rho
    rising = _smooth_step(2.0 - 2.0 * t)
    falling = _smooth_step(2.0 * t - 1.0)
    with np.errstate(invalid='ignore', divide='ignore'):
        middle = rising / (rising + falling)
    value = np.where(t <= 0.5, 1.0, np.where(t >= 1.0, 0.0, middle))
    return float(value) if value.ndim == 0 else value


def z_bound(epsilon):
    """ the bound exp(-(log 1/epsilon)^2 / 4) on 1 - Z_epsilon """
    return math.exp(-math.log(1.0 / epsilon) ** 2 / 4.0)


def normalizer_Z(epsilon, spacing):
    """ Z_epsilon, the mass of the truncated kernel psi_eps * p_{eps^2/2}.

        The plateau r < rho/2 contributes 1 - exp(-(rho/2)^2 / eps^2) in
        closed form; the transition shell is integrated radially with a
        Simpson rule whose step is at most spacing / 4.
    """
    rho = truncation_radius(epsilon)
    t = epsilon ** 2 / 2.0
    plateau = -math.expm1(-(rho / 2.0) ** 2 / epsilon ** 2)

    steps = max(2000, int(math.ceil((rho / 2.0) / (spacing / 4.0))))
    steps += steps % 2
    r = np.linspace(rho / 2.0, rho, steps + 1)
    shell = integrate.simpson(bump(epsilon, r) * heat_kernel(t, r)
                              * 2.0 * math.pi * r, x=r)
    value = min(1.0, plateau + float(shell))
    log.debug("Z(%s) = %r (1 - Z = %.3e)", epsilon, value, 1.0 - value)
    return value


def _torus_distances(n, spacing):
    offsets = np.minimum(np.arange(n), n - np.arange(n)) * spacing
    return np.hypot(offsets[:, None], offsets[None, :])


def lattice_heat_kernel(n, spacing, epsilon):
    """ p_{eps^2/2} sampled on the torus offsets, unit lattice sum;
        entry [0, 0] is the zero offset """
    weights = heat_kernel(epsilon ** 2 / 2.0, _torus_distances(n, spacing))
    return weights / weights.sum()


def lattice_truncated_kernel(epsilon, spacing):
    """ Truncated kernel psi_eps * p_{eps^2/2} on the stencil of offsets
        within rho, centered, plus the lattice normalizer.

        Returns (kernel, z) where kernel has unit sum and z is the ratio of
        the truncated lattice sum to the full kernel lattice sum.
    """
    rho = truncation_radius(epsilon)
    t = epsilon ** 2 / 2.0
    half = int(math.ceil(rho / spacing))
    offsets = np.arange(-half, half + 1) * spacing
    r = np.hypot(offsets[:, None], offsets[None, :])
    truncated = bump(epsilon, r) * heat_kernel(t, r)

    # full lattice sum of the untruncated kernel, out to where it underflows
    reach = int(math.ceil(10.0 * epsilon / spacing)) + half
    far = np.arange(-reach, reach + 1) * spacing
    full = heat_kernel(t, np.hypot(far[:, None], far[None, :])).sum()

    z = float(truncated.sum() / full)
    return truncated / truncated.sum(), min(1.0, z)
