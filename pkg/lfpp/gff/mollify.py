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
import numpy as np
from scipy import ndimage
from lfpp.exc import MollificationTooFine, InvalidArgument, OutOfDomain
from . field import _frozen
from . kernels import (EPSILON_MAX,
                       lattice_heat_kernel,
                       lattice_truncated_kernel,
                       z_bound)

__all__ = ['MollifiedField', 'mollify', 'mollify_localized', 'mollifier',
           'dyadic_ladder', 'polynomial_ladder', 'geometric_ladder',
           'epsilon_trace', 'smoothness_ratios']

log = logging.getLogger(__name__)


class MollifiedField(collections.namedtuple('MollifiedField',
                                            ['spec', 'epsilon', 'values',
                                             'localized', 'z_epsilon',
                                             'source_seed'])):
    """ h*_eps (``localized`` False) or the truncated, renormalized
        version (``localized`` True) on the source lattice """
    __slots__ = ()

    def __new__(cls, spec, epsilon, values, localized, z_epsilon,
                source_seed):
        return super(MollifiedField, cls).__new__(
            cls, spec, float(epsilon), _frozen(values), bool(localized),
            float(z_epsilon), int(source_seed))

    def shifted(self, c):
        """ the same mollified field plus a constant """
        return self._replace(values=_frozen(self.values + c))

    def __repr__(self):
        return "<MollifiedField eps={} {}n={} seed={}>".format(
            self.epsilon, 'localized ' if self.localized else '',
            self.spec.n, self.source_seed)


def _check_epsilon(spec, epsilon):
    if not epsilon >= 2.0 * spec.spacing:
        raise MollificationTooFine(epsilon, spec.spacing)


def mollify(field, epsilon):
    """ circular convolution with p_{eps^2/2}, computed in frequency space """
    spec = field.spec
    _check_epsilon(spec, epsilon)
    kernel = lattice_heat_kernel(spec.n, spec.spacing, epsilon)
    values = np.fft.ifft2(np.fft.fft2(field.values) *
                          np.fft.fft2(kernel)).real
    log.debug("Mollified %r at eps=%s", field, epsilon)
    return MollifiedField(spec, epsilon, values, False, 1.0, field.seed)


def mollify_localized(field, epsilon):
    """ Convolution with the kernel truncated at eps * log(1/eps).

        The sum runs in direct space over the truncated stencil only, so the
        value at a site is a function of the field within the truncation
        radius and of nothing else.
    """
    spec = field.spec
    _check_epsilon(spec, epsilon)
    if not epsilon < EPSILON_MAX:
        raise InvalidArgument('localized mollification needs eps < 1/e, '
                              'got {}'.format(epsilon))

    kernel, z = lattice_truncated_kernel(epsilon, spec.spacing)
    if kernel.shape[0] > spec.n:
        raise OutOfDomain('truncated kernel of {} sites exceeds the lattice'
                          .format(kernel.shape[0]))

    if 1.0 - z > z_bound(epsilon):
        log.warning("lattice normalizer 1 - Z = %.3e exceeds the "
                    "continuum bound %.3e at eps=%s", 1.0 - z,
                    z_bound(epsilon), epsilon)

    values = ndimage.correlate(field.values, kernel, mode='wrap')
    log.debug("Localized mollification of %r at eps=%s (Z=%r)", field,
              epsilon, z)
    return MollifiedField(spec, epsilon, values, True, z, field.seed)


def mollifier(localized):
    return mollify_localized if localized else mollify


def dyadic_ladder(k_first, k_last):
    """ eps = 2^-k for k from k_first to k_last, decreasing eps """
    return [2.0 ** -k for k in range(int(k_first), int(k_last) + 1)]


def polynomial_ladder(ns, a):
    """ eps_n = n^-a, the sequence along which almost sure convergence
        is first obtained """
    if not a > 0:
        raise InvalidArgument('exponent a must be positive, got {}'
                              .format(a))
    return [float(n) ** -a for n in ns]


def geometric_ladder(j_first, j_last, per_octave=8):
    """ eps_j = 2^(-j / per_octave) for j from j_first to j_last """
    if not per_octave > 0:
        raise InvalidArgument('per_octave must be positive, got {}'
                              .format(per_octave))
    return [2.0 ** (-float(j) / per_octave)
            for j in range(int(j_first), int(j_last) + 1)]


def epsilon_trace(field, point, eps_ladder, localized=False):
    """ the mollified field at the site nearest ``point``, one value per
        rung of ``eps_ladder``, all on the same sample """
    site = field.spec.snap(point)
    if not field.spec.contains_index(*site):
        raise OutOfDomain('{} is outside the lattice'.format(point))

    smooth = mollifier(localized)
    return np.array([smooth(field, eps).values[site] for eps in eps_ladder])


def smoothness_ratios(trace, eps_ladder):
    """ |h_j - h_(j+1)| / (log(1/eps_(j+1)) (eps_j / eps_(j+1) - 1)) for
        successive rungs of a decreasing ladder below 1; a field that is
        smooth in eps keeps these bounded by a single constant """
    eps = np.asarray(eps_ladder, dtype=float)
    trace = np.asarray(trace, dtype=float)
    if eps.size != trace.size or eps.size < 2:
        raise InvalidArgument('need one value per rung and at least two '
                              'rungs')
    if not (np.all(np.diff(eps) < 0) and eps[0] < 1.0 and eps[-1] > 0):
        raise InvalidArgument('ladder must decrease within (0, 1)')

    scale = np.log(1.0 / eps[1:]) * (eps[:-1] / eps[1:] - 1.0)
    return np.abs(np.diff(trace)) / scale
