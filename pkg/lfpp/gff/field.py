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
from scipy import fft as spfft
from scipy import ndimage
from lfpp.exc import InvalidArgument, InvalidSpec, OutOfDomain, ValidationError
from lfpp.utils.seeds import generator
from lfpp.validators import validate_dyadic, validate_seed
from . params import LatticeSpec

FieldKind = collections.namedtuple('FieldKind', ['TORUS', 'DIRICHLET'])
fieldkind = FieldKind(TORUS='TorusWholePlane', DIRICHLET='DirichletSquare')

# spectral density 2 pi / |k|^2: covariance ~ log(1 / |x - y|)
SPECTRAL_SCALE = 2.0 * math.pi
MIN_CIRCLE_POINTS = 64

__all__ = ['FieldSample', 'fieldkind', 'sample_torus_gff',
           'sample_dirichlet_gff', 'torus_covariance', 'dirichlet_covariance',
           'circle_average', 'add_function', 'rescale_field',
           'translate_field']

log = logging.getLogger(__name__)


def _frozen(values):
    values = np.array(values, dtype=float, order="C")
    values.flags.writeable = False
    return values


class FieldSample(collections.namedtuple('FieldSample',
                                         ['spec', 'values', 'kind', 'seed',
                                          'mean_removed', 'derived'])):
    """ A lattice realization of a GFF approximation.

        ``derived`` marks samples produced from another sample (function
        added, rescaled, translated): their values are no longer the plain
        output of ``seed``.
    """
    __slots__ = ()

    def __new__(cls, spec, values, kind, seed, mean_removed=False,
                derived=False):
        values = _frozen(values)
        if values.shape != (spec.n, spec.n):
            raise InvalidSpec('field of shape {} does not match n={}'
                              .format(values.shape, spec.n))
        if not np.all(np.isfinite(values)):
            raise InvalidArgument('field values must be finite')
        if kind not in fieldkind:
            raise InvalidArgument('unknown field kind {}'.format(kind))
        return super(FieldSample, cls).__new__(cls, spec, values, kind,
                                               validate_seed(seed),
                                               bool(mean_removed),
                                               bool(derived))

    @classmethod
    def constant(cls, spec, c, kind=fieldkind.TORUS):
        return cls(spec, np.full((spec.n, spec.n), float(c)), kind, 0,
                   mean_removed=(c == 0), derived=True)

    def with_values(self, values, **kwargs):
        fields = dict(mean_removed=False, derived=True)
        fields.update(kwargs)
        return self.__class__(kwargs.get('spec', self.spec), values,
                              self.kind, self.seed,
                              fields['mean_removed'], fields['derived'])

    def __repr__(self):
        return "<FieldSample {} n={} seed={}{}>".format(
            self.kind, self.spec.n, self.seed,
            ' derived' if self.derived else '')


def _torus_wavenumbers(spec):
    k = 2.0 * math.pi * np.fft.fftfreq(spec.n, d=spec.spacing)
    return np.hypot(k[:, None], k[None, :])


def sample_torus_gff(spec, seed):
    """ Zero-mean GFF on the torus by spectral synthesis.

        Real white noise is transformed, so every nonzero mode carries an
        independent complex Gaussian with Hermitian symmetry; mode k is
        scaled by sqrt(2 pi) / (|k| spacing) and the zero mode is dropped.
    """
    spec.require_minimum()
    rng = generator(validate_seed(seed))
    noise = rng.standard_normal((spec.n, spec.n))

    wavenumbers = _torus_wavenumbers(spec)
    amplitude = np.zeros_like(wavenumbers)
    nonzero = wavenumbers > 0
    amplitude[nonzero] = math.sqrt(SPECTRAL_SCALE) / \
            (wavenumbers[nonzero] * spec.spacing)

    values = np.fft.ifft2(np.fft.fft2(noise) * amplitude).real
    values -= values.mean()
    log.debug("Sampled torus GFF n=%d seed=%d", spec.n, seed)
    return FieldSample(spec, values, fieldkind.TORUS, seed,
                       mean_removed=True)


def torus_covariance(spec, offset):
    """ Cov(h(x), h(x + offset)) of the torus sampler, offset in sites,
        by direct summation over every nonzero mode """
    k = 2.0 * math.pi * np.fft.fftfreq(spec.n, d=spec.spacing)
    wavenumbers = _torus_wavenumbers(spec)
    nonzero = wavenumbers > 0
    phase = np.cos(k[:, None] * offset[0] * spec.spacing
                   + k[None, :] * offset[1] * spec.spacing)
    density = SPECTRAL_SCALE / np.where(nonzero, wavenumbers, 1.0) ** 2
    return float((density * phase)[nonzero].sum() / spec.side ** 2)


def _dirichlet_modes(spec):
    size = spec.n - 1
    modes = np.arange(1, spec.n - 1)
    half_eig = (2.0 / spec.spacing) ** 2 * \
            np.sin(modes * math.pi / (2.0 * size)) ** 2
    eigenvalues = half_eig[:, None] + half_eig[None, :]
    return modes, size, eigenvalues


def sample_dirichlet_gff(spec, seed):
    """ Zero-boundary GFF on the square by sine-series synthesis: mode
        (p, q) gets variance 2 pi / lambda_pq of the lattice Dirichlet
        Laplacian. """
    spec.require_minimum()
    rng = generator(validate_seed(seed))
    modes, size, eigenvalues = _dirichlet_modes(spec)
    noise = rng.standard_normal(eigenvalues.shape)
    norm = 2.0 / (size * spec.spacing)
    coefficients = noise * np.sqrt(SPECTRAL_SCALE / eigenvalues) * norm

    values = np.zeros((spec.n, spec.n))
    # DST-I carries a factor 2 per axis
    values[1:-1, 1:-1] = spfft.dstn(coefficients, type=1) / 4.0
    log.debug("Sampled Dirichlet GFF n=%d seed=%d", spec.n, seed)
    return FieldSample(spec, values, fieldkind.DIRICHLET, seed)


def dirichlet_covariance(spec, site_a, site_b):
    """ eigen-series Green's function between two lattice sites """
    modes, size, eigenvalues = _dirichlet_modes(spec)
    norm = (2.0 / (size * spec.spacing)) ** 2

    def basis(site):
        return np.outer(np.sin(modes * math.pi * site[0] / size),
                        np.sin(modes * math.pi * site[1] / size))

    series = SPECTRAL_SCALE / eigenvalues * basis(site_a) * basis(site_b)
    return float(norm * series.sum())


def circle_average(field, z, r):
    """ mean of bilinear interpolations at max(64, ceil(2 pi r / spacing))
        equally spaced points of the circle of radius r about z """
    spec = field.spec
    if not r >= spec.spacing:
        raise InvalidArgument('radius {} is below the lattice spacing {}'
                              .format(r, spec.spacing))

    fi, fj = spec.fractional_index(z)
    reach = r / spec.spacing
    if fi - reach < 0 or fj - reach < 0 or \
       fi + reach > spec.n - 1 or fj + reach > spec.n - 1:
        raise OutOfDomain('circle of radius {} about {} exits the lattice'
                          .format(r, z))

    m = max(MIN_CIRCLE_POINTS, int(math.ceil(2 * math.pi * r / spec.spacing)))
    theta = 2.0 * math.pi * np.arange(m) / m
    coords = np.vstack((fi + reach * np.cos(theta),
                        fj + reach * np.sin(theta)))
    samples = ndimage.map_coordinates(field.values, coords, order=1,
                                      mode='nearest')
    return float(samples.mean())


def add_function(field, f):
    """ pointwise h + f; ``f`` is a number or a callable f(x, y) that
        accepts coordinate arrays """
    if callable(f):
        x, y = field.spec.coordinates()
        added = np.broadcast_to(np.asarray(f(x, y), dtype=float),
                                field.values.shape)
    else:
        added = np.full(field.values.shape, float(f))

    if not np.all(np.isfinite(added)):
        raise InvalidArgument('added function is not finite on the lattice')

    return field.with_values(field.values + added,
                             mean_removed=field.mean_removed
                             and not np.any(added))


def rescale_field(field, a, b, q_hat, n_out=None):
    """ Lattice version of h(a . + b) + q_hat log a for dyadic ``a``.

        The output keeps the mesh; its window is centered on the preimage
        of the input center. Scales a >= 1 subsample every a-th site, finer
        scales interpolate bilinearly.
    """
    spec = field.spec
    try:
        k = validate_dyadic(a, max_exponent=int(math.log2(spec.n)) - 3)
    except ValidationError as e:
        raise InvalidArgument(str(e))

    a = 2.0 ** k
    bx, by = b
    if (bx / spec.spacing) % 1 or (by / spec.spacing) % 1:
        raise InvalidArgument('translation {} is not a lattice vector'
                              .format(b))

    if n_out is None:
        n_out = spec.n // 2 ** k if k > 0 else spec.n
    if a * (n_out - 1) > spec.n - 1:
        raise OutOfDomain('a window of {} sites at scale {} does not fit '
                          'in {} sites'.format(n_out, a, spec.n))

    if k >= 0:
        step = 2 ** k
        first = (spec.n - step * n_out) // 2
        start = float(first)
        values = field.values[first:first + step * n_out:step,
                              first:first + step * n_out:step]
    else:
        start = (spec.n - a * n_out) / 2.0
        axis = start + a * np.arange(n_out)
        ii, jj = np.meshgrid(axis, axis, indexing='ij')
        values = ndimage.map_coordinates(field.values, [ii, jj], order=1,
                                         mode='nearest')

    origin = ((spec.origin[0] + start * spec.spacing - bx) / a,
              (spec.origin[1] + start * spec.spacing - by) / a)
    out_spec = LatticeSpec(n_out, spec.spacing, origin)
    return field.with_values(values + q_hat * math.log(a), spec=out_spec)


def translate_field(field, shift):
    """ H(z) = h(z + b) with b = shift * spacing, shift in whole sites """
    di, dj = (int(s) for s in shift)
    values = np.roll(field.values, (-di, -dj), axis=(0, 1))
    return field.with_values(values, mean_removed=field.mean_removed)
