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
from lfpp.exc import InvalidArgument, MollificationTooFine, ValidationError
from lfpp.validators import validate_dyadic
from . estimate import EstimateCache

__all__ = ['RatioSeries', 'scaling_ratio']

log = logging.getLogger(__name__)


class RatioSeries(collections.namedtuple('RatioSeries',
                                         ['r', 'rows', 'q_hat_used',
                                          'common_random_numbers'])):
    """ rows of (epsilon, rho) with
        rho = r^(1 - xi q_hat) a_(eps/r) / a_eps """
    __slots__ = ()

    @property
    def rhos(self):
        return [rho for eps, rho in self.rows]

    def to_dict(self):
        return {'r': self.r, 'q_hat_used': self.q_hat_used,
                'common_random_numbers': self.common_random_numbers,
                'rows': [{'epsilon': eps, 'rho': rho}
                         for eps, rho in self.rows]}


def scaling_ratio(eps_ladder, r, params, mc, q_hat, cache=None):
    """ Regular variation diagnostic of the median crossing distance.

        Both medians of a row come from the same trial seeds, so field
        noise common to eps and eps/r cancels in the ratio. Estimates are
        taken from ``cache`` and computed there on a miss.
    """
    try:
        validate_dyadic(r)

    except ValidationError as e:
        raise InvalidArgument(str(e))

    cache = cache if cache is not None else EstimateCache()
    spacing = mc.lattice.spacing
    for eps in eps_ladder:
        for e in (eps, eps / r):
            if not e >= 2.0 * spacing:
                raise MollificationTooFine(e, spacing)

    prefactor = r ** (1.0 - params.xi * q_hat)
    rows = []
    for eps in eps_ladder:
        a_eps = cache.get(eps, params, mc).median
        a_eps_r = cache.get(eps / r, params, mc).median
        rho = prefactor * a_eps_r / a_eps
        log.info("rho(%s, %s) = %.6g", eps, r, rho)
        rows.append((float(eps), rho))

    return RatioSeries(float(r), rows, float(q_hat), True)
