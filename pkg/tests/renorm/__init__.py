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
from lfpp.renorm import MedianEstimate


def synthetic(eps_ladder, exponent, constant=1.0, log_power=0.0, xi=0.2,
              n=256):
    """ exact medians constant * eps^exponent * log(1/eps)^log_power """
    estimates = []
    for eps in eps_ladder:
        median = constant * eps ** exponent * \
                math.log(1.0 / eps) ** log_power
        estimates.append(MedianEstimate(eps, median, 100, 0.9 * median,
                                        1.1 * median, 1, xi, n, True))
    return estimates
