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

from . config import MCConfig, MIN_TRIALS
from . estimate import (MedianEstimate,
                        EstimateCache,
                        estimate_a_eps,
                        crossing_samples,
                        map_trials)
from . fit import (ExponentFit,
                   LogCorrectionReport,
                   LatticeStability,
                   fit_exponent,
                   lattice_stability,
                   log_correction_check)
from . ratio import RatioSeries, scaling_ratio

__all__ = ['MCConfig', 'MIN_TRIALS', 'MedianEstimate', 'EstimateCache',
           'estimate_a_eps', 'crossing_samples', 'map_trials', 'ExponentFit',
           'LogCorrectionReport', 'LatticeStability', 'fit_exponent',
           'lattice_stability', 'log_correction_check', 'RatioSeries',
           'scaling_ratio']
