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

from . report import (ExperimentReport,
                      verdict,
                      experiment,
                      registry,
                      get_experiment)
from . identities import (weyl_shift_test,
                          scale_covariance_test,
                          translation_invariance_test)
from . fields import (localized_gap,
                      gmc_mass,
                      field_continuity_check,
                      field_sup_bound_check)
from . convergence import (convergence_diagnostic,
                           small_segment_sup,
                           ball_comparison)
from . annuli import annulus_event_stats

__all__ = ['ExperimentReport', 'verdict', 'experiment', 'registry',
           'get_experiment', 'weyl_shift_test', 'scale_covariance_test',
           'translation_invariance_test', 'localized_gap', 'gmc_mass',
           'field_continuity_check', 'field_sup_bound_check',
           'convergence_diagnostic', 'small_segment_sup', 'ball_comparison',
           'annulus_event_stats']
