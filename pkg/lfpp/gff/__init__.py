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

from . params import Params, LatticeSpec, XI_CRIT_REF
from . kernels import heat_kernel, bump, normalizer_Z, truncation_radius
from . field import (FieldSample,
                     fieldkind,
                     sample_torus_gff,
                     sample_dirichlet_gff,
                     circle_average,
                     add_function,
                     rescale_field,
                     translate_field)
from . mollify import (MollifiedField,
                       mollify,
                       mollify_localized,
                       dyadic_ladder,
                       polynomial_ladder,
                       geometric_ladder,
                       epsilon_trace,
                       smoothness_ratios)

__all__ = ['Params', 'LatticeSpec', 'XI_CRIT_REF', 'heat_kernel', 'bump',
           'normalizer_Z', 'truncation_radius', 'FieldSample', 'fieldkind',
           'sample_torus_gff', 'sample_dirichlet_gff', 'circle_average',
           'add_function', 'rescale_field', 'translate_field',
           'MollifiedField', 'mollify', 'mollify_localized', 'dyadic_ladder',
           'polynomial_ladder', 'geometric_ladder', 'epsilon_trace',
           'smoothness_ratios']
