#  MIT License
#
#  Copyright (c) 2024 Ian Buttimer
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software and associated documentation files (the "Software"), to
#  deal in the Software without restriction, including without limitation the
#  rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
#  sell copies of the Software, and to permit persons to whom the Software is
#  furnished to do so, subject to the following conditions:
#
#  The above copyright notice and this permission notice shall be included in
#  all copies or substantial portions of the Software.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#  IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#  FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#  AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#  LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
#  FROM,OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
#  DEALINGS IN THE SOFTWARE.
"""
Analytic mobility oracle and training set generation
"""
from .backend import OracleBackend
from .constants import (
    PERIODIC_DRAG_CONSTANT, ISOLATED_ORDER, TWO_BODY_ORDER, THREE_BODY_ORDER,
    ORACLE_ORDERS, UNBOUNDED_TAG, PERIODIC_TAG, oracle_backend_name
)
from .datafile import (
    training_csv_header, write_training_csv, read_training_csv,
    write_vectors_csv, read_vectors_csv
)
from .domain import (
    Unbounded, PeriodicBox, Domain, UNBOUNDED, ParticleSystem,
    domain_from_tag, as_vectors, norms, check_physical
)
from .kernels import (
    stokes_drag, rpy_pair_mobility, rpy_blocks, oseen_strain_rates,
    stresslet_velocities
)
from .mobility import (
    assemble_grand_mobility, stresslet_reflections, oracle_velocities
)
from .sampler import (
    TrainingSample, SamplerConfig, sample_configuration,
    generate_training_set, near_contact_fraction
)


__all__ = [
    'OracleBackend',

    'PERIODIC_DRAG_CONSTANT',
    'ISOLATED_ORDER',
    'TWO_BODY_ORDER',
    'THREE_BODY_ORDER',
    'ORACLE_ORDERS',
    'UNBOUNDED_TAG',
    'PERIODIC_TAG',
    'oracle_backend_name',

    'training_csv_header',
    'write_training_csv',
    'read_training_csv',
    'write_vectors_csv',
    'read_vectors_csv',

    'Unbounded',
    'PeriodicBox',
    'Domain',
    'UNBOUNDED',
    'ParticleSystem',
    'domain_from_tag',
    'as_vectors',
    'norms',
    'check_physical',

    'stokes_drag',
    'rpy_pair_mobility',
    'rpy_blocks',
    'oseen_strain_rates',
    'stresslet_velocities',

    'assemble_grand_mobility',
    'stresslet_reflections',
    'oracle_velocities',

    'TrainingSample',
    'SamplerConfig',
    'sample_configuration',
    'generate_training_set',
    'near_contact_fraction',
]
