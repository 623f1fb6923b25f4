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
Overdamped particle dynamics, force models and benchmarks
"""
from .bench import (
    Direction, BenchTable, InferenceTiming, write_table_csv,
    drag_coefficient, bench_square_lattice, bench_chain, chain_error_trend,
    time_inference, bench_scaling
)
from .constants import (
    DEFAULT_DT, DEFAULT_OUTPUT_EVERY, DEFAULT_UNIFORM_FORCE,
    DEFAULT_LATTICE_SPACINGS, DEFAULT_CHAIN_COUNTS, DEFAULT_CHAIN_SPACING,
    DEFAULT_SCALING_COUNTS, DEFAULT_SCALING_SPACING, DEFAULT_MORSE_RHO,
    DEFAULT_MORSE_DEPTH, DEFAULT_MORSE_R_EQ, DEFAULT_MAX_RETRIES,
    TRAJECTORY_HEADER
)
from .forces import (
    MorseParams, morse_force_scalar, total_external_force, ForceModel,
    UniformForce, MorseForce, ForceModelType, force_model
)
from .integrate import (
    Trajectory, euler_step, find_overlap, simulate, write_trajectory_csv
)
from .lattice import (
    lattice_positions, cubic_lattice, square_lattice, chain,
    random_configuration
)


__all__ = [
    'Direction',
    'BenchTable',
    'InferenceTiming',
    'write_table_csv',
    'drag_coefficient',
    'bench_square_lattice',
    'bench_chain',
    'chain_error_trend',
    'time_inference',
    'bench_scaling',

    'DEFAULT_DT',
    'DEFAULT_OUTPUT_EVERY',
    'DEFAULT_UNIFORM_FORCE',
    'DEFAULT_LATTICE_SPACINGS',
    'DEFAULT_CHAIN_COUNTS',
    'DEFAULT_CHAIN_SPACING',
    'DEFAULT_SCALING_COUNTS',
    'DEFAULT_SCALING_SPACING',
    'DEFAULT_MORSE_RHO',
    'DEFAULT_MORSE_DEPTH',
    'DEFAULT_MORSE_R_EQ',
    'DEFAULT_MAX_RETRIES',
    'TRAJECTORY_HEADER',

    'MorseParams',
    'morse_force_scalar',
    'total_external_force',
    'ForceModel',
    'UniformForce',
    'MorseForce',
    'ForceModelType',
    'force_model',

    'Trajectory',
    'euler_step',
    'find_overlap',
    'simulate',
    'write_trajectory_csv',

    'lattice_positions',
    'cubic_lattice',
    'square_lattice',
    'chain',
    'random_configuration',
]
