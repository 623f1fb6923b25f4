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
Constants for the dynamics app
"""
from pathlib import Path

# name of this app
THIS_APP = Path(__file__).resolve().parent.name

# Morse parameters of the self-assembly runs
DEFAULT_MORSE_RHO = 1.0
DEFAULT_MORSE_DEPTH = 1.0
DEFAULT_MORSE_R_EQ = 2.5

# gravity-like uniform force
DEFAULT_UNIFORM_FORCE = (0.0, 0.0, -1.0)

DEFAULT_DT = 0.001
DEFAULT_OUTPUT_EVERY = 1

# benchmark defaults
DEFAULT_LATTICE_SPACINGS = (2.01, 2.5, 3.0, 4.0, 5.0, 6.0, 8.0, 10.0)
DEFAULT_CHAIN_COUNTS = tuple(range(5, 101, 5))
DEFAULT_CHAIN_SPACING = 3.0
DEFAULT_SCALING_COUNTS = (200, 400, 800, 1600)
DEFAULT_SCALING_SPACING = 3.0
DEFAULT_MAX_RETRIES = 10000

# benchmark variants
WITH_FACES_VARIANT = 'with_faces'
WITHOUT_FACES_VARIANT = 'without_faces'

# trajectory csv
TRAJECTORY_HEADER = ('t', 'particle_id', 'x', 'y', 'z')

# benchmark tables
LATTICE_HEADER = ('L', 'backend', 'variant', 'drag_coefficient')
CHAIN_HEADER = (
    'N', 'L', 'backend', 'variant', 'velocity', 'reference_velocity',
    'relative_error', 'drag_coefficient'
)
SCALING_HEADER = (
    'N', 'workers', 'graph_seconds', 'evaluate_seconds', 'total_seconds'
)
