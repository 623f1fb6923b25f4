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
Constants for the cli app
"""
from pathlib import Path

from stokes_hignn import (
    GEN_DATA_CMD, TRAIN_CMD, PREDICT_CMD, SIMULATE_CMD, BENCH_CMD
)

# name of this app
THIS_APP = Path(__file__).resolve().parent.name

# top-level run config keys
COMMAND_KEY = 'command'
SEED_KEY = 'seed'
DOMAIN_KEY = 'domain'

# run config sections
PHYSICS_SECTION = 'physics'
SAMPLER_SECTION = 'sampler'
TRAIN_SECTION = 'train'
GRAPH_SECTION = 'graph'
SYSTEM_SECTION = 'system'
DYNAMICS_SECTION = 'dynamics'
BENCH_SECTION = 'bench'
PATHS_SECTION = 'paths'

# paths section fields
DATA_PATH = 'data'
MODEL_PATH = 'model'
LOSS_HISTORY_PATH = 'loss_history'
POSITIONS_PATH = 'positions'
FORCES_PATH = 'forces'
VELOCITIES_PATH = 'velocities'
TRAJECTORY_PATH = 'trajectory'
LATTICE_TABLE_PATH = 'lattice_table'
CHAIN_TABLE_PATH = 'chain_table'
SCALING_TABLE_PATH = 'scaling_table'

# command: sections it accepts
COMMAND_SECTIONS = {
    GEN_DATA_CMD: (PHYSICS_SECTION, SAMPLER_SECTION, PATHS_SECTION),
    TRAIN_CMD: (PHYSICS_SECTION, TRAIN_SECTION, GRAPH_SECTION,
                PATHS_SECTION),
    PREDICT_CMD: (PHYSICS_SECTION, GRAPH_SECTION, PATHS_SECTION),
    SIMULATE_CMD: (PHYSICS_SECTION, GRAPH_SECTION, SYSTEM_SECTION,
                   DYNAMICS_SECTION, PATHS_SECTION),
    BENCH_CMD: (PHYSICS_SECTION, GRAPH_SECTION, BENCH_SECTION,
                PATHS_SECTION),
}
# command: paths that must exist
COMMAND_INPUTS = {
    GEN_DATA_CMD: (),
    TRAIN_CMD: (DATA_PATH,),
    PREDICT_CMD: (MODEL_PATH, POSITIONS_PATH, FORCES_PATH),
    SIMULATE_CMD: (),
    BENCH_CMD: (),
}
# command: paths that must be writable
COMMAND_OUTPUTS = {
    GEN_DATA_CMD: (DATA_PATH,),
    TRAIN_CMD: (MODEL_PATH, LOSS_HISTORY_PATH),
    PREDICT_CMD: (VELOCITIES_PATH,),
    SIMULATE_CMD: (TRAJECTORY_PATH,),
    BENCH_CMD: (LATTICE_TABLE_PATH, CHAIN_TABLE_PATH),
}
# command: paths that must exist if set
COMMAND_OPTIONAL_INPUTS = {
    SIMULATE_CMD: (MODEL_PATH, POSITIONS_PATH),
    BENCH_CMD: (MODEL_PATH,),
}
# command: paths that must be writable if set
COMMAND_OPTIONAL_OUTPUTS = {
    BENCH_CMD: (SCALING_TABLE_PATH,),
}

# per-particle csv columns
POSITION_HEADER = ('x', 'y', 'z')
FORCE_HEADER = ('fx', 'fy', 'fz')
VELOCITY_HEADER = ('ux', 'uy', 'uz')

# command option names
CONFIG_OPTION = 'config'
WORKERS_OPTION = 'workers'
SEED_OPTION = 'seed'
