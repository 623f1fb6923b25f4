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
simulate: integrate a suspension and write its trajectory
"""
import numpy as np

from dynamics import (
    ForceModelType, MorseParams, chain, cubic_lattice, force_model,
    random_configuration, simulate, square_lattice, write_trajectory_csv
)
from oracle import read_vectors_csv
from stokes_hignn import SIMULATE_CMD
from utils import ConfigError
from cli.command import HignnCommand, make_system, resolve_backend
from cli.config import RunConfig
from cli.constants import (
    PHYSICS_SECTION, SYSTEM_SECTION, DYNAMICS_SECTION, POSITIONS_PATH,
    TRAJECTORY_PATH, POSITION_HEADER
)
from cli.forms import SystemKind


def initial_positions(config: RunConfig) -> np.ndarray:
    """
    Build the initial configuration; lattices and chains are centred on the
    origin, or the box centre of a periodic domain
    :param config: run config
    :return: (N, 3) positions
    :raises ConfigError: positions file required but not set
    """
    system = config.section(SYSTEM_SECTION)
    radius = config.section(PHYSICS_SECTION)['radius']
    domain = config.domain
    centre = np.full(3, domain.edge / 2) if domain.is_periodic \
        else np.zeros(3)

    kind = SystemKind.from_str(system['kind'])
    if kind == SystemKind.CUBIC_LATTICE:
        positions = cubic_lattice(system['n_side'], system['spacing'],
                                  centre, radius)
    elif kind == SystemKind.SQUARE_LATTICE:
        positions = square_lattice(system['spacing'], radius) + centre
    elif kind == SystemKind.CHAIN:
        positions = chain(system['count'], system['spacing'], radius) \
            + centre
    elif kind == SystemKind.RANDOM:
        positions = domain.wrap(random_configuration(
            system['count'], domain, system['extent'], seed=config.seed,
            min_gap=system['min_gap'], radius=radius,
            max_retries=system['max_retries']))
    else:
        path = config.path(POSITIONS_PATH)
        if path is None:
            raise ConfigError(
                f"'paths.{POSITIONS_PATH}' is required for a "
                f"'{kind.arg}' system")
        positions = read_vectors_csv(path, POSITION_HEADER)
    return positions


class Command(HignnCommand):
    help = 'Simulate overdamped particle dynamics and write the trajectory'
    command = SIMULATE_CMD

    def run(self, config: RunConfig, workers: int):
        dynamics = config.section(DYNAMICS_SECTION)
        model = force_model(
            ForceModelType.from_str(dynamics['force_model']),
            force=dynamics['force'] or None,
            morse=MorseParams(dynamics['rho'], dynamics['depth'],
                              dynamics['r_eq']))
        backend = resolve_backend(dynamics['backend'], config, workers)
        system = make_system(config, initial_positions(config))

        trajectory = simulate(system, backend, model, dynamics['dt'],
                              dynamics['n_steps'],
                              output_every=dynamics['output_every'])
        written = write_trajectory_csv(config.path(TRAJECTORY_PATH),
                                       trajectory)
        self.success(
            f'Wrote {trajectory.n_frames} frames of '
            f'{trajectory.n_particles} particles ({written} rows) to '
            f'{config.path(TRAJECTORY_PATH)}')
