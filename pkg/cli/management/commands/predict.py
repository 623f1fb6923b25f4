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
predict: surrogate velocities for given positions and forces
"""
from oracle import read_vectors_csv, write_vectors_csv, as_vectors
from stokes_hignn import PREDICT_CMD
from surrogate import SurrogateBackend
from cli.command import HignnCommand, load_params, make_system
from cli.config import RunConfig
from cli.constants import (
    GRAPH_SECTION, PHYSICS_SECTION, POSITIONS_PATH, FORCES_PATH,
    VELOCITIES_PATH, POSITION_HEADER, FORCE_HEADER, VELOCITY_HEADER
)


class Command(HignnCommand):
    help = 'Predict particle velocities with a trained surrogate'
    command = PREDICT_CMD

    def run(self, config: RunConfig, workers: int):
        params = load_params(config)
        system = make_system(
            config,
            read_vectors_csv(config.path(POSITIONS_PATH), POSITION_HEADER))
        forces = as_vectors(
            read_vectors_csv(config.path(FORCES_PATH), FORCE_HEADER),
            name='forces', count=system.n_particles)

        backend = SurrogateBackend(
            params, workers=workers,
            use_faces=config.section(GRAPH_SECTION)['use_faces'],
            periodic_constant=config.section(
                PHYSICS_SECTION)['periodic_constant'])
        velocities = backend.velocities(system, forces)

        written = write_vectors_csv(config.path(VELOCITIES_PATH),
                                    VELOCITY_HEADER, velocities)
        self.success(f'Wrote {written} velocities to '
                     f'{config.path(VELOCITIES_PATH)}, model sha256 '
                     f'{backend.model_hash}')
