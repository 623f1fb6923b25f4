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
Explicit Euler integration of overdamped particle dynamics
"""
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np

from broker import IVelocityBackend
from graph import neighbor_search, pair_distances
from oracle import Domain, ParticleSystem, UNBOUNDED, as_vectors
from utils import DomainError, SimulationError, write_csv
from .constants import DEFAULT_OUTPUT_EVERY, TRAJECTORY_HEADER
from .forces import ForceModel


logger = logging.getLogger(__name__)


def euler_step(positions, velocities, dt: float,
               domain: Domain = UNBOUNDED) -> np.ndarray:
    """
    X ← X + dt·U, wrapped into a periodic box

    :param positions: (N, 3) positions
    :param velocities: (N, 3) velocities
    :param dt: time step
    :param domain: domain; default unbounded
    :return: (N, 3) new positions
    :raises DomainError: dt ≤ 0
    """
    if not dt > 0:
        raise DomainError(f'Time step must be positive, got {dt}')
    positions = as_vectors(positions)
    velocities = as_vectors(velocities, name='velocities',
                            count=len(positions))
    return domain.wrap(positions + dt * velocities)


@dataclass
class Trajectory:
    """
    Recorded frames of a simulation
    """
    times: List[float] = field(default_factory=list)
    frames: List[np.ndarray] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def n_frames(self) -> int:
        """ Number of frames """
        return len(self.frames)

    @property
    def n_particles(self) -> int:
        """ Number of particles per frame """
        return len(self.frames[0]) if self.frames else 0

    def append(self, time: float, positions: np.ndarray):
        """
        Record a frame
        :param time: frame time, later than the last
        :param positions: (N, 3) positions
        :raises DomainError: time not increasing or particle count changed
        """
        if self.times and time <= self.times[-1]:
            raise DomainError(
                f'Frame time {time} does not follow {self.times[-1]}')
        if self.frames and len(positions) != self.n_particles:
            raise DomainError(
                f'Frame of {len(positions)} particles, expected '
                f'{self.n_particles}')
        self.times.append(time)
        self.frames.append(np.array(positions, dtype=float))


def find_overlap(system: ParticleSystem
                 ) -> Optional[Tuple[Tuple[int, int], float]]:
    """
    Find a pair of overlapping particles

    :param system: particle system
    :return: tuple of ((i, j), distance), or None if no overlap
    """
    contact = 2 * system.radius
    if system.n_particles < 2:
        return None
    if system.domain.is_periodic and contact > system.domain.edge / 2:
        pair, distance = system.closest_pair()
        return (pair, distance) \
            if pair is not None and distance < contact else None
    for i, neighbors in enumerate(neighbor_search(
            system.positions, contact, system.domain)):
        later = neighbors[neighbors > i]
        if not len(later):
            continue
        distances = pair_distances(system.positions[i],
                                   system.positions[later], system.domain)
        closest = int(np.argmin(distances))
        if distances[closest] < contact:
            return (i, int(later[closest])), float(distances[closest])
    return None


def _check_overlap(system: ParticleSystem, step: int):
    overlap = find_overlap(system)
    if overlap is not None:
        (i, j), distance = overlap
        raise SimulationError(
            f'particles {i} and {j} overlap, centre distance {distance!r} '
            f'< {2 * system.radius!r}', step=step)


def simulate(system: ParticleSystem, backend: IVelocityBackend,
             force_model: ForceModel, dt: float, n_steps: int,
             output_every: int = DEFAULT_OUTPUT_EVERY) -> Trajectory:
    """
    Integrate Ẋ = U(X, F(X)) with explicit Euler. Velocities come from the
    backend, which rebuilds whatever it needs from the positions every
    step. Frame 0 is the initial configuration.

    :param system: initial system
    :param backend: velocity backend
    :param force_model: external forces
    :param dt: time step
    :param n_steps: number of steps
    :param output_every: record every this many steps; default 1
    :return: trajectory
    :raises DomainError: non-positive dt, negative n_steps or stride < 1
    :raises SimulationError: particles overlap, with the step index
    """
    if not dt > 0:
        raise DomainError(f'Time step must be positive, got {dt}')
    if n_steps < 0 or output_every < 1:
        raise DomainError(
            f'Need n_steps ≥ 0 and output_every ≥ 1, got {n_steps}, '
            f'{output_every}')

    trajectory = Trajectory(metadata={
        'dt': dt,
        'n_steps': n_steps,
        'output_every': output_every,
        'domain': system.domain.tag,
        'radius': system.radius,
        'viscosity': system.viscosity,
        **force_model.describe(),
        **backend.metadata(),
    })
    logger.info('Simulating %d particles for %d steps of %g with %s',
                system.n_particles, n_steps, dt, backend)

    _check_overlap(system, 0)
    trajectory.append(0.0, system.positions)
    for step in range(1, n_steps + 1):
        velocities = backend.velocities(system,
                                        force_model.forces(system))
        system = system.moved(
            euler_step(system.positions, velocities, dt, system.domain))
        _check_overlap(system, step)
        if step % output_every == 0:
            trajectory.append(step * dt, system.positions)
        logger.debug('step %d: max speed %g', step,
                     float(np.max(np.linalg.norm(velocities, axis=1),
                                  initial=0.0)))

    logger.info('Simulation complete, %d frames', trajectory.n_frames)
    return trajectory


def write_trajectory_csv(path: Union[str, Path],
                         trajectory: Trajectory) -> int:
    """
    Write a trajectory csv; one row of t, particle_id, x, y, z per particle
    per frame

    :param path: file path
    :param trajectory: trajectory
    :return: number of rows written
    """
    return write_csv(path, TRAJECTORY_HEADER, (
        (time, particle, *position)
        for time, frame in zip(trajectory.times, trajectory.frames)
        for particle, position in enumerate(frame)
    ))
