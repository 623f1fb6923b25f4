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
Benchmark drivers: drag coefficients of square lattices and chains, and
inference wall time against particle count
"""
import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, List, Sequence, Tuple, Union

import numpy as np
from scipy.stats import spearmanr

from broker import IVelocityBackend
from graph import build_graph, partition_graph
from oracle import (
    Domain, OracleBackend, ParticleSystem, UNBOUNDED, THREE_BODY_ORDER
)
from surrogate import SurrogateParams, parallel_infer
from utils import ChoiceArg, DomainError, TIMING_FORMAT, write_csv
from .constants import (
    WITH_FACES_VARIANT, WITHOUT_FACES_VARIANT, LATTICE_HEADER, CHAIN_HEADER,
    SCALING_HEADER, DEFAULT_UNIFORM_FORCE
)
from .lattice import square_lattice, chain, lattice_positions


logger = logging.getLogger(__name__)


class Direction(ChoiceArg):
    """ Direction of a uniform force relative to a lattice or chain """
    PERPENDICULAR = ('Perpendicular', 'perpendicular')
    PARALLEL = ('Parallel', 'parallel')

    @property
    def vector(self) -> np.ndarray:
        """ Unit force direction; lattices lie in the xy-plane, chains on x """
        return np.array([0.0, 0.0, 1.0]) \
            if self == Direction.PERPENDICULAR else np.array([1.0, 0.0, 0.0])


@dataclass
class BenchTable:
    """
    Benchmark result table
    """
    header: Tuple[str, ...]
    rows: List[Tuple[Any, ...]] = field(default_factory=list)

    def column(self, name: str) -> List[Any]:
        """
        Get the values of a column
        :param name: column name
        :return: list of values
        """
        index = self.header.index(name)
        return [row[index] for row in self.rows]


def write_table_csv(path: Union[str, Path], table: BenchTable) -> int:
    """
    Write a benchmark table csv

    :param path: file path
    :param table: table
    :return: number of rows written
    """
    return write_csv(path, table.header, table.rows)


def drag_coefficient(force: float, velocity: float, viscosity: float = 1.0,
                     radius: float = 1.0) -> float:
    """
    F / (6πμaU); 1 for an isolated sphere

    :param force: force magnitude
    :param velocity: velocity magnitude along the force
    :param viscosity: dynamic viscosity μ
    :param radius: particle radius a
    :return: coefficient
    :raises DomainError: zero velocity
    """
    if velocity == 0:
        raise DomainError('Drag coefficient needs a non-zero velocity')
    return force / (6 * np.pi * viscosity * radius * velocity)


def _variants(backend: IVelocityBackend
              ) -> List[Tuple[str, IVelocityBackend]]:
    return [(WITH_FACES_VARIANT, backend),
            (WITHOUT_FACES_VARIANT, backend.without_faces())]


def bench_square_lattice(spacings: Sequence[float], direction: Direction,
                         backend: IVelocityBackend, viscosity: float = 1.0,
                         radius: float = 1.0) -> BenchTable:
    """
    Drag coefficient of one of four particles on a square lattice of side L
    under a unit uniform force, with and without three-body contributions

    :param spacings: lattice lengths L
    :param direction: force direction relative to the lattice plane
    :param backend: velocity backend
    :param viscosity: dynamic viscosity
    :param radius: particle radius
    :return: table of L, backend, variant, drag_coefficient
    :raises OverlapError: L ≤ 2a
    """
    table = BenchTable(LATTICE_HEADER)
    for spacing in spacings:
        system = ParticleSystem(square_lattice(spacing, radius),
                                radius=radius, viscosity=viscosity)
        forces = np.tile(direction.vector, (system.n_particles, 1))
        for variant, variant_backend in _variants(backend):
            velocity = variant_backend.velocities(system, forces)[0]
            table.rows.append((
                spacing, backend.name, variant,
                drag_coefficient(1.0, float(velocity @ direction.vector),
                                 viscosity, radius)))
        logger.info('Square lattice L=%g done', spacing)
    return table


def bench_chain(counts: Sequence[int], spacing: float, direction: Direction,
                backend: IVelocityBackend,
                reference: IVelocityBackend = None, viscosity: float = 1.0,
                radius: float = 1.0) -> BenchTable:
    """
    Velocity of the central particle of an N-particle chain under a unit
    uniform force, compared with a reference backend

    :param counts: chain lengths N
    :param spacing: centre-to-centre distance L
    :param direction: force direction relative to the chain
    :param backend: velocity backend
    :param reference: reference backend; default the order-3 oracle
    :param viscosity: dynamic viscosity
    :param radius: particle radius
    :return: table of N, L, backend, variant, velocity, reference_velocity,
            relative_error, drag_coefficient
    """
    if reference is None:
        reference = OracleBackend(THREE_BODY_ORDER)
    table = BenchTable(CHAIN_HEADER)
    for count in counts:
        system = ParticleSystem(chain(count, spacing, radius),
                                radius=radius, viscosity=viscosity)
        forces = np.tile(direction.vector, (count, 1))
        centre = count // 2
        velocity = backend.velocities(system, forces)[centre]
        expected = reference.velocities(system, forces)[centre]
        table.rows.append((
            count, spacing, backend.name, WITH_FACES_VARIANT,
            float(velocity @ direction.vector),
            float(expected @ direction.vector),
            float(np.linalg.norm(velocity - expected)
                  / np.linalg.norm(expected)),
            drag_coefficient(1.0, float(velocity @ direction.vector),
                             viscosity, radius)))
        logger.info('Chain N=%d done', count)
    return table


def chain_error_trend(table: BenchTable) -> float:
    """
    Spearman rank correlation of the relative error against N
    :param table: chain table
    :return: correlation; nan if either column is constant
    """
    counts = table.column('N')
    errors = table.column('relative_error')
    if len(set(counts)) < 2 or len(set(errors)) < 2:
        return float('nan')
    return float(spearmanr(counts, errors)[0])


@dataclass(frozen=True)
class InferenceTiming:
    """
    Wall time of one surrogate evaluation
    """
    graph_seconds: float
    evaluate_seconds: float

    @property
    def total_seconds(self) -> float:
        """ Graph building plus evaluation """
        return self.graph_seconds + self.evaluate_seconds


def time_inference(system: ParticleSystem, forces: np.ndarray,
                   params: SurrogateParams, workers: int = 1,
                   use_faces: bool = True) -> InferenceTiming:
    """
    Time building the graph and evaluating the surrogate on it, separately

    :param system: particle system
    :param forces: (N, 3) forces
    :param params: surrogate parameters
    :param workers: number of workers
    :param use_faces: include three-body contributions; default True
    :return: timing
    """
    start = time.monotonic()
    graph = build_graph(system.positions, system.domain,
                        r_cut=params.face_r_cut, faces=use_faces)
    partition = partition_graph(graph, min(workers, system.n_particles))
    built = time.monotonic()
    parallel_infer(partition, system.positions, forces, params, workers,
                   use_faces=use_faces)
    done = time.monotonic()
    return InferenceTiming(built - start, done - built)


def bench_scaling(counts: Sequence[int], spacing: float,
                  params: SurrogateParams, workers: int = 1,
                  domain: Domain = UNBOUNDED) -> BenchTable:
    """
    Inference wall time for lattices of increasing size under gravity;
    lattices sit at the origin, or the box centre of a periodic domain

    :param counts: particle counts
    :param spacing: lattice length
    :param params: surrogate parameters
    :param workers: number of workers
    :param domain: domain; default unbounded
    :return: table of N, workers, graph_seconds, evaluate_seconds,
            total_seconds, times formatted with 3 decimals
    """
    centre = (domain.edge / 2,) * 3 if domain.is_periodic else (0, 0, 0)
    table = BenchTable(SCALING_HEADER)
    for count in counts:
        system = ParticleSystem(
            lattice_positions(count, spacing, centre), domain=domain)
        forces = np.tile(DEFAULT_UNIFORM_FORCE, (count, 1))
        timing = time_inference(system, forces, params, workers)
        table.rows.append((
            count, workers,
            format(timing.graph_seconds, TIMING_FORMAT),
            format(timing.evaluate_seconds, TIMING_FORMAT),
            format(timing.total_seconds, TIMING_FORMAT)))
        logger.info('N=%d: graph %.3fs, evaluate %.3fs', count,
                    timing.graph_seconds, timing.evaluate_seconds)
    return table
