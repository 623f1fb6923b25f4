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
Training set generation from oracle velocities
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from utils import AsDictMixin, DomainError, GenerationError
from .constants import (
    UNBOUNDED_TAG, THREE_BODY_ORDER, ORACLE_ORDERS,
    DEFAULT_MAX_EXTENT, DEFAULT_MIN_GAP, DEFAULT_NEAR_CONTACT_GAP,
    DEFAULT_NEAR_CONTACT_QUOTA, DEFAULT_MAX_RETRIES, DEFAULT_SAMPLE_PARTICLES,
    SHARD_SIZE, MIN_GAP_CONSTRAINT, MAX_EXTENT_CONSTRAINT,
    NEAR_CONTACT_CONSTRAINT
)
from .domain import Domain, ParticleSystem, as_vectors, domain_from_tag, norms
from .mobility import oracle_velocities


logger = logging.getLogger(__name__)


@dataclass
class TrainingSample:
    """
    One m-particle configuration with applied forces and oracle velocities
    """
    positions: np.ndarray
    forces: np.ndarray
    velocities: np.ndarray
    domain_tag: str = UNBOUNDED_TAG

    def __post_init__(self):
        self.positions = as_vectors(self.positions)
        count = len(self.positions)
        self.forces = as_vectors(self.forces, name='forces', count=count)
        self.velocities = as_vectors(
            self.velocities, name='velocities', count=count)

    @property
    def n_particles(self) -> int:
        """ Number of particles """
        return len(self.positions)

    @property
    def domain(self) -> Domain:
        """ Domain of the configuration """
        return domain_from_tag(self.domain_tag)

    def min_gap(self, radius: float) -> float:
        """
        Smallest surface gap between any two particles
        :param radius: particle radius
        :return: gap
        """
        disp = self.domain.minimum_image(
            self.positions[np.newaxis, :, :]
            - self.positions[:, np.newaxis, :])
        dist = norms(disp)
        np.fill_diagonal(dist, np.inf)
        return float(dist.min()) - 2 * radius


@dataclass
class SamplerConfig(AsDictMixin):
    """
    Training set sampler settings; gaps and extents in units of the radius
    """
    n_particles: int = DEFAULT_SAMPLE_PARTICLES
    max_extent: float = DEFAULT_MAX_EXTENT
    """ Largest pair distance """
    min_gap: float = DEFAULT_MIN_GAP
    near_contact_gap: float = DEFAULT_NEAR_CONTACT_GAP
    near_contact_quota: float = DEFAULT_NEAR_CONTACT_QUOTA
    """ Fraction of samples with at least one gap ≤ near_contact_gap """
    max_retries: int = DEFAULT_MAX_RETRIES
    radius: float = 1.0
    viscosity: float = 1.0
    order: int = THREE_BODY_ORDER

    def __post_init__(self):
        if self.n_particles < 2:
            raise DomainError(
                f'Samples need at least 2 particles, got {self.n_particles}')
        if not 0 < self.min_gap < self.near_contact_gap:
            raise DomainError(
                f'Require 0 < min_gap < near_contact_gap, got '
                f'{self.min_gap}, {self.near_contact_gap}')
        if self.max_extent <= 2 + self.near_contact_gap:
            raise DomainError(
                f'max_extent must exceed the near-contact distance, got '
                f'{self.max_extent}')
        if not 0 <= self.near_contact_quota <= 1:
            raise DomainError(
                f'near_contact_quota must lie in [0, 1], got '
                f'{self.near_contact_quota}')
        if self.max_retries < 1:
            raise DomainError(
                f'max_retries must be positive, got {self.max_retries}')
        if self.order not in ORACLE_ORDERS:
            raise DomainError(
                f'order must be one of {ORACLE_ORDERS}, got {self.order}')
        if self.radius <= 0 or self.viscosity <= 0:
            raise DomainError('radius and viscosity must be positive')

    @property
    def min_distance(self) -> float:
        """ Smallest allowed centre distance """
        return self.radius * (2 + self.min_gap)

    @property
    def near_distance(self) -> float:
        """ Largest centre distance of a near-contact pair """
        return self.radius * (2 + self.near_contact_gap)

    @property
    def max_distance(self) -> float:
        """ Largest allowed centre distance """
        return self.radius * self.max_extent


def _unit_vector(rng: np.random.Generator) -> np.ndarray:
    vector = rng.standard_normal(3)
    return vector / norms(vector)


def _log_uniform(rng: np.random.Generator, low: float, high: float) -> float:
    return float(np.exp(rng.uniform(np.log(low), np.log(high))))


def _violation(positions: np.ndarray, near: bool,
               config: SamplerConfig) -> Optional[str]:
    """
    Get the constraint a configuration violates
    :return: constraint name or None if valid
    """
    dist = norms(positions[np.newaxis, :, :] - positions[:, np.newaxis, :])
    pairs = dist[np.triu_indices(len(positions), k=1)]
    if pairs.min() < config.min_distance:
        return MIN_GAP_CONSTRAINT
    if pairs.max() > config.max_distance:
        return MAX_EXTENT_CONSTRAINT
    if not near and pairs.min() <= config.near_distance:
        return NEAR_CONTACT_CONSTRAINT
    return None


def sample_configuration(rng: np.random.Generator, near: bool,
                         config: SamplerConfig) -> np.ndarray:
    """
    Draw a non-overlapping configuration. The first pair distance is
    log-uniform, or for a near-contact sample its gap is; each further
    particle is placed at a log-uniform distance from a random anchor.

    :param rng: random generator
    :param near: near-contact sample
    :param config: sampler settings
    :return: (m, 3) positions centred on the origin
    :raises GenerationError: constraints not met after max_retries
    """
    radius = config.radius
    constraint = None
    for _ in range(config.max_retries):
        if near:
            gap = _log_uniform(rng, config.min_gap, config.near_contact_gap)
            distance = radius * (2 + gap)
        else:
            distance = _log_uniform(
                rng, config.min_distance, config.max_distance)
        positions = [np.zeros(3), distance * _unit_vector(rng)]
        for count in range(2, config.n_particles):
            anchor = positions[rng.integers(count)]
            distance = _log_uniform(
                rng, config.min_distance, config.max_distance)
            positions.append(anchor + distance * _unit_vector(rng))
        positions = np.array(positions)

        constraint = _violation(positions, near, config)
        if constraint is None:
            positions = positions[rng.permutation(config.n_particles)]
            return positions - positions.mean(axis=0)

    raise GenerationError(
        f"Unable to satisfy the '{constraint}' constraint after "
        f"{config.max_retries} attempts", constraint=constraint)


def _generate_shard(args: Tuple[int, int, int, int, int, SamplerConfig]
                    ) -> List[TrainingSample]:
    """
    Generate the samples [start, stop) of a training set
    :param args: tuple of (seed, shard, start, stop, near-contact count,
                config)
    :return: samples
    """
    seed, shard, start, stop, n_near, config = args
    rng = np.random.default_rng(seed ^ shard)
    basis = np.eye(3)
    samples = []
    for index in range(start, stop):
        positions = sample_configuration(rng, index < n_near, config)
        forces = basis[rng.integers(3, size=config.n_particles)]
        system = ParticleSystem(positions, radius=config.radius,
                                viscosity=config.viscosity)
        velocities = oracle_velocities(system, forces, config.order)
        samples.append(TrainingSample(positions, forces, velocities))
    return samples


def generate_training_set(count: int, config: SamplerConfig = None,
                          seed: int = 0, workers: int = 1
                          ) -> List[TrainingSample]:
    """
    Generate oracle training samples. Samples are generated in shards of
    fixed size, each seeded with seed XOR shard index, so the output does
    not depend on the number of workers.

    :param count: number of samples
    :param config: sampler settings; default SamplerConfig()
    :param seed: non-negative random seed
    :param workers: number of worker processes; default 1
    :return: samples
    :raises DomainError: non-positive count or negative seed
    :raises GenerationError: unsatisfiable sampler constraints
    """
    if count <= 0:
        raise DomainError(f'Sample count must be positive, got {count}')
    if seed < 0:
        raise DomainError(f'Seed must be non-negative, got {seed}')
    if config is None:
        config = SamplerConfig()

    n_near = int(round(config.near_contact_quota * count))
    shards = [
        (seed, shard, start, min(start + SHARD_SIZE, count), n_near, config)
        for shard, start in enumerate(range(0, count, SHARD_SIZE))
    ]
    logger.debug('Sampler settings %s', config.as_dict())
    logger.info('Generating %d samples in %d shard(s), %d near-contact',
                count, len(shards), n_near)

    if workers > 1 and len(shards) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            shard_samples = list(pool.map(_generate_shard, shards))
    else:
        shard_samples = [_generate_shard(shard) for shard in shards]
    samples = [sample for batch in shard_samples for sample in batch]

    # near-contact samples occupy the first slots until shuffled
    order = np.random.default_rng(seed).permutation(count)
    return [samples[index] for index in order]


def near_contact_fraction(samples: Sequence[TrainingSample], radius: float,
                          gap: float = DEFAULT_NEAR_CONTACT_GAP) -> float:
    """
    Fraction of samples with at least one surface gap ≤ gap·radius
    :param samples: samples
    :param radius: particle radius
    :param gap: near-contact gap in units of the radius
    :return: fraction
    """
    if not samples:
        return 0.0
    near = sum(
        1 for sample in samples if sample.min_gap(radius) <= gap * radius)
    return near / len(samples)
