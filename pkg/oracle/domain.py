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
Particle system and domain descriptors
"""
from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

import numpy as np

from utils import DomainError, OverlapError, ShapeError
from .constants import UNBOUNDED_TAG, PERIODIC_TAG


def as_vectors(values, name: str = 'positions',
               count: Optional[int] = None) -> np.ndarray:
    """
    Convert to a float (N, 3) array
    :param values: array-like of 3-vectors
    :param name: name used in error messages
    :param count: expected number of vectors; default any
    :return: new array
    :raises ShapeError: if not a list of 3-vectors or wrong length
    """
    array = np.array(values, dtype=float)
    if array.size == 0:
        array = array.reshape(0, 3)
    if array.ndim != 2 or array.shape[1] != 3:
        raise ShapeError(
            f'{name} must be a list of 3-vectors, got shape {array.shape}')
    if count is not None and len(array) != count:
        raise ShapeError(f'expected {count} {name}, got {len(array)}')
    return array


def norms(vectors: np.ndarray) -> np.ndarray:
    """
    Euclidean norms along the last axis
    :param vectors: (..., 3) array
    :return: (...) array
    """
    return np.sqrt(np.einsum('...k,...k->...', vectors, vectors))


@dataclass(frozen=True)
class Unbounded:
    """
    Infinite fluid domain
    """
    is_periodic = False

    @property
    def tag(self) -> str:
        """ Domain tag as used in data files """
        return UNBOUNDED_TAG

    def minimum_image(self, displacements: np.ndarray) -> np.ndarray:
        """
        Displacements to the nearest image; the identity
        :param displacements: (..., 3) displacements
        :return: displacements
        """
        return np.asarray(displacements, dtype=float)

    def wrap(self, positions: np.ndarray) -> np.ndarray:
        """
        Map positions into the domain; the identity
        :param positions: (N, 3) positions
        :return: positions
        """
        return np.asarray(positions, dtype=float)

    def contains(self, positions: np.ndarray) -> bool:
        """ Check positions lie in the domain """
        return bool(np.all(np.isfinite(positions)))


@dataclass(frozen=True)
class PeriodicBox:
    """
    Cubic periodic box [0, edge)³
    """
    edge: float
    is_periodic = True

    def __post_init__(self):
        if not np.isfinite(self.edge) or self.edge <= 0:
            raise DomainError(
                f'Periodic box edge must be positive, got {self.edge}')

    @property
    def tag(self) -> str:
        """ Domain tag as used in data files """
        return f'{PERIODIC_TAG}:{self.edge!r}'

    def minimum_image(self, displacements: np.ndarray) -> np.ndarray:
        """
        Displacements to the nearest periodic image
        :param displacements: (..., 3) displacements
        :return: displacements with components in [-edge/2, edge/2]
        """
        displacements = np.asarray(displacements, dtype=float)
        return displacements - self.edge * np.round(displacements / self.edge)

    def wrap(self, positions: np.ndarray) -> np.ndarray:
        """
        Map positions into [0, edge)
        :param positions: (N, 3) positions
        :return: wrapped positions
        """
        wrapped = np.mod(np.asarray(positions, dtype=float), self.edge)
        # tiny negative values round up to edge
        return np.where(wrapped >= self.edge, wrapped - self.edge, wrapped)

    def contains(self, positions: np.ndarray) -> bool:
        """ Check positions lie in [0, edge) """
        return bool(np.all((positions >= 0) & (positions < self.edge)))


Domain = Union[Unbounded, PeriodicBox]

UNBOUNDED = Unbounded()


def domain_from_tag(tag: str) -> Domain:
    """
    Get the domain for a tag;
    e.g. 'unbounded' or 'periodic:32.0'

    :param tag: domain tag
    :return: domain
    :raises DomainError: unknown tag
    """
    kind, _, edge = tag.strip().partition(':')
    if kind == UNBOUNDED_TAG and not edge:
        return UNBOUNDED
    if kind == PERIODIC_TAG and edge:
        try:
            return PeriodicBox(float(edge))
        except ValueError as exc:
            if isinstance(exc, DomainError):
                raise
            raise DomainError(f"Invalid periodic box edge in '{tag}'") from exc
    raise DomainError(f"Unknown domain '{tag}'")


@dataclass
class ParticleSystem:
    """
    N rigid spheres of equal radius in a fluid of given viscosity
    """
    positions: np.ndarray
    """ (N, 3) sphere centres """
    radius: float = 1.0
    viscosity: float = 1.0
    domain: Domain = field(default=UNBOUNDED)

    def __post_init__(self):
        self.positions = as_vectors(self.positions)
        check_physical(self.viscosity, self.radius)
        if not self.domain.contains(self.positions):
            raise DomainError(
                f'Positions must lie within the {self.domain.tag} domain')

    @property
    def n_particles(self) -> int:
        """ Number of particles """
        return len(self.positions)

    def displacements(self) -> np.ndarray:
        """
        Pair displacements X_j − X_i, minimum image for periodic domains
        :return: (N, N, 3) array indexed [i, j]
        """
        return self.domain.minimum_image(
            self.positions[np.newaxis, :, :]
            - self.positions[:, np.newaxis, :])

    def closest_pair(self) -> Tuple[Optional[Tuple[int, int]], float]:
        """
        Get the closest pair of particles
        :return: tuple of ((i, j), distance), or (None, inf) if N < 2
        """
        if self.n_particles < 2:
            return None, np.inf
        dist = norms(self.displacements())
        np.fill_diagonal(dist, np.inf)
        i, j = np.unravel_index(np.argmin(dist), dist.shape)
        return (int(min(i, j)), int(max(i, j))), float(dist[i, j])

    def min_gap(self) -> float:
        """
        Smallest surface gap between any two particles
        :return: gap; inf if N < 2
        """
        return self.closest_pair()[1] - 2 * self.radius

    def check_overlap(self):
        """
        Check no two particles overlap
        :raises OverlapError: if overlapping
        """
        pair, distance = self.closest_pair()
        if pair is not None and distance < 2 * self.radius:
            raise OverlapError(
                f'Particles {pair[0]} and {pair[1]} overlap, centre '
                f'distance {distance!r} < {2 * self.radius!r}', pair=pair)

    def moved(self, positions: np.ndarray) -> 'ParticleSystem':
        """
        Get a copy of this system with new positions
        :param positions: (N, 3) positions
        :return: new system
        """
        return ParticleSystem(
            positions=positions, radius=self.radius,
            viscosity=self.viscosity, domain=self.domain)


def check_physical(viscosity: float, radius: float):
    """
    Check viscosity and radius are positive
    :param viscosity: dynamic viscosity
    :param radius: particle radius
    :raises DomainError: if not positive
    """
    for name, value in (('viscosity', viscosity), ('radius', radius)):
        if not np.isfinite(value) or value <= 0:
            raise DomainError(f'{name} must be positive, got {value}')
