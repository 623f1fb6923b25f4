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
Initial configurations: lattices, chains and random packings
"""
import math
from typing import Sequence

import numpy as np

from graph import pair_distances
from oracle import Domain
from utils import DomainError, GenerationError, OverlapError
from .constants import DEFAULT_MAX_RETRIES


def _check_spacing(spacing: float, radius: float):
    if not spacing > 2 * radius:
        raise OverlapError(
            f'Spacing {spacing} must exceed the particle diameter '
            f'{2 * radius}')


def lattice_positions(count: int, spacing: float,
                      centre: Sequence[float] = (0, 0, 0),
                      radius: float = 1.0) -> np.ndarray:
    """
    First `count` sites, in x-fastest order, of the smallest primitive cubic
    lattice holding them, centred on `centre`

    :param count: number of particles
    :param spacing: lattice length L
    :param centre: centre of the occupied sites' bounding box
    :param radius: particle radius
    :return: (count, 3) positions
    :raises OverlapError: L ≤ 2a
    """
    _check_spacing(spacing, radius)
    if count < 0:
        raise DomainError(f'Particle count must be non-negative, got {count}')
    side = max(1, math.ceil(round(count ** (1 / 3), 12)))
    z_idx, y_idx, x_idx = np.unravel_index(np.arange(count),
                                           (side, side, side))
    sites = np.stack([x_idx, y_idx, z_idx], axis=1) * float(spacing)
    if count:
        sites -= (sites.min(axis=0) + sites.max(axis=0)) / 2
    return sites + np.asarray(centre, dtype=float)


def cubic_lattice(n_side: int, spacing: float,
                  centre: Sequence[float] = (0, 0, 0),
                  radius: float = 1.0) -> np.ndarray:
    """
    n_side³ particles on a primitive cubic lattice centred on `centre`;
    e.g. n_side=2, spacing=4 gives the 8-particle cube with corners at ±2

    :param n_side: particles per edge
    :param spacing: lattice length L
    :param centre: lattice centre
    :param radius: particle radius
    :return: (n_side³, 3) positions
    :raises OverlapError: L ≤ 2a
    """
    return lattice_positions(n_side ** 3, spacing, centre, radius)


def square_lattice(spacing: float, radius: float = 1.0) -> np.ndarray:
    """
    Four particles on a square of side L in the xy-plane, centred on the
    origin
    """
    _check_spacing(spacing, radius)
    half = spacing / 2
    return np.array([[-half, -half, 0], [half, -half, 0],
                     [-half, half, 0], [half, half, 0]])


def chain(count: int, spacing: float, radius: float = 1.0) -> np.ndarray:
    """
    Evenly spaced particles along x centred on the origin; the central
    particle is index count // 2

    :param count: number of particles
    :param spacing: centre-to-centre distance L
    :param radius: particle radius
    :return: (count, 3) positions
    :raises OverlapError: L ≤ 2a
    """
    _check_spacing(spacing, radius)
    if count < 1:
        raise DomainError(f'Chain needs at least 1 particle, got {count}')
    positions = np.zeros((count, 3))
    positions[:, 0] = (np.arange(count) - count // 2) * spacing
    return positions


def random_configuration(count: int, domain: Domain, extent: float,
                         seed: int = 0, min_gap: float = 0.0,
                         radius: float = 1.0,
                         max_retries: int = DEFAULT_MAX_RETRIES
                         ) -> np.ndarray:
    """
    Uniformly distributed non-overlapping particles in [0, extent)³, by
    sequential rejection

    :param count: number of particles
    :param domain: domain; distances use its minimum image
    :param extent: edge of the sampling cube
    :param seed: random seed
    :param min_gap: smallest surface gap in units of the radius
    :param radius: particle radius
    :param max_retries: attempts per particle
    :return: (count, 3) positions
    :raises GenerationError: a particle could not be placed
    """
    rng = np.random.default_rng(seed)
    min_distance = radius * (2 + min_gap)
    positions = np.empty((count, 3))
    for index in range(count):
        for _ in range(max_retries):
            candidate = rng.uniform(0, extent, 3)
            if index == 0 or pair_distances(
                    candidate, positions[:index], domain).min() \
                    >= min_distance:
                positions[index] = candidate
                break
        else:
            raise GenerationError(
                f'Unable to place particle {index} of {count} after '
                f'{max_retries} attempts', constraint='min_gap')
    return positions
