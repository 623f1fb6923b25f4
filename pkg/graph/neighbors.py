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
Cell-list neighbour search
"""
from itertools import product
from typing import Dict, List, Tuple

import numpy as np

from oracle import Domain, UNBOUNDED, as_vectors, norms
from utils import AmbiguousImageError, DomainError

_OFFSETS = np.array(list(product((-1, 0, 1), repeat=3)))


def pair_distances(origin: np.ndarray, others: np.ndarray,
                   domain: Domain = UNBOUNDED) -> np.ndarray:
    """
    Distances from one position to many, minimum image for periodic domains
    :param origin: 3-vector
    :param others: (M, 3) positions
    :param domain: domain
    :return: (M,) distances
    """
    return norms(domain.minimum_image(others - origin))


def _cells(positions: np.ndarray, r_cut: float, domain: Domain
           ) -> Tuple[Dict[Tuple[int, ...], List[int]], int]:
    """
    Bin positions into cubic cells with edge ≥ r_cut
    :return: tuple of (map of cell to particle indices in ascending order,
            cells per dimension or 0 if unbounded)
    """
    if domain.is_periodic:
        n_cells = max(int(np.floor(domain.edge / r_cut)), 1)
        size = domain.edge / n_cells
        coords = np.floor(domain.wrap(positions) / size).astype(int) % n_cells
    else:
        n_cells = 0
        coords = np.floor(
            (positions - positions.min(axis=0)) / r_cut).astype(int)

    cells = {}
    for index, cell in enumerate(map(tuple, coords)):
        cells.setdefault(cell, []).append(index)
    return cells, n_cells


def neighbor_search(positions, r_cut: float,
                    domain: Domain = UNBOUNDED) -> List[np.ndarray]:
    """
    Find, for every particle, the other particles within r_cut (inclusive)

    :param positions: (N, 3) positions
    :param r_cut: cutoff distance
    :param domain: domain; default unbounded
    :return: per-particle ascending arrays of neighbour indices
    :raises DomainError: non-positive cutoff
    :raises AmbiguousImageError: periodic cutoff longer than half the box
    """
    if r_cut is None or not r_cut > 0:
        raise DomainError(f'Cutoff must be positive, got {r_cut}')
    if domain.is_periodic and r_cut > domain.edge / 2:
        raise AmbiguousImageError(
            f'Cutoff {r_cut} exceeds half the periodic box edge {domain.edge}')
    positions = as_vectors(positions)
    count = len(positions)
    if count == 0:
        return []

    cells, n_cells = _cells(positions, r_cut, domain)

    neighbors = [np.empty(0, dtype=int)] * count
    for cell, members in cells.items():
        adjacent = _OFFSETS + cell
        if n_cells:
            adjacent %= n_cells
        candidates = sorted(
            index for key in set(map(tuple, adjacent))
            for index in cells.get(key, ()))
        candidates = np.array(candidates, dtype=int)
        for index in members:
            dist = pair_distances(positions[index], positions[candidates],
                                  domain)
            found = candidates[(dist <= r_cut) & (candidates != index)]
            neighbors[index] = found
    return neighbors


def brute_force_neighbors(positions, r_cut: float,
                          domain: Domain = UNBOUNDED) -> List[np.ndarray]:
    """
    O(N²) neighbour scan
    :param positions: (N, 3) positions
    :param r_cut: cutoff distance
    :param domain: domain; default unbounded
    :return: per-particle ascending arrays of neighbour indices
    """
    positions = as_vectors(positions)
    indices = np.arange(len(positions))
    return [
        indices[(pair_distances(origin, positions, domain) <= r_cut)
                & (indices != index)]
        for index, origin in enumerate(positions)
    ]
