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
Hypergraph of particles: all-to-all directed edges and cutoff-limited
directed faces
"""
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from oracle import Domain, UNBOUNDED, as_vectors
from .constants import EDGE_TARGET, FACE_TARGET
from .neighbors import neighbor_search


def _read_only(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


def _offsets(targets: np.ndarray, start: int, stop: int) -> np.ndarray:
    """
    CSR offsets of sorted targets over the target range [start, stop)
    """
    return np.searchsorted(targets, np.arange(start, stop + 1))


@dataclass(frozen=True, eq=False)
class HiGraph:
    """
    Vertices 0..N-1, directed edges (target, source) and directed faces
    (target, passing, source), each sorted so that the edges or faces of
    one target are a contiguous slice. A graph may own a subrange of the
    targets, in which case it holds only their edges and faces.
    """
    vertex_count: int
    edges: np.ndarray
    """ (E, 2) edges sorted by (target, source) """
    faces: np.ndarray
    """ (F, 3) faces sorted by (target, passing, source) """
    r_cut: Optional[float]
    """ Face cutoff; None if faces were not built """
    domain: Domain = UNBOUNDED
    target_start: int = 0
    target_stop: Optional[int] = None

    def __post_init__(self):
        if self.target_stop is None:
            object.__setattr__(self, 'target_stop', self.vertex_count)
        object.__setattr__(self, 'edges', _read_only(
            np.asarray(self.edges, dtype=int).reshape(-1, 2)))
        object.__setattr__(self, 'faces', _read_only(
            np.asarray(self.faces, dtype=int).reshape(-1, 3)))
        object.__setattr__(self, '_edge_ptr', _read_only(_offsets(
            self.edges[:, EDGE_TARGET], self.target_start, self.target_stop)))
        object.__setattr__(self, '_face_ptr', _read_only(_offsets(
            self.faces[:, FACE_TARGET], self.target_start, self.target_stop)))

    @property
    def edge_count(self) -> int:
        """ Number of edges """
        return len(self.edges)

    @property
    def face_count(self) -> int:
        """ Number of faces """
        return len(self.faces)

    @property
    def targets(self) -> range:
        """ Targets owned by this graph """
        return range(self.target_start, self.target_stop)

    def edge_slice(self, target: int) -> Tuple[int, int]:
        """
        Get the index range of a target's edges
        :param target: owned target vertex
        :return: tuple of (start, stop)
        """
        offset = target - self.target_start
        return int(self._edge_ptr[offset]), int(self._edge_ptr[offset + 1])

    def face_slice(self, target: int) -> Tuple[int, int]:
        """
        Get the index range of a target's faces
        :param target: owned target vertex
        :return: tuple of (start, stop)
        """
        offset = target - self.target_start
        return int(self._face_ptr[offset]), int(self._face_ptr[offset + 1])

    def restrict(self, start: int, stop: int) -> 'HiGraph':
        """
        Get the subgraph holding the edges and faces of targets [start, stop)
        :param start: first target
        :param stop: end of the target range
        :return: subgraph sharing this graph's vertices
        """
        edge_lo = self.edge_slice(start)[0]
        edge_hi = self.edge_slice(stop - 1)[1]
        face_lo = self.face_slice(start)[0]
        face_hi = self.face_slice(stop - 1)[1]
        return HiGraph(
            vertex_count=self.vertex_count,
            edges=self.edges[edge_lo:edge_hi],
            faces=self.faces[face_lo:face_hi],
            r_cut=self.r_cut, domain=self.domain,
            target_start=start, target_stop=stop)


def all_edges(count: int) -> np.ndarray:
    """
    All N(N−1) directed edges sorted by (target, source)
    :param count: number of vertices
    :return: (N(N−1), 2) array
    """
    targets, sources = np.nonzero(~np.eye(count, dtype=bool))
    return np.stack([targets, sources], axis=1)


def build_faces(positions, r_cut: float,
                domain: Domain = UNBOUNDED) -> np.ndarray:
    """
    All directed faces (i, k, j) with i ≠ j, k ∉ {i, j}, dist(i, k) ≤ r_cut
    and dist(j, k) ≤ r_cut
    :param positions: (N, 3) positions
    :param r_cut: face cutoff
    :param domain: domain; default unbounded
    :return: (F, 3) faces sorted by (target, passing, source)
    """
    neighbors = neighbor_search(positions, r_cut, domain)
    faces = []
    for target, passing_set in enumerate(neighbors):
        for passing in passing_set:
            sources = neighbors[passing]
            sources = sources[sources != target]
            if len(sources):
                block = np.empty((len(sources), 3), dtype=int)
                block[:, 0] = target
                block[:, 1] = passing
                block[:, 2] = sources
                faces.append(block)
    return np.concatenate(faces) if faces else np.empty((0, 3), dtype=int)


def build_graph(positions, domain: Domain = UNBOUNDED,
                r_cut: Optional[float] = None, faces: bool = True) -> HiGraph:
    """
    Build the hypergraph of a configuration

    :param positions: (N, 3) positions
    :param domain: domain; default unbounded
    :param r_cut: face cutoff; required if `faces`
    :param faces: build faces; default True
    :return: graph
    :raises DomainError: non-positive cutoff
    :raises AmbiguousImageError: periodic cutoff longer than half the box
    """
    positions = as_vectors(positions)
    count = len(positions)
    face_array = build_faces(positions, r_cut, domain) if faces \
        else np.empty((0, 3), dtype=int)
    return HiGraph(
        vertex_count=count, edges=all_edges(count), faces=face_array,
        r_cut=r_cut if faces else None, domain=domain)
