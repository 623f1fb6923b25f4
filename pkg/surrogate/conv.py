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
Edge and face convolutions and the surrogate velocity prediction

Every target is evaluated on its own contiguous block of edges or faces, so
a target's sums are the same whether the graph is whole or a subgraph of a
partition.
"""
from typing import Tuple

import numpy as np

from graph import HiGraph, EDGE_SOURCE, FACE_PASSING, FACE_SOURCE
from oracle import as_vectors
from .mlp import MlpParams, mlp_forward_batch
from .params import SurrogateParams


def check_inputs(graph: HiGraph, positions, forces
                 ) -> Tuple[np.ndarray, np.ndarray]:
    """
    Check positions and forces match the graph's vertices
    :param graph: graph
    :param positions: (N, 3) positions
    :param forces: (N, 3) forces
    :return: tuple of (positions, forces) arrays
    :raises ShapeError: length mismatch
    """
    return (as_vectors(positions, count=graph.vertex_count),
            as_vectors(forces, name='forces', count=graph.vertex_count))


def _apply(blocks: np.ndarray, force_features: np.ndarray) -> np.ndarray:
    """ Per-row 3×6 block times 6-vector, summed over rows """
    return np.einsum('eab,eb->ea', blocks, force_features).sum(axis=0)


def _force_features(forces: np.ndarray, target: int,
                    sources: np.ndarray) -> np.ndarray:
    """ [F_i; F_j] for each source j """
    features = np.empty((len(sources), 6))
    features[:, :3] = forces[target]
    features[:, 3:] = forces[sources]
    return features


def _edge_sums(graph: HiGraph, positions: np.ndarray, forces: np.ndarray,
               h_theta2: MlpParams) -> np.ndarray:
    sums = np.zeros((len(graph.targets), 3))
    for row, target in enumerate(graph.targets):
        start, stop = graph.edge_slice(target)
        if start == stop:
            continue
        sources = graph.edges[start:stop, EDGE_SOURCE]
        relative = graph.domain.minimum_image(
            positions[sources] - positions[target])
        blocks, _ = mlp_forward_batch(h_theta2, relative)
        sums[row] = _apply(blocks, _force_features(forces, target, sources))
    return sums


def _face_sums(graph: HiGraph, positions: np.ndarray, forces: np.ndarray,
               g_theta3: MlpParams) -> np.ndarray:
    sums = np.zeros((len(graph.targets), 3))
    for row, target in enumerate(graph.targets):
        start, stop = graph.face_slice(target)
        if start == stop:
            continue
        passing = graph.faces[start:stop, FACE_PASSING]
        sources = graph.faces[start:stop, FACE_SOURCE]
        relative = np.empty((stop - start, 6))
        relative[:, :3] = graph.domain.minimum_image(
            positions[sources] - positions[target])
        relative[:, 3:] = graph.domain.minimum_image(
            positions[passing] - positions[target])
        blocks, _ = mlp_forward_batch(g_theta3, relative)
        sums[row] = _apply(blocks, _force_features(forces, target, sources))
    return sums


def edge_conv(graph: HiGraph, positions, forces,
              h_theta2: MlpParams) -> np.ndarray:
    """
    Two-body aggregation; out_i = Σ over edges (i, j) of
    h_theta2(X_j − X_i)·[F_i; F_j]

    :param graph: graph
    :param positions: (N, 3) positions
    :param forces: (N, 3) forces
    :param h_theta2: two-body kernel
    :return: (N, 3) sums; zero for targets the graph does not own
    :raises ShapeError: length mismatch
    """
    positions, forces = check_inputs(graph, positions, forces)
    out = np.zeros((graph.vertex_count, 3))
    out[graph.target_start:graph.target_stop] = _edge_sums(
        graph, positions, forces, h_theta2)
    return out


def face_conv(graph: HiGraph, positions, forces,
              g_theta3: MlpParams) -> np.ndarray:
    """
    Three-body aggregation; out_i = Σ over faces (i, k, j) of
    g_theta3(X_j − X_i, X_k − X_i)·[F_i; F_j]

    :param graph: graph
    :param positions: (N, 3) positions
    :param forces: (N, 3) forces
    :param g_theta3: three-body kernel
    :return: (N, 3) sums; zero for targets the graph does not own
    :raises ShapeError: length mismatch
    """
    positions, forces = check_inputs(graph, positions, forces)
    out = np.zeros((graph.vertex_count, 3))
    out[graph.target_start:graph.target_stop] = _face_sums(
        graph, positions, forces, g_theta3)
    return out


def single_body_velocities(forces: np.ndarray,
                           params: SurrogateParams) -> np.ndarray:
    """
    alpha1·F_i for every particle
    :param forces: (N, 3) forces
    :param params: parameters
    :return: (N, 3) velocities
    """
    return forces @ params.alpha1.T


def target_velocities(graph: HiGraph, positions: np.ndarray,
                      forces: np.ndarray, params: SurrogateParams,
                      single_body: np.ndarray,
                      use_faces: bool = True) -> np.ndarray:
    """
    Velocities of the targets owned by a graph

    :param graph: graph or subgraph
    :param positions: (N, 3) positions of all vertices
    :param forces: (N, 3) forces of all vertices
    :param params: parameters
    :param single_body: (N, 3) single-body velocities of all vertices
    :param use_faces: include three-body contributions; default True
    :return: (number of owned targets, 3) velocities
    """
    rows = single_body[graph.target_start:graph.target_stop] \
        + _edge_sums(graph, positions, forces, params.h_theta2)
    if use_faces:
        rows = rows + _face_sums(graph, positions, forces, params.g_theta3)
    return rows


def hignn_velocities(graph: HiGraph, positions, forces,
                     params: SurrogateParams,
                     use_faces: bool = True) -> np.ndarray:
    """
    Surrogate velocities; U_i = alpha1·F_i + edge_conv_i + face_conv_i

    :param graph: full graph of the configuration
    :param positions: (N, 3) positions
    :param forces: (N, 3) forces
    :param params: parameters
    :param use_faces: include three-body contributions; default True
    :return: (N, 3) velocities
    :raises ShapeError: length mismatch
    """
    positions, forces = check_inputs(graph, positions, forces)
    velocities = single_body_velocities(forces, params)
    velocities[graph.target_start:graph.target_stop] = target_velocities(
        graph, positions, forces, params, velocities, use_faces=use_faces)
    return velocities
