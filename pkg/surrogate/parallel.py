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
Partitioned parallel inference
"""
import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from graph import GraphPartition
from utils import ParallelInferenceError, PartitionError
from .conv import check_inputs, single_body_velocities, target_velocities
from .params import SurrogateParams


logger = logging.getLogger(__name__)


def _snapshot(array: np.ndarray) -> np.ndarray:
    snapshot = np.array(array, dtype=float)
    snapshot.flags.writeable = False
    return snapshot


def parallel_infer(partition: GraphPartition, positions, forces,
                   params: SurrogateParams, n_workers: int,
                   use_faces: bool = True) -> np.ndarray:
    """
    Surrogate velocities with the subgraphs of a partition evaluated by a
    pool of workers. The result is bitwise identical to `hignn_velocities`
    on the full graph.

    :param partition: graph partition
    :param positions: (N, 3) positions
    :param forces: (N, 3) forces
    :param params: parameters; read only
    :param n_workers: number of workers
    :param use_faces: include three-body contributions; default True
    :return: (N, 3) velocities
    :raises PartitionError: fewer than one worker
    :raises ParallelInferenceError: one or more subgraphs failed
    """
    if n_workers < 1:
        raise PartitionError(f'Need at least one worker, got {n_workers}')
    positions, forces = check_inputs(partition.graph, positions, forces)
    # one read-only copy shared by every worker
    positions = _snapshot(positions)
    forces = _snapshot(forces)
    single_body = single_body_velocities(forces, params)
    single_body.flags.writeable = False

    velocities = np.empty((partition.graph.vertex_count, 3))
    failures = []
    with ThreadPoolExecutor(max_workers=n_workers) as executor:
        futures = [
            executor.submit(target_velocities, subgraph, positions, forces,
                            params, single_body, use_faces)
            for subgraph in partition.subgraphs
        ]
        for part, (subgraph, future) in enumerate(
                zip(partition.subgraphs, futures)):
            try:
                velocities[subgraph.target_start:subgraph.target_stop] = \
                    future.result()
            except Exception as exc:    # pylint: disable=broad-exception-caught
                logger.error('Inference of partition %d failed: %r',
                             part, exc)
                failures.append((part, exc))
    if failures:
        raise ParallelInferenceError(failures)
    return velocities
