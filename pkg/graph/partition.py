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
Target partitioning of a hypergraph for parallel inference
"""
from dataclasses import dataclass
from typing import List, Tuple

from utils import PartitionError
from .hypergraph import HiGraph


@dataclass(frozen=True, eq=False)
class GraphPartition:
    """
    Subgraphs over contiguous disjoint target ranges covering all vertices;
    each holds every vertex but only the edges and faces of its targets
    """
    graph: HiGraph
    subgraphs: Tuple[HiGraph, ...]

    @property
    def n_parts(self) -> int:
        """ Number of subgraphs """
        return len(self.subgraphs)

    @property
    def ranges(self) -> List[Tuple[int, int]]:
        """ Target range (start, stop) of each subgraph """
        return [(sub.target_start, sub.target_stop) for sub in self.subgraphs]


def target_ranges(count: int, n_parts: int) -> List[Tuple[int, int]]:
    """
    Split 0..count-1 into contiguous ranges whose sizes differ by at most 1,
    larger ranges first
    :param count: number of targets
    :param n_parts: number of ranges
    :return: list of (start, stop)
    """
    size, extra = divmod(count, n_parts)
    ranges = []
    start = 0
    for part in range(n_parts):
        stop = start + size + (1 if part < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


def partition_graph(graph: HiGraph, n_parts: int) -> GraphPartition:
    """
    Split a graph into subgraphs over contiguous target ranges

    :param graph: full graph
    :param n_parts: number of subgraphs, 1 ≤ n_parts ≤ N
    :return: partition
    :raises PartitionError: n_parts out of range
    """
    if not 1 <= n_parts <= max(graph.vertex_count, 1):
        raise PartitionError(
            f'Number of parts must be in [1, {graph.vertex_count}], '
            f'got {n_parts}')
    if n_parts == 1:
        return GraphPartition(graph, (graph,))
    return GraphPartition(graph, tuple(
        graph.restrict(start, stop)
        for start, stop in target_ranges(graph.vertex_count, n_parts)
    ))
