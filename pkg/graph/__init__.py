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
Particle hypergraph construction and partitioning
"""
from .constants import (
    EDGE_TARGET, EDGE_SOURCE, FACE_TARGET, FACE_PASSING, FACE_SOURCE
)
from .hypergraph import HiGraph, all_edges, build_faces, build_graph
from .neighbors import pair_distances, neighbor_search, brute_force_neighbors
from .partition import GraphPartition, target_ranges, partition_graph


__all__ = [
    'EDGE_TARGET',
    'EDGE_SOURCE',
    'FACE_TARGET',
    'FACE_PASSING',
    'FACE_SOURCE',

    'HiGraph',
    'all_edges',
    'build_faces',
    'build_graph',

    'pair_distances',
    'neighbor_search',
    'brute_force_neighbors',

    'GraphPartition',
    'target_ranges',
    'partition_graph',
]
