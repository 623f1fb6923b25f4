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
Graph tests
"""
from itertools import permutations

import numpy as np
from numpy.testing import assert_array_equal
from django.test import SimpleTestCase

from oracle import PeriodicBox, UNBOUNDED
from utils import AmbiguousImageError, DomainError, PartitionError
from .hypergraph import build_graph
from .neighbors import neighbor_search, brute_force_neighbors, pair_distances
from .partition import partition_graph


def brute_force_faces(positions, r_cut, domain):
    """ Ordered triples satisfying the face predicate """
    positions = np.asarray(positions, dtype=float)

    def dist(one, two):
        return pair_distances(positions[one], positions[[two]], domain)[0]

    return sorted(
        (i, k, j) for i, k, j in permutations(range(len(positions)), 3)
        if dist(i, k) <= r_cut and dist(j, k) <= r_cut
    )


class TestNeighborSearch(SimpleTestCase):
    """ Neighbour search tests """

    def test_inclusive_boundary(self):
        neighbors = neighbor_search([[0, 0, 0], [2.5, 0, 0]], 2.5)
        assert_array_equal(neighbors[0], [1])
        assert_array_equal(neighbors[1], [0])

    def test_matches_brute_force(self):
        rng = np.random.default_rng(21)
        positions = rng.uniform(0, 20, (100, 3))
        for r_cut in (1.0, 3.0, 7.5):
            fast = neighbor_search(positions, r_cut)
            slow = brute_force_neighbors(positions, r_cut)
            for one, two in zip(fast, slow):
                assert_array_equal(one, two)

    def test_periodic_matches_brute_force(self):
        rng = np.random.default_rng(22)
        box = PeriodicBox(20.0)
        positions = rng.uniform(0, 20, (100, 3))
        for r_cut in (2.0, 4.5, 10.0):
            fast = neighbor_search(positions, r_cut, box)
            slow = brute_force_neighbors(positions, r_cut, box)
            for one, two in zip(fast, slow):
                assert_array_equal(one, two)

    def test_minimum_image(self):
        neighbors = neighbor_search([[1, 0, 0], [31, 0, 0]], 5,
                                    PeriodicBox(32))
        assert_array_equal(neighbors[0], [1])
        self.assertEqual(pair_distances(np.array([1.0, 0, 0]),
                                        np.array([[31.0, 0, 0]]),
                                        PeriodicBox(32))[0], 2)
        self.assertEqual(
            len(neighbor_search([[1, 0, 0], [31, 0, 0]], 5)[0]), 0)

    def test_symmetric(self):
        rng = np.random.default_rng(23)
        neighbors = neighbor_search(rng.uniform(0, 10, (60, 3)), 2.0)
        for i, found in enumerate(neighbors):
            for j in found:
                self.assertIn(i, neighbors[j])

    def test_errors(self):
        with self.assertRaises(AmbiguousImageError):
            neighbor_search([[1, 1, 1]], 17, PeriodicBox(32))
        with self.assertRaises(DomainError):
            neighbor_search([[1, 1, 1]], 0)


class TestBuildGraph(SimpleTestCase):
    """ Hypergraph construction tests """

    def test_single_vertex(self):
        graph = build_graph([[0, 0, 0]], r_cut=5)
        self.assertEqual(graph.edge_count, 0)
        self.assertEqual(graph.face_count, 0)

    def test_edge_count(self):
        rng = np.random.default_rng(31)
        for count in [1, 2, 4] + list(rng.integers(1, 40, 5)):
            graph = build_graph(rng.uniform(0, 30, (count, 3)), r_cut=5)
            self.assertEqual(graph.edge_count, count * (count - 1))
            edges = [tuple(edge) for edge in graph.edges]
            self.assertEqual(edges, sorted(set(edges)))
            self.assertTrue(all(i != j for i, j in edges))

    def test_three_particles(self):
        close = build_graph([[0, 0, 0], [3, 0, 0], [0, 3, 0]], r_cut=5)
        self.assertEqual(close.edge_count, 6)
        self.assertEqual(close.face_count, 6)
        apart = build_graph([[0, 0, 0], [30, 0, 0], [0, 30, 0]], r_cut=5)
        self.assertEqual(apart.edge_count, 6)
        self.assertEqual(apart.face_count, 0)

    def test_faces_match_brute_force(self):
        rng = np.random.default_rng(33)
        for domain in (UNBOUNDED, PeriodicBox(16.0)):
            for _ in range(10):
                count = int(rng.integers(2, 31))
                positions = rng.uniform(0, 16, (count, 3))
                graph = build_graph(positions, domain, r_cut=5)
                self.assertEqual(
                    [tuple(face) for face in graph.faces],
                    brute_force_faces(positions, 5, domain))

    def test_target_slices(self):
        rng = np.random.default_rng(34)
        graph = build_graph(rng.uniform(0, 8, (12, 3)), r_cut=4)
        for target in graph.targets:
            start, stop = graph.edge_slice(target)
            self.assertTrue(np.all(graph.edges[start:stop, 0] == target))
            start, stop = graph.face_slice(target)
            self.assertTrue(np.all(graph.faces[start:stop, 0] == target))

    def test_without_faces(self):
        graph = build_graph([[0, 0, 0], [3, 0, 0], [0, 3, 0]], faces=False)
        self.assertEqual(graph.face_count, 0)
        self.assertIsNone(graph.r_cut)


class TestPartition(SimpleTestCase):
    """ Graph partition tests """

    def test_single_part(self):
        graph = build_graph(np.random.default_rng(41).uniform(0, 9, (10, 3)),
                            r_cut=4)
        partition = partition_graph(graph, 1)
        self.assertIs(partition.subgraphs[0], graph)

    def test_halves(self):
        graph = build_graph(np.random.default_rng(42).uniform(0, 9, (10, 3)),
                            faces=False)
        partition = partition_graph(graph, 2)
        self.assertEqual(partition.ranges, [(0, 5), (5, 10)])
        self.assertTrue(
            np.all(partition.subgraphs[0].edges[:, 0] < 5))

    def test_union_is_graph(self):
        rng = np.random.default_rng(43)
        graph = build_graph(rng.uniform(0, 9, (23, 3)), r_cut=4)
        for n_parts in (2, 3, 7, 23):
            partition = partition_graph(graph, n_parts)
            sizes = [stop - start for start, stop in partition.ranges]
            self.assertLessEqual(max(sizes) - min(sizes), 1)
            self.assertEqual(sum(sizes), 23)
            assert_array_equal(
                np.concatenate([sub.edges for sub in partition.subgraphs]),
                graph.edges)
            assert_array_equal(
                np.concatenate([sub.faces for sub in partition.subgraphs]),
                graph.faces)

    def test_out_of_range(self):
        graph = build_graph(np.zeros((1, 3)) + [[0, 0, 0]], faces=False)
        for n_parts in (0, 2):
            with self.assertRaises(PartitionError):
                partition_graph(graph, n_parts)
