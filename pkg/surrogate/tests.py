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
Surrogate tests
"""
import json
import tempfile
from itertools import permutations
from pathlib import Path
from unittest.mock import patch

import numpy as np
from numpy.testing import assert_allclose, assert_array_equal
from django.test import SimpleTestCase

from graph import build_graph, partition_graph
from oracle import (
    ParticleSystem, PeriodicBox, TrainingSample, UNBOUNDED, stokes_drag,
    oracle_velocities
)
from utils import (
    DomainError, ModelFormatError, ParallelInferenceError, PartitionError,
    ShapeError
)
from .backend import SurrogateBackend
from .conv import edge_conv, face_conv, hignn_velocities
from .gradients import (
    pack_sample, pack_samples, batch_velocities, hignn_loss, hignn_gradients
)
from .loss import relative_mse_loss
from .mlp import MlpParams, init_mlp, mlp_forward, mlp_input_jacobian
from .parallel import parallel_infer
from .params import (
    SurrogateParams, init_surrogate, save_model, load_model, model_hash,
    model_to_json
)

SMALL_WIDTHS = (6, 5)


def small_params(seed: int = 1, face_r_cut: float = 5.0) -> SurrogateParams:
    """ Randomly initialised surrogate with a small architecture """
    return init_surrogate(np.random.default_rng(seed), stokes_drag(1, 1),
                          hidden_widths=SMALL_WIDTHS, face_r_cut=face_r_cut)


def zero_mlp(input_width: int, bias=None) -> MlpParams:
    """ MLP with zero weights and an optional output bias """
    layers = (
        (np.zeros((input_width, 4)), np.zeros(4)),
        (np.zeros((4, 18)), np.zeros(18) if bias is None else bias),
    )
    return MlpParams(layers)


def oracle_sample(rng: np.random.Generator, n: int = 3) -> TrainingSample:
    """ Random well separated configuration with order-3 velocities """
    while True:
        positions = rng.uniform(-5, 5, (n, 3))
        system = ParticleSystem(positions)
        if system.min_gap() > 0.5:
            break
    forces = rng.standard_normal((n, 3))
    return TrainingSample(positions, forces,
                          oracle_velocities(system, forces, 3))


class TestMlp(SimpleTestCase):
    """ Multilayer perceptron tests """

    def test_zero(self):
        assert_array_equal(mlp_forward(zero_mlp(3), [0.3, -1, 2]),
                           np.zeros((3, 6)))

    def test_output_bias(self):
        bias = np.arange(18.0)
        for inputs in ([0, 0, 0], [5, -3, 1]):
            assert_array_equal(mlp_forward(zero_mlp(3, bias), inputs),
                               bias.reshape(3, 6))

    def test_input_jacobian(self):
        rng = np.random.default_rng(3)
        params = init_mlp(rng, 6, SMALL_WIDTHS)
        inputs = rng.standard_normal(6)
        jacobian = mlp_input_jacobian(params, inputs)
        step = 1e-6
        for col in range(6):
            shift = np.zeros(6)
            shift[col] = step
            numeric = (mlp_forward(params, inputs + shift)
                       - mlp_forward(params, inputs - shift)).ravel() \
                / (2 * step)
            assert_allclose(jacobian[:, col], numeric, rtol=1e-5,
                            atol=1e-9)

    def test_width_mismatch(self):
        with self.assertRaises(ShapeError):
            mlp_forward(zero_mlp(3), [1, 2, 3, 4])

    def test_invalid_layers(self):
        with self.assertRaises(ShapeError):
            MlpParams(((np.zeros((3, 4)), np.zeros(5)),))
        with self.assertRaises(ShapeError):
            MlpParams(((np.zeros((3, 4)), np.zeros(4)),))
        with self.assertRaises(DomainError):
            MlpParams(((np.full((3, 18), np.nan), np.zeros(18)),))


def brute_force_edges(positions, forces, params, domain=UNBOUNDED):
    """ Double loop over ordered pairs """
    count = len(positions)
    out = np.zeros((count, 3))
    for i in range(count):
        for j in range(count):
            if i != j:
                relative = domain.minimum_image(positions[j] - positions[i])
                out[i] += mlp_forward(params, relative) \
                    @ np.concatenate([forces[i], forces[j]])
    return out


def brute_force_faces(positions, forces, params, r_cut, domain=UNBOUNDED):
    """ Triple loop over the face predicate """
    count = len(positions)
    out = np.zeros((count, 3))
    for i, k, j in permutations(range(count), 3):
        to_j = domain.minimum_image(positions[j] - positions[i])
        to_k = domain.minimum_image(positions[k] - positions[i])
        k_to_j = domain.minimum_image(positions[j] - positions[k])
        if np.linalg.norm(to_k) <= r_cut and np.linalg.norm(k_to_j) <= r_cut:
            out[i] += mlp_forward(params, np.concatenate([to_j, to_k])) \
                @ np.concatenate([forces[i], forces[j]])
    return out


class TestConv(SimpleTestCase):
    """ Edge and face convolution tests """

    def test_edge_conv_brute_force(self):
        rng = np.random.default_rng(11)
        params = small_params(11)
        for count in (2, 5, 10):
            positions = rng.uniform(0, 10, (count, 3))
            forces = rng.standard_normal((count, 3))
            graph = build_graph(positions, faces=False)
            assert_allclose(
                edge_conv(graph, positions, forces, params.h_theta2),
                brute_force_edges(positions, forces, params.h_theta2),
                rtol=1e-12, atol=1e-12)

    def test_face_conv_brute_force(self):
        rng = np.random.default_rng(12)
        params = small_params(12)
        # all faces active
        positions = rng.uniform(0, 2, (4, 3))
        forces = rng.standard_normal((4, 3))
        graph = build_graph(positions, r_cut=5)
        self.assertEqual(graph.face_count, 4 * 3 * 2)
        assert_allclose(
            face_conv(graph, positions, forces, params.g_theta3),
            brute_force_faces(positions, forces, params.g_theta3, 5),
            rtol=1e-12, atol=1e-12)
        # partially active, periodic
        box = PeriodicBox(12.0)
        for count in (3, 6, 10):
            positions = rng.uniform(0, 12, (count, 3))
            forces = rng.standard_normal((count, 3))
            graph = build_graph(positions, box, r_cut=4)
            assert_allclose(
                face_conv(graph, positions, forces, params.g_theta3),
                brute_force_faces(positions, forces, params.g_theta3, 4, box),
                rtol=1e-12, atol=1e-12)

    def test_zero_forces(self):
        rng = np.random.default_rng(13)
        params = small_params(13)
        positions = rng.uniform(0, 5, (6, 3))
        graph = build_graph(positions, r_cut=5)
        forces = np.zeros((6, 3))
        assert_array_equal(
            edge_conv(graph, positions, forces, params.h_theta2), 0)
        assert_array_equal(
            face_conv(graph, positions, forces, params.g_theta3), 0)

    def test_no_faces(self):
        params = small_params(14)
        positions = np.array([[0, 0, 0], [30, 0, 0], [0, 30, 0.0]])
        graph = build_graph(positions, r_cut=5)
        assert_array_equal(
            face_conv(graph, positions, np.ones((3, 3)), params.g_theta3), 0)

    def test_single_particle(self):
        params = small_params(15)
        graph = build_graph([[1, 2, 3]], r_cut=5)
        assert_array_equal(
            edge_conv(graph, [[1, 2, 3]], [[0, 0, -1]], params.h_theta2), 0)
        velocities = hignn_velocities(graph, [[1, 2, 3]], [[0, 0, -1]],
                                      params)
        assert_allclose(velocities, [[0, 0, -1 / (6 * np.pi)]], rtol=1e-15)

    def test_linear_in_forces(self):
        rng = np.random.default_rng(16)
        params = small_params(16)
        positions = rng.uniform(0, 6, (8, 3))
        graph = build_graph(positions, r_cut=5)
        one, two = rng.standard_normal((2, 8, 3))
        combined = hignn_velocities(graph, positions, 2.5 * one - 0.7 * two,
                                    params)
        expected = 2.5 * hignn_velocities(graph, positions, one, params) \
            - 0.7 * hignn_velocities(graph, positions, two, params)
        assert_allclose(combined, expected, rtol=1e-12, atol=1e-12)

    def test_permutation_equivariance(self):
        rng = np.random.default_rng(17)
        params = small_params(17)
        positions = rng.uniform(0, 6, (9, 3))
        forces = rng.standard_normal((9, 3))
        order = rng.permutation(9)
        velocities = hignn_velocities(build_graph(positions, r_cut=5),
                                      positions, forces, params)
        permuted = hignn_velocities(
            build_graph(positions[order], r_cut=5), positions[order],
            forces[order], params)
        assert_allclose(permuted, velocities[order], rtol=1e-12, atol=1e-14)

    def test_translation_invariance(self):
        rng = np.random.default_rng(18)
        params = small_params(18)
        positions = rng.uniform(0, 6, (7, 3))
        forces = rng.standard_normal((7, 3))
        shifted = positions + [3.0, -7.0, 11.0]
        assert_allclose(
            hignn_velocities(build_graph(shifted, r_cut=5), shifted,
                             forces, params),
            hignn_velocities(build_graph(positions, r_cut=5), positions,
                             forces, params),
            rtol=1e-12, atol=1e-12)

    def test_periodic_wrap(self):
        rng = np.random.default_rng(19)
        params = small_params(19, face_r_cut=4)
        box = PeriodicBox(10.0)
        positions = rng.uniform(0, 10, (6, 3))
        forces = rng.standard_normal((6, 3))
        wrapped = box.wrap(positions + [9.5, 0.25, -3.0])
        assert_allclose(
            hignn_velocities(build_graph(wrapped, box, r_cut=4), wrapped,
                             forces, params),
            hignn_velocities(build_graph(positions, box, r_cut=4), positions,
                             forces, params),
            rtol=1e-10, atol=1e-12)

    def test_edges_only(self):
        rng = np.random.default_rng(20)
        params = small_params(20)
        positions = rng.uniform(0, 4, (5, 3))
        forces = rng.standard_normal((5, 3))
        graph = build_graph(positions, r_cut=5)
        assert_allclose(
            hignn_velocities(graph, positions, forces, params,
                             use_faces=False),
            forces @ params.alpha1.T
            + edge_conv(graph, positions, forces, params.h_theta2),
            rtol=1e-14, atol=1e-15)

    def test_shape_mismatch(self):
        graph = build_graph(np.zeros((2, 3)) + [[0, 0, 0], [3, 0, 0]],
                            r_cut=5)
        with self.assertRaises(ShapeError):
            hignn_velocities(graph, [[0, 0, 0], [3, 0, 0]], [[0, 0, 1]],
                             small_params())


class TestLoss(SimpleTestCase):
    """ Relative loss tests """

    def test_examples(self):
        self.assertEqual(relative_mse_loss([[1, 2, 3]], [[1, 2, 3]]), 0)
        self.assertEqual(relative_mse_loss([[0, 0, 0]], [[0.2, -1, 4]]), 1)
        self.assertAlmostEqual(
            relative_mse_loss([[0.9, 0, 0]], [[1, 0, 0]]), 0.01, places=15)

    def test_scale_aware(self):
        predicted = np.array([[0.9, 0.1, 0], [2, 0, 1]])
        truth = np.array([[1.0, 0, 0], [2, 0, 0.5]])
        scaled_predicted = predicted.copy()
        scaled_truth = truth.copy()
        scaled_predicted[1] *= 1e-3
        scaled_truth[1] *= 1e-3
        self.assertAlmostEqual(
            relative_mse_loss(predicted, truth),
            relative_mse_loss(scaled_predicted, scaled_truth), places=14)

    def test_guard(self):
        self.assertTrue(np.isfinite(
            relative_mse_loss([[1, 0, 0]], [[0, 0, 0]])))

    def test_shape_mismatch(self):
        with self.assertRaises(ShapeError):
            relative_mse_loss([[1, 0, 0]], [[1, 0, 0], [0, 1, 0]])


class TestGradients(SimpleTestCase):
    """ Reverse-mode gradient tests """

    def setUp(self):
        rng = np.random.default_rng(51)
        self.samples = [oracle_sample(rng) for _ in range(2)]

    def test_batch_matches_graph_evaluation(self):
        params = small_params(52)
        for sample in self.samples:
            graph = build_graph(sample.positions, r_cut=params.face_r_cut)
            assert_allclose(
                batch_velocities(pack_sample(sample, params.face_r_cut),
                                 params),
                hignn_velocities(graph, sample.positions, sample.forces,
                                 params),
                rtol=1e-12, atol=1e-14)

    def test_finite_differences(self):
        params = small_params(53)
        batch = pack_samples(self.samples, params.face_r_cut)
        loss, grads = hignn_gradients(batch, params)
        self.assertAlmostEqual(loss, hignn_loss(batch, params), places=10)

        rng = np.random.default_rng(54)
        arrays = params.arrays()
        step = 1e-6
        for _ in range(20):
            which = int(rng.integers(len(arrays)))
            index = tuple(int(rng.integers(size))
                          for size in arrays[which].shape)
            original = arrays[which][index]
            arrays[which][index] = original + step
            upper = hignn_loss(batch, params)
            arrays[which][index] = original - step
            lower = hignn_loss(batch, params)
            arrays[which][index] = original
            numeric = (upper - lower) / (2 * step)
            scale = max(abs(grads[which][index]), abs(numeric), 1e-3)
            self.assertLessEqual(
                abs(grads[which][index] - numeric) / scale, 1e-4,
                msg=f'{params.paths()[which]}{index}')

    def test_gradient_shapes(self):
        params = small_params(55)
        _, grads = hignn_gradients(
            pack_samples(self.samples, params.face_r_cut), params)
        self.assertEqual([grad.shape for grad in grads],
                         [array.shape for array in params.arrays()])

    def test_duplicated_sample(self):
        params = small_params(56)
        single = pack_samples(self.samples[:1], params.face_r_cut)
        double = pack_samples(self.samples[:1] * 2, params.face_r_cut)
        loss_one, grads_one = hignn_gradients(single, params)
        loss_two, grads_two = hignn_gradients(double, params)
        self.assertAlmostEqual(loss_one, loss_two, places=12)
        for one, two in zip(grads_one, grads_two):
            assert_allclose(two, one, rtol=1e-12, atol=1e-15)

    def test_zero_velocity_guard(self):
        params = small_params(57)
        sample = self.samples[0]
        zero = TrainingSample(sample.positions, sample.forces,
                              np.zeros_like(sample.velocities))
        loss, grads = hignn_gradients(
            pack_sample(zero, params.face_r_cut), params)
        self.assertTrue(np.isfinite(loss))
        self.assertTrue(all(np.all(np.isfinite(grad)) for grad in grads))


class TestParallel(SimpleTestCase):
    """ Partitioned parallel inference tests """

    def setUp(self):
        rng = np.random.default_rng(61)
        self.params = small_params(61)
        self.positions = rng.uniform(0, 40, (500, 3))
        self.forces = rng.standard_normal((500, 3))
        self.graph = build_graph(self.positions, r_cut=5)

    def test_bitwise_equal_to_serial(self):
        serial = hignn_velocities(self.graph, self.positions, self.forces,
                                  self.params)
        for workers in (1, 2, 4, 8):
            partition = partition_graph(self.graph, workers)
            assert_array_equal(
                parallel_infer(partition, self.positions, self.forces,
                               self.params, workers), serial)

    def test_more_parts_than_workers(self):
        serial = hignn_velocities(self.graph, self.positions, self.forces,
                                  self.params, use_faces=False)
        assert_array_equal(
            parallel_infer(partition_graph(self.graph, 7), self.positions,
                           self.forces, self.params, 3, use_faces=False),
            serial)

    def test_aggregate_failure(self):
        partition = partition_graph(self.graph, 4)
        with patch('surrogate.parallel.target_velocities',
                   side_effect=RuntimeError('boom')):
            with self.assertRaises(ParallelInferenceError) as context:
                parallel_infer(partition, self.positions, self.forces,
                               self.params, 2)
        self.assertEqual([part for part, _ in context.exception.failures],
                         [0, 1, 2, 3])

    def test_no_workers(self):
        with self.assertRaises(PartitionError):
            parallel_infer(partition_graph(self.graph, 1), self.positions,
                           self.forces, self.params, 0)


class TestParams(SimpleTestCase):
    """ Parameter and model file tests """

    def test_alpha1_diagonal_positive(self):
        params = small_params()
        with self.assertRaises(DomainError):
            SurrogateParams(params.h_theta2, params.g_theta3,
                            np.ones((3, 3)))
        with self.assertRaises(DomainError):
            SurrogateParams(params.h_theta2, params.g_theta3, -np.eye(3))
        with self.assertRaises(ShapeError):
            SurrogateParams(params.g_theta3, params.h_theta2, np.eye(3))

    def test_init_deterministic(self):
        one, two = small_params(7), small_params(7)
        for first, second in zip(one.arrays(), two.arrays()):
            assert_array_equal(first, second)
        self.assertEqual(one.paths()[0], 'h_theta2.layers[0].weight')
        self.assertEqual(one.paths()[-1], 'g_theta3.layers[2].bias')

    def test_save_load(self):
        params = small_params(8, face_r_cut=20)
        with tempfile.TemporaryDirectory() as folder:
            path = Path(folder) / 'model.json'
            digest = save_model(path, params)
            loaded = load_model(path)
            self.assertEqual(digest, model_hash(path.read_text('utf-8')))
        for first, second in zip(params.arrays(), loaded.arrays()):
            assert_array_equal(first, second)
        assert_array_equal(loaded.alpha1, params.alpha1)
        self.assertEqual(loaded.face_r_cut, 20)
        self.assertEqual(model_hash(loaded), digest)

    def test_json_floats(self):
        """ Model floats are written with 17 significant digits """
        params = init_surrogate(np.random.default_rng(2), np.eye(3) * 0.1,
                                hidden_widths=SMALL_WIDTHS, face_r_cut=2.5)
        text = model_to_json(params)
        self.assertIn('0.10000000000000001', text)
        self.assertIn('2.5', text)
        weight = params.h_theta2.layers[0][0].flat[0]
        self.assertIn(format(weight, '.17g'), text)
        with tempfile.TemporaryDirectory() as folder:
            path = Path(folder) / 'model.json'
            path.write_text(text, 'utf-8')
            loaded = load_model(path)
        for first, second in zip(params.arrays(), loaded.arrays()):
            assert_array_equal(first, second)
        assert_array_equal(loaded.alpha1, params.alpha1)
        self.assertEqual(loaded.face_r_cut, 2.5)
        self.assertEqual(model_to_json(loaded), text)

    def test_bad_files(self):
        content = json.loads(model_to_json(small_params()))
        with tempfile.TemporaryDirectory() as folder:
            path = Path(folder) / 'model.json'
            for change in (
                    {'format_version': 2},
                    {'activation': 'relu'},
                    {'alpha1': [1, 1]},
                    {'face_r_cut': 'far'},
            ):
                path.write_text(json.dumps({**content, **change}))
                with self.assertRaises(ModelFormatError, msg=str(change)):
                    load_model(path)
            broken = json.loads(json.dumps(content))
            broken['h_theta2']['layers'][0]['weight'].pop()
            path.write_text(json.dumps(broken))
            with self.assertRaises(ModelFormatError):
                load_model(path)
            path.write_text('{"format_version": 1,')
            with self.assertRaises(ModelFormatError):
                load_model(path)


class TestSurrogateBackend(SimpleTestCase):
    """ Surrogate backend tests """

    def test_velocities(self):
        rng = np.random.default_rng(71)
        params = small_params(71)
        system = ParticleSystem(rng.uniform(0, 12, (20, 3)))
        forces = rng.standard_normal((20, 3))
        graph = build_graph(system.positions, r_cut=params.face_r_cut)
        backend = SurrogateBackend(params, workers=3)
        assert_array_equal(
            backend.velocities(system, forces),
            hignn_velocities(graph, system.positions, forces, params))
        assert_array_equal(
            backend.without_faces().velocities(system, forces),
            hignn_velocities(graph, system.positions, forces, params,
                             use_faces=False))

    def test_single_body_follows_system(self):
        params = small_params(73)
        backend = SurrogateBackend(params)
        forces = [[0.0, 0.0, -1.0]]
        periodic = ParticleSystem([[5.0, 5.0, 5.0]], domain=PeriodicBox(32))
        assert_allclose(backend.velocities(periodic, forces),
                        [[0.0, 0.0, -0.982 / (6 * np.pi)]], rtol=1e-15)
        assert_allclose(
            SurrogateBackend(params, periodic_constant=0.9)
            .velocities(periodic, forces),
            [[0.0, 0.0, -0.9 / (6 * np.pi)]], rtol=1e-15)
        viscous = ParticleSystem([[5.0, 5.0, 5.0]], radius=0.5, viscosity=2)
        assert_allclose(backend.velocities(viscous, forces),
                        [[0.0, 0.0, -1 / (6 * np.pi)]], rtol=1e-15)
        # stored model unchanged
        assert_array_equal(backend.params.alpha1, stokes_drag(1, 1))

    def test_metadata(self):
        params = small_params(72)
        metadata = SurrogateBackend(params).metadata()
        self.assertEqual(metadata['model_hash'], model_hash(params))
        self.assertTrue(metadata['use_faces'])
        self.assertFalse(
            SurrogateBackend(params).without_faces().metadata()['use_faces'])
