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
Training tests
"""
import tempfile
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np
from numpy.testing import assert_allclose, assert_array_equal
from django.test import SimpleTestCase

from graph import build_graph
from oracle import TrainingSample, stokes_drag
from surrogate import (
    MlpParams, SurrogateParams, init_mlp, init_surrogate, hignn_velocities,
    hignn_gradients, pack_sample, merge_batches
)
from utils import DomainError, TrainingError
from .config import TrainConfig
from .optim import AdamState, adam_step, lr_schedule
from .trainer import (
    batch_gradients, train, write_loss_history, evaluate_relative_errors
)


def planted_params(seed: int = 0) -> SurrogateParams:
    """ Surrogate whose two-body kernel is a known constant block """
    rng = np.random.default_rng(seed)
    hidden = init_mlp(rng, 3, (8,))
    h_theta2 = MlpParams((hidden.layers[0],
                          (np.zeros((8, 18)), np.linspace(-0.3, 0.3, 18))))
    return SurrogateParams(h_theta2, init_mlp(rng, 6, (8,)),
                           stokes_drag(1, 1), face_r_cut=20)


def planted_samples(count: int, seed: int = 1) -> list:
    """ Two-particle samples labelled by the planted surrogate """
    params = planted_params()
    rng = np.random.default_rng(seed)
    samples = []
    for _ in range(count):
        direction = rng.standard_normal(3)
        positions = np.array([
            [0, 0, 0],
            rng.uniform(2.5, 8) * direction / np.linalg.norm(direction)
        ])
        forces = rng.standard_normal((2, 3))
        velocities = hignn_velocities(build_graph(positions, r_cut=20),
                                      positions, forces, params)
        samples.append(TrainingSample(positions, forces, velocities))
    return samples


class TestSchedule(SimpleTestCase):
    """ Learning rate schedule tests """

    def test_examples(self):
        self.assertEqual(lr_schedule(0), 0.001)
        self.assertEqual(lr_schedule(99), 0.001)
        self.assertEqual(lr_schedule(150), 0.0005)
        self.assertEqual(lr_schedule(350), 0.000125)

    def test_negative_epoch(self):
        with self.assertRaises(DomainError):
            lr_schedule(-1)


class TestAdam(SimpleTestCase):
    """ Adam optimiser tests """

    def test_zero_gradients(self):
        weights = [np.array([1.0, -2.0]), np.array([[0.5]])]
        state = AdamState.fresh(weights)
        adam_step(weights, [np.zeros(2), np.zeros((1, 1))], state, 0.1)
        assert_array_equal(weights[0], [1.0, -2.0])
        assert_array_equal(weights[1], [[0.5]])
        self.assertEqual(state.step, 1)

    def test_first_step_magnitude(self):
        for grad in (0.5, -3.0, 1e-3):
            weight = [np.array([2.0])]
            adam_step(weight, [np.array([grad])], AdamState.fresh(weight),
                      0.001)
            self.assertAlmostEqual(abs(weight[0][0] - 2.0), 0.001,
                                   places=8)

    def test_quadratic_bowl(self):
        weight = [np.array([1.0])]
        state = AdamState.fresh(weight)
        for _ in range(500):
            adam_step(weight, [2 * weight[0]], state, 0.01)
        self.assertLess(abs(weight[0][0]), 0.1)

    def test_non_finite_gradient(self):
        weights = [np.array([1.0]), np.array([2.0])]
        state = AdamState.fresh(weights)
        with self.assertRaises(TrainingError) as context:
            adam_step(weights, [np.array([0.1]), np.array([np.nan])], state,
                      0.1, paths=['first', 'second'])
        self.assertEqual(context.exception.path, 'second')
        self.assertEqual(state.step, 0)
        assert_array_equal(weights[0], [1.0])


class TestTrainConfig(SimpleTestCase):
    """ Training settings tests """

    def test_defaults(self):
        config = TrainConfig()
        self.assertEqual(config.batch_size, 512)
        self.assertEqual(config.epochs, 400)
        self.assertEqual(config.hidden_widths, (64, 256, 128, 64))
        self.assertEqual(config.as_dict()['face_r_cut'], 5.0)
        self.assertEqual(config.as_dict()['train_face_r_cut'], 20.0)

    def test_split_sizes(self):
        self.assertEqual(TrainConfig().split_sizes(12), (10, 2))
        self.assertEqual(TrainConfig().split_sizes(2), (1, 1))
        self.assertEqual(TrainConfig(train_parts=3).split_sizes(80),
                         (60, 20))

    def test_invalid(self):
        for kwargs in ({'batch_size': 0}, {'epochs': 0}, {'test_parts': 0},
                       {'base_lr': 0}, {'beta1': 1}, {'seed': -1},
                       {'hidden_widths': ()}):
            with self.assertRaises(DomainError, msg=str(kwargs)):
                TrainConfig(**kwargs)


class TestBatchGradients(SimpleTestCase):
    """ Chunked gradient reduction tests """

    def test_matches_single_batch(self):
        samples = planted_samples(130, seed=5)
        params = init_surrogate(np.random.default_rng(6), stokes_drag(1, 1),
                                hidden_widths=(5,), face_r_cut=20)
        batches = [pack_sample(sample, 20) for sample in samples]
        loss, grads = batch_gradients(batches, params, 1e-30)
        whole_loss, whole_grads = hignn_gradients(merge_batches(batches),
                                                  params)
        self.assertAlmostEqual(loss, whole_loss, places=10)
        for grad, whole in zip(grads, whole_grads):
            assert_allclose(grad, whole, rtol=1e-10, atol=1e-12)

        with ThreadPoolExecutor(max_workers=3) as executor:
            threaded_loss, threaded_grads = batch_gradients(
                batches, params, 1e-30, executor)
        self.assertEqual(threaded_loss, loss)
        for grad, threaded in zip(grads, threaded_grads):
            assert_array_equal(threaded, grad)


class TestTrain(SimpleTestCase):
    """ Training loop tests """

    def config(self, **kwargs) -> TrainConfig:
        """ Small fast settings """
        settings = {
            'batch_size': 8, 'epochs': 3, 'base_lr': 0.01,
            'lr_halving_period': 1000, 'hidden_widths': (8,), 'seed': 3,
        }
        settings.update(kwargs)
        return TrainConfig(**settings)

    def test_deterministic(self):
        samples = planted_samples(24)
        one = train(samples, self.config())
        two = train(samples, self.config())
        self.assertEqual(one.history, two.history)
        for first, second in zip(one.params.arrays(), two.params.arrays()):
            assert_array_equal(first, second)
        three = train(samples, self.config(seed=4))
        self.assertNotEqual(one.history, three.history)

    def test_split(self):
        result = train(planted_samples(24), self.config(epochs=1))
        self.assertEqual(len(result.train_indices), 20)
        self.assertEqual(len(result.test_indices), 4)
        self.assertEqual(
            sorted(np.concatenate([result.train_indices,
                                   result.test_indices])),
            list(range(24)))

    def test_history(self):
        result = train(planted_samples(24), self.config())
        self.assertEqual([entry.epoch for entry in result.history],
                         [0, 1, 2])
        self.assertEqual(result.best_test_loss,
                         min(entry.test_loss for entry in result.history))
        self.assertEqual(
            result.history[result.best_epoch].test_loss,
            result.best_test_loss)
        self.assertEqual(result.params.face_r_cut, 5.0)
        assert_allclose(result.params.alpha1, stokes_drag(1, 1))

    def test_planted_kernel(self):
        """ A realisable two-body kernel is fitted to a test loss of 1e-4 """
        result = train(planted_samples(240),
                       self.config(epochs=1000, hidden_widths=(16,)))
        self.assertLessEqual(result.best_test_loss, 1e-4)

    def test_errors(self):
        samples = planted_samples(3)
        with self.assertRaises(TrainingError):
            train(samples[:1], self.config())
        periodic = TrainingSample(samples[1].positions + 10,
                                  samples[1].forces, samples[1].velocities,
                                  'periodic:40')
        with self.assertRaises(TrainingError):
            train([samples[0], periodic], self.config())

    def test_non_finite_loss(self):
        samples = planted_samples(6)
        broken = TrainingSample(
            samples[0].positions, samples[0].forces,
            np.full_like(samples[0].velocities, np.nan))
        with self.assertRaises(TrainingError) as context:
            train([broken] * 6, self.config(batch_size=64))
        self.assertEqual(context.exception.epoch, 0)
        self.assertEqual(context.exception.batch, 0)


class TestOutputs(SimpleTestCase):
    """ Loss history and evaluation tests """

    def test_write_loss_history(self):
        result = train(planted_samples(12),
                       TrainConfig(batch_size=4, epochs=2,
                                   hidden_widths=(4,)))
        with tempfile.TemporaryDirectory() as folder:
            path = Path(folder) / 'history.csv'
            self.assertEqual(write_loss_history(path, result.history), 2)
            lines = path.read_text('utf-8').splitlines()
        self.assertEqual(lines[0], 'epoch,lr,train_loss,test_loss')
        self.assertTrue(lines[1].startswith('0,0.001,'))
        self.assertEqual(len(lines), 3)

    def test_evaluate_planted(self):
        samples = planted_samples(10)
        errors = evaluate_relative_errors(samples, planted_params())
        self.assertEqual(len(errors.errors), 20)
        self.assertLess(errors.max_error, 1e-12)
        self.assertLessEqual(errors.percentile, errors.max_error)

    def test_evaluate_empty(self):
        with self.assertRaises(TrainingError):
            evaluate_relative_errors([], planted_params())
