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
Training loop, loss history and held-out evaluation
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from oracle import TrainingSample, stokes_drag
from surrogate import (
    SurrogateParams, PackedBatch, init_surrogate, pack_sample, merge_batches,
    hignn_gradients, batch_velocities, relative_mse_loss
)
from utils import TrainingError, write_csv
from .config import TrainConfig
from .constants import GRADIENT_CHUNK, ERROR_PERCENTILE, LOSS_HISTORY_HEADER
from .optim import AdamState, adam_step, lr_schedule


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EpochLoss:
    """
    Losses after one epoch
    """
    epoch: int
    lr: float
    train_loss: float
    """ Term-weighted mean of the epoch's batch losses """
    test_loss: float


@dataclass
class TrainResult:
    """
    Best-on-test parameters and the loss history
    """
    params: SurrogateParams
    history: List[EpochLoss] = field(default_factory=list)
    best_epoch: int = -1
    best_test_loss: float = np.inf
    initial_test_loss: float = np.inf
    train_indices: Optional[np.ndarray] = None
    test_indices: Optional[np.ndarray] = None


def _chunks(batches: Sequence[PackedBatch]) -> List[PackedBatch]:
    return [merge_batches(batches[start:start + GRADIENT_CHUNK])
            for start in range(0, len(batches), GRADIENT_CHUNK)]


def batch_gradients(batches: Sequence[PackedBatch], params: SurrogateParams,
                    delta: float, executor: ThreadPoolExecutor = None
                    ) -> Tuple[float, List[np.ndarray]]:
    """
    Loss and gradients over samples, evaluated in fixed-size chunks and
    reduced in chunk order, so the result does not depend on the number of
    workers

    :param batches: one packed batch per sample
    :param params: parameters
    :param delta: loss guard
    :param executor: thread pool; default evaluate serially
    :return: tuple of (loss, gradients in `params.arrays()` order)
    """
    chunks = _chunks(batches)
    if executor is None:
        results = [hignn_gradients(chunk, params, delta) for chunk in chunks]
    else:
        results = list(executor.map(
            lambda chunk: hignn_gradients(chunk, params, delta), chunks))
    if len(results) == 1:
        return results[0]

    total = sum(chunk.n_terms for chunk in chunks)
    loss = 0.0
    grads = [np.zeros_like(array) for array in params.arrays()]
    for chunk, (chunk_loss, chunk_grads) in zip(chunks, results):
        weight = chunk.n_terms / total
        loss += weight * chunk_loss
        for grad, chunk_grad in zip(grads, chunk_grads):
            grad += weight * chunk_grad
    return loss, grads


def batches_loss(batches: Sequence[PackedBatch], params: SurrogateParams,
                 delta: float) -> float:
    """
    Relative loss over samples, evaluated in chunks

    :param batches: one packed batch per sample
    :param params: parameters
    :param delta: loss guard
    :return: loss
    """
    chunks = _chunks(batches)
    total = sum(chunk.n_terms for chunk in chunks)
    return sum(
        chunk.n_terms / total * relative_mse_loss(
            batch_velocities(chunk, params), chunk.velocities, delta)
        for chunk in chunks)


def single_body_mobility(samples: Sequence[TrainingSample],
                         config: TrainConfig) -> np.ndarray:
    """
    alpha1 for the common domain of the samples

    :param samples: samples
    :param config: training settings
    :return: 3×3 block
    :raises TrainingError: samples from different domains
    """
    tags = {sample.domain_tag for sample in samples}
    if len(tags) != 1:
        raise TrainingError(
            f'Samples must share one domain, got {sorted(tags)}')
    return stokes_drag(config.viscosity, config.radius, samples[0].domain,
                       periodic_constant=config.periodic_constant)


def train(samples: Sequence[TrainingSample],
          config: TrainConfig = None) -> TrainResult:
    """
    Train a surrogate with Adam on the relative loss. The split, the
    initial parameters and the per-epoch shuffles are drawn from one
    generator seeded with `config.seed`.

    :param samples: training samples
    :param config: training settings; default TrainConfig()
    :return: result holding the best-on-test parameters
    :raises TrainingError: fewer than 2 samples, mixed domains or a
            non-finite loss or gradient
    """
    if config is None:
        config = TrainConfig()
    if len(samples) < 2:
        raise TrainingError(
            f'Training needs at least 2 samples, got {len(samples)}')

    rng = np.random.default_rng(config.seed)
    n_train, n_test = config.split_sizes(len(samples))
    order = rng.permutation(len(samples))
    train_indices, test_indices = order[:n_train], order[n_train:]

    params = init_surrogate(
        rng, single_body_mobility(samples, config),
        hidden_widths=config.hidden_widths, face_r_cut=config.face_r_cut)
    packed = [pack_sample(sample, config.train_face_r_cut)
              for sample in samples]
    test_batches = [packed[index] for index in test_indices]

    result = TrainResult(
        params=params.copy(),
        initial_test_loss=batches_loss(test_batches, params,
                                       config.loss_guard),
        train_indices=train_indices, test_indices=test_indices)
    logger.debug('Training settings %s', config.as_dict())
    logger.info('Training on %d samples, testing on %d, initial test loss %g',
                n_train, n_test, result.initial_test_loss)

    arrays = params.arrays()
    paths = params.paths()
    state = AdamState.fresh(arrays)
    executor = ThreadPoolExecutor(max_workers=config.workers) \
        if config.workers > 1 else None
    try:
        for epoch in range(config.epochs):
            lr = lr_schedule(epoch, config.base_lr, config.lr_halving_period)
            shuffled = rng.permutation(train_indices)
            weighted_loss = 0.0
            terms = 0
            for batch, start in enumerate(
                    range(0, n_train, config.batch_size)):
                batches = [packed[index] for index in
                           shuffled[start:start + config.batch_size]]
                loss, grads = batch_gradients(
                    batches, params, config.loss_guard, executor)
                if not np.isfinite(loss):
                    raise TrainingError(
                        f'Non-finite loss at epoch {epoch}, batch {batch}',
                        epoch=epoch, batch=batch)
                try:
                    adam_step(arrays, grads, state, lr, config.beta1,
                              config.beta2, config.epsilon, paths=paths)
                except TrainingError as exc:
                    raise TrainingError(
                        f'epoch {epoch}, batch {batch}: {exc}', epoch=epoch,
                        batch=batch, path=exc.path) from exc
                batch_terms = sum(item.n_terms for item in batches)
                weighted_loss += loss * batch_terms
                terms += batch_terms

            test_loss = batches_loss(test_batches, params, config.loss_guard)
            result.history.append(EpochLoss(
                epoch=epoch, lr=lr, train_loss=weighted_loss / terms,
                test_loss=test_loss))
            logger.info('epoch %d lr %g train loss %.6e test loss %.6e',
                        epoch, lr, weighted_loss / terms, test_loss)
            if test_loss < result.best_test_loss:
                result.best_test_loss = test_loss
                result.best_epoch = epoch
                result.params = params.copy()
    finally:
        if executor is not None:
            executor.shutdown()

    logger.info('Best test loss %.6e at epoch %d',
                result.best_test_loss, result.best_epoch)
    return result


def write_loss_history(path: Union[str, Path],
                       history: Sequence[EpochLoss]) -> int:
    """
    Write the loss history csv; epoch, lr, train_loss, test_loss

    :param path: file path
    :param history: per-epoch losses
    :return: number of rows written
    """
    return write_csv(path, LOSS_HISTORY_HEADER, (
        (entry.epoch, entry.lr, entry.train_loss, entry.test_loss)
        for entry in history
    ))


@dataclass(frozen=True)
class RelativeErrors:
    """
    Per-particle relative L2 errors of surrogate velocities
    """
    errors: np.ndarray
    percentile: float
    """ Error at ERROR_PERCENTILE """
    max_error: float


def evaluate_relative_errors(samples: Sequence[TrainingSample],
                             params: SurrogateParams,
                             face_r_cut: float = None) -> RelativeErrors:
    """
    Relative L2 error |U − U_pred| / |U| of every particle of every sample

    :param samples: samples
    :param params: parameters
    :param face_r_cut: face cutoff; default the model's
    :return: errors
    :raises TrainingError: no samples
    """
    if not samples:
        raise TrainingError('Evaluation needs at least one sample')
    if face_r_cut is None:
        face_r_cut = params.face_r_cut
    errors = []
    for chunk in _chunks([pack_sample(sample, face_r_cut)
                          for sample in samples]):
        predicted = batch_velocities(chunk, params)
        errors.append(
            np.linalg.norm(chunk.velocities - predicted, axis=1)
            / np.linalg.norm(chunk.velocities, axis=1))
    errors = np.concatenate(errors)
    return RelativeErrors(
        errors=errors,
        percentile=float(np.percentile(errors, ERROR_PERCENTILE)),
        max_error=float(errors.max()))
