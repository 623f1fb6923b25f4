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
Batched surrogate evaluation over training samples and reverse-mode
gradients of the relative loss
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from graph import build_graph, EDGE_TARGET, EDGE_SOURCE, FACE_TARGET, \
    FACE_PASSING, FACE_SOURCE
from oracle import TrainingSample
from .constants import LOSS_GUARD, EDGE_INPUT_WIDTH, FACE_INPUT_WIDTH
from .loss import relative_mse_loss, relative_mse_grad
from .mlp import MlpParams, mlp_forward_batch, mlp_backward
from .params import SurrogateParams


@dataclass(frozen=True, eq=False)
class PackedBatch:
    """
    Training samples flattened into particle, edge and face arrays; edge and
    face targets index the particle arrays
    """
    forces: np.ndarray
    """ (P, 3) forces """
    velocities: np.ndarray
    """ (P, 3) true velocities """
    edge_inputs: np.ndarray
    """ (E, 3) X_j − X_i """
    edge_forces: np.ndarray
    """ (E, 6) [F_i; F_j] """
    edge_targets: np.ndarray
    face_inputs: np.ndarray
    """ (F, 6) (X_j − X_i, X_k − X_i) """
    face_forces: np.ndarray
    """ (F, 6) [F_i; F_j] """
    face_targets: np.ndarray
    n_samples: int = 1

    @property
    def n_terms(self) -> int:
        """ Number of loss terms, one per particle """
        return len(self.velocities)


def pack_sample(sample: TrainingSample, face_r_cut: float) -> PackedBatch:
    """
    Flatten one training sample

    :param sample: sample
    :param face_r_cut: face cutoff
    :return: batch of one sample
    """
    domain = sample.domain
    positions, forces = sample.positions, sample.forces
    graph = build_graph(positions, domain, r_cut=face_r_cut)

    targets = graph.edges[:, EDGE_TARGET]
    sources = graph.edges[:, EDGE_SOURCE]
    edge_inputs = domain.minimum_image(positions[sources] - positions[targets])
    edge_forces = np.concatenate([forces[targets], forces[sources]], axis=1)

    face_targets = graph.faces[:, FACE_TARGET]
    passing = graph.faces[:, FACE_PASSING]
    face_sources = graph.faces[:, FACE_SOURCE]
    face_inputs = np.concatenate([
        domain.minimum_image(
            positions[face_sources] - positions[face_targets]),
        domain.minimum_image(
            positions[passing] - positions[face_targets]),
    ], axis=1).reshape(-1, FACE_INPUT_WIDTH)
    face_forces = np.concatenate(
        [forces[face_targets], forces[face_sources]], axis=1).reshape(-1, 6)

    return PackedBatch(
        forces=forces, velocities=sample.velocities,
        edge_inputs=edge_inputs.reshape(-1, EDGE_INPUT_WIDTH),
        edge_forces=edge_forces.reshape(-1, 6), edge_targets=targets,
        face_inputs=face_inputs, face_forces=face_forces,
        face_targets=face_targets)


def merge_batches(batches: Sequence[PackedBatch]) -> PackedBatch:
    """
    Concatenate batches, renumbering targets

    :param batches: batches
    :return: batch
    """
    offsets = np.cumsum([0] + [batch.n_terms for batch in batches[:-1]])
    return PackedBatch(
        forces=np.concatenate([batch.forces for batch in batches]),
        velocities=np.concatenate([batch.velocities for batch in batches]),
        edge_inputs=np.concatenate([batch.edge_inputs for batch in batches]),
        edge_forces=np.concatenate([batch.edge_forces for batch in batches]),
        edge_targets=np.concatenate([
            batch.edge_targets + offset
            for batch, offset in zip(batches, offsets)]),
        face_inputs=np.concatenate([batch.face_inputs for batch in batches]),
        face_forces=np.concatenate([batch.face_forces for batch in batches]),
        face_targets=np.concatenate([
            batch.face_targets + offset
            for batch, offset in zip(batches, offsets)]),
        n_samples=sum(batch.n_samples for batch in batches))


def pack_samples(samples: Sequence[TrainingSample],
                 face_r_cut: float) -> PackedBatch:
    """
    Flatten training samples into one batch

    :param samples: samples
    :param face_r_cut: face cutoff
    :return: batch
    """
    return merge_batches([pack_sample(sample, face_r_cut)
                          for sample in samples])


def _kernel_forward(params: MlpParams, inputs: np.ndarray,
                    force_features: np.ndarray
                    ) -> Tuple[np.ndarray, List[np.ndarray]]:
    blocks, layer_inputs = mlp_forward_batch(params, inputs)
    return np.einsum('eab,eb->ea', blocks, force_features), layer_inputs


def batch_velocities(batch: PackedBatch, params: SurrogateParams,
                     use_faces: bool = True) -> np.ndarray:
    """
    Surrogate velocities of every particle in a batch

    :param batch: batch
    :param params: parameters
    :param use_faces: include three-body contributions; default True
    :return: (P, 3) velocities
    """
    return _forward(batch, params, use_faces)[0]


def _forward(batch: PackedBatch, params: SurrogateParams, use_faces: bool):
    predicted = batch.forces @ params.alpha1.T
    edge_out, edge_cache = _kernel_forward(
        params.h_theta2, batch.edge_inputs, batch.edge_forces)
    np.add.at(predicted, batch.edge_targets, edge_out)
    face_cache = None
    if use_faces:
        face_out, face_cache = _kernel_forward(
            params.g_theta3, batch.face_inputs, batch.face_forces)
        np.add.at(predicted, batch.face_targets, face_out)
    return predicted, edge_cache, face_cache


def hignn_loss(batch: PackedBatch, params: SurrogateParams,
               delta: float = LOSS_GUARD) -> float:
    """
    Relative loss of the surrogate on a batch

    :param batch: batch
    :param params: parameters
    :param delta: guard on |U|²; default 1e-30
    :return: loss
    """
    return relative_mse_loss(
        batch_velocities(batch, params), batch.velocities, delta)


def _output_grads(velocity_grads: np.ndarray, targets: np.ndarray,
                  force_features: np.ndarray) -> np.ndarray:
    # d(block·f)/d(block) is g ⊗ f
    return velocity_grads[targets][:, :, np.newaxis] \
        * force_features[:, np.newaxis, :]


def hignn_gradients(batch: PackedBatch, params: SurrogateParams,
                    delta: float = LOSS_GUARD
                    ) -> Tuple[float, List[np.ndarray]]:
    """
    Loss and its exact gradients with respect to every weight and bias of
    both kernels

    :param batch: batch
    :param params: parameters
    :param delta: guard on |U|²; default 1e-30
    :return: tuple of (loss, gradients in `params.arrays()` order)
    """
    predicted, edge_cache, face_cache = _forward(batch, params, True)
    loss = relative_mse_loss(predicted, batch.velocities, delta)
    velocity_grads = relative_mse_grad(predicted, batch.velocities, delta)

    grads = []
    for kernel, cache, targets, force_features in (
            (params.h_theta2, edge_cache, batch.edge_targets,
             batch.edge_forces),
            (params.g_theta3, face_cache, batch.face_targets,
             batch.face_forces)):
        layer_grads, _ = mlp_backward(
            kernel, cache,
            _output_grads(velocity_grads, targets, force_features))
        grads.extend(array for layer in layer_grads for array in layer)
    return loss, grads
