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
Learning rate schedule and Adam optimiser
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from utils import DomainError, ShapeError, TrainingError
from .constants import (
    DEFAULT_BASE_LR, DEFAULT_LR_HALVING_PERIOD, DEFAULT_BETA1, DEFAULT_BETA2,
    DEFAULT_EPSILON
)


def lr_schedule(epoch: int, base_lr: float = DEFAULT_BASE_LR,
                halving_period: int = DEFAULT_LR_HALVING_PERIOD) -> float:
    """
    Step decay; base_lr × 0.5^⌊epoch / halving_period⌋

    :param epoch: 0-based epoch
    :param base_lr: learning rate of the first period
    :param halving_period: epochs per halving
    :return: learning rate
    :raises DomainError: negative epoch
    """
    if epoch < 0:
        raise DomainError(f'Epoch must be non-negative, got {epoch}')
    return base_lr * 0.5 ** (epoch // halving_period)


@dataclass
class AdamState:
    """
    First and second moment estimates per parameter array
    """
    first: List[np.ndarray] = field(default_factory=list)
    second: List[np.ndarray] = field(default_factory=list)
    step: int = 0

    @staticmethod
    def fresh(arrays: Sequence[np.ndarray]) -> 'AdamState':
        """
        Zero moments for the given parameters
        :param arrays: parameter arrays
        :return: state
        """
        return AdamState(first=[np.zeros_like(array) for array in arrays],
                         second=[np.zeros_like(array) for array in arrays])


def adam_step(arrays: Sequence[np.ndarray], grads: Sequence[np.ndarray],
              state: AdamState, lr: float, beta1: float = DEFAULT_BETA1,
              beta2: float = DEFAULT_BETA2, epsilon: float = DEFAULT_EPSILON,
              paths: Optional[Sequence[str]] = None) -> AdamState:
    """
    Bias-corrected Adam update, applied to the parameter arrays in place

    :param arrays: parameter arrays
    :param grads: gradients, in `arrays` order
    :param state: optimiser state; updated in place
    :param lr: learning rate
    :param beta1: first moment decay
    :param beta2: second moment decay
    :param epsilon: denominator guard
    :param paths: parameter names for error messages; default indices
    :return: state
    :raises ShapeError: gradients or state do not match the parameters
    :raises TrainingError: non-finite gradient, naming its parameter
    """
    if paths is None:
        paths = [f'[{index}]' for index in range(len(arrays))]
    if not len(arrays) == len(grads) == len(state.first) \
            == len(state.second):
        raise ShapeError(
            f'{len(arrays)} parameters, {len(grads)} gradients and '
            f'{len(state.first)} moments do not match')
    for path, array, grad in zip(paths, arrays, grads):
        if np.shape(grad) != array.shape:
            raise ShapeError(
                f'Gradient of {path} has shape {np.shape(grad)}, expected '
                f'{array.shape}')
        if not np.all(np.isfinite(grad)):
            raise TrainingError(f'Non-finite gradient of {path}', path=path)

    state.step += 1
    first_correction = 1 - beta1 ** state.step
    second_correction = 1 - beta2 ** state.step
    for array, grad, first, second in zip(arrays, grads, state.first,
                                          state.second):
        first *= beta1
        first += (1 - beta1) * grad
        second *= beta2
        second += (1 - beta2) * grad * grad
        array -= lr * (first / first_correction) \
            / (np.sqrt(second / second_correction) + epsilon)
    return state
