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
Relative mean-squared-error loss
"""
from typing import Tuple

import numpy as np

from utils import ShapeError
from .constants import LOSS_GUARD


def _terms(predicted, truth) -> Tuple[np.ndarray, np.ndarray]:
    predicted = np.asarray(predicted, dtype=float).reshape(-1, 3)
    truth = np.asarray(truth, dtype=float).reshape(-1, 3)
    if predicted.shape != truth.shape:
        raise ShapeError(
            f'Predicted {predicted.shape} and true {truth.shape} velocities '
            f'do not match')
    if not len(truth):
        raise ShapeError('Loss needs at least one velocity')
    return predicted, truth


def relative_mse_loss(predicted, truth, delta: float = LOSS_GUARD) -> float:
    """
    Mean over velocities of |U − U_pred|² / max(|U|², delta)

    :param predicted: (T, 3) predicted velocities
    :param truth: (T, 3) true velocities
    :param delta: guard on |U|²; default 1e-30
    :return: loss
    :raises ShapeError: length mismatch or no velocities
    """
    predicted, truth = _terms(predicted, truth)
    error = np.sum((truth - predicted) ** 2, axis=1)
    scale = np.maximum(np.sum(truth ** 2, axis=1), delta)
    return float(np.mean(error / scale))


def relative_mse_grad(predicted, truth,
                      delta: float = LOSS_GUARD) -> np.ndarray:
    """
    Derivative of `relative_mse_loss` with respect to the predictions

    :param predicted: (T, 3) predicted velocities
    :param truth: (T, 3) true velocities
    :param delta: guard on |U|²; default 1e-30
    :return: (T, 3) gradient
    :raises ShapeError: length mismatch or no velocities
    """
    predicted, truth = _terms(predicted, truth)
    scale = np.maximum(np.sum(truth ** 2, axis=1), delta)
    return -2 * (truth - predicted) / scale[:, np.newaxis] / len(truth)
