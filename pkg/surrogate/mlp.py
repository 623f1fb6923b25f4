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
Multilayer perceptron kernels mapping relative positions to 3×6 mobility
blocks, with reverse-mode gradients
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from utils import ShapeError, DomainError
from .constants import (
    TANH_ACTIVATION, ACTIVATIONS, OUTPUT_ROWS, OUTPUT_COLS, OUTPUT_WIDTH,
    DEFAULT_HIDDEN_WIDTHS
)

Layer = Tuple[np.ndarray, np.ndarray]


@dataclass(frozen=True, eq=False)
class MlpParams:
    """
    Ordered (weight, bias) layers; weights are (fan_in, fan_out). Hidden
    layers use the activation, the output layer is affine.
    """
    layers: Tuple[Layer, ...]
    activation: str = TANH_ACTIVATION

    def __post_init__(self):
        layers = tuple(
            (np.asarray(weight, dtype=float), np.asarray(bias, dtype=float))
            for weight, bias in self.layers)
        object.__setattr__(self, 'layers', layers)
        if not layers:
            raise ShapeError('An MLP needs at least one layer')
        if self.activation not in ACTIVATIONS:
            raise DomainError(f"Unknown activation '{self.activation}'")
        for index, (weight, bias) in enumerate(layers):
            if weight.ndim != 2 or bias.shape != (weight.shape[1],):
                raise ShapeError(
                    f'Layer {index}: weight {weight.shape} and bias '
                    f'{bias.shape} do not match')
            if index and weight.shape[0] != layers[index - 1][0].shape[1]:
                raise ShapeError(
                    f'Layer {index}: input width {weight.shape[0]} does not '
                    f'match previous output width '
                    f'{layers[index - 1][0].shape[1]}')
            if not (np.all(np.isfinite(weight))
                    and np.all(np.isfinite(bias))):
                raise DomainError(f'Layer {index}: non-finite parameters')
        if layers[-1][0].shape[1] != OUTPUT_WIDTH:
            raise ShapeError(
                f'Output width must be {OUTPUT_WIDTH}, got '
                f'{layers[-1][0].shape[1]}')

    @property
    def input_width(self) -> int:
        """ Width of the input vector """
        return self.layers[0][0].shape[0]

    @property
    def hidden_widths(self) -> Tuple[int, ...]:
        """ Widths of the hidden layers """
        return tuple(weight.shape[1] for weight, _ in self.layers[:-1])

    def arrays(self) -> List[np.ndarray]:
        """
        Get the parameter arrays in layer order, weight before bias
        :return: list of arrays
        """
        return [array for layer in self.layers for array in layer]

    def paths(self, prefix: str) -> List[str]:
        """
        Get the names of the parameter arrays, in `arrays()` order;
        e.g. 'h_theta2.layers[0].weight'
        :param prefix: name of this MLP
        :return: list of names
        """
        return [
            f'{prefix}.layers[{index}].{name}'
            for index in range(len(self.layers))
            for name in ('weight', 'bias')
        ]

    def copy(self) -> 'MlpParams':
        """ Deep copy """
        return MlpParams(
            tuple((weight.copy(), bias.copy())
                  for weight, bias in self.layers), self.activation)


def init_mlp(rng: np.random.Generator, input_width: int,
             hidden_widths: Sequence[int] = DEFAULT_HIDDEN_WIDTHS
             ) -> MlpParams:
    """
    Glorot-uniform weights, zero biases
    :param rng: random generator
    :param input_width: input width
    :param hidden_widths: hidden layer widths
    :return: parameters
    """
    widths = [input_width, *hidden_widths, OUTPUT_WIDTH]
    layers = []
    for fan_in, fan_out in zip(widths[:-1], widths[1:]):
        limit = np.sqrt(6 / (fan_in + fan_out))
        layers.append((rng.uniform(-limit, limit, (fan_in, fan_out)),
                       np.zeros(fan_out)))
    return MlpParams(tuple(layers))


def _check_width(params: MlpParams, inputs: np.ndarray) -> np.ndarray:
    inputs = np.asarray(inputs, dtype=float)
    if inputs.ndim != 2 or inputs.shape[1] != params.input_width:
        raise ShapeError(
            f'Expected inputs of width {params.input_width}, got shape '
            f'{inputs.shape}')
    return inputs


def mlp_forward_batch(params: MlpParams, inputs: np.ndarray
                      ) -> Tuple[np.ndarray, List[np.ndarray]]:
    """
    Evaluate the MLP on a batch of inputs

    :param params: parameters
    :param inputs: (M, input width) inputs
    :return: tuple of ((M, 3, 6) outputs, layer inputs for backward)
    :raises ShapeError: width mismatch
    """
    activation = np.tanh
    values = _check_width(params, inputs)
    layer_inputs = []
    for weight, bias in params.layers[:-1]:
        layer_inputs.append(values)
        values = activation(values @ weight + bias)
    layer_inputs.append(values)
    weight, bias = params.layers[-1]
    outputs = values @ weight + bias
    return outputs.reshape(-1, OUTPUT_ROWS, OUTPUT_COLS), layer_inputs


def mlp_forward(params: MlpParams, inputs) -> np.ndarray:
    """
    Evaluate the MLP on one input vector

    :param params: parameters
    :param inputs: input vector
    :return: 3×6 matrix
    :raises ShapeError: width mismatch
    """
    outputs, _ = mlp_forward_batch(
        params, np.asarray(inputs, dtype=float).reshape(1, -1))
    return outputs[0]


def mlp_backward(params: MlpParams, layer_inputs: List[np.ndarray],
                 output_grads: np.ndarray
                 ) -> Tuple[List[Layer], np.ndarray]:
    """
    Back-propagate output gradients through the MLP

    :param params: parameters
    :param layer_inputs: layer inputs from mlp_forward_batch
    :param output_grads: (M, 3, 6) or (M, 18) loss gradients of the outputs
    :return: tuple of (per-layer (weight, bias) gradients, (M, input width)
            input gradients)
    """
    grads = np.asarray(output_grads, dtype=float).reshape(-1, OUTPUT_WIDTH)
    layer_grads = []
    for index in range(len(params.layers) - 1, -1, -1):
        weight, _ = params.layers[index]
        values = layer_inputs[index]
        layer_grads.append((values.T @ grads, grads.sum(axis=0)))
        grads = grads @ weight.T
        if index:
            # tanh'(z) = 1 − tanh(z)²
            grads = grads * (1 - values ** 2)
    layer_grads.reverse()
    return layer_grads, grads


def mlp_input_jacobian(params: MlpParams, inputs) -> np.ndarray:
    """
    Derivatives of the 18 outputs with respect to the inputs

    :param params: parameters
    :param inputs: input vector
    :return: (18, input width) Jacobian, rows in row-major 3×6 order
    """
    inputs = np.asarray(inputs, dtype=float).reshape(1, -1)
    batch = np.repeat(inputs, OUTPUT_WIDTH, axis=0)
    _, layer_inputs = mlp_forward_batch(params, batch)
    _, jacobian = mlp_backward(params, layer_inputs, np.eye(OUTPUT_WIDTH))
    return jacobian
