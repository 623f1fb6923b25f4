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
Training settings
"""
from dataclasses import dataclass
from typing import Tuple

from oracle import PERIODIC_DRAG_CONSTANT
from surrogate import DEFAULT_HIDDEN_WIDTHS, DEFAULT_FACE_R_CUT, LOSS_GUARD
from utils import AsDictMixin, DomainError
from .constants import (
    DEFAULT_BATCH_SIZE, DEFAULT_EPOCHS, DEFAULT_BASE_LR,
    DEFAULT_LR_HALVING_PERIOD, DEFAULT_BETA1, DEFAULT_BETA2, DEFAULT_EPSILON,
    DEFAULT_TRAIN_PARTS, DEFAULT_TEST_PARTS, DEFAULT_TRAIN_FACE_R_CUT
)


@dataclass
class TrainConfig(AsDictMixin):
    """
    Training settings
    """
    batch_size: int = DEFAULT_BATCH_SIZE
    epochs: int = DEFAULT_EPOCHS
    base_lr: float = DEFAULT_BASE_LR
    lr_halving_period: int = DEFAULT_LR_HALVING_PERIOD
    beta1: float = DEFAULT_BETA1
    beta2: float = DEFAULT_BETA2
    epsilon: float = DEFAULT_EPSILON
    train_parts: int = DEFAULT_TRAIN_PARTS
    test_parts: int = DEFAULT_TEST_PARTS
    seed: int = 0
    loss_guard: float = LOSS_GUARD
    hidden_widths: Tuple[int, ...] = DEFAULT_HIDDEN_WIDTHS
    train_face_r_cut: float = DEFAULT_TRAIN_FACE_R_CUT
    """ Face cutoff while training """
    face_r_cut: float = DEFAULT_FACE_R_CUT
    """ Face cutoff saved with the model for inference """
    radius: float = 1.0
    viscosity: float = 1.0
    periodic_constant: float = PERIODIC_DRAG_CONSTANT
    workers: int = 1
    """ Threads evaluating gradient chunks """

    def __post_init__(self):
        self.hidden_widths = tuple(int(width) for width in self.hidden_widths)
        for name in ('batch_size', 'epochs', 'lr_halving_period',
                     'train_parts', 'test_parts', 'workers'):
            if getattr(self, name) < 1:
                raise DomainError(
                    f'{name} must be at least 1, got {getattr(self, name)}')
        if not self.hidden_widths or min(self.hidden_widths) < 1:
            raise DomainError(
                f'hidden_widths must be positive, got {self.hidden_widths}')
        for name in ('base_lr', 'epsilon', 'loss_guard', 'train_face_r_cut',
                     'face_r_cut', 'radius', 'viscosity',
                     'periodic_constant'):
            if not getattr(self, name) > 0:
                raise DomainError(
                    f'{name} must be positive, got {getattr(self, name)}')
        for name in ('beta1', 'beta2'):
            if not 0 <= getattr(self, name) < 1:
                raise DomainError(
                    f'{name} must lie in [0, 1), got {getattr(self, name)}')
        if self.seed < 0:
            raise DomainError(f'seed must be non-negative, got {self.seed}')

    def split_sizes(self, count: int) -> Tuple[int, int]:
        """
        Get the train and test sizes of a dataset
        :param count: number of samples, at least 2
        :return: tuple of (train size, test size), both at least 1
        """
        n_test = int(round(
            count * self.test_parts / (self.train_parts + self.test_parts)))
        n_test = min(max(n_test, 1), count - 1)
        return count - n_test, n_test
