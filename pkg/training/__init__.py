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
Surrogate training
"""
from .config import TrainConfig
from .constants import LOSS_HISTORY_HEADER, GRADIENT_CHUNK
from .optim import lr_schedule, AdamState, adam_step
from .trainer import (
    EpochLoss, TrainResult, RelativeErrors, batch_gradients, batches_loss,
    single_body_mobility, train, write_loss_history, evaluate_relative_errors
)


__all__ = [
    'TrainConfig',

    'LOSS_HISTORY_HEADER',
    'GRADIENT_CHUNK',

    'lr_schedule',
    'AdamState',
    'adam_step',

    'EpochLoss',
    'TrainResult',
    'RelativeErrors',
    'batch_gradients',
    'batches_loss',
    'single_body_mobility',
    'train',
    'write_loss_history',
    'evaluate_relative_errors',
]
