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
Constants for the training app
"""
from pathlib import Path

# name of this app
THIS_APP = Path(__file__).resolve().parent.name

DEFAULT_BATCH_SIZE = 512
DEFAULT_EPOCHS = 400
DEFAULT_BASE_LR = 1e-3
DEFAULT_LR_HALVING_PERIOD = 100

# adam
DEFAULT_BETA1 = 0.9
DEFAULT_BETA2 = 0.999
DEFAULT_EPSILON = 1e-8

# train:test split
DEFAULT_TRAIN_PARTS = 5
DEFAULT_TEST_PARTS = 1

# face cutoff while training; inference uses the model's own cutoff
DEFAULT_TRAIN_FACE_R_CUT = 20.0

# samples per gradient chunk; chunks are reduced in a fixed order
GRADIENT_CHUNK = 64

# percentile reported by held-out evaluation
ERROR_PERCENTILE = 95

# loss history csv
EPOCH_COLUMN = 'epoch'
LR_COLUMN = 'lr'
TRAIN_LOSS_COLUMN = 'train_loss'
TEST_LOSS_COLUMN = 'test_loss'
LOSS_HISTORY_HEADER = (
    EPOCH_COLUMN, LR_COLUMN, TRAIN_LOSS_COLUMN, TEST_LOSS_COLUMN
)
