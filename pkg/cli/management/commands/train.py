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
train: fit a surrogate to a training set
"""
from oracle import read_training_csv
from stokes_hignn import TRAIN_CMD
from surrogate import DEFAULT_FACE_R_CUT, save_model
from training import TrainConfig, train, write_loss_history
from cli.command import HignnCommand
from cli.config import RunConfig
from cli.constants import (
    PHYSICS_SECTION, TRAIN_SECTION, GRAPH_SECTION, DATA_PATH, MODEL_PATH,
    LOSS_HISTORY_PATH
)


class Command(HignnCommand):
    help = 'Train a surrogate, writing the model json and loss history csv'
    command = TRAIN_CMD

    def run(self, config: RunConfig, workers: int):
        graph = config.section(GRAPH_SECTION)
        physics = config.section(PHYSICS_SECTION)
        train_config = TrainConfig(
            seed=config.seed, workers=workers,
            train_face_r_cut=graph['train_face_r_cut'],
            face_r_cut=DEFAULT_FACE_R_CUT if graph['face_r_cut'] is None
            else graph['face_r_cut'],
            **physics, **config.section(TRAIN_SECTION))

        samples = read_training_csv(config.path(DATA_PATH), config.domain)
        result = train(samples, train_config)

        digest = save_model(config.path(MODEL_PATH), result.params)
        write_loss_history(config.path(LOSS_HISTORY_PATH), result.history)
        self.success(
            f'Test loss {result.best_test_loss:.6e} at epoch '
            f'{result.best_epoch} (initial {result.initial_test_loss:.6e}); '
            f'model {config.path(MODEL_PATH)} sha256 {digest}')
