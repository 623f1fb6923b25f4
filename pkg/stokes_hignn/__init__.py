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
Stokes-HIGNN project package
"""
from .constants import (
    APP_NAME,
    BROKER_APP_NAME, ORACLE_APP_NAME, GRAPH_APP_NAME, SURROGATE_APP_NAME,
    TRAINING_APP_NAME, DYNAMICS_APP_NAME, CLI_APP_NAME,
    GEN_DATA_CMD, TRAIN_CMD, PREDICT_CMD, SIMULATE_CMD, BENCH_CMD,
    COMMANDS, COMMAND_ALIASES, command_alias
)


__all__ = [
    'APP_NAME',

    'BROKER_APP_NAME',
    'ORACLE_APP_NAME',
    'GRAPH_APP_NAME',
    'SURROGATE_APP_NAME',
    'TRAINING_APP_NAME',
    'DYNAMICS_APP_NAME',
    'CLI_APP_NAME',

    'GEN_DATA_CMD',
    'TRAIN_CMD',
    'PREDICT_CMD',
    'SIMULATE_CMD',
    'BENCH_CMD',
    'COMMANDS',
    'COMMAND_ALIASES',
    'command_alias',
]
