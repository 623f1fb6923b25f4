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
Constants for the stokes_hignn project
"""

APP_NAME = "Stokes-HIGNN"
COPYRIGHT_YEAR = 2024
COPYRIGHT = "Ian Buttimer"

# Namespace related
BROKER_APP_NAME = "broker"
ORACLE_APP_NAME = "oracle"
GRAPH_APP_NAME = "graph"
SURROGATE_APP_NAME = "surrogate"
TRAINING_APP_NAME = "training"
DYNAMICS_APP_NAME = "dynamics"
CLI_APP_NAME = "cli"

# Management commands
GEN_DATA_CMD = "gen_data"
TRAIN_CMD = "train"
PREDICT_CMD = "predict"
SIMULATE_CMD = "simulate"
BENCH_CMD = "bench"

COMMANDS = [
    GEN_DATA_CMD, TRAIN_CMD, PREDICT_CMD, SIMULATE_CMD, BENCH_CMD
]


def command_alias(name: str) -> str:
    """
    Hyphenated console form of a management command name;
    e.g. 'gen_data' -> 'gen-data'

    :param name: management command name
    :return: console name
    """
    return name.replace('_', '-')


# console name: management command name
COMMAND_ALIASES = {
    command_alias(cmd): cmd for cmd in COMMANDS
}
