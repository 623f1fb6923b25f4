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
Shared utilities
"""
from .enums import ChoiceArg
from .errors import (
    HignnError, DomainError, UnsupportedDomainError, OverlapError,
    GenerationError, AmbiguousImageError, PartitionError, ShapeError,
    TrainingError, SimulationError, ModelFormatError, DataFormatError,
    ConfigError, ParallelInferenceError
)
from .misc import (
    FLOAT_FORMAT, TIMING_FORMAT,
    ensure_list, fmt_float, fmt_cell, write_csv, read_csv,
    physical_cpu_count,
    AsDictMixin
)
from .singleton import SingletonMixin


__all__ = [
    'ChoiceArg',

    'HignnError',
    'DomainError',
    'UnsupportedDomainError',
    'OverlapError',
    'GenerationError',
    'AmbiguousImageError',
    'PartitionError',
    'ShapeError',
    'TrainingError',
    'SimulationError',
    'ModelFormatError',
    'DataFormatError',
    'ConfigError',
    'ParallelInferenceError',

    'FLOAT_FORMAT',
    'TIMING_FORMAT',
    'ensure_list',
    'fmt_float',
    'fmt_cell',
    'write_csv',
    'read_csv',
    'physical_cpu_count',
    'AsDictMixin',

    'SingletonMixin',
]
