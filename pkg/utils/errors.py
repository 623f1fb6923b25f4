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
Exceptions raised by the hignn apps
"""
from typing import List, Optional, Sequence, Tuple


class HignnError(ValueError):
    """
    Base class of all hignn errors
    """


class DomainError(HignnError):
    """
    Physical parameter or argument outside its domain
    """


class UnsupportedDomainError(HignnError):
    """
    Operation not available for the particle system's domain
    """


class OverlapError(HignnError):
    """
    Particles overlap
    """
    pair: Optional[Tuple[int, int]]
    """ Indices of the offending pair """

    def __init__(self, message: str, pair: Tuple[int, int] = None):
        super().__init__(message)
        self.pair = pair


class GenerationError(HignnError):
    """
    Training set sampler could not satisfy a constraint
    """
    constraint: str
    """ Name of the constraint that could not be met """

    def __init__(self, message: str, constraint: str):
        super().__init__(message)
        self.constraint = constraint


class AmbiguousImageError(HignnError):
    """
    Cutoff too long for a unique minimum image
    """


class PartitionError(HignnError):
    """
    Invalid graph partition request
    """


class ShapeError(HignnError):
    """
    Array width or length mismatch
    """


class TrainingError(HignnError):
    """
    Training could not proceed
    """
    epoch: Optional[int]
    batch: Optional[int]
    path: Optional[str]
    """ Parameter path of a non-finite gradient """

    def __init__(self, message: str, epoch: int = None, batch: int = None,
                 path: str = None):
        super().__init__(message)
        self.epoch = epoch
        self.batch = batch
        self.path = path


class SimulationError(HignnError):
    """
    Simulation aborted
    """
    step: int
    """ Index of the step at which the simulation aborted """

    def __init__(self, message: str, step: int):
        super().__init__(f'step {step}: {message}')
        self.step = step


class ModelFormatError(HignnError):
    """
    Malformed model file or unsupported format version
    """


class DataFormatError(HignnError):
    """
    Malformed data file
    """
    line: Optional[int]
    """ 1-based line number of the offending row """

    def __init__(self, message: str, line: int = None):
        super().__init__(
            message if line is None else f'line {line}: {message}')
        self.line = line


class ConfigError(HignnError):
    """
    Invalid run configuration
    """


class ParallelInferenceError(HignnError):
    """
    One or more inference workers failed
    """
    failures: List[Tuple[int, BaseException]]
    """ (partition index, exception) of each failed worker """

    def __init__(self, failures: Sequence[Tuple[int, BaseException]]):
        self.failures = list(failures)
        detail = '; '.join(
            f'partition {part}: {exc!r}' for part, exc in self.failures)
        super().__init__(
            f'{len(self.failures)} inference worker(s) failed: {detail}')
