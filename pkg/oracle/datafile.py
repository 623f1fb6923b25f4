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
Training set csv files
"""
import logging
from pathlib import Path
from typing import List, Sequence, Union

import numpy as np

from utils import DataFormatError, write_csv, read_csv, fmt_float
from .constants import (
    SAMPLE_ID_COLUMN, POSITION_COLUMNS, FORCE_COLUMNS, VELOCITY_COLUMNS
)
from .domain import Domain, UNBOUNDED, as_vectors
from .sampler import TrainingSample


logger = logging.getLogger(__name__)

_GROUPS = (POSITION_COLUMNS, FORCE_COLUMNS, VELOCITY_COLUMNS)


def training_csv_header(n_particles: int) -> List[str]:
    """
    Column names for samples of `n_particles`;
    sample_id, x0, y0, z0, x1, ..., fx0, ..., ux0, ...
    :param n_particles: particles per sample
    :return: column names
    """
    header = [SAMPLE_ID_COLUMN]
    for columns in _GROUPS:
        header.extend(
            f'{column}{index}'
            for index in range(n_particles) for column in columns)
    return header


def write_training_csv(path: Union[str, Path],
                       samples: Sequence[TrainingSample]) -> int:
    """
    Write samples to a csv file, floats with 17 significant digits
    :param path: file path
    :param samples: samples, all with the same particle count
    :return: number of samples written
    :raises DataFormatError: empty or mixed particle counts
    """
    if not samples:
        raise DataFormatError('No samples to write')
    n_particles = samples[0].n_particles
    if any(sample.n_particles != n_particles for sample in samples):
        raise DataFormatError('Samples must have equal particle counts')

    rows = (
        [index] + [
            fmt_float(value) for value in np.concatenate([
                sample.positions.ravel(), sample.forces.ravel(),
                sample.velocities.ravel()])
        ]
        for index, sample in enumerate(samples)
    )
    count = write_csv(path, training_csv_header(n_particles), rows,
                      formatter=str)
    logger.info('Wrote %d samples to %s', count, path)
    return count


def read_training_csv(path: Union[str, Path],
                      domain: Domain = UNBOUNDED) -> List[TrainingSample]:
    """
    Read samples from a csv file
    :param path: file path
    :param domain: domain the samples were generated in; default unbounded
    :return: samples
    :raises DataFormatError: malformed header or row, with its line number
    """
    samples = []
    header = None
    n_particles = 0
    for line, row in read_csv(path):
        if header is None:
            header = row
            n_particles = (len(header) - 1) // 9
            if n_particles < 1 or header != training_csv_header(n_particles):
                raise DataFormatError('Invalid training set header', line)
            continue
        if len(row) != len(header):
            raise DataFormatError(
                f'Expected {len(header)} fields, got {len(row)}', line)
        try:
            values = np.array([float(value) for value in row[1:]])
        except ValueError as exc:
            raise DataFormatError(f'Invalid number: {exc}', line) from exc
        if not np.all(np.isfinite(values)):
            raise DataFormatError('Non-finite value', line)
        positions, forces, velocities = values.reshape(3, n_particles, 3)
        samples.append(TrainingSample(positions, forces, velocities,
                                      domain_tag=domain.tag))

    if header is None:
        raise DataFormatError(f'Empty training set file {path}')
    logger.info('Read %d samples from %s', len(samples), path)
    return samples


def write_vectors_csv(path: Union[str, Path], columns: Sequence[str],
                      vectors) -> int:
    """
    Write one 3-vector per particle, e.g. columns ux, uy, uz
    :param path: file path
    :param columns: the three column names
    :param vectors: (N, 3) values
    :return: number of rows written
    """
    return write_csv(path, columns, as_vectors(vectors, name='vectors'))


def read_vectors_csv(path: Union[str, Path],
                     columns: Sequence[str]) -> np.ndarray:
    """
    Read one 3-vector per particle
    :param path: file path
    :param columns: the expected three column names
    :return: (N, 3) values
    :raises DataFormatError: malformed header or row, with its line number
    """
    vectors = []
    header = None
    for line, row in read_csv(path):
        if header is None:
            header = row
            if header != list(columns):
                raise DataFormatError(
                    f"Expected header {','.join(columns)}", line)
            continue
        if len(row) != len(columns):
            raise DataFormatError(
                f'Expected {len(columns)} fields, got {len(row)}', line)
        try:
            values = [float(value) for value in row]
        except ValueError as exc:
            raise DataFormatError(f'Invalid number: {exc}', line) from exc
        if not np.all(np.isfinite(values)):
            raise DataFormatError('Non-finite value', line)
        vectors.append(values)

    if header is None:
        raise DataFormatError(f'Empty file {path}')
    return np.array(vectors, dtype=float).reshape(-1, 3)
