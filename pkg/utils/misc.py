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
Miscellaneous utility functions
"""
import csv
import os
from pathlib import Path
from typing import List, Any, Callable, Dict, Iterable, Sequence, Union

import numpy as np


FLOAT_FORMAT = '.17g'
""" Format spec giving 17 significant digits, enough to round-trip a float """
TIMING_FORMAT = '.3f'
""" Format spec for wall times in seconds """
CPUINFO_PATH = Path('/proc/cpuinfo')


def ensure_list(item: Any) -> List[Any]:
    """
    Ensure argument is returned as a list
    :param item: item(s) to return
    :return: list of item(s)
    """
    if isinstance(item, list):
        return item
    if isinstance(item, (tuple, np.ndarray)):
        return list(item)
    return [item]


def fmt_float(value: float) -> str:
    """
    Format a float with 17 significant digits
    :param value: value to format
    :return: formatted string
    """
    return format(float(value), FLOAT_FORMAT)


def fmt_cell(value: Any) -> str:
    """
    Format a table cell; floats with 17 significant digits, everything else
    as its string representation
    :param value: value to format
    :return: formatted string
    """
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return fmt_float(value)
    return str(value)


def write_csv(path: Union[str, Path], header: Sequence[str],
              rows: Iterable[Sequence[Any]],
              formatter: Callable[[Any], str] = fmt_cell) -> int:
    """
    Write a csv file
    :param path: file path
    :param header: column names
    :param rows: rows of values
    :param formatter: cell formatting function; default fmt_cell
    :return: number of data rows written
    """
    count = 0
    with open(path, 'w', newline='', encoding='utf-8') as csv_file:
        writer = csv.writer(csv_file, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([formatter(cell) for cell in row])
            count += 1
    return count


def read_csv(path: Union[str, Path]) -> Iterable[tuple]:
    """
    Read a csv file
    :param path: file path
    :return: generator of (line number, row) with line numbers 1-based and
            the header on line 1
    """
    with open(path, 'r', newline='', encoding='utf-8') as csv_file:
        reader = csv.reader(csv_file)
        for row in reader:
            yield reader.line_num, row


class AsDictMixin:
    """
    Mixin class to provide as_dict method
    """

    def as_dict(self, filter_fun: Callable = None) -> Dict[str, Any]:
        """
        Convert an object to a map
        :return: map
        """
        return {
            k: v for k, v in self.__dict__.items()
            if k not in object.__dict__ and not k.startswith('_')
            and not callable(v) and (filter_fun is None or filter_fun(k, v))
        }


def physical_cpu_count(cpuinfo: Union[str, Path] = CPUINFO_PATH) -> int:
    """
    Get the number of physical cores, from the distinct (physical id, core id)
    pairs of a cpuinfo file; falls back to the logical cpu count
    :param cpuinfo: cpuinfo file path
    :return: number of cores, at least 1
    """
    cores = set()
    try:
        text = Path(cpuinfo).read_text('utf-8')
    except OSError:
        text = ''
    for block in text.split('\n\n'):
        fields = {}
        for line in block.splitlines():
            key, _, value = line.partition(':')
            fields[key.strip()] = value.strip()
        if 'core id' in fields:
            cores.add((fields.get('physical id', '0'), fields['core id']))
    return len(cores) or os.cpu_count() or 1
