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
Utility tests
"""
import tempfile
from pathlib import Path
from unittest.mock import patch

from django.conf import settings
from django.test import SimpleTestCase

from .misc import physical_cpu_count

# two sockets of two cores, each with two hyper-threads
CPUINFO = '\n\n'.join(
    f'processor\t: {index}\nphysical id\t: {socket}\ncore id\t\t: {core}\n'
    f'cpu cores\t: 2'
    for index, (socket, core) in enumerate(
        (socket, core) for socket in (0, 1) for core in (0, 1) for _ in (0, 1))
)


class TestPhysicalCpuCount(SimpleTestCase):
    """ Physical core count tests """

    def count(self, text: str) -> int:
        with tempfile.TemporaryDirectory() as folder:
            path = Path(folder) / 'cpuinfo'
            path.write_text(text, 'utf-8')
            return physical_cpu_count(path)

    def test_hyper_threads(self):
        self.assertEqual(self.count(CPUINFO), 4)

    def test_single_socket(self):
        text = '\n\n'.join(
            f'processor\t: {index}\ncore id\t\t: {index // 2}'
            for index in range(6))
        self.assertEqual(self.count(text), 3)

    @patch('utils.misc.os.cpu_count', return_value=6)
    def test_fallback(self, _):
        self.assertEqual(self.count('processor\t: 0\n'), 6)
        self.assertEqual(physical_cpu_count('/no/such/cpuinfo'), 6)

    @patch('utils.misc.os.cpu_count', return_value=None)
    def test_at_least_one(self, _):
        self.assertEqual(physical_cpu_count('/no/such/cpuinfo'), 1)

    def test_worker_setting(self):
        self.assertGreaterEqual(settings.HIGNN_WORKERS, 1)
