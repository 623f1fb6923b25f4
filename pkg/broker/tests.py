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
Broker tests
"""
from django.test import SimpleTestCase

from oracle import OracleBackend
from utils import ConfigError
from .broker import Broker
from .ibackend import BackendType


class TestBroker(SimpleTestCase):
    """ Velocity backend registry tests """

    def test_singleton(self):
        self.assertIs(Broker.get_instance(), Broker.get_instance())

    def test_oracles_registered_at_startup(self):
        broker = Broker.get_instance()
        for order in (1, 2, 3):
            backend = broker.get(f'oracle_{order}', BackendType.ORACLE)
            self.assertEqual(backend.order, order)
        self.assertTrue(broker.is_registered('oracle_3', BackendType.ORACLE))
        self.assertFalse(
            broker.is_registered('oracle_3', BackendType.SURROGATE))

    def test_add_get_remove(self):
        broker = Broker()
        backend = OracleBackend(2)
        self.assertTrue(broker.add('two_body', BackendType.ORACLE, backend))
        self.assertIs(broker.get('two_body'), backend)
        self.assertEqual(broker.backend_names(), ['two_body'])
        self.assertEqual(broker.backends_count, 1)

        with self.assertRaises(ConfigError):
            broker.add('two_body', BackendType.ORACLE, OracleBackend(3))
        replacement = OracleBackend(3)
        broker.add('two_body', BackendType.ORACLE, replacement, replace=True)
        self.assertIs(broker.get('two_body'), replacement)

        self.assertIs(broker.remove('two_body'), replacement)
        self.assertIsNone(broker.remove('two_body'))
        self.assertIsNone(broker.get('two_body', raise_not_reg=False))
        with self.assertRaises(ConfigError) as context:
            broker.get('two_body')
        self.assertIn('two_body', str(context.exception))

    def test_invalid_name(self):
        with self.assertRaises(ConfigError):
            Broker().add('two-body', BackendType.ORACLE, OracleBackend(2))

    def test_filters(self):
        broker = Broker()
        broker.add('near', BackendType.ORACLE, OracleBackend(1))
        broker.add('far', BackendType.ORACLE, OracleBackend(3))
        self.assertEqual(broker.backend_names(), ['far', 'near'])
        self.assertEqual(
            broker.backend_names(
                filter_func=lambda backend: backend.order > 1), ['far'])
        self.assertEqual(broker.backend_names([BackendType.SURROGATE]), [])
