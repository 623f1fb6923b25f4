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
Oracle signal handlers
"""
import logging

from django.conf import settings
from django.dispatch import receiver

from broker import broker_open, Broker, BackendType
from .backend import OracleBackend
from .constants import THIS_APP


logger = logging.getLogger(__name__)


@receiver(broker_open)
def broker_open_handler(sender, **kwargs):
    """
    Handler for broker open signal; registers an oracle backend for each
    order in the HIGNN_ORACLE_BACKENDS setting
    :param sender: sender which sent the signal
    :param kwargs: keyword arguments including
        broker: broker that was opened
    """
    broker: Broker = kwargs.get('broker')

    logger.debug('%s: Broker open signal received from %s', THIS_APP, broker)

    for order in settings.HIGNN_ORACLE_BACKENDS:
        backend = OracleBackend(
            order, periodic_constant=settings.HIGNN_PERIODIC_DRAG)
        broker.add(backend.name, BackendType.ORACLE, backend, replace=True)
