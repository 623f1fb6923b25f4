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
Surrogate signal handlers
"""
import logging

from django.conf import settings
from django.dispatch import receiver

from broker import broker_open, Broker, BackendType
from utils import HignnError
from .backend import SurrogateBackend
from .constants import THIS_APP
from .params import load_model


logger = logging.getLogger(__name__)


@receiver(broker_open)
def broker_open_handler(sender, **kwargs):
    """
    Handler for broker open signal; registers a surrogate backend for the
    model file named by the HIGNN_MODEL setting, if any
    :param sender: sender which sent the signal
    :param kwargs: keyword arguments including
        broker: broker that was opened
    """
    broker: Broker = kwargs.get('broker')

    logger.debug('%s: Broker open signal received from %s', THIS_APP, broker)

    if not settings.HIGNN_MODEL:
        return
    try:
        params = load_model(settings.HIGNN_MODEL)
    except (OSError, HignnError) as exc:
        logger.warning('%s: model %s not registered: %s',
                       THIS_APP, settings.HIGNN_MODEL, exc)
        return
    backend = SurrogateBackend(
        params, workers=settings.HIGNN_WORKERS,
        periodic_constant=settings.HIGNN_PERIODIC_DRAG)
    broker.add(backend.name, BackendType.SURROGATE, backend, replace=True)
