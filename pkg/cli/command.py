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
Base management command and helpers shared by the hignn commands
"""
import logging
from dataclasses import replace

from django.conf import settings
from django.core.management.base import (
    BaseCommand, CommandError, CommandParser
)

from broker import Broker, IVelocityBackend
from oracle import OracleBackend, ParticleSystem
from stokes_hignn import command_alias
from surrogate import (
    SURROGATE_BACKEND_NAME, SurrogateBackend, SurrogateParams, load_model
)
from utils import HignnError
from .config import RunConfig, load_run_config
from .constants import (
    CONFIG_OPTION, WORKERS_OPTION, SEED_OPTION, GRAPH_SECTION,
    PHYSICS_SECTION, MODEL_PATH
)


logger = logging.getLogger(__name__)


class HignnCommand(BaseCommand):
    """
    Base class of the hignn commands; validates the run config, then runs
    the command, reporting domain errors as command errors
    """
    command: str = ''
    """ Management command name, as echoed in run configs """

    def add_arguments(self, parser: CommandParser):
        parser.add_argument(
            f'--{CONFIG_OPTION}', required=True, metavar='PATH',
            help='Run config json file')
        parser.add_argument(
            f'--{WORKERS_OPTION}', type=int, default=None, metavar='N',
            help='Number of workers; default the HIGNN_WORKERS setting')
        parser.add_argument(
            f'--{SEED_OPTION}', type=int, default=None, metavar='S',
            help='Random seed, overrides the run config')

    def handle(self, *args, **options):
        workers = options[WORKERS_OPTION]
        if workers is None:
            workers = settings.HIGNN_WORKERS
        if workers < 1:
            raise CommandError(f'--{WORKERS_OPTION} must be at least 1')

        try:
            config = load_run_config(options[CONFIG_OPTION], self.command,
                                     seed=options[SEED_OPTION])
            logger.info('%s: seed %d, %d worker(s)',
                        command_alias(self.command), config.seed, workers)
            self.run(config, workers)
        except HignnError as exc:
            raise CommandError(str(exc)) from exc
        except OSError as exc:
            raise CommandError(f'I/O error: {exc}') from exc

    def run(self, config: RunConfig, workers: int):
        """
        Run the command
        :param config: validated run config
        :param workers: number of workers
        """
        raise NotImplementedError

    def success(self, message: str):
        """
        Report a result
        :param message: message to write
        """
        self.stdout.write(self.style.SUCCESS(message))


def make_system(config: RunConfig, positions) -> ParticleSystem:
    """
    Create a particle system with the run's domain and physics
    :param config: run config
    :param positions: (N, 3) positions
    :return: system
    """
    physics = config.section(PHYSICS_SECTION)
    return ParticleSystem(positions, radius=physics['radius'],
                          viscosity=physics['viscosity'],
                          domain=config.domain)


def load_params(config: RunConfig) -> SurrogateParams:
    """
    Load the run's model, with the configured face cutoff if set
    :param config: run config
    :return: parameters
    """
    params = load_model(config.path(MODEL_PATH))
    face_r_cut = config.section(GRAPH_SECTION)['face_r_cut']
    return params if face_r_cut is None else params.with_face_r_cut(face_r_cut)


def resolve_backend(name: str, config: RunConfig,
                    workers: int) -> IVelocityBackend:
    """
    Get a velocity backend by name. The surrogate comes from the run's
    model file if set, otherwise from the broker; oracles from the broker.

    :param name: backend name, e.g. 'surrogate' or 'oracle_3'
    :param config: run config
    :param workers: number of workers
    :return: backend
    :raises ConfigError: backend not available
    """
    graph = config.section(GRAPH_SECTION)
    periodic_constant = config.section(PHYSICS_SECTION)['periodic_constant']
    if name == SURROGATE_BACKEND_NAME and config.path(MODEL_PATH):
        backend = SurrogateBackend(load_params(config), workers=workers,
                                   periodic_constant=periodic_constant)
    else:
        backend = Broker.get_instance().get(name)
        if isinstance(backend, SurrogateBackend):
            backend = replace(backend, workers=workers,
                              periodic_constant=periodic_constant)
            if graph['face_r_cut'] is not None:
                backend = replace(backend, params=backend.params
                                  .with_face_r_cut(graph['face_r_cut']))
        elif isinstance(backend, OracleBackend):
            backend = replace(backend, periodic_constant=periodic_constant)
    if not graph['use_faces']:
        backend = backend.without_faces()
    logger.info('Using velocity backend %s', backend)
    return backend
