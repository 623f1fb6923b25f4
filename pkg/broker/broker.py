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
Registry of velocity backends
"""
import logging
from typing import TypeVar, Optional, List, Dict, Union, Tuple, Callable

from utils import SingletonMixin, ensure_list, ConfigError
from .ibackend import IVelocityBackend, BackendType


TypeBroker = TypeVar('TypeBroker', bound='Broker')

logger = logging.getLogger(__name__)


class Broker(SingletonMixin):
    """
    Provides a singleton broker of velocity backends
    """

    _backends: Dict[BackendType, Dict[str, IVelocityBackend]]

    def __init__(self):
        self._backends = {}

    def is_registered(self, name: str, *args) -> bool:
        """
        Is a backend registered

        :param name: Name of backend
        :param args: List of BackendType to check; default all
        :return: True if registered, otherwise False
        """
        backend_types = args if len(args) > 0 else tuple(BackendType)

        return any(
            name in self._backends.get(backend_type, {})
            for backend_type in backend_types
        )

    @staticmethod
    def is_valid_identifier(name: str) -> bool:
        """
        Check `name` is a valid identifier
        :param name:
        :return: True if valid, otherwise False
        """
        return name.isidentifier()

    def add(self, name: str, backend_type: BackendType,
            backend: IVelocityBackend, replace: bool = False) -> bool:
        """
        Add a backend to the broker

        :param name: Name of backend
        :param backend_type: Backend type
        :param backend: Backend instance to add
        :param replace: replace an existing registration; default False
        :return: True if added, otherwise False
        :raises ConfigError: invalid name or already registered and not
                            `replace`
        """
        if not self.is_valid_identifier(name):
            raise ConfigError(f"Velocity backend name '{name}' is invalid")
        registered = self.is_registered(name)
        if registered and not replace:
            raise ConfigError(f"Velocity backend '{name}' already registered")
        if registered:
            self.remove(name)

        self._backends.setdefault(backend_type, {})[name] = backend
        logger.debug('Registered velocity backend %s', backend)
        return True

    def remove(self, name: str) -> Optional[IVelocityBackend]:
        """
        Remove a backend from the broker

        :param name: Name of backend
        :return: removed backend or None if not registered
        """
        for backends in self._backends.values():
            if name in backends:
                return backends.pop(name)
        return None

    @staticmethod
    def _backend_types(
        backend_type: Union[BackendType, List, Tuple, None]
    ) -> Tuple[BackendType]:
        """
        Get the backend types
        :param backend_type: list, tuple or instance of BackendType; None for
                            all types
        :return: tuple of BackendType
        """
        return tuple(BackendType) if backend_type is None else \
            tuple(ensure_list(backend_type))

    def get(self, name: str,
            backend_type: Union[BackendType, List, Tuple] = None,
            raise_not_reg: bool = True) -> Optional[IVelocityBackend]:
        """
        Get a backend from the Broker

        :param name: Name of backend
        :param backend_type: list, tuple or instance of BackendType;
                            default all types
        :param raise_not_reg: raise an exception if not registered;
                            default True
        :return: Backend
        :raises ConfigError: if not registered and `raise_not_reg`
        """
        backend = None
        for btype in self._backend_types(backend_type):
            backend = self._backends.get(btype, {}).get(name)
            if backend is not None:
                break

        if backend is None and raise_not_reg:
            raise ConfigError(
                f"Velocity backend '{name}' not registered, available: "
                f"{', '.join(self.backend_names()) or 'none'}")
        return backend

    def backend_names(self, backend_type: List[BackendType] = None,
                      filter_func: Callable = None) -> List[str]:
        """
        Get the backend names

        :param backend_type: Backend type to filter on; default None
        :param filter_func: Filter function to apply to backends; default None
        :return: sorted backend names
        """
        return sorted(
            name for btype in self._backend_types(backend_type)
            for name, backend in self._backends.get(btype, {}).items()
            if filter_func is None or filter_func(backend)
        )

    @property
    def backends_count(self) -> int:
        """
        Get the number of backends

        :return: Number of backends
        """
        return len(self.backend_names())

    def __str__(self):
        return (f'{super().__str__()}: backends {self.backends_count}, '
                f'types {len(self._backends)}')
