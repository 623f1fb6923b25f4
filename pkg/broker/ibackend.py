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
Velocity backend interface
"""
from abc import ABC, abstractmethod
from enum import Enum, auto
from typing import TYPE_CHECKING, Any, Dict

import numpy as np

if TYPE_CHECKING:
    from oracle import ParticleSystem


class BackendType(Enum):
    """
    Velocity backend types
    """
    UNKNOWN = auto()

    ORACLE = auto()     # analytic truncated mobility
    SURROGATE = auto()  # learned hypergraph surrogate


class IVelocityBackend(ABC):
    """
    Interface for classes mapping particle forces to particle velocities
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """ Name the backend is registered under """

    @property
    @abstractmethod
    def backend_type(self) -> BackendType:
        """ Type of backend """

    @abstractmethod
    def velocities(self, system: 'ParticleSystem',
                   forces: np.ndarray) -> np.ndarray:
        """
        Compute particle velocities
        :param system: particle system
        :param forces: (N, 3) forces
        :return: (N, 3) velocities
        """

    @abstractmethod
    def without_faces(self) -> 'IVelocityBackend':
        """
        Get the variant of this backend without three-body contributions
        :return: backend
        """

    def metadata(self) -> Dict[str, Any]:
        """
        Get the backend description recorded with simulation output
        :return: dict of description
        """
        return {'backend': self.name}

    def __str__(self):
        return f'{self.__class__.__name__}({self.name})'
