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
Oracle velocity backend
"""
from dataclasses import dataclass, replace
from typing import Any, Dict

import numpy as np

from broker import IVelocityBackend, BackendType
from .constants import PERIODIC_DRAG_CONSTANT, oracle_backend_name
from .domain import ParticleSystem
from .mobility import oracle_velocities


@dataclass(frozen=True)
class OracleBackend(IVelocityBackend):
    """
    Velocities from the truncated analytic oracle
    """
    order: int
    three_body: bool = True
    periodic_constant: float = PERIODIC_DRAG_CONSTANT

    @property
    def name(self) -> str:
        return oracle_backend_name(self.order)

    @property
    def backend_type(self) -> BackendType:
        return BackendType.ORACLE

    def velocities(self, system: ParticleSystem,
                   forces: np.ndarray) -> np.ndarray:
        return oracle_velocities(
            system, forces, self.order, three_body=self.three_body,
            periodic_constant=self.periodic_constant)

    def without_faces(self) -> 'OracleBackend':
        return replace(self, three_body=False)

    def metadata(self) -> Dict[str, Any]:
        return {
            'backend': self.name,
            'order': self.order,
            'three_body': self.three_body,
        }
