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
Surrogate velocity backend
"""
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Any, Dict

import numpy as np

from broker import IVelocityBackend, BackendType
from graph import build_graph, partition_graph
from oracle import (
    PERIODIC_DRAG_CONSTANT, ParticleSystem, as_vectors, stokes_drag
)
from .constants import SURROGATE_BACKEND_NAME
from .params import SurrogateParams, model_hash
from .parallel import parallel_infer


@dataclass(frozen=True)
class SurrogateBackend(IVelocityBackend):
    """
    Velocities from the hypergraph surrogate; the graph is rebuilt on every
    call. The single-body mobility follows the system, not the domain the
    model was trained in.
    """
    params: SurrogateParams
    workers: int = 1
    use_faces: bool = True
    periodic_constant: float = PERIODIC_DRAG_CONSTANT
    """ Periodic single-body constant k """

    @property
    def name(self) -> str:
        return SURROGATE_BACKEND_NAME

    @property
    def backend_type(self) -> BackendType:
        return BackendType.SURROGATE

    @cached_property
    def model_hash(self) -> str:
        """ SHA-256 of the model json """
        return model_hash(self.params)

    def system_params(self, system: ParticleSystem) -> SurrogateParams:
        """
        Get the parameters with alpha1 for the system's viscosity, radius
        and domain
        :param system: particle system
        :return: parameters sharing the kernels
        """
        return replace(self.params, alpha1=stokes_drag(
            system.viscosity, system.radius, system.domain,
            periodic_constant=self.periodic_constant))

    def velocities(self, system: ParticleSystem,
                   forces: np.ndarray) -> np.ndarray:
        forces = as_vectors(forces, name='forces', count=system.n_particles)
        if not system.n_particles:
            return np.zeros((0, 3))
        graph = build_graph(system.positions, system.domain,
                            r_cut=self.params.face_r_cut,
                            faces=self.use_faces)
        partition = partition_graph(
            graph, min(self.workers, system.n_particles))
        return parallel_infer(partition, system.positions, forces,
                              self.system_params(system), self.workers,
                              use_faces=self.use_faces)

    def without_faces(self) -> 'SurrogateBackend':
        return replace(self, use_faces=False)

    def metadata(self) -> Dict[str, Any]:
        return {
            'backend': self.name,
            'model_hash': self.model_hash,
            'face_r_cut': self.params.face_r_cut,
            'use_faces': self.use_faces,
            'periodic_constant': self.periodic_constant,
        }
