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
External force models: uniform forcing and pairwise Morse forces
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence

import numpy as np

from oracle import Domain, ParticleSystem, UNBOUNDED, as_vectors, norms
from utils import ChoiceArg, DomainError, OverlapError
from .constants import (
    DEFAULT_MORSE_RHO, DEFAULT_MORSE_DEPTH, DEFAULT_MORSE_R_EQ,
    DEFAULT_UNIFORM_FORCE
)


@dataclass(frozen=True)
class MorseParams:
    """
    Morse force parameters
    """
    rho: float = DEFAULT_MORSE_RHO
    """ Inverse interaction range ρ_M """
    depth: float = DEFAULT_MORSE_DEPTH
    """ Depth of the attractive well D_e """
    r_eq: float = DEFAULT_MORSE_R_EQ
    """ Equilibrium distance r_e """

    def __post_init__(self):
        for name in ('rho', 'depth', 'r_eq'):
            value = getattr(self, name)
            if not np.isfinite(value) or value <= 0:
                raise DomainError(
                    f'Morse {name} must be positive, got {value}')


def morse_force_scalar(distance, params: MorseParams):
    """
    Morse pair force 2ρD(e^{−2ρ(r − r_e)} − e^{−ρ(r − r_e)}); positive is
    repulsive, negative attractive, zero at r_e and vanishing as r → ∞

    :param distance: centre distance r, scalar or array
    :param params: Morse parameters
    :return: signed force, same shape as `distance`
    :raises DomainError: r ≤ 0
    """
    distance = np.asarray(distance, dtype=float)
    if np.any(distance <= 0):
        raise DomainError('Morse force needs positive distances')
    decay = np.exp(-params.rho * (distance - params.r_eq))
    force = 2 * params.rho * params.depth * (decay * decay - decay)
    return float(force) if force.ndim == 0 else force


def total_external_force(positions, morse: Optional[MorseParams] = None,
                         uniform: Optional[Sequence[float]] = None,
                         domain: Domain = UNBOUNDED) -> np.ndarray:
    """
    F_i = Σ_{j≠i} F_Morse(r_ij) r̂_ij + uniform force, with r̂_ij the unit
    vector from j to i; each pair's terms are equal and opposite

    :param positions: (N, 3) positions
    :param morse: Morse parameters; default no pair forces
    :param uniform: force applied to every particle; default none
    :param domain: domain; default unbounded
    :return: (N, 3) forces
    :raises OverlapError: coincident particles
    """
    positions = as_vectors(positions)
    forces = np.zeros_like(positions)
    if morse is not None and len(positions) > 1:
        first, second = np.triu_indices(len(positions), k=1)
        separation = domain.minimum_image(
            positions[first] - positions[second])
        distance = norms(separation)
        coincident = np.flatnonzero(distance == 0)
        if len(coincident):
            pair = (int(first[coincident[0]]), int(second[coincident[0]]))
            raise OverlapError(
                f'Particles {pair[0]} and {pair[1]} coincide', pair=pair)
        pair_force = (morse_force_scalar(distance, morse)
                      / distance)[:, np.newaxis] * separation
        np.add.at(forces, first, pair_force)
        np.add.at(forces, second, -pair_force)
    if uniform is not None:
        forces += np.asarray(uniform, dtype=float)
    return forces


class ForceModel(ABC):
    """
    Interface for external force models
    """

    @abstractmethod
    def forces(self, system: ParticleSystem) -> np.ndarray:
        """
        Get the external forces on a system
        :param system: particle system
        :return: (N, 3) forces
        """

    @abstractmethod
    def describe(self) -> Dict[str, Any]:
        """
        Get the description recorded with simulation output
        :return: dict of description
        """


@dataclass(frozen=True)
class UniformForce(ForceModel):
    """
    The same force on every particle, e.g. gravity
    """
    force: tuple = DEFAULT_UNIFORM_FORCE

    def forces(self, system: ParticleSystem) -> np.ndarray:
        return total_external_force(system.positions, uniform=self.force)

    def describe(self) -> Dict[str, Any]:
        return {'force_model': ForceModelType.UNIFORM.arg,
                'force': list(self.force)}


@dataclass(frozen=True)
class MorseForce(ForceModel):
    """
    Pairwise Morse forces plus an optional uniform force
    """
    params: MorseParams = field(default_factory=MorseParams)
    uniform: Optional[tuple] = None

    def forces(self, system: ParticleSystem) -> np.ndarray:
        return total_external_force(system.positions, morse=self.params,
                                    uniform=self.uniform,
                                    domain=system.domain)

    def describe(self) -> Dict[str, Any]:
        description = {
            'force_model': ForceModelType.MORSE.arg,
            'rho': self.params.rho,
            'depth': self.params.depth,
            'r_eq': self.params.r_eq,
        }
        if self.uniform is not None:
            description['force'] = list(self.uniform)
        return description


class ForceModelType(ChoiceArg):
    """ Force model choices """
    UNIFORM = ('Uniform force', 'uniform')
    MORSE = ('Morse pair force', 'morse')


def force_model(kind: ForceModelType, force: Optional[Sequence[float]] = None,
                morse: Optional[MorseParams] = None) -> ForceModel:
    """
    Create a force model

    :param kind: model type
    :param force: uniform force; default gravity for UNIFORM, none for MORSE
    :param morse: Morse parameters; default MorseParams()
    :return: model
    """
    if kind == ForceModelType.MORSE:
        return MorseForce(morse or MorseParams(),
                          None if force is None else tuple(force))
    return UniformForce(DEFAULT_UNIFORM_FORCE if force is None
                        else tuple(force))
