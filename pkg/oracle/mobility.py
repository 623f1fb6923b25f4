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
Grand mobility assembly and truncated velocity oracle
"""
import numpy as np

from utils import DomainError, UnsupportedDomainError
from .constants import (
    PERIODIC_DRAG_CONSTANT, ISOLATED_ORDER, THREE_BODY_ORDER, ORACLE_ORDERS
)
from .domain import ParticleSystem, as_vectors
from .kernels import (
    stokes_drag, rpy_blocks, oseen_strain_rates, stresslet_velocities
)


def _require_unbounded(system: ParticleSystem, what: str):
    if system.domain.is_periodic:
        raise UnsupportedDomainError(
            f'{what} is not available in a periodic domain')


def assemble_grand_mobility(system: ParticleSystem) -> np.ndarray:
    """
    Assemble the dense 3N×3N translational mobility matrix: Stokes drag on
    the diagonal blocks, RPY blocks of X_j − X_i off the diagonal

    :param system: particle system in an unbounded domain
    :return: symmetric positive semi-definite matrix
    :raises UnsupportedDomainError: periodic domain
    """
    _require_unbounded(system, 'Grand mobility')
    n = system.n_particles
    blocks = rpy_blocks(system.displacements().reshape(-1, 3),
                        system.viscosity, system.radius).reshape(n, n, 3, 3)
    idx = np.arange(n)
    blocks[idx, idx] = stokes_drag(system.viscosity, system.radius)
    # (i, j, a, b) -> (3i + a, 3j + b)
    return blocks.transpose(0, 2, 1, 3).reshape(3 * n, 3 * n)


def stresslet_reflections(system: ParticleSystem, forces: np.ndarray,
                          three_body: bool = True) -> np.ndarray:
    """
    Velocity at each particle i of the stresslets induced on every other
    particle k by the point-force flows of the particles j ≠ k

    :param system: particle system in an unbounded domain
    :param forces: (N, 3) forces
    :param three_body: include j ≠ i; if False only the two-body self
                    correction j = i is included
    :return: (N, 3) velocity corrections
    """
    n = system.n_particles
    velocities = np.zeros((n, 3))
    if n < 2:
        return velocities

    disp = system.displacements()
    # ordered pairs in row-major order
    first, second = np.nonzero(~np.eye(n, dtype=bool))

    if three_body:
        # ambient strain at k = first from the force on j = second
        pair_strain = oseen_strain_rates(
            -disp[first, second], forces[second], system.viscosity)
        strain = np.zeros((n, 3, 3))
        np.add.at(strain, first, pair_strain)
        # reflected from k = second to i = first
        strain_at_k = strain[second]
    else:
        # ambient strain at k = second from the force on i = first
        strain_at_k = oseen_strain_rates(
            disp[first, second], forces[first], system.viscosity)

    reflected = stresslet_velocities(
        -disp[first, second], strain_at_k, system.viscosity, system.radius)
    np.add.at(velocities, first, reflected)
    return velocities


def oracle_velocities(system: ParticleSystem, forces, order: int,
                      three_body: bool = True,
                      periodic_constant: float = PERIODIC_DRAG_CONSTANT
                      ) -> np.ndarray:
    """
    Particle velocities from forces at a truncation order.
    Order 1: isolated Stokes drag. Order 2: adds the RPY pair terms, as the
    grand mobility product. Order 3: adds the stresslet reflections.

    :param system: particle system
    :param forces: (N, 3) forces
    :param order: truncation order, 1, 2 or 3
    :param three_body: include three-body reflections at order 3;
                    default True
    :param periodic_constant: periodic single-body constant
    :return: (N, 3) velocities
    :raises DomainError: invalid order
    :raises UnsupportedDomainError: periodic domain with order ≥ 2
    :raises OverlapError: overlapping particles
    """
    if order not in ORACLE_ORDERS:
        raise DomainError(
            f'Oracle order must be one of {ORACLE_ORDERS}, got {order}')
    forces = as_vectors(forces, name='forces', count=system.n_particles)
    if order > ISOLATED_ORDER:
        _require_unbounded(system, f'Oracle order {order}')
    system.check_overlap()

    if order == ISOLATED_ORDER:
        drag = stokes_drag(system.viscosity, system.radius, system.domain,
                           periodic_constant=periodic_constant)
        return forces @ drag

    mobility = assemble_grand_mobility(system)
    velocities = (mobility @ forces.reshape(-1)).reshape(-1, 3)
    if order == THREE_BODY_ORDER:
        velocities += stresslet_reflections(
            system, forces, three_body=three_body)
    return velocities
