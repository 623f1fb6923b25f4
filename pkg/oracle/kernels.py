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
Closed-form mobility kernels: Stokes drag, the Rotne-Prager-Yamakawa pair
tensor and the stresslet reflection of an Oseen flow
"""
import numpy as np

from .constants import PERIODIC_DRAG_CONSTANT
from .domain import Domain, UNBOUNDED, check_physical, norms

IDENTITY = np.eye(3)


def stokes_drag(viscosity: float, radius: float, domain: Domain = UNBOUNDED,
                periodic_constant: float = PERIODIC_DRAG_CONSTANT
                ) -> np.ndarray:
    """
    Single-particle mobility block c·I; c = 1/(6πμa) in an unbounded
    domain, k/(6πμ) in a periodic box

    :param viscosity: dynamic viscosity μ
    :param radius: particle radius a
    :param domain: fluid domain; default unbounded
    :param periodic_constant: periodic constant k; default 0.982
    :return: 3×3 block
    :raises DomainError: non-positive viscosity or radius
    """
    check_physical(viscosity, radius)
    if domain.is_periodic:
        coefficient = periodic_constant / (6 * np.pi * viscosity)
    else:
        coefficient = 1 / (6 * np.pi * viscosity * radius)
    return coefficient * IDENTITY


def rpy_blocks(separations: np.ndarray, viscosity: float,
               radius: float) -> np.ndarray:
    """
    Rotne-Prager-Yamakawa cross-mobility blocks for many separations

    :param separations: (M, 3) separation vectors
    :param viscosity: dynamic viscosity μ
    :param radius: particle radius a
    :return: (M, 3, 3) blocks
    """
    separations = np.asarray(separations, dtype=float).reshape(-1, 3)
    dist = norms(separations)
    blocks = np.empty((len(dist), 3, 3))

    coincident = dist == 0
    far = dist >= 2 * radius
    near = ~far & ~coincident

    # r̂r̂, left at zero for coincident pairs
    unit = np.zeros_like(separations)
    unit[~coincident] = separations[~coincident] / dist[~coincident, None]
    outer = unit[:, :, None] * unit[:, None, :]

    if np.any(far):
        r = dist[far]
        a2_r2 = radius ** 2 / r ** 2
        prefactor = 1 / (8 * np.pi * viscosity * r)
        blocks[far] = prefactor[:, None, None] * (
            (1 + 2 * a2_r2 / 3)[:, None, None] * IDENTITY
            + (1 - 2 * a2_r2)[:, None, None] * outer[far])
    if np.any(near):
        r_a = dist[near] / radius
        prefactor = 1 / (6 * np.pi * viscosity * radius)
        blocks[near] = prefactor * (
            (1 - 9 * r_a / 32)[:, None, None] * IDENTITY
            + (3 * r_a / 32)[:, None, None] * outer[near])
    if np.any(coincident):
        blocks[coincident] = IDENTITY / (6 * np.pi * viscosity * radius)
    return blocks


def rpy_pair_mobility(separation, viscosity: float,
                      radius: float) -> np.ndarray:
    """
    Rotne-Prager-Yamakawa cross-mobility block. Far branch for |r| ≥ 2a,
    regularised overlap branch below, Stokes drag at r = 0.

    :param separation: separation 3-vector r
    :param viscosity: dynamic viscosity μ
    :param radius: particle radius a
    :return: 3×3 block
    :raises DomainError: non-positive viscosity or radius
    """
    check_physical(viscosity, radius)
    return rpy_blocks(np.asarray(separation, dtype=float)[None, :],
                      viscosity, radius)[0]


def oseen_strain_rates(separations: np.ndarray, forces: np.ndarray,
                       viscosity: float) -> np.ndarray:
    """
    Symmetric rate of strain E = (x·F)/(8πμ|x|³)(I − 3x̂x̂) of the Oseen flow
    of point force F, at offset x from the force

    :param separations: (M, 3) offsets x
    :param forces: (M, 3) point forces F
    :param viscosity: dynamic viscosity μ
    :return: (M, 3, 3) traceless symmetric tensors
    """
    dist = norms(separations)
    unit = separations / dist[:, None]
    outer = unit[:, :, None] * unit[:, None, :]
    scale = np.einsum('mk,mk->m', separations, forces) \
        / (8 * np.pi * viscosity * dist ** 3)
    return scale[:, None, None] * (IDENTITY - 3 * outer)


def stresslet_velocities(separations: np.ndarray, strain_rates: np.ndarray,
                         viscosity: float, radius: float) -> np.ndarray:
    """
    Velocity −3/(8πμ)·y(y·S·y)/|y|⁵ of the stresslet S = (20/3)πμa³·E
    induced on a rigid sphere by ambient strain E, at offset y from the
    sphere

    :param separations: (M, 3) offsets y
    :param strain_rates: (M, 3, 3) ambient strain at the sphere
    :param viscosity: dynamic viscosity μ
    :param radius: sphere radius a
    :return: (M, 3) velocities
    """
    stresslets = (20 / 3) * np.pi * viscosity * radius ** 3 * strain_rates
    dist = norms(separations)
    contraction = np.einsum('mi,mij,mj->m', separations, stresslets,
                            separations)
    scale = -3 / (8 * np.pi * viscosity) * contraction / dist ** 5
    return scale[:, None] * separations
