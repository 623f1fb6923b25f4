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
Oracle tests
"""
import tempfile
from pathlib import Path

import numpy as np
from numpy.testing import assert_allclose, assert_array_equal
from django.test import SimpleTestCase

from utils import (
    DomainError, UnsupportedDomainError, OverlapError, DataFormatError,
    GenerationError
)
from .backend import OracleBackend
from .datafile import (
    write_training_csv, read_training_csv, write_vectors_csv, read_vectors_csv
)
from .domain import ParticleSystem, PeriodicBox, UNBOUNDED, domain_from_tag
from .kernels import stokes_drag, rpy_pair_mobility
from .mobility import assemble_grand_mobility, oracle_velocities
from .sampler import (
    SamplerConfig, TrainingSample, generate_training_set,
    near_contact_fraction
)


def random_system(rng: np.random.Generator, n: int, spread: float = 8.0,
                  min_distance: float = 2.05) -> ParticleSystem:
    """ Random non-overlapping configuration """
    positions = []
    while len(positions) < n:
        candidate = rng.uniform(-spread, spread, 3)
        if all(np.linalg.norm(candidate - p) >= min_distance
               for p in positions):
            positions.append(candidate)
    return ParticleSystem(np.array(positions))


def slope(distances, values) -> float:
    """ Log-log slope of a least squares fit """
    return np.polyfit(np.log(distances), np.log(values), 1)[0]


def rotation(rng: np.random.Generator) -> np.ndarray:
    """ Random proper rotation """
    q_mat, r_mat = np.linalg.qr(rng.standard_normal((3, 3)))
    q_mat = q_mat * np.sign(np.diag(r_mat))
    if np.linalg.det(q_mat) < 0:
        q_mat[:, 0] = -q_mat[:, 0]
    return q_mat


class TestStokesDrag(SimpleTestCase):
    """ Single-particle mobility tests """

    def test_unbounded(self):
        assert_allclose(stokes_drag(1, 1), np.eye(3) / (6 * np.pi))
        self.assertAlmostEqual(stokes_drag(1, 1)[0, 0], 0.0530516, places=7)

    def test_viscosity_scaling(self):
        assert_allclose(stokes_drag(2, 1), stokes_drag(1, 1) / 2)

    def test_periodic(self):
        assert_allclose(stokes_drag(1, 1, PeriodicBox(32)),
                        0.982 / (6 * np.pi) * np.eye(3))

    def test_invalid(self):
        for viscosity, radius in ((0, 1), (1, 0), (-1, 1), (1, -2)):
            with self.subTest(viscosity=viscosity, radius=radius):
                with self.assertRaises(DomainError):
                    stokes_drag(viscosity, radius)


class TestRpy(SimpleTestCase):
    """ RPY pair tensor tests """

    def test_far_field_decay(self):
        distances = np.array([1e2, 1e3, 1e4, 1e5])
        parallel = [
            rpy_pair_mobility([d, 0, 0], 1, 1)[0, 0] for d in distances]
        assert_allclose(parallel, 2 / (8 * np.pi * distances), rtol=1e-3)
        self.assertAlmostEqual(slope(distances, parallel), -1, delta=0.05)

    def test_continuous_at_contact(self):
        above = rpy_pair_mobility([2.0, 0, 0], 1, 1)
        below = rpy_pair_mobility([2.0 * (1 - 1e-15), 0, 0], 1, 1)
        assert_allclose(above, below, rtol=0, atol=1e-12)
        direction = np.array([1.0, 2.0, -2.0]) / 3
        assert_allclose(rpy_pair_mobility(2 * direction, 1, 1),
                        rpy_pair_mobility(2 * (1 - 1e-15) * direction, 1, 1),
                        rtol=0, atol=1e-12)

    def test_zero_separation(self):
        assert_allclose(rpy_pair_mobility([0, 0, 0], 1.5, 0.7),
                        stokes_drag(1.5, 0.7))

    def test_isotropy(self):
        rng = np.random.default_rng(7)
        for distance in (0.5, 1.9, 2.0, 3.0, 50.0):
            r_vec = distance * rng.standard_normal(3) / np.sqrt(3)
            q_mat = rotation(rng)
            assert_allclose(rpy_pair_mobility(q_mat @ r_vec, 1, 1),
                            q_mat @ rpy_pair_mobility(r_vec, 1, 1) @ q_mat.T,
                            rtol=0, atol=1e-12)


class TestGrandMobility(SimpleTestCase):
    """ Grand mobility tests """

    def test_single(self):
        mobility = assemble_grand_mobility(ParticleSystem([[0, 0, 0]]))
        assert_allclose(mobility, np.eye(3) / (6 * np.pi))

    def test_widely_separated(self):
        mobility = assemble_grand_mobility(
            ParticleSystem([[0, 0, 0], [1e4, 0, 0]]))
        self.assertLess(np.linalg.norm(mobility[:3, 3:]),
                        1e-3 * np.linalg.norm(mobility[:3, :3]))

    def test_brute_force(self):
        system = random_system(np.random.default_rng(3), 3)
        expected = np.zeros((9, 9))
        for i in range(3):
            for j in range(3):
                block = stokes_drag(1, 1) if i == j else rpy_pair_mobility(
                    system.positions[j] - system.positions[i], 1, 1)
                expected[3 * i:3 * i + 3, 3 * j:3 * j + 3] = block
        assert_allclose(assemble_grand_mobility(system), expected,
                        rtol=1e-14, atol=0)

    def test_symmetric_positive_semidefinite(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            system = random_system(rng, int(rng.integers(2, 21)))
            mobility = assemble_grand_mobility(system)
            scale = np.linalg.norm(mobility)
            self.assertLessEqual(np.abs(mobility - mobility.T).max(),
                                 1e-12 * scale)
            self.assertGreaterEqual(np.linalg.eigvalsh(mobility).min(),
                                    -1e-10 * scale)

    def test_periodic_unsupported(self):
        with self.assertRaises(UnsupportedDomainError):
            assemble_grand_mobility(
                ParticleSystem([[1, 1, 1]], domain=PeriodicBox(32)))


class TestOracleVelocities(SimpleTestCase):
    """ Truncated oracle tests """

    def test_single_particle(self):
        system = ParticleSystem([[0, 0, 0]])
        for order in (1, 2, 3):
            velocities = oracle_velocities(system, [[0, 0, -1]], order)
            assert_allclose(velocities, [[0, 0, -1 / (6 * np.pi)]],
                            rtol=1e-15)

    def test_isolated_at_infinity(self):
        rng = np.random.default_rng(5)
        system = ParticleSystem([[0, 0, 0], [1e6, 0, 0]])
        forces = rng.standard_normal((2, 3))
        isolated = forces / (6 * np.pi)
        velocities = oracle_velocities(system, forces, 3)
        self.assertLess(
            np.abs(velocities - isolated).max(),
            1e-5 * np.abs(isolated).max())

    def test_order_two_is_mobility_product(self):
        rng = np.random.default_rng(8)
        system = random_system(rng, 6)
        forces = rng.standard_normal((6, 3))
        expected = assemble_grand_mobility(system) @ forces.ravel()
        assert_array_equal(oracle_velocities(system, forces, 2).ravel(),
                           expected)

    def test_cross_term_decay(self):
        distances = np.array([10.0, 20.0, 40.0, 80.0])
        cross = []
        for distance in distances:
            system = ParticleSystem([[0, 0, 0], [distance, 0, 0]])
            velocities = oracle_velocities(
                system, [[0, 0, 0], [1, 0, 0]], 2)
            cross.append(np.linalg.norm(velocities[0]))
        self.assertAlmostEqual(slope(distances, cross), -1, delta=0.05)

    def test_three_body_correction_decay(self):
        spacings = np.array([10.0, 20.0, 40.0, 80.0])
        corrections = []
        for spacing in spacings:
            system = ParticleSystem(
                [[0, 0, 0], [spacing, 0, 0], [2 * spacing, 0, 0]])
            forces = [[0, 0, 0], [0, 0, 0], [1, 0, 0]]
            delta = oracle_velocities(system, forces, 3)[0] \
                - oracle_velocities(system, forces, 2)[0]
            corrections.append(np.linalg.norm(delta))
        self.assertAlmostEqual(slope(spacings, corrections), -4, delta=0.3)

    def test_self_correction_decay(self):
        distances = np.array([10.0, 20.0, 40.0, 80.0])
        corrections = []
        for distance in distances:
            system = ParticleSystem([[0, 0, 0], [distance, 0, 0]])
            forces = [[1, 0, 0], [0, 0, 0]]
            delta = oracle_velocities(system, forces, 3)[0] \
                - oracle_velocities(system, forces, 2)[0]
            corrections.append(np.linalg.norm(delta))
        self.assertAlmostEqual(slope(distances, corrections), -4, delta=0.3)

    def test_two_body_variant_drops_three_body(self):
        system = ParticleSystem([[0, 0, 0], [5, 0, 0], [10, 0, 0]])
        forces = [[0, 0, 0], [0, 0, 0], [1, 0, 0]]
        # no force on 0, so only three-body terms reach it
        assert_allclose(
            oracle_velocities(system, forces, 3, three_body=False)[0],
            oracle_velocities(system, forces, 2)[0], rtol=0, atol=1e-18)
        self.assertGreater(
            np.linalg.norm(oracle_velocities(system, forces, 3)[0]
                           - oracle_velocities(system, forces, 2)[0]), 0)

    def test_translation_invariance(self):
        rng = np.random.default_rng(13)
        system = random_system(rng, 5)
        forces = rng.standard_normal((5, 3))
        shifted = system.moved(system.positions + [12.5, -3.25, 101.0])
        for order in (1, 2, 3):
            velocities = oracle_velocities(system, forces, order)
            assert_allclose(oracle_velocities(shifted, forces, order),
                            velocities, rtol=0,
                            atol=1e-12 * np.abs(velocities).max())

    def test_errors(self):
        system = ParticleSystem([[0, 0, 0], [1.5, 0, 0]])
        with self.assertRaises(OverlapError):
            oracle_velocities(system, np.zeros((2, 3)), 2)
        with self.assertRaises(DomainError):
            oracle_velocities(ParticleSystem([[0, 0, 0]]), [[0, 0, 1]], 4)
        periodic = ParticleSystem([[1, 1, 1], [5, 5, 5]],
                                  domain=PeriodicBox(32))
        with self.assertRaises(UnsupportedDomainError):
            oracle_velocities(periodic, np.zeros((2, 3)), 2)
        assert_allclose(
            oracle_velocities(periodic, [[0, 0, -1], [0, 0, 0]], 1)[0],
            [0, 0, -0.982 / (6 * np.pi)])

    def test_backend(self):
        backend = OracleBackend(3)
        self.assertEqual(backend.name, 'oracle_3')
        self.assertFalse(backend.without_faces().three_body)
        system = ParticleSystem([[0, 0, 0], [4, 0, 0]])
        forces = [[0, 0, 1], [0, 0, 1]]
        assert_array_equal(backend.velocities(system, forces),
                           oracle_velocities(system, forces, 3))


class TestDomain(SimpleTestCase):
    """ Domain descriptor tests """

    def test_tags(self):
        self.assertEqual(domain_from_tag('unbounded'), UNBOUNDED)
        self.assertEqual(domain_from_tag(PeriodicBox(32.0).tag),
                         PeriodicBox(32.0))
        for tag in ('periodic', 'box:3', 'periodic:-1', 'periodic:x'):
            with self.subTest(tag=tag):
                with self.assertRaises(DomainError):
                    domain_from_tag(tag)

    def test_periodic_positions(self):
        with self.assertRaises(DomainError):
            ParticleSystem([[33, 0, 0]], domain=PeriodicBox(32))
        box = PeriodicBox(32)
        assert_allclose(box.minimum_image(np.array([30.0, -17.0, 2.0])),
                        [-2.0, 15.0, 2.0])
        self.assertTrue(np.all(box.wrap(np.array([[-1e-17, 32.0, 64.5]]))
                               < 32))


class TestSampler(SimpleTestCase):
    """ Training set generation tests """

    def test_deterministic(self):
        first = generate_training_set(10, seed=42)
        second = generate_training_set(10, seed=42)
        self.assertEqual(len(first), 10)
        for one, two in zip(first, second):
            assert_array_equal(one.positions, two.positions)
            assert_array_equal(one.forces, two.forces)
            assert_array_equal(one.velocities, two.velocities)

    def test_samples(self):
        samples = generate_training_set(300, seed=1)
        basis = np.eye(3)
        for sample in samples:
            self.assertGreaterEqual(sample.min_gap(1.0), 1e-3)
            self.assertTrue(all(
                any(np.array_equal(force, unit) for unit in basis)
                for force in sample.forces))
            self.assertTrue(np.all(np.isfinite(sample.velocities)))
            self.assertTrue(np.all(np.linalg.norm(sample.velocities, axis=1)
                                   > 0))

    def test_near_contact_quota(self):
        samples = generate_training_set(1000, seed=3)
        self.assertAlmostEqual(near_contact_fraction(samples, 1.0), 0.3,
                               delta=0.02)

    def test_shards_independent_of_workers(self):
        serial = generate_training_set(600, seed=9)
        parallel = generate_training_set(600, seed=9, workers=2)
        for one, two in zip(serial, parallel):
            assert_array_equal(one.velocities, two.velocities)

    def test_unsatisfiable(self):
        config = SamplerConfig(n_particles=6, max_extent=2.2, max_retries=5,
                               near_contact_quota=0.0)
        with self.assertRaises(GenerationError) as context:
            generate_training_set(2, config, seed=0)
        self.assertTrue(context.exception.constraint)

    def test_invalid(self):
        with self.assertRaises(DomainError):
            generate_training_set(0)
        with self.assertRaises(DomainError):
            SamplerConfig(near_contact_quota=1.5)


class TestDataFile(SimpleTestCase):
    """ Training set csv tests """

    def test_write_read(self):
        samples = generate_training_set(5, seed=2)
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'data.csv'
            write_training_csv(path, samples)
            lines = path.read_text(encoding='utf-8').splitlines()
            self.assertEqual(len(lines), 6)
            self.assertTrue(lines[0].startswith('sample_id,x0,y0,z0,x1'))
            loaded = read_training_csv(path)
            periodic = read_training_csv(path, PeriodicBox(32))
        for one, two in zip(samples, loaded):
            assert_array_equal(one.positions, two.positions)
            assert_array_equal(one.velocities, two.velocities)
        self.assertEqual({sample.domain_tag for sample in loaded},
                         {'unbounded'})
        self.assertEqual({sample.domain.edge for sample in periodic}, {32})

    def test_malformed_row(self):
        sample = TrainingSample(np.zeros((2, 3)) + [[0, 0, 0], [3, 0, 0]],
                                np.eye(3)[:2], np.ones((2, 3)))
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'data.csv'
            write_training_csv(path, [sample, sample, sample])
            lines = path.read_text(encoding='utf-8').splitlines()
            lines[2] = lines[2].replace('3', 'three', 1)
            path.write_text('\n'.join(lines) + '\n', encoding='utf-8')
            with self.assertRaises(DataFormatError) as context:
                read_training_csv(path)
        self.assertEqual(context.exception.line, 3)
        self.assertIn('line 3', str(context.exception))

    def test_vectors(self):
        velocities = np.array([[0.1, -2.0, 1 / 3], [4.0, 5.5, -6.25]])
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'velocities.csv'
            self.assertEqual(
                write_vectors_csv(path, ('ux', 'uy', 'uz'), velocities), 2)
            assert_array_equal(read_vectors_csv(path, ('ux', 'uy', 'uz')),
                               velocities)
            with self.assertRaises(DataFormatError) as context:
                read_vectors_csv(path, ('x', 'y', 'z'))
            self.assertEqual(context.exception.line, 1)

            path.write_text('x,y,z\n1,2,3\n1,2\n', encoding='utf-8')
            with self.assertRaises(DataFormatError) as context:
                read_vectors_csv(path, ('x', 'y', 'z'))
            self.assertEqual(context.exception.line, 3)
