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
Dynamics tests
"""
import tempfile
from pathlib import Path

import numpy as np
from numpy.testing import assert_allclose, assert_array_equal
from django.test import SimpleTestCase

from oracle import OracleBackend, ParticleSystem, PeriodicBox, stokes_drag
from surrogate import (
    MlpParams, SurrogateBackend, SurrogateParams, init_surrogate
)
from utils import DomainError, GenerationError, OverlapError, SimulationError
from .bench import (
    BenchTable, Direction, bench_chain, bench_scaling, bench_square_lattice,
    chain_error_trend, drag_coefficient, write_table_csv
)
from .constants import CHAIN_HEADER, WITH_FACES_VARIANT
from .forces import (
    ForceModelType, MorseForce, MorseParams, UniformForce, force_model,
    morse_force_scalar, total_external_force
)
from .integrate import euler_step, simulate, write_trajectory_csv
from .lattice import (
    chain, cubic_lattice, lattice_positions, random_configuration,
    square_lattice
)


def small_surrogate(seed: int = 1):
    """ Randomly initialised surrogate with a small architecture """
    return init_surrogate(np.random.default_rng(seed), stokes_drag(1, 1),
                          hidden_widths=(6, 5))


def mirror_surrogate() -> SurrogateParams:
    """
    Surrogate whose two-body kernel is diagonal and even in each coordinate
    of the displacement, and whose three-body kernel is zero
    """
    # hidden pairs see +r_a and -r_a with a shared bias
    weight = np.kron(np.eye(3), [0.3, -0.3])
    out = np.zeros((6, 18))
    for axis in range(3):
        out[2 * axis:2 * axis + 2, axis * 6 + 3 + axis] = 0.01
        out[2 * axis:2 * axis + 2, axis * 6 + axis] = 0.002
    h_theta2 = MlpParams(((weight, np.full(6, 0.2)), (out, np.zeros(18))))
    g_theta3 = MlpParams(((np.zeros((6, 4)), np.zeros(4)),
                          (np.zeros((4, 18)), np.zeros(18))))
    return SurrogateParams(h_theta2, g_theta3, stokes_drag(1, 1),
                           face_r_cut=5.0)


class TestMorse(SimpleTestCase):
    """ Morse force tests """

    def test_equilibrium(self):
        self.assertEqual(morse_force_scalar(2.5, MorseParams()), 0)

    def test_repulsive_short_range(self):
        self.assertAlmostEqual(
            morse_force_scalar(2.0, MorseParams()),
            2 * (np.exp(1) - np.exp(0.5)), places=12)
        self.assertAlmostEqual(morse_force_scalar(2.0, MorseParams()),
                               2.139121, places=6)

    def test_attractive_long_range(self):
        self.assertAlmostEqual(morse_force_scalar(3.0, MorseParams()),
                               -0.477302, places=6)
        self.assertLess(abs(morse_force_scalar(40.0, MorseParams())), 1e-10)

    def test_array(self):
        forces = morse_force_scalar([2.0, 2.5, 3.0], MorseParams())
        self.assertEqual(forces.shape, (3,))
        self.assertEqual(forces[1], 0)

    def test_invalid(self):
        with self.assertRaises(DomainError):
            morse_force_scalar(0.0, MorseParams())
        with self.assertRaises(DomainError):
            MorseParams(rho=0)


class TestExternalForce(SimpleTestCase):
    """ Total external force tests """

    def test_pair_at_equilibrium(self):
        forces = total_external_force([[0, 0, 0], [2.5, 0, 0]],
                                      MorseParams())
        assert_array_equal(forces, 0)

    def test_antisymmetric(self):
        rng = np.random.default_rng(81)
        for _ in range(10):
            forces = total_external_force(rng.uniform(0, 5, (2, 3)),
                                          MorseParams())
            assert_array_equal(forces[0], -forces[1])
        forces = total_external_force(rng.uniform(0, 10, (10, 3)),
                                      MorseParams())
        assert_allclose(forces.sum(axis=0), 0, atol=1e-12)

    def test_triangle(self):
        positions = np.array([[0, 0, 0], [2, 0, 0], [1, np.sqrt(3), 0]])
        forces = total_external_force(positions, MorseParams())
        outward = positions - positions.mean(axis=0)
        magnitudes = np.linalg.norm(forces, axis=1)
        assert_allclose(magnitudes, magnitudes[0], rtol=1e-12)
        for force, direction in zip(forces, outward):
            assert_allclose(
                force / np.linalg.norm(force),
                direction / np.linalg.norm(direction), atol=1e-12)
        self.assertAlmostEqual(
            magnitudes[0], np.sqrt(3) * morse_force_scalar(2, MorseParams()),
            places=12)

    def test_uniform(self):
        forces = total_external_force(np.zeros((3, 3)), uniform=(0, 0, -1))
        assert_array_equal(forces, [[0, 0, -1]] * 3)

    def test_coincident(self):
        with self.assertRaises(OverlapError):
            total_external_force([[1, 1, 1], [1, 1, 1]], MorseParams())

    def test_periodic_minimum_image(self):
        forces = total_external_force([[1, 5, 5], [31, 5, 5]],
                                      MorseParams(), domain=PeriodicBox(32))
        self.assertGreater(forces[0][0], 0)
        self.assertAlmostEqual(forces[0][0],
                               morse_force_scalar(2, MorseParams()),
                               places=12)

    def test_force_models(self):
        system = ParticleSystem([[0, 0, 0], [3, 0, 0]])
        assert_array_equal(UniformForce().forces(system), [[0, 0, -1]] * 2)
        self.assertEqual(
            force_model(ForceModelType.from_str('Morse')).describe()
            ['force_model'], 'morse')
        self.assertGreater(MorseForce().forces(system)[0][0], 0)


class TestEuler(SimpleTestCase):
    """ Euler step tests """

    def test_zero_velocity(self):
        positions = np.array([[1.0, 2.0, 3.0]])
        assert_array_equal(euler_step(positions, np.zeros((1, 3)), 0.1),
                           positions)

    def test_periodic_wrap(self):
        position = euler_step([[31.9, 1, 1]], [[0.4, 0, 0]], 1,
                              PeriodicBox(32))
        self.assertAlmostEqual(position[0][0], 0.3, places=12)

    def test_composition(self):
        positions = np.array([[0.5, -1.0, 2.0], [3.0, 0.0, 1.0]])
        velocities = np.array([[0.1, 0.2, -0.3], [-1.0, 0.5, 0.25]])
        stepped = positions
        for _ in range(1000):
            stepped = euler_step(stepped, velocities, 0.001)
        assert_allclose(stepped, euler_step(positions, velocities, 1),
                        atol=1e-12)

    def test_invalid_dt(self):
        with self.assertRaises(DomainError):
            euler_step([[0, 0, 0]], [[0, 0, 0]], 0)


class TestSimulate(SimpleTestCase):
    """ Simulation tests """

    def check_sedimentation(self, backend):
        """ Isolated particle falls at the Stokes velocity """
        system = ParticleSystem([[1.0, 2.0, 3.0]])
        trajectory = simulate(system, backend, UniformForce(), 0.001, 200)
        self.assertEqual(trajectory.n_frames, 201)
        for time, frame in zip(trajectory.times, trajectory.frames):
            self.assertAlmostEqual(frame[0][2], 3 - time / (6 * np.pi),
                                   delta=1e-12)
            self.assertEqual(frame[0][0], 1)
            self.assertEqual(frame[0][1], 2)

    def test_single_particle_oracle(self):
        self.check_sedimentation(OracleBackend(1))
        self.check_sedimentation(OracleBackend(3))

    def test_single_particle_surrogate(self):
        self.check_sedimentation(SurrogateBackend(small_surrogate()))

    def check_mirror_symmetry(self, backend):
        system = ParticleSystem(cubic_lattice(2, 4.0))
        trajectory = simulate(system, backend, UniformForce(), 0.001, 50)
        indices = np.arange(8)
        for frame in trajectory.frames:
            # x is the fastest lattice index, y the next
            assert_allclose(frame[indices ^ 1] * [-1, 1, 1], frame,
                            atol=1e-9)
            assert_allclose(frame[indices ^ 2] * [1, -1, 1], frame,
                            atol=1e-9)
        self.assertLess(trajectory.frames[-1][0][2],
                        trajectory.frames[0][0][2])

    def test_cube_mirror_symmetry(self):
        self.check_mirror_symmetry(OracleBackend(3))

    def test_cube_mirror_symmetry_surrogate(self):
        self.check_mirror_symmetry(SurrogateBackend(mirror_surrogate()))

    def test_stride_and_metadata(self):
        params = small_surrogate(2)
        backend = SurrogateBackend(params)
        system = ParticleSystem(cubic_lattice(2, 4.0))
        trajectory = simulate(system, backend, UniformForce(), 0.001, 10,
                              output_every=3)
        self.assertEqual(trajectory.n_frames, 4)
        assert_allclose(trajectory.times, [0, 0.003, 0.006, 0.009])
        self.assertEqual(trajectory.metadata['dt'], 0.001)
        self.assertEqual(trajectory.metadata['force_model'], 'uniform')
        self.assertEqual(trajectory.metadata['model_hash'],
                         backend.model_hash)

    def test_deterministic(self):
        system = ParticleSystem(cubic_lattice(2, 4.0))
        backend = SurrogateBackend(small_surrogate(3), workers=2)
        one = simulate(system, backend, MorseForce(), 0.0005, 5)
        two = simulate(system, backend, MorseForce(), 0.0005, 5)
        for first, second in zip(one.frames, two.frames):
            assert_array_equal(first, second)

    def test_overlap_abort(self):
        system = ParticleSystem([[0, 0, 0], [3, 0, 0]])
        with self.assertRaises(SimulationError) as context:
            simulate(system, OracleBackend(2), MorseForce(), 60, 5)
        self.assertEqual(context.exception.step, 1)
        self.assertTrue(str(context.exception).startswith('step 1:'))

        with self.assertRaises(SimulationError) as context:
            simulate(ParticleSystem([[0, 0, 0], [1.5, 0, 0]]),
                     OracleBackend(1), UniformForce(), 0.001, 5)
        self.assertEqual(context.exception.step, 0)

    def test_write_trajectory(self):
        system = ParticleSystem(cubic_lattice(2, 4.0))
        trajectory = simulate(system, OracleBackend(1), UniformForce(),
                              0.001, 4, output_every=2)
        with tempfile.TemporaryDirectory() as folder:
            path = Path(folder) / 'trajectory.csv'
            self.assertEqual(write_trajectory_csv(path, trajectory), 24)
            lines = path.read_text('utf-8').splitlines()
        self.assertEqual(lines[0], 't,particle_id,x,y,z')
        self.assertEqual(lines[1], '0,0,-2,-2,-2')
        self.assertEqual(len(lines), 25)


class TestLattice(SimpleTestCase):
    """ Configuration builder tests """

    def test_cube(self):
        positions = cubic_lattice(2, 4.0)
        self.assertEqual(positions.shape, (8, 3))
        assert_array_equal(np.abs(positions), 2)
        assert_array_equal(positions[1] - positions[0], [4, 0, 0])

    def test_lattice_positions(self):
        positions = lattice_positions(200, 3.0, centre=(10, 10, 10))
        self.assertEqual(len(positions), 200)
        self.assertGreaterEqual(ParticleSystem(positions).closest_pair()[1],
                                3.0 - 1e-12)

    def test_chain(self):
        positions = chain(5, 3.0)
        assert_array_equal(positions[2], [0, 0, 0])
        assert_array_equal(positions[:, 0], [-6, -3, 0, 3, 6])
        with self.assertRaises(OverlapError):
            chain(5, 2.0)

    def test_square(self):
        positions = square_lattice(2.01)
        self.assertAlmostEqual(ParticleSystem(positions).closest_pair()[1],
                               2.01, places=12)
        with self.assertRaises(OverlapError):
            square_lattice(2.0)

    def test_random_configuration(self):
        box = PeriodicBox(20.0)
        positions = random_configuration(30, box, 20.0, seed=5)
        assert_array_equal(positions,
                           random_configuration(30, box, 20.0, seed=5))
        self.assertGreaterEqual(
            ParticleSystem(positions, domain=box).closest_pair()[1], 2)
        with self.assertRaises(GenerationError):
            random_configuration(50, box, 3.0, max_retries=20)


class TestBench(SimpleTestCase):
    """ Benchmark driver tests """

    def test_drag_coefficient(self):
        velocity = OracleBackend(3).velocities(
            ParticleSystem([[0, 0, 0]]), np.array([[0, 0, 1.0]]))[0][2]
        self.assertAlmostEqual(drag_coefficient(1, velocity), 1, places=12)
        self.assertAlmostEqual(
            drag_coefficient(1, 1 / (12 * np.pi), viscosity=2), 1,
            places=12)
        with self.assertRaises(DomainError):
            drag_coefficient(1, 0)

    def test_square_lattice(self):
        table = bench_square_lattice([2.01, 2.5, 6.0, 1000.0],
                                     Direction.PARALLEL, OracleBackend(3))
        self.assertEqual(len(table.rows), 8)
        coefficients = dict(
            ((spacing, variant), value)
            for spacing, _, variant, value in table.rows)
        self.assertAlmostEqual(coefficients[(1000.0, 'with_faces')], 1,
                               delta=0.01)

        def gap(spacing):
            return abs(coefficients[(spacing, 'with_faces')]
                       - coefficients[(spacing, 'without_faces')])
        self.assertGreater(gap(2.5), 3 * gap(6.0))
        self.assertLess(coefficients[(2.5, 'with_faces')], 1)

    def test_chain(self):
        table = bench_chain([1, 3, 5], 3.0, Direction.PERPENDICULAR,
                            OracleBackend(2), OracleBackend(3))
        self.assertEqual(table.column('N'), [1, 3, 5])
        self.assertAlmostEqual(table.column('drag_coefficient')[0], 1,
                               places=12)
        self.assertEqual(table.column('relative_error')[0], 0)
        self.assertGreater(table.column('relative_error')[2], 0)
        self.assertTrue(all(coefficient < 1 for coefficient in
                            table.column('drag_coefficient')[1:]))

    def test_chain_error_trend(self):
        rows = [(count, 3.0, 'surrogate', WITH_FACES_VARIANT, 0, 0, error, 1)
                for count, error in zip((5, 10, 15, 20), (1, 2, 3, 4))]
        self.assertAlmostEqual(
            chain_error_trend(BenchTable(CHAIN_HEADER, rows)), 1)
        rows = [row[:6] + (5 - row[6], 1) for row in rows]
        self.assertAlmostEqual(
            chain_error_trend(BenchTable(CHAIN_HEADER, rows)), -1)
        self.assertTrue(np.isnan(
            chain_error_trend(BenchTable(CHAIN_HEADER, rows[:1]))))

    def test_scaling(self):
        table = bench_scaling([8, 27], 3.0, small_surrogate(4), workers=2)
        self.assertEqual(table.column('N'), [8, 27])
        for value in table.column('graph_seconds') \
                + table.column('evaluate_seconds'):
            self.assertRegex(value, r'^\d+\.\d{3}$')
        with tempfile.TemporaryDirectory() as folder:
            path = Path(folder) / 'scaling.csv'
            self.assertEqual(write_table_csv(path, table), 2)
            self.assertTrue(path.read_text('utf-8').startswith(
                'N,workers,graph_seconds,evaluate_seconds,total_seconds'))
