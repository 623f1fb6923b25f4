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
Command line tests
"""
import json
import tempfile
from io import StringIO
from pathlib import Path
from typing import Any, Dict

import numpy as np
from numpy.testing import assert_allclose
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from dynamics import cubic_lattice
from oracle import (
    generate_training_set, read_vectors_csv, stokes_drag, write_training_csv,
    write_vectors_csv
)
from stokes_hignn import (
    GEN_DATA_CMD, TRAIN_CMD, PREDICT_CMD, SIMULATE_CMD, BENCH_CMD
)
from surrogate import init_surrogate, save_model
from utils import ConfigError, DomainError
from .config import parse_run_config
from .constants import POSITION_HEADER, FORCE_HEADER, VELOCITY_HEADER


def save_small_model(path: Path, seed: int = 1) -> Path:
    """ Save a randomly initialised surrogate with a small architecture """
    save_model(path, init_surrogate(np.random.default_rng(seed),
                                    stokes_drag(1, 1), hidden_widths=(6, 5)))
    return path


class CommandTestCase(SimpleTestCase):
    """ Base class running commands in a temporary folder """

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.folder = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def file(self, name: str) -> str:
        """ Path of a file in the temporary folder """
        return str(self.folder / name)

    def write_config(self, data: Dict[str, Any],
                     name: str = 'run.json') -> str:
        """ Write a run config file """
        path = self.folder / name
        path.write_text(json.dumps(data), encoding='utf-8')
        return str(path)

    def run_command(self, command: str, config: Dict[str, Any],
                    **options) -> str:
        """ Run a command, returning its output """
        out = StringIO()
        call_command(command, config=self.write_config(config), stdout=out,
                     **options)
        return out.getvalue()


class TestRunConfig(CommandTestCase):
    """ Run config validation tests """

    def gen_data_config(self, **kwargs) -> Dict[str, Any]:
        """ Minimal gen-data config """
        config = {
            'command': GEN_DATA_CMD,
            'paths': {'data': self.file('data.csv')},
        }
        config.update(kwargs)
        return config

    def test_defaults(self):
        config = parse_run_config(self.gen_data_config(seed=4), GEN_DATA_CMD)
        self.assertEqual(config.seed, 4)
        self.assertEqual(config.section('sampler')['n_particles'], 3)
        self.assertEqual(config.section('sampler')['order'], 3)
        self.assertEqual(config.section('physics')['viscosity'], 1.0)
        self.assertEqual(config.domain.tag, 'unbounded')
        self.assertEqual(config.path('data'), self.folder / 'data.csv')
        self.assertIsNone(config.path('model'))

    def test_seed_override(self):
        config = parse_run_config(self.gen_data_config(seed=4), GEN_DATA_CMD,
                                  seed=9)
        self.assertEqual(config.seed, 9)
        with self.assertRaises(ConfigError):
            parse_run_config(self.gen_data_config(seed=-1), GEN_DATA_CMD)

    def test_command_echo(self):
        parse_run_config(self.gen_data_config(command='gen-data'),
                         GEN_DATA_CMD)
        with self.assertRaises(ConfigError):
            parse_run_config(self.gen_data_config(command=TRAIN_CMD),
                             GEN_DATA_CMD)
        with self.assertRaises(ConfigError):
            parse_run_config({'paths': {'data': self.file('data.csv')}},
                             GEN_DATA_CMD)

    def test_unknown_keys(self):
        with self.assertRaises(ConfigError) as context:
            parse_run_config(self.gen_data_config(dynamics={}), GEN_DATA_CMD)
        self.assertIn('dynamics', str(context.exception))
        with self.assertRaises(ConfigError) as context:
            parse_run_config(self.gen_data_config(sampler={'colour': 1}),
                             GEN_DATA_CMD)
        self.assertIn('colour', str(context.exception))

    def test_out_of_range(self):
        for sampler, key in (({'count': 0}, 'sampler.count'),
                             ({'near_contact_quota': 1.5},
                              'sampler.near_contact_quota'),
                             ({'order': 4}, 'sampler.order'),
                             ({'max_extent': -1}, 'sampler.max_extent')):
            with self.assertRaises(ConfigError) as context:
                parse_run_config(self.gen_data_config(sampler=sampler),
                                 GEN_DATA_CMD)
            self.assertIn(key, str(context.exception))
        with self.assertRaises(ConfigError):
            parse_run_config(self.gen_data_config(physics={'radius': 0}),
                             GEN_DATA_CMD)
        with self.assertRaises(DomainError):
            parse_run_config(self.gen_data_config(domain='periodic:-2'),
                             GEN_DATA_CMD)

    def test_number_lists(self):
        config = {
            'command': SIMULATE_CMD,
            'dynamics': {'force': [0, 0, -2]},
            'paths': {'trajectory': self.file('trajectory.csv')},
        }
        self.assertEqual(
            parse_run_config(config, SIMULATE_CMD).section('dynamics')
            ['force'], (0.0, 0.0, -2.0))
        config['dynamics'] = {'force': [0, -2]}
        with self.assertRaises(ConfigError):
            parse_run_config(config, SIMULATE_CMD)
        config['dynamics'] = {'force': 'down'}
        with self.assertRaises(ConfigError):
            parse_run_config(config, SIMULATE_CMD)

        train_config = {
            'command': TRAIN_CMD,
            'train': {'hidden_widths': [8, 2.5]},
            'paths': {'data': self.write_config({}, 'data.csv'),
                      'model': self.file('model.json'),
                      'loss_history': self.file('loss.csv')},
        }
        with self.assertRaises(ConfigError) as context:
            parse_run_config(train_config, TRAIN_CMD)
        self.assertIn('train.hidden_widths', str(context.exception))

    def test_paths(self):
        with self.assertRaises(ConfigError) as context:
            parse_run_config({'command': GEN_DATA_CMD}, GEN_DATA_CMD)
        self.assertIn('paths.data', str(context.exception))
        with self.assertRaises(ConfigError):
            parse_run_config(self.gen_data_config(
                paths={'data': self.file('missing/data.csv')}), GEN_DATA_CMD)
        with self.assertRaises(ConfigError):
            parse_run_config({
                'command': PREDICT_CMD,
                'paths': {'model': self.file('model.json'),
                          'positions': self.file('positions.csv'),
                          'forces': self.file('forces.csv'),
                          'velocities': self.file('velocities.csv')},
            }, PREDICT_CMD)


class TestGenData(CommandTestCase):
    """ gen-data command tests """

    def test_gen_data(self):
        config = {
            'command': GEN_DATA_CMD,
            'seed': 1,
            'sampler': {'count': 100},
            'paths': {'data': self.file('data.csv')},
        }
        output = self.run_command(GEN_DATA_CMD, config)
        self.assertIn('Wrote 100 samples', output)
        self.assertIn('near-contact fraction 0.3000', output)
        first = Path(self.file('data.csv')).read_bytes()
        self.assertEqual(len(first.decode('utf-8').splitlines()), 101)

        self.run_command(GEN_DATA_CMD, config, workers=2)
        self.assertEqual(Path(self.file('data.csv')).read_bytes(), first)

        self.run_command(GEN_DATA_CMD, config, seed=2)
        self.assertNotEqual(Path(self.file('data.csv')).read_bytes(), first)

    def test_rejected_before_running(self):
        config = {
            'command': GEN_DATA_CMD,
            'sampler': {'count': 100, 'shape': 'sphere'},
            'paths': {'data': self.file('data.csv')},
        }
        with self.assertRaises(CommandError) as context:
            self.run_command(GEN_DATA_CMD, config)
        self.assertIn('shape', str(context.exception))
        self.assertFalse(Path(self.file('data.csv')).exists())

        with self.assertRaises(CommandError):
            self.run_command(GEN_DATA_CMD, {
                'command': GEN_DATA_CMD,
                'paths': {'data': self.file('data.csv')},
            }, workers=0)


class TestTrain(CommandTestCase):
    """ train command tests """

    def train_config(self) -> Dict[str, Any]:
        """ Tiny training run """
        return {
            'command': TRAIN_CMD,
            'seed': 2,
            'train': {'epochs': 3, 'batch_size': 8, 'base_lr': 0.01,
                      'hidden_widths': [6, 5]},
            'paths': {'data': self.file('data.csv'),
                      'model': self.file('model.json'),
                      'loss_history': self.file('loss.csv')},
        }

    def test_train(self):
        write_training_csv(self.file('data.csv'),
                           generate_training_set(40, seed=3))
        output = self.run_command(TRAIN_CMD, self.train_config())
        self.assertIn('Test loss', output)
        self.assertIn('sha256', output)

        model = json.loads(Path(self.file('model.json')).read_text('utf-8'))
        self.assertEqual(model['face_r_cut'], 5.0)
        lines = Path(self.file('loss.csv')).read_text('utf-8').splitlines()
        self.assertEqual(lines[0], 'epoch,lr,train_loss,test_loss')
        self.assertEqual(len(lines), 4)
        for line in lines[1:]:
            self.assertTrue(np.isfinite(float(line.split(',')[3])))

        first = Path(self.file('model.json')).read_bytes()
        self.run_command(TRAIN_CMD, self.train_config(), workers=3)
        self.assertEqual(Path(self.file('model.json')).read_bytes(), first)

    def test_corrupt_row(self):
        write_training_csv(self.file('data.csv'),
                           generate_training_set(10, seed=3))
        path = Path(self.file('data.csv'))
        lines = path.read_text('utf-8').splitlines()
        lines[3] = lines[3].replace(',', ',x', 1)
        path.write_text('\n'.join(lines) + '\n', encoding='utf-8')
        with self.assertRaises(CommandError) as context:
            self.run_command(TRAIN_CMD, self.train_config())
        self.assertIn('line 4', str(context.exception))


class TestPredict(CommandTestCase):
    """ predict command tests """

    def predict_config(self) -> Dict[str, Any]:
        """ Predict config """
        return {
            'command': PREDICT_CMD,
            'paths': {'model': self.file('model.json'),
                      'positions': self.file('positions.csv'),
                      'forces': self.file('forces.csv'),
                      'velocities': self.file('velocities.csv')},
        }

    def test_single_particle(self):
        save_small_model(Path(self.file('model.json')))
        write_vectors_csv(self.file('positions.csv'), POSITION_HEADER,
                          [[1.0, 2.0, 3.0]])
        write_vectors_csv(self.file('forces.csv'), FORCE_HEADER,
                          [[0.5, 0.0, -1.0]])
        self.run_command(PREDICT_CMD, self.predict_config())
        velocities = read_vectors_csv(self.file('velocities.csv'),
                                      VELOCITY_HEADER)
        assert_allclose(velocities, [[0.5, 0.0, -1.0]] @ stokes_drag(1, 1).T,
                        rtol=1e-15)

    def test_periodic_single_particle(self):
        save_small_model(Path(self.file('model.json')))
        write_vectors_csv(self.file('positions.csv'), POSITION_HEADER,
                          [[1.0, 2.0, 3.0]])
        write_vectors_csv(self.file('forces.csv'), FORCE_HEADER,
                          [[0.0, 0.0, -1.0]])
        config = dict(self.predict_config(), domain='periodic:32')
        self.run_command(PREDICT_CMD, config)
        assert_allclose(
            read_vectors_csv(self.file('velocities.csv'), VELOCITY_HEADER),
            [[0.0, 0.0, -0.982 / (6 * np.pi)]], rtol=1e-15)

        config['physics'] = {'periodic_constant': 0.5}
        self.run_command(PREDICT_CMD, config)
        assert_allclose(
            read_vectors_csv(self.file('velocities.csv'), VELOCITY_HEADER),
            [[0.0, 0.0, -0.5 / (6 * np.pi)]], rtol=1e-15)

    def test_workers_identical(self):
        save_small_model(Path(self.file('model.json')), seed=5)
        rng = np.random.default_rng(6)
        positions = cubic_lattice(3, 3.0) + rng.uniform(-0.3, 0.3, (27, 3))
        write_vectors_csv(self.file('positions.csv'), POSITION_HEADER,
                          positions)
        write_vectors_csv(self.file('forces.csv'), FORCE_HEADER,
                          rng.normal(size=(27, 3)))
        self.run_command(PREDICT_CMD, self.predict_config(), workers=1)
        serial = Path(self.file('velocities.csv')).read_bytes()
        self.run_command(PREDICT_CMD, self.predict_config(), workers=4)
        self.assertEqual(Path(self.file('velocities.csv')).read_bytes(),
                         serial)

    def test_mismatched_forces(self):
        save_small_model(Path(self.file('model.json')))
        write_vectors_csv(self.file('positions.csv'), POSITION_HEADER,
                          [[0.0, 0.0, 0.0], [3.0, 0.0, 0.0]])
        write_vectors_csv(self.file('forces.csv'), FORCE_HEADER,
                          [[0.0, 0.0, -1.0]])
        with self.assertRaises(CommandError):
            self.run_command(PREDICT_CMD, self.predict_config())

    def test_bad_model(self):
        Path(self.file('model.json')).write_text(
            '{"format_version": 99}', encoding='utf-8')
        write_vectors_csv(self.file('positions.csv'), POSITION_HEADER,
                          [[0.0, 0.0, 0.0]])
        write_vectors_csv(self.file('forces.csv'), FORCE_HEADER,
                          [[0.0, 0.0, -1.0]])
        with self.assertRaises(CommandError):
            self.run_command(PREDICT_CMD, self.predict_config())


class TestSimulate(CommandTestCase):
    """ simulate command tests """

    def test_cube(self):
        save_small_model(Path(self.file('model.json')))
        output = self.run_command(SIMULATE_CMD, {
            'command': SIMULATE_CMD,
            'system': {'kind': 'cubic_lattice', 'n_side': 2, 'spacing': 4},
            'dynamics': {'dt': 0.001, 'n_steps': 10, 'output_every': 5},
            'paths': {'model': self.file('model.json'),
                      'trajectory': self.file('trajectory.csv')},
        })
        self.assertIn('3 frames of 8 particles', output)
        lines = Path(self.file('trajectory.csv')).read_text(
            'utf-8').splitlines()
        self.assertEqual(lines[0], 't,particle_id,x,y,z')
        self.assertEqual(len(lines), 1 + 8 * 3)

    def test_morse(self):
        output = self.run_command(SIMULATE_CMD, {
            'command': SIMULATE_CMD,
            'system': {'kind': 'cubic_lattice', 'n_side': 3, 'spacing': 3},
            'dynamics': {'backend': 'oracle_2', 'force_model': 'morse',
                         'rho': 1, 'depth': 1, 'r_eq': 2.5, 'dt': 0.01,
                         'n_steps': 5},
            'paths': {'trajectory': self.file('trajectory.csv')},
        })
        self.assertIn('6 frames of 27 particles', output)

    def test_overlap_abort(self):
        with self.assertRaises(CommandError) as context:
            self.run_command(SIMULATE_CMD, {
                'command': SIMULATE_CMD,
                'system': {'kind': 'chain', 'count': 2, 'spacing': 3},
                'dynamics': {'backend': 'oracle_2', 'force_model': 'morse',
                             'dt': 60, 'n_steps': 5},
                'paths': {'trajectory': self.file('trajectory.csv')},
            })
        self.assertIn('step 1:', str(context.exception))

    def test_unknown_backend(self):
        with self.assertRaises(CommandError) as context:
            self.run_command(SIMULATE_CMD, {
                'command': SIMULATE_CMD,
                'dynamics': {'backend': 'oracle_9'},
                'paths': {'trajectory': self.file('trajectory.csv')},
            })
        self.assertIn('oracle_9', str(context.exception))


class TestBench(CommandTestCase):
    """ bench command tests """

    def test_oracle_tables(self):
        output = self.run_command(BENCH_CMD, {
            'command': BENCH_CMD,
            'bench': {'backend': 'oracle_2', 'direction': 'parallel',
                      'lattice_spacings': [2.5, 1000],
                      'chain_counts': [1, 3], 'chain_spacing': 3},
            'paths': {'lattice_table': self.file('lattice.csv'),
                      'chain_table': self.file('chain.csv')},
        })
        self.assertIn('Wrote 4 lattice rows', output)
        lattice = Path(self.file('lattice.csv')).read_text(
            'utf-8').splitlines()
        self.assertEqual(lattice[0], 'L,backend,variant,drag_coefficient')
        variants = {line.split(',')[2] for line in lattice[1:]}
        self.assertEqual(variants, {'with_faces', 'without_faces'})

        chain = Path(self.file('chain.csv')).read_text('utf-8').splitlines()
        first = dict(zip(chain[0].split(','), chain[1].split(',')))
        self.assertEqual(first['N'], '1')
        self.assertAlmostEqual(float(first['drag_coefficient']), 1,
                               places=12)

    def test_scaling(self):
        save_small_model(Path(self.file('model.json')))
        config = {
            'command': BENCH_CMD,
            'bench': {'lattice_spacings': [3], 'chain_counts': [1],
                      'scaling_counts': [8, 27]},
            'paths': {'model': self.file('model.json'),
                      'lattice_table': self.file('lattice.csv'),
                      'chain_table': self.file('chain.csv'),
                      'scaling_table': self.file('scaling.csv')},
        }
        self.run_command(BENCH_CMD, config, workers=2)
        scaling = Path(self.file('scaling.csv')).read_text(
            'utf-8').splitlines()
        self.assertEqual(
            scaling[0],
            'N,workers,graph_seconds,evaluate_seconds,total_seconds')
        self.assertEqual(len(scaling), 3)
        self.assertTrue(scaling[1].startswith('8,2,'))

        config['bench']['backend'] = 'oracle_1'
        with self.assertRaises(CommandError):
            self.run_command(BENCH_CMD, config)
