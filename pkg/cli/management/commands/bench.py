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
bench: drag coefficient and inference timing tables
"""
from dynamics import (
    Direction, bench_chain, bench_scaling, bench_square_lattice,
    chain_error_trend, write_table_csv
)
from oracle import OracleBackend
from stokes_hignn import BENCH_CMD
from surrogate import SurrogateBackend
from utils import ConfigError
from cli.command import HignnCommand, resolve_backend
from cli.config import RunConfig
from cli.constants import (
    PHYSICS_SECTION, BENCH_SECTION, LATTICE_TABLE_PATH, CHAIN_TABLE_PATH,
    SCALING_TABLE_PATH
)


class Command(HignnCommand):
    help = 'Benchmark square lattice and chain drag, and inference time'
    command = BENCH_CMD

    def run(self, config: RunConfig, workers: int):
        bench = config.section(BENCH_SECTION)
        physics = config.section(PHYSICS_SECTION)
        backend = resolve_backend(bench['backend'], config, workers)
        scaling_path = config.path(SCALING_TABLE_PATH)
        if scaling_path is not None \
                and not isinstance(backend, SurrogateBackend):
            raise ConfigError(
                f"Scaling table needs the surrogate backend, not "
                f"'{backend.name}'")
        direction = Direction.from_str(bench['direction'])

        lattice = bench_square_lattice(
            bench['lattice_spacings'], direction, backend,
            viscosity=physics['viscosity'], radius=physics['radius'])
        write_table_csv(config.path(LATTICE_TABLE_PATH), lattice)
        self.success(f'Wrote {len(lattice.rows)} lattice rows to '
                     f'{config.path(LATTICE_TABLE_PATH)}')

        chains = bench_chain(
            bench['chain_counts'], bench['chain_spacing'], direction,
            backend, reference=OracleBackend(bench['reference_order']),
            viscosity=physics['viscosity'], radius=physics['radius'])
        write_table_csv(config.path(CHAIN_TABLE_PATH), chains)
        self.success(
            f'Wrote {len(chains.rows)} chain rows to '
            f'{config.path(CHAIN_TABLE_PATH)}, error rank correlation '
            f'{chain_error_trend(chains):.3f}')

        if scaling_path is not None:
            scaling = bench_scaling(
                bench['scaling_counts'], bench['scaling_spacing'],
                backend.params, workers=workers, domain=config.domain)
            write_table_csv(scaling_path, scaling)
            self.success(
                f'Wrote {len(scaling.rows)} scaling rows to {scaling_path}')
