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
gen-data: generate an oracle training set
"""
from oracle import (
    SamplerConfig, generate_training_set, near_contact_fraction,
    write_training_csv
)
from stokes_hignn import GEN_DATA_CMD
from cli.command import HignnCommand
from cli.config import RunConfig
from cli.constants import PHYSICS_SECTION, SAMPLER_SECTION, DATA_PATH


class Command(HignnCommand):
    help = 'Generate oracle training samples and write them to a csv file'
    command = GEN_DATA_CMD

    def run(self, config: RunConfig, workers: int):
        sampler = dict(config.section(SAMPLER_SECTION))
        count = sampler.pop('count')
        physics = config.section(PHYSICS_SECTION)
        sampler_config = SamplerConfig(
            radius=physics['radius'], viscosity=physics['viscosity'],
            **sampler)

        samples = generate_training_set(count, sampler_config,
                                        seed=config.seed, workers=workers)
        written = write_training_csv(config.path(DATA_PATH), samples)
        fraction = near_contact_fraction(
            samples, sampler_config.radius, sampler_config.near_contact_gap)
        self.success(
            f'Wrote {written} samples to {config.path(DATA_PATH)}, '
            f'near-contact fraction {fraction:.4f}')
