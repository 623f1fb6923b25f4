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
Constants for the oracle app
"""
from pathlib import Path

# name of this app
THIS_APP = Path(__file__).resolve().parent.name

# single-body mobility constant for a periodic box
PERIODIC_DRAG_CONSTANT = 0.982

# truncation orders
ISOLATED_ORDER = 1
TWO_BODY_ORDER = 2
THREE_BODY_ORDER = 3
ORACLE_ORDERS = (ISOLATED_ORDER, TWO_BODY_ORDER, THREE_BODY_ORDER)

# domain tags as used in data files
UNBOUNDED_TAG = 'unbounded'
PERIODIC_TAG = 'periodic'

# sampler defaults
DEFAULT_MAX_EXTENT = 500.0
DEFAULT_MIN_GAP = 1e-3
DEFAULT_NEAR_CONTACT_GAP = 0.1
DEFAULT_NEAR_CONTACT_QUOTA = 0.3
DEFAULT_MAX_RETRIES = 1000
DEFAULT_SAMPLE_PARTICLES = 3
# samples per shard; each shard has its own seeded generator
SHARD_SIZE = 256

# sampler constraint names, as reported by GenerationError
MIN_GAP_CONSTRAINT = 'min_gap'
MAX_EXTENT_CONSTRAINT = 'max_extent'
NEAR_CONTACT_CONSTRAINT = 'near_contact_gap'

# training set csv
SAMPLE_ID_COLUMN = 'sample_id'
POSITION_COLUMNS = ('x', 'y', 'z')
FORCE_COLUMNS = ('fx', 'fy', 'fz')
VELOCITY_COLUMNS = ('ux', 'uy', 'uz')


def oracle_backend_name(order: int) -> str:
    """
    Get the broker name of an oracle backend;
    e.g. 3 -> 'oracle_3'

    :param order: truncation order
    :return: backend name
    """
    return f'{THIS_APP}_{order}'
