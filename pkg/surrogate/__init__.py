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
Hypergraph neural network surrogate of the particle mobility
"""
from .backend import SurrogateBackend
from .constants import (
    SURROGATE_BACKEND_NAME, TANH_ACTIVATION, OUTPUT_WIDTH, EDGE_INPUT_WIDTH,
    FACE_INPUT_WIDTH, DEFAULT_HIDDEN_WIDTHS, DEFAULT_FACE_R_CUT, LOSS_GUARD,
    MODEL_FORMAT_VERSION
)
from .conv import (
    edge_conv, face_conv, hignn_velocities, single_body_velocities,
    target_velocities
)
from .gradients import (
    PackedBatch, pack_sample, pack_samples, merge_batches, batch_velocities,
    hignn_loss, hignn_gradients
)
from .loss import relative_mse_loss, relative_mse_grad
from .mlp import (
    MlpParams, init_mlp, mlp_forward, mlp_forward_batch, mlp_backward,
    mlp_input_jacobian
)
from .parallel import parallel_infer
from .params import (
    SurrogateParams, init_surrogate, model_as_dict, model_to_json,
    model_from_json, save_model, load_model, model_hash
)


__all__ = [
    'SurrogateBackend',

    'SURROGATE_BACKEND_NAME',
    'TANH_ACTIVATION',
    'OUTPUT_WIDTH',
    'EDGE_INPUT_WIDTH',
    'FACE_INPUT_WIDTH',
    'DEFAULT_HIDDEN_WIDTHS',
    'DEFAULT_FACE_R_CUT',
    'LOSS_GUARD',
    'MODEL_FORMAT_VERSION',

    'edge_conv',
    'face_conv',
    'hignn_velocities',
    'single_body_velocities',
    'target_velocities',

    'PackedBatch',
    'pack_sample',
    'pack_samples',
    'merge_batches',
    'batch_velocities',
    'hignn_loss',
    'hignn_gradients',

    'relative_mse_loss',
    'relative_mse_grad',

    'MlpParams',
    'init_mlp',
    'mlp_forward',
    'mlp_forward_batch',
    'mlp_backward',
    'mlp_input_jacobian',

    'parallel_infer',

    'SurrogateParams',
    'init_surrogate',
    'model_as_dict',
    'model_to_json',
    'model_from_json',
    'save_model',
    'load_model',
    'model_hash',
]
