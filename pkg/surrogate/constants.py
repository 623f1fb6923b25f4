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
Constants for the surrogate app
"""
from pathlib import Path

# name of this app
THIS_APP = Path(__file__).resolve().parent.name

# broker name of the surrogate backend
SURROGATE_BACKEND_NAME = THIS_APP

TANH_ACTIVATION = 'tanh'
ACTIVATIONS = (TANH_ACTIVATION,)

# kernel output is a 3×6 block acting on [F_i; F_j]
OUTPUT_ROWS = 3
OUTPUT_COLS = 6
OUTPUT_WIDTH = OUTPUT_ROWS * OUTPUT_COLS

# kernel inputs: X_j − X_i for edges, (X_j − X_i, X_k − X_i) for faces
EDGE_INPUT_WIDTH = 3
FACE_INPUT_WIDTH = 6

DEFAULT_HIDDEN_WIDTHS = (64, 256, 128, 64)
DEFAULT_FACE_R_CUT = 5.0

# guard on |U|² in the relative loss
LOSS_GUARD = 1e-30

# model file
MODEL_FORMAT_VERSION = 1
FORMAT_VERSION_KEY = 'format_version'
ACTIVATION_KEY = 'activation'
ALPHA1_KEY = 'alpha1'
FACE_R_CUT_KEY = 'face_r_cut'
H_THETA2_KEY = 'h_theta2'
G_THETA3_KEY = 'g_theta3'
LAYERS_KEY = 'layers'
SHAPE_KEY = 'shape'
WEIGHT_KEY = 'weight'
BIAS_KEY = 'bias'
