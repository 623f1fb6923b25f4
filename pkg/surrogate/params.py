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
Surrogate parameters and model files
"""
import hashlib
import json
import logging
import re
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Dict, List, Sequence, Union

import numpy as np

from utils import DomainError, ModelFormatError, ShapeError, fmt_float
from .constants import (
    EDGE_INPUT_WIDTH, FACE_INPUT_WIDTH, DEFAULT_HIDDEN_WIDTHS,
    DEFAULT_FACE_R_CUT, MODEL_FORMAT_VERSION, FORMAT_VERSION_KEY,
    ACTIVATION_KEY, ALPHA1_KEY, FACE_R_CUT_KEY, H_THETA2_KEY, G_THETA3_KEY,
    LAYERS_KEY, SHAPE_KEY, WEIGHT_KEY, BIAS_KEY, ACTIVATIONS
)
from .mlp import MlpParams, init_mlp


logger = logging.getLogger(__name__)

# json strings, or numbers
JSON_TOKEN = re.compile(r'"(?:[^"\\]|\\.)*"|-?\d+(?:\.\d+)?(?:[eE][-+]?\d+)?')


@dataclass(frozen=True, eq=False)
class SurrogateParams:
    """
    Two-body kernel h_theta2, three-body kernel g_theta3, single-body
    mobility alpha1 and the face cutoff
    """
    h_theta2: MlpParams
    g_theta3: MlpParams
    alpha1: np.ndarray
    """ 3×3 positive diagonal block """
    face_r_cut: float = DEFAULT_FACE_R_CUT

    def __post_init__(self):
        alpha1 = np.asarray(self.alpha1, dtype=float)
        object.__setattr__(self, 'alpha1', alpha1)
        object.__setattr__(self, 'face_r_cut', float(self.face_r_cut))
        if alpha1.shape != (3, 3):
            raise ShapeError(f'alpha1 must be 3×3, got {alpha1.shape}')
        diagonal = np.diag(alpha1)
        if np.any(alpha1 != np.diag(diagonal)) or np.any(diagonal <= 0):
            raise DomainError('alpha1 must be diagonal and positive')
        if self.h_theta2.input_width != EDGE_INPUT_WIDTH:
            raise ShapeError(
                f'h_theta2 input width must be {EDGE_INPUT_WIDTH}')
        if self.g_theta3.input_width != FACE_INPUT_WIDTH:
            raise ShapeError(
                f'g_theta3 input width must be {FACE_INPUT_WIDTH}')
        if not self.face_r_cut > 0:
            raise DomainError(
                f'face_r_cut must be positive, got {self.face_r_cut}')

    def arrays(self) -> List[np.ndarray]:
        """
        Get the trainable arrays; h_theta2 layers then g_theta3 layers
        :return: list of arrays
        """
        return self.h_theta2.arrays() + self.g_theta3.arrays()

    def paths(self) -> List[str]:
        """
        Get the names of the trainable arrays, in `arrays()` order
        :return: list of names
        """
        return self.h_theta2.paths(H_THETA2_KEY) \
            + self.g_theta3.paths(G_THETA3_KEY)

    def copy(self) -> 'SurrogateParams':
        """ Deep copy """
        return SurrogateParams(
            self.h_theta2.copy(), self.g_theta3.copy(), self.alpha1.copy(),
            self.face_r_cut)

    def with_face_r_cut(self, face_r_cut: float) -> 'SurrogateParams':
        """
        Get these parameters with a different face cutoff, sharing arrays
        :param face_r_cut: face cutoff
        :return: parameters
        """
        return replace(self, face_r_cut=face_r_cut)


def init_surrogate(rng: np.random.Generator, alpha1: np.ndarray,
                   hidden_widths: Sequence[int] = DEFAULT_HIDDEN_WIDTHS,
                   face_r_cut: float = DEFAULT_FACE_R_CUT
                   ) -> SurrogateParams:
    """
    Initialise surrogate parameters, h_theta2 drawn before g_theta3
    :param rng: random generator
    :param alpha1: single-body mobility block
    :param hidden_widths: hidden layer widths of both kernels
    :param face_r_cut: face cutoff
    :return: parameters
    """
    return SurrogateParams(
        h_theta2=init_mlp(rng, EDGE_INPUT_WIDTH, hidden_widths),
        g_theta3=init_mlp(rng, FACE_INPUT_WIDTH, hidden_widths),
        alpha1=alpha1, face_r_cut=face_r_cut)


def _mlp_as_dict(params: MlpParams) -> Dict[str, Any]:
    return {
        LAYERS_KEY: [
            {
                SHAPE_KEY: list(weight.shape),
                WEIGHT_KEY: weight.ravel().tolist(),
                BIAS_KEY: bias.tolist(),
            } for weight, bias in params.layers
        ]
    }


def _mlp_from_dict(data: Dict[str, Any], activation: str) -> MlpParams:
    layers = []
    for layer in data[LAYERS_KEY]:
        shape = tuple(layer[SHAPE_KEY])
        weight = np.array(layer[WEIGHT_KEY], dtype=float)
        if len(shape) != 2 or weight.size != shape[0] * shape[1]:
            raise ModelFormatError(
                f'Weight of {weight.size} values does not match shape {shape}')
        layers.append((weight.reshape(shape),
                       np.array(layer[BIAS_KEY], dtype=float)))
    return MlpParams(tuple(layers), activation)


def model_as_dict(params: SurrogateParams) -> Dict[str, Any]:
    """
    Get the model file content of surrogate parameters
    :param params: parameters
    :return: dict
    """
    return {
        FORMAT_VERSION_KEY: MODEL_FORMAT_VERSION,
        ACTIVATION_KEY: params.h_theta2.activation,
        ALPHA1_KEY: np.diag(params.alpha1).tolist(),
        FACE_R_CUT_KEY: params.face_r_cut,
        H_THETA2_KEY: _mlp_as_dict(params.h_theta2),
        G_THETA3_KEY: _mlp_as_dict(params.g_theta3),
    }


def model_to_json(params: SurrogateParams) -> str:
    """
    Serialise surrogate parameters; floats are written with 17 significant
    digits
    :param params: parameters
    :return: json text
    """
    return JSON_TOKEN.sub(
        _float_token, json.dumps(model_as_dict(params), indent=1))


def _float_token(match: re.Match) -> str:
    token = match.group(0)
    if token.startswith('"') or not any(c in token for c in '.eE'):
        return token
    return fmt_float(float(token))


def model_from_json(text: str) -> SurrogateParams:
    """
    Deserialise surrogate parameters
    :param text: json text
    :return: parameters
    :raises ModelFormatError: malformed content or unsupported version
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFormatError(f'Model file is not valid json: {exc}') from exc
    if not isinstance(data, dict):
        raise ModelFormatError('Model file must contain a json object')
    version = data.get(FORMAT_VERSION_KEY)
    if version != MODEL_FORMAT_VERSION:
        raise ModelFormatError(
            f'Unsupported model format version {version}, expected '
            f'{MODEL_FORMAT_VERSION}')
    activation = data.get(ACTIVATION_KEY)
    if activation not in ACTIVATIONS:
        raise ModelFormatError(f"Unsupported activation '{activation}'")
    try:
        return SurrogateParams(
            h_theta2=_mlp_from_dict(data[H_THETA2_KEY], activation),
            g_theta3=_mlp_from_dict(data[G_THETA3_KEY], activation),
            alpha1=np.diag(np.array(data[ALPHA1_KEY], dtype=float)),
            face_r_cut=float(data[FACE_R_CUT_KEY]))
    except ModelFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelFormatError(f'Malformed model file: {exc!r}') from exc


def save_model(path: Union[str, Path], params: SurrogateParams) -> str:
    """
    Write a model file
    :param path: file path
    :param params: parameters
    :return: SHA-256 hex digest of the file content
    """
    text = model_to_json(params)
    Path(path).write_text(text, encoding='utf-8')
    logger.info('Saved model to %s', path)
    return model_hash(text)


def load_model(path: Union[str, Path]) -> SurrogateParams:
    """
    Read a model file
    :param path: file path
    :return: parameters
    :raises ModelFormatError: malformed content or unsupported version
    """
    params = model_from_json(Path(path).read_text(encoding='utf-8'))
    logger.info('Loaded model from %s', path)
    return params


def model_hash(text: Union[str, SurrogateParams]) -> str:
    """
    SHA-256 of a model's json text
    :param text: json text or parameters
    :return: hex digest
    """
    if isinstance(text, SurrogateParams):
        text = model_to_json(text)
    return hashlib.sha256(text.encode('utf-8')).hexdigest()
