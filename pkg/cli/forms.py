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
Run config section forms
"""
from numbers import Real
from typing import Any, Dict, Optional

from django import forms
from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.validators import MinValueValidator

from dynamics import (
    Direction, ForceModelType, DEFAULT_DT, DEFAULT_OUTPUT_EVERY,
    DEFAULT_MORSE_RHO, DEFAULT_MORSE_DEPTH, DEFAULT_MORSE_R_EQ,
    DEFAULT_LATTICE_SPACINGS, DEFAULT_CHAIN_COUNTS, DEFAULT_CHAIN_SPACING,
    DEFAULT_SCALING_COUNTS, DEFAULT_SCALING_SPACING, DEFAULT_MAX_RETRIES
)
from oracle import ORACLE_ORDERS, THREE_BODY_ORDER, SamplerConfig
from surrogate import (
    DEFAULT_HIDDEN_WIDTHS, LOSS_GUARD, SURROGATE_BACKEND_NAME
)
from training import TrainConfig
from utils import ChoiceArg, ConfigError
from .constants import (
    PHYSICS_SECTION, SAMPLER_SECTION, TRAIN_SECTION, GRAPH_SECTION,
    SYSTEM_SECTION, DYNAMICS_SECTION, BENCH_SECTION, PATHS_SECTION
)


DEFAULT_SAMPLE_COUNT = 60000
DEFAULT_SYSTEM_N_SIDE = 2
DEFAULT_SYSTEM_COUNT = 27
DEFAULT_SYSTEM_SPACING = 4.0
DEFAULT_SYSTEM_EXTENT = 20.0
DEFAULT_N_STEPS = 100

_SAMPLER = SamplerConfig()
_TRAIN = TrainConfig()


def validate_positive(value):
    """
    Check a value is strictly positive
    :param value: value to check
    :raises ValidationError: if not positive
    """
    if value is not None and not value > 0:
        raise ValidationError(
            'Ensure this value is greater than 0.', code='min_value')


def validate_decay_rate(value):
    """
    Check a value lies in [0, 1)
    :param value: value to check
    :raises ValidationError: if out of range
    """
    if value is not None and not 0 <= value < 1:
        raise ValidationError(
            'Ensure this value is at least 0 and less than 1.',
            code='range')


class SystemKind(ChoiceArg):
    """ Initial configuration of a simulation """
    CUBIC_LATTICE = ('Cubic lattice', 'cubic_lattice')
    SQUARE_LATTICE = ('Square lattice', 'square_lattice')
    CHAIN = ('Chain', 'chain')
    RANDOM = ('Random non-overlapping', 'random')
    FILE = ('Positions file', 'file')


class NumberListField(forms.Field):
    """
    Field for a json list of numbers
    """
    default_error_messages = {
        'invalid': 'Enter a list of numbers.',
        'invalid_int': 'Enter a list of whole numbers.',
        'length': 'Ensure this list has %(length)d items.',
    }

    def __init__(self, *, item_type: type = float,
                 length: Optional[int] = None, item_validators=(),
                 **kwargs):
        self.item_type = item_type
        self.length = length
        self.item_validators = list(item_validators)
        super().__init__(**kwargs)

    def to_python(self, value):
        if value in self.empty_values:
            return ()
        if not isinstance(value, (list, tuple)) or any(
                isinstance(item, bool) or not isinstance(item, Real)
                for item in value):
            raise ValidationError(self.error_messages['invalid'],
                                  code='invalid')
        if self.item_type is int and any(
                not float(item).is_integer() for item in value):
            raise ValidationError(self.error_messages['invalid_int'],
                                  code='invalid_int')
        return tuple(self.item_type(item) for item in value)

    def validate(self, value):
        super().validate(value)
        if value and self.length is not None and len(value) != self.length:
            raise ValidationError(self.error_messages['length'],
                                  code='length',
                                  params={'length': self.length})
        for item in value:
            for validator in self.item_validators:
                validator(item)


class ConfigSectionForm(forms.Form):
    """
    Base form for a section of a run config. Values missing from the
    section take the field's initial value; unknown keys are rejected.
    """
    section: str = ''

    def __init__(self, data: Optional[Dict[str, Any]] = None, **kwargs):
        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise ConfigError(f"Section '{self.section}' must be an object")
        unknown = sorted(set(data) - set(self.base_fields))
        if unknown:
            raise ConfigError(
                f"Unknown key(s) in section '{self.section}': "
                f"{', '.join(unknown)}")

        merged = {}
        for name, field in self.base_fields.items():
            initial = field.initial() if callable(field.initial) \
                else field.initial
            if initial is not None:
                merged[name] = initial
        merged.update(data)
        super().__init__(data=merged, **kwargs)

    def values(self) -> Dict[str, Any]:
        """
        Get the validated section values
        :return: dict of field name and value
        :raises ConfigError: if invalid
        """
        if not self.is_valid():
            raise ConfigError('; '.join(
                f"{self.section}.{name}: "
                f"{' '.join(error['message'] for error in errors)}"
                for name, errors in self.errors.get_json_data().items()
            ))
        return dict(self.cleaned_data)


def _positive_float(initial, **kwargs) -> forms.FloatField:
    return forms.FloatField(initial=initial, validators=[validate_positive],
                            **kwargs)


def _min_int(initial, min_value: int = 1) -> forms.IntegerField:
    return forms.IntegerField(initial=initial, min_value=min_value)


def _path_field() -> forms.CharField:
    return forms.CharField(initial='', required=False)


def _order_field(initial: int) -> forms.TypedChoiceField:
    return forms.TypedChoiceField(
        initial=initial, coerce=int,
        choices=[(order, str(order)) for order in ORACLE_ORDERS])


class PhysicsForm(ConfigSectionForm):
    """
    Physical parameters
    """
    section = PHYSICS_SECTION

    viscosity = _positive_float(lambda: settings.HIGNN_VISCOSITY)
    radius = _positive_float(lambda: settings.HIGNN_RADIUS)
    periodic_constant = _positive_float(lambda: settings.HIGNN_PERIODIC_DRAG)


class SamplerForm(ConfigSectionForm):
    """
    Training set generation
    """
    section = SAMPLER_SECTION

    count = _min_int(DEFAULT_SAMPLE_COUNT)
    n_particles = _min_int(_SAMPLER.n_particles, 2)
    max_extent = _positive_float(_SAMPLER.max_extent)
    min_gap = _positive_float(_SAMPLER.min_gap)
    near_contact_gap = _positive_float(_SAMPLER.near_contact_gap)
    near_contact_quota = forms.FloatField(
        initial=_SAMPLER.near_contact_quota, min_value=0, max_value=1)
    max_retries = _min_int(_SAMPLER.max_retries)
    order = _order_field(THREE_BODY_ORDER)

    def clean(self):
        cleaned_data = super().clean()
        min_gap = cleaned_data.get('min_gap')
        near_contact_gap = cleaned_data.get('near_contact_gap')
        if min_gap is not None and near_contact_gap is not None \
                and min_gap >= near_contact_gap:
            raise ValidationError(
                'min_gap must be less than near_contact_gap.')
        return cleaned_data


class TrainForm(ConfigSectionForm):
    """
    Training hyperparameters
    """
    section = TRAIN_SECTION

    batch_size = _min_int(_TRAIN.batch_size)
    epochs = _min_int(_TRAIN.epochs)
    base_lr = _positive_float(_TRAIN.base_lr)
    lr_halving_period = _min_int(_TRAIN.lr_halving_period)
    beta1 = forms.FloatField(initial=_TRAIN.beta1,
                             validators=[validate_decay_rate])
    beta2 = forms.FloatField(initial=_TRAIN.beta2,
                             validators=[validate_decay_rate])
    epsilon = _positive_float(_TRAIN.epsilon)
    train_parts = _min_int(_TRAIN.train_parts)
    test_parts = _min_int(_TRAIN.test_parts)
    loss_guard = _positive_float(LOSS_GUARD)
    hidden_widths = NumberListField(
        initial=DEFAULT_HIDDEN_WIDTHS, item_type=int,
        item_validators=[MinValueValidator(1)])


class GraphForm(ConfigSectionForm):
    """
    Graph cutoffs and three-body switch
    """
    section = GRAPH_SECTION

    face_r_cut = _positive_float(None, required=False)
    """ Inference face cutoff; default the model's, or DEFAULT_FACE_R_CUT
    when training """
    train_face_r_cut = _positive_float(_TRAIN.train_face_r_cut)
    use_faces = forms.BooleanField(initial=True, required=False)


class SystemForm(ConfigSectionForm):
    """
    Initial configuration of a simulation
    """
    section = SYSTEM_SECTION

    kind = forms.ChoiceField(initial=SystemKind.CUBIC_LATTICE.arg,
                             choices=SystemKind.choices())
    n_side = _min_int(DEFAULT_SYSTEM_N_SIDE)
    count = _min_int(DEFAULT_SYSTEM_COUNT)
    spacing = _positive_float(DEFAULT_SYSTEM_SPACING)
    extent = _positive_float(DEFAULT_SYSTEM_EXTENT)
    min_gap = forms.FloatField(initial=0.0, min_value=0)
    max_retries = _min_int(DEFAULT_MAX_RETRIES)


class DynamicsForm(ConfigSectionForm):
    """
    Simulation settings
    """
    section = DYNAMICS_SECTION

    backend = forms.CharField(initial=SURROGATE_BACKEND_NAME)
    dt = _positive_float(DEFAULT_DT)
    n_steps = _min_int(DEFAULT_N_STEPS, 0)
    output_every = _min_int(DEFAULT_OUTPUT_EVERY)
    force_model = forms.ChoiceField(initial=ForceModelType.UNIFORM.arg,
                                    choices=ForceModelType.choices())
    force = NumberListField(initial=(), length=3, required=False)
    """ Uniform force; default gravity for the uniform model """
    rho = _positive_float(DEFAULT_MORSE_RHO)
    depth = _positive_float(DEFAULT_MORSE_DEPTH)
    r_eq = _positive_float(DEFAULT_MORSE_R_EQ)


class BenchForm(ConfigSectionForm):
    """
    Benchmark settings
    """
    section = BENCH_SECTION

    backend = forms.CharField(initial=SURROGATE_BACKEND_NAME)
    reference_order = _order_field(THREE_BODY_ORDER)
    direction = forms.ChoiceField(initial=Direction.PERPENDICULAR.arg,
                                  choices=Direction.choices())
    lattice_spacings = NumberListField(
        initial=DEFAULT_LATTICE_SPACINGS, item_validators=[validate_positive])
    chain_counts = NumberListField(
        initial=DEFAULT_CHAIN_COUNTS, item_type=int,
        item_validators=[MinValueValidator(1)])
    chain_spacing = _positive_float(DEFAULT_CHAIN_SPACING)
    scaling_counts = NumberListField(
        initial=DEFAULT_SCALING_COUNTS, item_type=int,
        item_validators=[MinValueValidator(1)])
    scaling_spacing = _positive_float(DEFAULT_SCALING_SPACING)


class PathsForm(ConfigSectionForm):
    """
    Input and output files; which are needed depends on the command
    """
    section = PATHS_SECTION

    data = _path_field()
    model = _path_field()
    loss_history = _path_field()
    positions = _path_field()
    forces = _path_field()
    velocities = _path_field()
    trajectory = _path_field()
    lattice_table = _path_field()
    chain_table = _path_field()
    scaling_table = _path_field()


SECTION_FORMS = {
    form.section: form for form in (
        PhysicsForm, SamplerForm, TrainForm, GraphForm, SystemForm,
        DynamicsForm, BenchForm, PathsForm
    )
}
