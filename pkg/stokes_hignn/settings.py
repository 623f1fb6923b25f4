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
Django settings for stokes_hignn project.

There is no web surface; Django provides the settings layer, the app
registry, signals, forms validation, management commands and the test
runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""
import os
from pathlib import Path
import environ

from utils import physical_cpu_count

from .constants import (
    BROKER_APP_NAME, ORACLE_APP_NAME, GRAPH_APP_NAME, SURROGATE_APP_NAME,
    TRAINING_APP_NAME, DYNAMICS_APP_NAME, CLI_APP_NAME
)


# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent
# name of main app
MAIN_APP = Path(__file__).resolve().parent.name

# https://django-environ.readthedocs.io/en/latest/quickstart.html
scheme = {
    'DEBUG': (bool, False),
    'DEVELOPMENT': (bool, False),
    'TEST': (bool, False),
    'HIGNN_LOG': (str, 'INFO'),
    'HIGNN_WORKERS': (int, physical_cpu_count()),
    'HIGNN_VISCOSITY': (float, 1.0),
    'HIGNN_RADIUS': (float, 1.0),
    'HIGNN_PERIODIC_DRAG': (float, 0.982),
    'HIGNN_ORACLE_BACKENDS': (list, ['1', '2', '3']),
    'HIGNN_MODEL': (str, ''),
}

env = environ.Env(**scheme)
# Take environment variables from .env file
os.environ.setdefault('ENV_FILE', '.env')
environ.Env.read_env(
    os.path.join(BASE_DIR, env('ENV_FILE'))
)

# no sessions, signing or web requests, so the key is not a secret
SECRET_KEY = env('SECRET_KEY', default=f'{MAIN_APP}-not-used-for-signing')

DEBUG = env('DEBUG')
DEVELOPMENT = env('DEVELOPMENT')
TEST = env('TEST')

ALLOWED_HOSTS = []


# Application definition

HIGNN_APPS = [
    ORACLE_APP_NAME,
    GRAPH_APP_NAME,
    SURROGATE_APP_NAME,
    TRAINING_APP_NAME,
    DYNAMICS_APP_NAME,
    CLI_APP_NAME,
]
INSTALLED_APPS = HIGNN_APPS.copy()
# broker must be registered after the backend apps, as they connect to the
# broker_open signal in their ready()
INSTALLED_APPS.append(BROKER_APP_NAME)

DATABASES = {}

USE_I18N = False
USE_TZ = True
TIME_ZONE = 'UTC'


# Logging
# https://docs.djangoproject.com/en/4.2/topics/logging/

HIGNN_LOG = env('HIGNN_LOG').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': HIGNN_LOG,
            'propagate': False,
        } for app in INSTALLED_APPS
    },
}


# Physics and runtime defaults

HIGNN_WORKERS = max(env('HIGNN_WORKERS'), 1)
HIGNN_VISCOSITY = env('HIGNN_VISCOSITY')
HIGNN_RADIUS = env('HIGNN_RADIUS')
HIGNN_PERIODIC_DRAG = env('HIGNN_PERIODIC_DRAG')
# truncation orders of the oracle backends registered at startup
HIGNN_ORACLE_BACKENDS = [int(order) for order in env('HIGNN_ORACLE_BACKENDS')]
# optional surrogate model file registered at startup
HIGNN_MODEL = env('HIGNN_MODEL')
