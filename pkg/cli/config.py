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
Run configuration: a single json document per run
"""
import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Union

from oracle import Domain, UNBOUNDED_TAG, domain_from_tag
from stokes_hignn import COMMANDS, COMMAND_ALIASES
from utils import ConfigError
from .constants import (
    COMMAND_KEY, SEED_KEY, DOMAIN_KEY, COMMAND_SECTIONS, COMMAND_INPUTS,
    COMMAND_OUTPUTS, COMMAND_OPTIONAL_INPUTS, COMMAND_OPTIONAL_OUTPUTS,
    PATHS_SECTION
)
from .forms import SECTION_FORMS


logger = logging.getLogger(__name__)


@dataclass
class RunConfig:
    """
    Validated run configuration
    """
    command: str
    """ Management command name """
    seed: int
    domain: Domain
    sections: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    """ Validated values of each section the command accepts """

    def section(self, name: str) -> Dict[str, Any]:
        """
        Get the values of a section
        :param name: section name
        :return: dict of values
        """
        return self.sections[name]

    def path(self, name: str) -> Optional[Path]:
        """
        Get a path from the paths section
        :param name: path name
        :return: path or None if not set
        """
        value = self.sections[PATHS_SECTION][name]
        return Path(value) if value else None


def _check_seed(seed: Any) -> int:
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
        raise ConfigError(f"'{SEED_KEY}' must be a non-negative integer, "
                          f"got {seed!r}")
    return seed


def _is_writable(path: Path) -> bool:
    if path.exists():
        return path.is_file() and os.access(path, os.W_OK)
    parent = path.parent if str(path.parent) else Path('.')
    return parent.is_dir() and os.access(parent, os.W_OK)


def check_paths(command: str, paths: Dict[str, str]):
    """
    Check the paths a command needs are set, inputs exist and outputs are
    writable

    :param command: management command name
    :param paths: validated paths section
    :raises ConfigError: if a path is missing or unusable
    """
    for name in COMMAND_INPUTS[command] + COMMAND_OUTPUTS[command]:
        if not paths[name]:
            raise ConfigError(f"'{PATHS_SECTION}.{name}' is required")
    for name in COMMAND_INPUTS[command] + \
            COMMAND_OPTIONAL_INPUTS.get(command, ()):
        if paths[name] and not Path(paths[name]).is_file():
            raise ConfigError(
                f"'{PATHS_SECTION}.{name}' file not found: {paths[name]}")
    for name in COMMAND_OUTPUTS[command] + \
            COMMAND_OPTIONAL_OUTPUTS.get(command, ()):
        if paths[name] and not _is_writable(Path(paths[name])):
            raise ConfigError(
                f"'{PATHS_SECTION}.{name}' is not writable: {paths[name]}")


def parse_run_config(data: Any, command: str,
                     seed: Optional[int] = None) -> RunConfig:
    """
    Validate a run config document

    :param data: decoded json document
    :param command: management command being run
    :param seed: seed overriding the document's; default None
    :return: run config
    :raises ConfigError: if invalid
    """
    if command not in COMMANDS:
        raise ConfigError(f"Unknown command '{command}'")
    if not isinstance(data, dict):
        raise ConfigError('Run config must be a json object')

    echo = data.get(COMMAND_KEY)
    if not isinstance(echo, str):
        raise ConfigError(f"Run config requires a '{COMMAND_KEY}' string")
    if COMMAND_ALIASES.get(echo, echo) != command:
        raise ConfigError(
            f"Run config is for '{echo}', not '{command}'")

    allowed = {COMMAND_KEY, SEED_KEY, DOMAIN_KEY, *COMMAND_SECTIONS[command]}
    unknown = sorted(set(data) - allowed)
    if unknown:
        raise ConfigError(
            f"Unknown key(s) for '{command}': {', '.join(unknown)}")

    seed = _check_seed(data.get(SEED_KEY, 0) if seed is None else seed)
    domain_tag = data.get(DOMAIN_KEY, UNBOUNDED_TAG)
    if not isinstance(domain_tag, str):
        raise ConfigError(f"'{DOMAIN_KEY}' must be a string")
    domain = domain_from_tag(domain_tag)

    sections = {
        name: SECTION_FORMS[name](data.get(name)).values()
        for name in COMMAND_SECTIONS[command]
    }
    check_paths(command, sections[PATHS_SECTION])

    return RunConfig(command=command, seed=seed, domain=domain,
                     sections=sections)


def load_run_config(path: Union[str, Path], command: str,
                    seed: Optional[int] = None) -> RunConfig:
    """
    Load and validate a run config file

    :param path: json file path
    :param command: management command being run
    :param seed: seed overriding the file's; default None
    :return: run config
    :raises ConfigError: if unreadable or invalid
    """
    try:
        with open(path, 'r', encoding='utf-8') as config_file:
            data = json.load(config_file)
    except OSError as exc:
        raise ConfigError(f'Unable to read run config {path}: {exc}') \
            from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f'Invalid json in run config {path}: {exc}') \
            from exc
    config = parse_run_config(data, command, seed=seed)
    logger.debug('Loaded %s run config from %s', command, path)
    return config
