#
# Copyright (C) 2026 The ksmodel Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""Run configuration: defaults, key=value config files and flag overrides."""

import copy
import logging
import math

from ksmodel.runners.host import const
from ksmodel.runners.host import errors
from ksmodel.runners.host import keys
from ksmodel.runners.host import utils

_DEFAULT_CONFIG_TEMPLATE = {
    keys.ConfigKeys.KEY_STATE: "singlet",
    keys.ConfigKeys.KEY_METHOD: const.METHOD_CLOSED,
    keys.ConfigKeys.KEY_N_THETA: const.DEFAULT_N_THETA,
    keys.ConfigKeys.KEY_N_SAMPLES: const.DEFAULT_N_SAMPLES,
    keys.ConfigKeys.KEY_TRIALS: 10**6,
    keys.ConfigKeys.KEY_SEED: 0,
    keys.ConfigKeys.KEY_WORKERS: 1,
    keys.ConfigKeys.KEY_QUICK: False,
    keys.ConfigKeys.KEY_CONTROL: False,
    keys.ConfigKeys.KEY_DEBUG_EQUATOR_DOUBLE_COUNT: False,
    keys.ConfigKeys.KEY_PHI_START: 1.0,
    keys.ConfigKeys.KEY_PHI_STOP: 89.0,
    keys.ConfigKeys.KEY_PHI_STEP: 1.0,
    keys.ConfigKeys.KEY_BOUND: "two_plane",
    keys.ConfigKeys.KEY_FORMAT: "json",
    keys.ConfigKeys.KEY_LOG_SEVERITY: "INFO",
    keys.ConfigKeys.KEY_INCLUDE_FILTER: [],
    keys.ConfigKeys.KEY_EXCLUDE_FILTER: [],
}

_TRUE_WORDS = ("1", "true", "yes", "on")
_FALSE_WORDS = ("0", "false", "no", "off")
_FORMATS = ("json", "csv")
_MAX_SEED = 2**64 - 1


def GetDefaultConfig():
    """Returns the default config data structure (when no config file is
    given)."""
    return copy.deepcopy(_DEFAULT_CONFIG_TEMPLATE)


def _to_int(text):
    try:
        return int(text)
    except ValueError:
        value = float(text)
        if not math.isfinite(value) or value != int(value):
            raise ValueError("%r is not an integer" % text)
        return int(value)


def _to_bool(text):
    word = text.strip().lower()
    if word in _TRUE_WORDS:
        return True
    if word in _FALSE_WORDS:
        return False
    raise ValueError("%r is not a boolean" % text)


def coerce_value(key, text):
    """Converts the text of a config value to the type its key expects.

    Raises:
        ValueError: the text does not parse.
    """
    if key in keys.ConfigKeys.INT_KEYS:
        return _to_int(text)
    if key in keys.ConfigKeys.FLOAT_KEYS:
        return float(text)
    if key in keys.ConfigKeys.BOOL_KEYS:
        return _to_bool(text)
    if key in keys.ConfigKeys.LIST_KEYS:
        return [item for item in text.replace(",", " ").split() if item]
    return text


def parse_config_lines(lines, source="<config>"):
    """Parses key=value lines.

    '#' starts a comment, blank lines are ignored and whitespace around keys
    and values is stripped.

    Args:
        lines: iterable of strings.
        source: string used in error messages.

    Returns:
        A dict of coerced values.

    Raises:
        errors.USERError: a line has no '=', names an unknown key, or its
            value does not parse.
    """
    values = {}
    for line_number, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise errors.USERError("%s:%d: expected key=value, got %r" %
                                   (source, line_number, line))
        key, text = [part.strip() for part in line.split("=", 1)]
        if key not in keys.ConfigKeys.FILE_KEYS:
            raise errors.USERError("%s:%d: unknown key %r" %
                                   (source, line_number, key))
        try:
            values[key] = coerce_value(key, text)
        except ValueError as e:
            raise errors.USERError("%s:%d: bad value for %s: %s" %
                                   (source, line_number, key, e))
    return values


def load_config_file(config_path):
    """Loads a key=value config file.

    Raises:
        errors.KsIOError: the file can not be read.
        errors.USERError: the file is malformed.
    """
    path = utils.abs_path(config_path)
    try:
        with open(path, "r") as f:
            lines = f.readlines()
    except (IOError, OSError) as e:
        raise errors.KsIOError(path, e.strerror or str(e))
    values = parse_config_lines(lines, source=path)
    logging.debug("Loaded %d config values from %s", len(values), path)
    return values


def _validate(config):
    """Checks value ranges.

    Raises:
        errors.USERError is raised for the first value out of range.
    """
    k = keys.ConfigKeys
    minimums = (
        (k.KEY_TRIALS, 1),
        (k.KEY_N_THETA, const.MIN_N_THETA),
        (k.KEY_N_SAMPLES, const.MIN_MC_SAMPLES),
        (k.KEY_WORKERS, 1),
        (k.KEY_SEED, 0),
    )
    for key, minimum in minimums:
        value = config[key]
        if isinstance(value, bool) or not isinstance(value, int):
            raise errors.USERError("%s must be an integer, got %r" %
                                   (key, value))
        if value < minimum:
            raise errors.USERError("%s must be >= %d, got %d" %
                                   (key, minimum, value))
    if config[k.KEY_SEED] > _MAX_SEED:
        raise errors.USERError("seed must be below 2**64")
    if config[k.KEY_METHOD] not in const.METHODS:
        raise errors.USERError("method must be one of %s, got %r" %
                               (", ".join(const.METHODS),
                                config[k.KEY_METHOD]))
    if config[k.KEY_FORMAT] not in _FORMATS:
        raise errors.USERError("format must be json or csv, got %r" %
                               config[k.KEY_FORMAT])


class RunConfig(object):
    """The validated configuration of one command.

    Angles are kept in degrees as given; phis() converts to radians.

    Attributes:
        values: dict, key -> value.
    """

    def __init__(self, values):
        self.values = dict(values)

    def __getitem__(self, key):
        return self.values[key]

    def __contains__(self, key):
        return key in self.values

    def get(self, key, default=None):
        return self.values.get(key, default)

    def phis(self):
        """Returns the scan angles in radians, start to stop inclusive.

        Raises:
            errors.USERError: the range is empty or the step is not positive.
        """
        k = keys.ConfigKeys
        start = self.values[k.KEY_PHI_START]
        stop = self.values[k.KEY_PHI_STOP]
        step = self.values[k.KEY_PHI_STEP]
        if not step > 0.0:
            raise errors.USERError("phi_step must be positive, got %r" % step)
        if stop < start:
            raise errors.USERError("empty scan range %r..%r" % (start, stop))
        count = int(math.floor((stop - start) / step + 1e-9)) + 1
        return [math.radians(start + i * step) for i in range(count)]

    def getDict(self):
        return dict(self.values)

    def __repr__(self):
        return "RunConfig(%r)" % (self.values,)


def build_run_config(file_values=None, cli_values=None):
    """Layers defaults, config file values and command line flags.

    Args:
        file_values: dict from load_config_file, or None.
        cli_values: dict of flag values; None entries do not override.

    Returns:
        A RunConfig.

    Raises:
        errors.USERError: a value is out of range.
    """
    config = GetDefaultConfig()
    config.update(file_values or {})
    for key, value in (cli_values or {}).items():
        if value is not None:
            config[key] = value
    _validate(config)
    return RunConfig(config)
