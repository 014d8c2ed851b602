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
"""This module has the global key values that are used across framework
modules.
"""


class ConfigKeys(object):
    """Enum values for run config related lookups.

    The same strings are used as keys in key=value config files and, with
    '_' replaced by '-', as command line flag names.
    """
    # Model and settings selection.
    KEY_STATE = "state"
    KEY_TENSOR = "tensor"
    KEY_SETTING_A = "a"
    KEY_SETTING_A2 = "a2"
    KEY_SETTING_B = "b"
    KEY_SETTING_B2 = "b2"
    KEY_PLAN = "plan"

    # Numerics.
    KEY_METHOD = "method"
    KEY_TRIALS = "trials"
    KEY_N_THETA = "n_theta"
    KEY_N_SAMPLES = "n_samples"
    KEY_SEED = "seed"
    KEY_WORKERS = "workers"

    # Inequality scans.
    KEY_INEQUALITY = "inequality"
    KEY_PHI_START = "phi_start"
    KEY_PHI_STOP = "phi_stop"
    KEY_PHI_STEP = "phi_step"
    KEY_BOUND = "bound"
    KEY_CONTROL = "control"

    # Output and logging.
    KEY_OUT = "out"
    KEY_FORMAT = "format"
    KEY_LOG_PATH = "log_path"
    KEY_LOG_SEVERITY = "log_severity"

    # Keys for verification suites.
    KEY_QUICK = "quick"
    KEY_INCLUDE_FILTER = "include_filter"
    KEY_EXCLUDE_FILTER = "exclude_filter"
    KEY_DEBUG_EQUATOR_DOUBLE_COUNT = "debug_equator_double_count"

    # Internal keys, used internally, not exposed to user's config files.
    IKEY_USER_PARAM = "user_params"
    IKEY_TESTBED_NAME = "testbed_name"
    IKEY_LOG_PATH = "log_path"

    # Keys a config file may set.
    FILE_KEYS = [
        KEY_STATE, KEY_TENSOR, KEY_SETTING_A, KEY_SETTING_A2, KEY_SETTING_B,
        KEY_SETTING_B2, KEY_PLAN, KEY_METHOD, KEY_TRIALS, KEY_N_THETA,
        KEY_N_SAMPLES, KEY_SEED, KEY_WORKERS, KEY_PHI_START, KEY_PHI_STOP,
        KEY_PHI_STEP, KEY_BOUND, KEY_CONTROL, KEY_OUT, KEY_FORMAT,
        KEY_LOG_PATH, KEY_LOG_SEVERITY, KEY_QUICK, KEY_INCLUDE_FILTER,
        KEY_EXCLUDE_FILTER, KEY_DEBUG_EQUATOR_DOUBLE_COUNT
    ]

    INT_KEYS = [KEY_TRIALS, KEY_N_THETA, KEY_N_SAMPLES, KEY_SEED, KEY_WORKERS]
    FLOAT_KEYS = [KEY_PHI_START, KEY_PHI_STOP, KEY_PHI_STEP]
    BOOL_KEYS = [KEY_QUICK, KEY_CONTROL, KEY_DEBUG_EQUATOR_DOUBLE_COUNT]
    LIST_KEYS = [KEY_INCLUDE_FILTER, KEY_EXCLUDE_FILTER]
