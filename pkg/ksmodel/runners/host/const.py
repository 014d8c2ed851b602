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

# Process exit codes of the command line tool.
EXIT_CODE_SUCCESS = 0
EXIT_CODE_VERIFICATION_FAILURE = 1
EXIT_CODE_USAGE_ERROR = 2
EXIT_CODE_IO_ERROR = 3

METHOD_CLOSED = "closed"
METHOD_GRID = "grid"
METHOD_MC = "mc"
METHODS = (METHOD_CLOSED, METHOD_GRID, METHOD_MC)

# Resolution defaults shared by the numeric engines.
DEFAULT_N_THETA = 512
DEFAULT_N_SAMPLES = 10**6
MIN_N_THETA = 8
MIN_N_PHI = 8
MIN_LINE_STEPS = 16
MIN_MC_SAMPLES = 1000

# Trials per rng block in Monte Carlo and event generation. Streams are keyed
# by block index, so results do not depend on the worker count.
BLOCK_SIZE = 1 << 16

# Tolerance used when checking that a vector has unit norm.
UNIT_NORM_TOLERANCE = 1e-12

EVENTS_FILE_NAME = "events.csv"
SUMMARY_FILE_NAME = "summary.json"
VERIFY_REPORT_FILE_NAME = "verify_report.json"
