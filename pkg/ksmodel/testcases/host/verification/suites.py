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
"""The verification suites run by `ksmodel verify`, in run order."""

from ksmodel.testcases.host.verification import experiment_verification
from ksmodel.testcases.host.verification import geometry_verification
from ksmodel.testcases.host.verification import inequality_verification
from ksmodel.testcases.host.verification import ks_single_verification
from ksmodel.testcases.host.verification import ks_two_verification
from ksmodel.testcases.host.verification import qm_reference_verification
from ksmodel.testcases.host.verification import quadrature_verification

ALL_SUITES = [
    geometry_verification.GeometryVerification,
    quadrature_verification.QuadratureVerification,
    ks_single_verification.KsSingleVerification,
    qm_reference_verification.QmReferenceVerification,
    ks_two_verification.KsTwoVerification,
    inequality_verification.InequalityVerification,
    experiment_verification.ExperimentVerification,
]
