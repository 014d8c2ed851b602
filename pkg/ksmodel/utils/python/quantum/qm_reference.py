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
"""Two-qubit quantum reference values.

Basis order is |HH>, |HV>, |VH>, |VV>. H and V are identified with the +z
and -z Bloch axes, so the polarization observable along e_x, e_y, e_z is the
Pauli matrix sigma_x, sigma_y, sigma_z in that basis. The correlation of a
state for settings a, b is E_ab = a^T T b with T_ij = <sigma_i (x) sigma_j>.
"""

import math

import numpy as np

from ksmodel.runners.host import errors

NORM_TOLERANCE = 1e-12

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

PSI_MINUS = "psi-"
PSI_PLUS = "psi+"
PHI_PLUS = "phi+"
PHI_MINUS = "phi-"
BELL_KINDS = (PSI_MINUS, PSI_PLUS, PHI_PLUS, PHI_MINUS)
BELL_ALIASES = {"singlet": PSI_MINUS}

_HALF_ROOT = math.sqrt(0.5)
_BELL_AMPLITUDES = {
    PSI_MINUS: (0.0, _HALF_ROOT, -_HALF_ROOT, 0.0),
    PSI_PLUS: (0.0, _HALF_ROOT, _HALF_ROOT, 0.0),
    PHI_PLUS: (_HALF_ROOT, 0.0, 0.0, _HALF_ROOT),
    PHI_MINUS: (_HALF_ROOT, 0.0, 0.0, -_HALF_ROOT),
}


class TwoQubitState(object):
    """A normalized pure two-qubit state.

    Attributes:
        amplitudes: read-only complex ndarray of shape (4,).
    """

    def __init__(self, amplitudes, normalize=False):
        amplitudes = np.array(amplitudes, dtype=complex)
        if amplitudes.shape != (4,):
            raise errors.StateError("expected 4 amplitudes, got shape %r" %
                                    (amplitudes.shape,))
        if not np.all(np.isfinite(amplitudes)):
            raise errors.StateError("non-finite amplitudes")
        norm_sq = float(np.vdot(amplitudes, amplitudes).real)
        if normalize:
            if norm_sq == 0.0:
                raise errors.StateError("cannot normalize the zero state")
            amplitudes = amplitudes / math.sqrt(norm_sq)
        elif abs(norm_sq - 1.0) > NORM_TOLERANCE:
            raise errors.StateError("state is not normalized: |psi|^2 = %r" %
                                    norm_sq)
        amplitudes.setflags(write=False)
        self.amplitudes = amplitudes

    def densityMatrix(self):
        return np.outer(self.amplitudes, self.amplitudes.conj())

    def expectation(self, operator):
        """Returns Re <psi|operator|psi>."""
        value = np.vdot(self.amplitudes, operator.dot(self.amplitudes))
        return float(value.real)

    def __repr__(self):
        return "TwoQubitState(%r)" % (list(self.amplitudes),)


def normalize_kind(kind):
    """Maps a Bell state name or alias to its canonical name."""
    name = str(kind).strip().lower()
    name = BELL_ALIASES.get(name, name)
    if name not in BELL_KINDS:
        raise errors.StateError("unknown Bell state %r; expected one of %s" %
                                (kind, ", ".join(BELL_KINDS)))
    return name


def bell_state(kind):
    """Returns the Bell state psi-, psi+, phi+ or phi- ("singlet" = psi-)."""
    return TwoQubitState(_BELL_AMPLITUDES[normalize_kind(kind)])


class CorrelationTensor(object):
    """A 3x3 real matrix T with E_ab = a^T T b.

    Entries outside [-1, 1] by more than rounding are rejected; rounding
    excess is clipped.

    Attributes:
        matrix: read-only float64 ndarray of shape (3, 3).
    """

    def __init__(self, matrix):
        matrix = np.array(matrix, dtype=float)
        if matrix.shape != (3, 3):
            raise errors.StateError("tensor must be 3x3, got shape %r" %
                                    (matrix.shape,))
        if not np.all(np.isfinite(matrix)):
            raise errors.StateError("non-finite tensor entries")
        if np.any(np.abs(matrix) > 1.0 + NORM_TOLERANCE):
            raise errors.StateError("tensor entries must lie in [-1, 1]: %r" %
                                    (matrix.tolist(),))
        matrix = np.clip(matrix, -1.0, 1.0)
        matrix.setflags(write=False)
        self.matrix = matrix

    @classmethod
    def fromDiagonal(cls, diagonal):
        return cls(np.diag(np.asarray(diagonal, dtype=float)))

    def correlation(self, n_a, n_b):
        """Returns n_a^T T n_b."""
        return float(n_a.asArray().dot(self.matrix).dot(n_b.asArray()))

    def isDiagonal(self):
        return bool(np.all(self.matrix == np.diag(np.diag(self.matrix))))

    def diagonal(self):
        return tuple(float(d) for d in np.diag(self.matrix))

    def singularValues(self):
        return np.linalg.svd(self.matrix, compute_uv=False)

    def __neg__(self):
        return CorrelationTensor(-self.matrix)

    def __eq__(self, other):
        if not isinstance(other, CorrelationTensor):
            return NotImplemented
        return bool(np.array_equal(self.matrix, other.matrix))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def getDict(self):
        return {"t": self.matrix.tolist()}

    def __repr__(self):
        return "CorrelationTensor(%r)" % (self.matrix.tolist(),)


def _pauli_products():
    return [[np.kron(PAULI[i], PAULI[j]) for j in range(3)] for i in range(3)]


def correlation_tensor(state):
    """Computes T_ij = <psi| sigma_i (x) sigma_j |psi> by 4x4 algebra."""
    products = _pauli_products()
    return CorrelationTensor([[state.expectation(products[i][j])
                               for j in range(3)] for i in range(3)])


def mixture_tensor(components):
    """Tensor of the mixed state sum_k w_k |psi_k><psi_k|.

    Args:
        components: list of (weight, TwoQubitState); weights nonnegative and
            summing to 1.
    """
    weights = [float(w) for w, _ in components]
    if not weights or min(weights) < 0.0 or abs(sum(weights) - 1.0) > 1e-12:
        raise errors.StateError("mixture weights must be >= 0 and sum to 1: "
                                "%r" % (weights,))
    rho = sum(w * state.densityMatrix() for w, state in components)
    products = _pauli_products()
    return CorrelationTensor([[float(np.trace(rho.dot(products[i][j])).real)
                               for j in range(3)] for i in range(3)])


def bell_tensor(kind):
    return correlation_tensor(bell_state(kind))


def qm_correlation(state, n_a, n_b):
    """Returns n_a^T T n_b for the state, clipped to [-1, 1]."""
    value = correlation_tensor(state).correlation(n_a, n_b)
    return min(1.0, max(-1.0, value))
