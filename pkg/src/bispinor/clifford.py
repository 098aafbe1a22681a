"""Dirac gamma matrices and the surrounding Clifford-algebra helpers.

Everything is fixed to the standard (Dirac) representation and the
metric diag(+1, -1, -1, -1).  Matrices are complex128, cached at module
load, and returned as read-only views; all functions are pure.
"""

from __future__ import annotations

from functools import reduce
from itertools import permutations

import numpy as np

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

_I2 = np.eye(2, dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)

_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

_GAMMA = (
    np.block([[_I2, _Z2], [_Z2, -_I2]]),
    np.block([[_Z2, _PAULI[0]], [-_PAULI[0], _Z2]]),
    np.block([[_Z2, _PAULI[1]], [-_PAULI[1], _Z2]]),
    np.block([[_Z2, _PAULI[2]], [-_PAULI[2], _Z2]]),
)
_GAMMA5 = 1j * _GAMMA[0] @ _GAMMA[1] @ _GAMMA[2] @ _GAMMA[3]

for _m in (*_GAMMA, _GAMMA5, *_PAULI):
    _m.setflags(write=False)


def pauli(i: int) -> np.ndarray:
    """Pauli matrix sigma_i, i in {1, 2, 3}."""
    if i not in (1, 2, 3):
        raise ValueError(f"Pauli index must be 1, 2 or 3, got {i}")
    return _PAULI[i - 1]


def pauli_dot(nvec) -> np.ndarray:
    """sigma . n for a real or complex 3-vector n."""
    n = np.asarray(nvec, dtype=complex)
    if n.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {n.shape}")
    return n[0] * _PAULI[0] + n[1] * _PAULI[1] + n[2] * _PAULI[2]


def gamma(mu: int) -> np.ndarray:
    """Contravariant gamma^mu in the Dirac representation, mu in 0..3."""
    if mu not in (0, 1, 2, 3):
        raise ValueError(f"gamma index must be in 0..3, got {mu}")
    return _GAMMA[mu]


def gamma_lower(mu: int) -> np.ndarray:
    """Covariant gamma_mu = g_{mu mu} gamma^mu (no sum)."""
    if mu not in (0, 1, 2, 3):
        raise ValueError(f"gamma index must be in 0..3, got {mu}")
    return _GAMMA[0] if mu == 0 else -_GAMMA[mu]


def gamma5() -> np.ndarray:
    """gamma5 = i gamma^0 gamma^1 gamma^2 gamma^3; off-diagonal unit blocks."""
    return _GAMMA5


def _perm_sign(p) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def gamma5_from_epsilon() -> np.ndarray:
    """gamma5 rebuilt from the rank-4 epsilon contraction.

    Evaluated as -(i/4!) sum_perm eps(perm) gamma_a gamma_b gamma_c gamma_d
    over index-lowered gammas with eps(0,1,2,3) = +1.  The lowered-index
    evaluation is what reproduces i gamma^0 gamma^1 gamma^2 gamma^3; the
    same sum over upper-index gammas flips the overall sign.
    """
    acc = np.zeros((4, 4), dtype=complex)
    for p in permutations(range(4)):
        acc += _perm_sign(p) * reduce(np.matmul, (gamma_lower(mu) for mu in p))
    return -1j / 24.0 * acc


def minkowski_dot(a, b) -> complex:
    """a . b with metric diag(+1,-1,-1,-1); bilinear, no conjugation."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    return complex(a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3])


def slash(a) -> np.ndarray:
    """Feynman slash a_mu gamma^mu = a^0 g0 - a^1 g1 - a^2 g2 - a^3 g3."""
    a = np.asarray(a, dtype=complex)
    if a.shape != (4,):
        raise ValueError(f"expected a 4-vector, got shape {a.shape}")
    return a[0] * _GAMMA[0] - a[1] * _GAMMA[1] - a[2] * _GAMMA[2] - a[3] * _GAMMA[3]


def sigma_munu(mu: int, nu: int) -> np.ndarray:
    """sigma_{mu nu} = (i/2)[gamma_mu, gamma_nu] with lowered indices."""
    gm, gn = gamma_lower(mu), gamma_lower(nu)
    return 0.5j * (gm @ gn - gn @ gm)


def _eps3(i: int, j: int, k: int) -> int:
    if len({i, j, k}) != 3:
        return 0
    return _perm_sign((i, j, k))


def generalized_pauli(lam: int, sign: int = +1) -> np.ndarray:
    """Generalized Pauli matrix sigma^(+/-)_lam, lam in {1, 2, 3}.

    The plus variant is sum_{ij} eps_{lam i j} sigma_{ij} over all ordered
    pairs (i, j) in {1,2,3}^2, the minus variant uses eps_{lam j i}.  Both
    orderings of each pair contribute, so the result carries a factor 2
    relative to a single-ordering sum: sigma^+_3 = 2 sigma_{12}.
    """
    if lam not in (1, 2, 3):
        raise ValueError(f"index must be 1, 2 or 3, got {lam}")
    if sign not in (+1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    acc = np.zeros((4, 4), dtype=complex)
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            eps = _eps3(lam, i, j) if sign > 0 else _eps3(lam, j, i)
            if eps:
                acc += eps * sigma_munu(i, j)
    return acc


def trace(ms) -> complex:
    """Trace of the ordered product of 4x4 matrices."""
    ms = list(ms)
    if not ms:
        raise ValueError("trace of an empty product is undefined")
    return complex(np.trace(reduce(np.matmul, ms)))
