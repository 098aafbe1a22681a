"""Two-spinor and bispinor constructors.

All objects are built from a kinematic point (m, p0, nhat) through the two
half-boost amplitudes

    a = sqrt((p0 + m) / 2m),    b = sqrt((p0 - m) / 2m),

evaluated with the principal branch: the square root of a negative real is
+i sqrt(|.|).  That single rule extends every constructor off the band it
was written for (negated energies, the |p0| <= m strip) without separate
code paths.  Plane-wave phases are fixed to 1, i.e. everything is evaluated
at the spacetime origin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .clifford import gamma, gamma5, pauli_dot

HELICITIES = (0.5, -0.5)

_REL_TOL = 1e-12


class RegionError(ValueError):
    """Constructor evaluated outside its energy band."""


def _check_helicity(lam) -> float:
    if lam not in (0.5, -0.5):
        raise ValueError(f"helicity must be +0.5 or -0.5, got {lam}")
    return float(lam)


def _check_tetrad(tau) -> int:
    if tau not in (1, 2, 3, 4):
        raise ValueError(f"tetrad index must be in 1..4, got {tau}")
    return int(tau)


def basis_spinor(lam) -> np.ndarray:
    """Rest-frame basis two-spinor: (1,0) for +1/2, (0,1) for -1/2."""
    _check_helicity(lam)
    return np.array([1, 0], dtype=complex) if lam > 0 else np.array([0, 1], dtype=complex)


@dataclass(frozen=True)
class KinematicPoint:
    """Mass, energy parameter and spin axis defining one sample point.

    p0 may be negative or smaller than m; which constructors accept the
    point depends on the band |p0| >= m (real boosts) versus |p0| <= m
    (complex continuation).  nhat must be a unit 3-vector.
    """

    m: float
    p0: float
    nhat: tuple

    def __post_init__(self):
        if self.m <= 0:
            raise ValueError(f"mass must be positive, got {self.m}")
        n = np.asarray(self.nhat, dtype=float)
        if n.shape != (3,):
            raise ValueError(f"nhat must be a 3-vector, got shape {n.shape}")
        if abs(np.linalg.norm(n) - 1.0) > _REL_TOL:
            raise ValueError(f"nhat must be a unit vector, |n| = {np.linalg.norm(n)!r}")
        object.__setattr__(self, "nhat", tuple(float(x) for x in n))

    @property
    def in_real_band(self) -> bool:
        return abs(self.p0) >= self.m * (1.0 - _REL_TOL)

    @property
    def in_breve_band(self) -> bool:
        return abs(self.p0) <= self.m * (1.0 + _REL_TOL)

    def boost_factor(self, sign: int) -> complex:
        """a for sign=+1, b for sign=-1; principal branch below threshold."""
        return complex(np.sqrt((self.p0 + sign * self.m) / (2.0 * self.m) + 0j))

    def momentum(self) -> np.ndarray:
        """On-shell four-momentum (p0, |p| nhat), |p| = sqrt(p0^2 - m^2).

        Inside the |p0| < m band the spatial part is imaginary (principal
        branch), which is the mechanical form of the n -> i n continuation.
        """
        q = np.sqrt(self.p0 ** 2 - self.m ** 2 + 0j)
        return np.array([self.p0, q * self.nhat[0], q * self.nhat[1], q * self.nhat[2]])

    def negated(self) -> "KinematicPoint":
        """The same point with p0 -> -p0 (spin axis kept)."""
        return KinematicPoint(self.m, -self.p0, self.nhat)

    def sigma_n(self) -> np.ndarray:
        return pauli_dot(np.asarray(self.nhat))


@dataclass(frozen=True)
class BoostParams:
    """Rapidity chi >= 0 and boost axis, cosh(chi) = p0/m."""

    chi: float
    nhat: tuple

    def __post_init__(self):
        if self.chi < 0:
            raise ValueError(f"rapidity must be >= 0, got {self.chi}")
        n = np.asarray(self.nhat, dtype=float)
        if n.shape != (3,) or abs(np.linalg.norm(n) - 1.0) > _REL_TOL:
            raise ValueError("nhat must be a unit 3-vector")
        object.__setattr__(self, "nhat", tuple(float(x) for x in n))

    @classmethod
    def from_kinematic(cls, k: KinematicPoint) -> "BoostParams":
        if k.p0 < k.m * (1.0 - _REL_TOL):
            raise RegionError(f"rapidity needs p0 >= m, got p0={k.p0}, m={k.m}")
        return cls(math.acosh(max(k.p0 / k.m, 1.0)), k.nhat)


def _require_real_band(k: KinematicPoint, what: str):
    if not k.in_real_band:
        raise RegionError(
            f"{what} needs |p0| >= m (got p0={k.p0}, m={k.m}); "
            "use breve_u / breve_u_bar on the |p0| <= m band"
        )


def _require_breve_band(k: KinematicPoint, what: str):
    if not k.in_breve_band:
        raise RegionError(
            f"{what} needs |p0| <= m (got p0={k.p0}, m={k.m}); "
            "use the real-band constructors (boosted_spinor, dirac_u, ...)"
        )


def boosted_spinor(k: KinematicPoint, lam, dotted: bool = False) -> np.ndarray:
    """Helicity basis spinor boosted to the point k.

    Undotted: [a + (sigma.n) b] phi_lam;  dotted: [a - (sigma.n) b] phi_lam.
    """
    _require_real_band(k, "boosted_spinor")
    a, b = k.boost_factor(+1), k.boost_factor(-1)
    if dotted:
        b = -b
    return (a * np.eye(2) + b * k.sigma_n()) @ basis_spinor(lam)


def apply_boost(phi, boost: BoostParams, dotted: bool = False) -> np.ndarray:
    """Apply exp(+-(chi/2) sigma.n) to a two-spinor (+ undotted, - dotted)."""
    phi = np.asarray(phi, dtype=complex)
    h = boost.chi / 2.0
    s = -math.sinh(h) if dotted else math.sinh(h)
    return (math.cosh(h) * np.eye(2) + s * pauli_dot(np.asarray(boost.nhat))) @ phi


def parity_components(xi_undotted, xi_dotted):
    """Even/odd parity combinations ((xi + xid)/2, (xi - xid)/2)."""
    xi = np.asarray(xi_undotted, dtype=complex)
    xid = np.asarray(xi_dotted, dtype=complex)
    return (xi + xid) / 2.0, (xi - xid) / 2.0


def dirac_u(k: KinematicPoint, lam_up, lam_low) -> np.ndarray:
    """Positive-parity-stack bispinor (a phi_up ; b (sigma.n) phi_low)."""
    _require_real_band(k, "dirac_u")
    a, b = k.boost_factor(+1), k.boost_factor(-1)
    up = a * basis_spinor(lam_up)
    low = b * (k.sigma_n() @ basis_spinor(lam_low))
    return np.concatenate([up, low])


def dirac_u_bar(k: KinematicPoint, lam_up, lam_low) -> np.ndarray:
    """Adjoint row of dirac_u evaluated from its closed form.

    Returns (a phi_up^+ | -b phi_low^+ (sigma.n)).  On the p0 >= m band this
    equals dirac_adjoint(dirac_u(k, ...)) entry by entry; at negated-energy
    points it is the continuation of the formula, in which the boost
    amplitudes a, b enter unconjugated.  The polarization-sum closed forms
    hold only under this continuation.
    """
    _require_real_band(k, "dirac_u_bar")
    a, b = k.boost_factor(+1), k.boost_factor(-1)
    up = a * np.conj(basis_spinor(lam_up))
    low = -b * (np.conj(basis_spinor(lam_low)) @ k.sigma_n())
    return np.concatenate([up, low])


def tetrad_bispinor(k: KinematicPoint, tau) -> np.ndarray:
    """Tetrad basis column: tau 1,2 carry a phi in the upper block,
    tau 3,4 carry b (sigma.n) phi in the lower block (phi = +1/2, -1/2)."""
    tau = _check_tetrad(tau)
    _require_real_band(k, "tetrad_bispinor")
    lam = 0.5 if tau in (1, 3) else -0.5
    zero = np.zeros(2, dtype=complex)
    if tau <= 2:
        return np.concatenate([k.boost_factor(+1) * basis_spinor(lam), zero])
    return np.concatenate([zero, k.boost_factor(-1) * (k.sigma_n() @ basis_spinor(lam))])


def antisym_bispinor(k: KinematicPoint, tau, sign: int = +1) -> np.ndarray:
    """Antisymmetric partner basis, imaginary at threshold.

    tau 1,2: (+-i) b phi in the upper block; tau 3,4: (+-i) a (sigma.n) phi
    in the lower block.  The overall +-i is the explicit sign argument.
    """
    tau = _check_tetrad(tau)
    if sign not in (+1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    _require_real_band(k, "antisym_bispinor")
    lam = 0.5 if tau in (1, 3) else -0.5
    zero = np.zeros(2, dtype=complex)
    if tau <= 2:
        return np.concatenate([sign * 1j * k.boost_factor(-1) * basis_spinor(lam), zero])
    return np.concatenate(
        [zero, sign * 1j * k.boost_factor(+1) * (k.sigma_n() @ basis_spinor(lam))]
    )


def breve_u(k: KinematicPoint, lam_plus, lam_minus) -> np.ndarray:
    """Complex bispinor on the band |p0| <= m.

    Upper block [a + i (sigma.n) b] phi_{lam+}, lower block
    [a - i (sigma.n) b] phi_{lam-}; here b = i sqrt((m - p0)/2m) is
    imaginary, so both block operators are real and Hermitian.
    """
    _require_breve_band(k, "breve_u")
    a, b = k.boost_factor(+1), k.boost_factor(-1)
    N = k.sigma_n()
    up = (a * np.eye(2) + 1j * b * N) @ basis_spinor(lam_plus)
    low = (a * np.eye(2) - 1j * b * N) @ basis_spinor(lam_minus)
    return np.concatenate([up, low])


def breve_u_bar(k: KinematicPoint, lam_plus, lam_minus) -> np.ndarray:
    """Conjugated row partner of breve_u.

    Built from the displayed construction: the conjugate rows carry the
    factors [a - i (sigma.n) b] (upper slot) and [a + i (sigma.n) b] (lower
    slot) as written, and the gamma5 block swap then pairs the + factor
    with lam+ and the - factor with lam-.  Contracting with breve_u gives
    exactly 2 whenever lam+ = lam-.
    """
    _require_breve_band(k, "breve_u_bar")
    a, b = k.boost_factor(+1), k.boost_factor(-1)
    N = k.sigma_n()
    up = np.conj(basis_spinor(lam_plus)) @ (a * np.eye(2) + 1j * b * N)
    low = np.conj(basis_spinor(lam_minus)) @ (a * np.eye(2) - 1j * b * N)
    return np.concatenate([up, low])


def rest_basis(tau) -> np.ndarray:
    """Displayed band-center basis column e_tau / sqrt(2)."""
    tau = _check_tetrad(tau)
    e = np.zeros(4, dtype=complex)
    e[tau - 1] = 1.0 / math.sqrt(2.0)
    return e


def dirac_adjoint(u) -> np.ndarray:
    """u^+ gamma^0 as a row vector."""
    u = np.asarray(u, dtype=complex)
    if u.shape != (4,):
        raise ValueError(f"expected a bispinor, got shape {u.shape}")
    return np.conj(u) @ gamma(0)


def spinor_from_breve(breve, s, variant: str = "u") -> np.ndarray:
    """Map a breve-band bispinor through the spatial spin tetrad s = (0, svec).

    variant "u": gamma5 (gamma.s) breve;  variant "v": (gamma.s) gamma5 breve,
    with gamma.s = sum_i gamma^i s^i.  Since (gamma.s)^2 = -1 for unit svec,
    the two maps compose to -1 and are inverse to each other up to sign.
    """
    breve = np.asarray(breve, dtype=complex)
    s = np.asarray(s, dtype=float)
    if s.shape != (4,) or abs(s[0]) > _REL_TOL:
        raise ValueError(f"s must be a spatial four-vector (0, svec), got {s!r}")
    gs = s[1] * gamma(1) + s[2] * gamma(2) + s[3] * gamma(3)
    if variant == "u":
        return gamma5() @ gs @ breve
    if variant == "v":
        return gs @ gamma5() @ breve
    raise ValueError(f"variant must be 'u' or 'v', got {variant!r}")


def kappa(p0: float, m: float) -> float:
    """Spin-eigenvalue ratio sqrt((p0 - m)/(p0 + m)) = tanh(chi/2).

    Vanishes at threshold p0 = m and tends to 1 only as p0 -> infinity.
    """
    if m <= 0:
        raise ValueError(f"mass must be positive, got {m}")
    if p0 < m * (1.0 - _REL_TOL):
        raise ValueError(
            f"kappa is real only for p0 >= m (got p0={p0}, m={m}); "
            "the |p0| < m band belongs to the breve constructors"
        )
    return math.sqrt(max(p0 - m, 0.0) / (p0 + m))
