"""Two-mode propagation through the pumped medium.

The probe/conjugate pair (a, b+) obeys d/dz A = G(omega) A + Langevin
sources over the normalized coordinate z in [0, 1].  The generator folds
the whole dimensional content into the single prefactor
optical_depth * gamma_e / 4, so the input-output transfer is just the
matrix exponential of the generator:

    abcd(omega) = expm( i * (alphaL * Gamma / 4) * T M1'(omega)^-1 S1 ).

Langevin noise enters the spectra through four z-integrated diffusion
coefficients; their overall normalization is fixed by requiring that the
output field commutator stays canonical (see calibrate_langevin_scale),
rather than by microscopic coupling-constant bookkeeping.
"""

import dataclasses
from dataclasses import dataclass

import numpy as np

from .atom import AtomParams, build_coherence_system, diffusion_set, steady_state
from .errors import CalibrationError, DomainError, NormalizationError, PoleError
from .numkernel import DEFAULT_Z_NODES, expm, quad_unit
from .units import TWO_PI

# A frequency point is flagged as a resonance pole (and excluded from
# spectra) when the coherence system is this badly conditioned.
POLE_CONDITION_LIMIT = 1e12

# Relative imaginary residue allowed when casting a diffusion coefficient
# to a real number.
DIFFUSION_IMAG_RTOL = 1e-8

DEFAULT_CALIBRATION_FREQ = TWO_PI * 1.0   # rad/us


@dataclass(frozen=True)
class MediumParams:
    """Atomic medium of given optical depth.

    ``langevin_scale`` multiplies every integrated diffusion coefficient;
    it is 1 by default and is normally set to calibrate_langevin_scale(mp).
    """

    atom: AtomParams
    optical_depth: float
    langevin_scale: float = 1.0

    def __post_init__(self):
        if self.optical_depth < 0:
            raise DomainError(
                f"MediumParams: optical_depth must be >= 0, got {self.optical_depth}")
        if not self.langevin_scale > 0:
            raise DomainError(
                f"MediumParams: langevin_scale must be > 0, got {self.langevin_scale}")

    def with_scale(self, scale: float) -> "MediumParams":
        return dataclasses.replace(self, langevin_scale=scale)

    def with_atom(self, **changes) -> "MediumParams":
        return dataclasses.replace(self, atom=dataclasses.replace(self.atom, **changes))


@dataclass(frozen=True)
class TwoModeTransfer:
    """Frequency-dependent input-output matrix and its adjoint partner.

    ``abcd`` maps (a, b+) at the input to the output at analysis frequency
    ``freq``; ``abcd_adjoint`` is the entrywise conjugate of the transfer
    evaluated at -freq and propagates (a+, b).
    """

    freq: float
    abcd: np.ndarray
    abcd_adjoint: np.ndarray


@dataclass(frozen=True)
class IntegratedDiffusion:
    """The four z-integrated Langevin coefficients entering each spectrum.

    d_aa and d_bb weight the |A(omega)|^2 and |B(omega)|^2 terms; the _rev
    partners weight the matrix evaluated at -omega.  All real, >= 0 up to
    roundoff.
    """

    d_aa: float
    d_aa_rev: float
    d_bb: float
    d_bb_rev: float

    @classmethod
    def zero(cls):
        return cls(0.0, 0.0, 0.0, 0.0)


@dataclass(frozen=True)
class MeanFieldOut:
    """Zero-frequency gains and phases of the two modes."""

    gain_a: float
    gain_b: float
    phase_a: float
    phase_b: float


def _coherence_kernel(mp: MediumParams, omega: float):
    """(generator prefactor) and the 2x4 kernel T M1'(omega)^-1."""
    p = mp.atom
    ss = steady_state(p)
    m1p, s1, t = build_coherence_system(p, ss, omega)
    if np.linalg.cond(m1p) > POLE_CONDITION_LIMIT:
        raise PoleError(
            f"coherence system singular at omega = {omega:.6g} rad/us",
            omega=omega)
    kernel = t @ np.linalg.inv(m1p)
    prefactor = mp.optical_depth * p.gamma_e / 4.0
    return prefactor, kernel, s1


def generator(mp: MediumParams, omega: float) -> np.ndarray:
    """Full 2x2 propagation exponent over normalized z in [0, 1]."""
    prefactor, kernel, s1 = _coherence_kernel(mp, omega)
    return 1j * prefactor * (kernel @ s1)


def transfer(mp: MediumParams, omega: float) -> TwoModeTransfer:
    """Input-output transfer at omega together with its adjoint partner."""
    abcd = expm(generator(mp, omega))
    abcd_adjoint = np.conj(expm(generator(mp, -omega)))
    return TwoModeTransfer(freq=omega, abcd=abcd, abcd_adjoint=abcd_adjoint)


def gains(mp: MediumParams) -> MeanFieldOut:
    """Mean-field gains Ga = |A(0)|^2, Gb = |C(0)|^2 and output phases."""
    abcd = expm(generator(mp, 0.0))
    a0, c0 = abcd[0, 0], abcd[1, 0]
    return MeanFieldOut(gain_a=abs(a0)**2, gain_b=abs(c0)**2,
                        phase_a=float(np.angle(a0)), phase_b=float(np.angle(c0)))


def _z_integrated(mp, omega, dmat, row, nodes):
    """[row| int_0^1 e^{-Gz} K D K^+ e^{-G^+ z} dz |row], scaled.

    This is the propagated second moment of the delta-correlated coherence
    noise projected on one field row; with a Hermitian positive
    semidefinite D it is a nonnegative real number.
    """
    prefactor, kernel, s1 = _coherence_kernel(mp, omega)
    gen_w = 1j * prefactor * (kernel @ s1)

    def integrand(z):
        ez = expm(-gen_w * z)
        u = ez[row, :] @ kernel
        return u @ dmat @ np.conj(u)

    value = complex(quad_unit(integrand, nodes))
    return mp.langevin_scale * prefactor * value


def _cast_real(value: complex, who: str) -> float:
    tol = DIFFUSION_IMAG_RTOL * max(abs(value), 1.0)
    if abs(value.imag) > tol:
        raise NormalizationError(
            f"{who}: imaginary residue {value.imag:.3e} exceeds {tol:.3e}")
    return float(value.real)


def integrated_diffusion(mp: MediumParams, omega: float,
                         nodes: int = DEFAULT_Z_NODES) -> IntegratedDiffusion:
    """Symmetric-order z-integrated Langevin coefficients at omega.

    The forward pair uses the kernel at +omega, the _rev pair the kernel
    at -omega, matching how they weight the transfer-matrix entries in the
    noise spectra.
    """
    if nodes < 8:
        raise DomainError(f"integrated_diffusion: nodes must be >= 8, got {nodes}")
    dsym = diffusion_set(mp.atom).dsym
    return IntegratedDiffusion(
        d_aa=_cast_real(_z_integrated(mp, omega, dsym, 0, nodes), "d_aa"),
        d_aa_rev=_cast_real(_z_integrated(mp, -omega, dsym, 0, nodes), "d_aa_rev"),
        d_bb=_cast_real(_z_integrated(mp, omega, dsym, 1, nodes), "d_bb"),
        d_bb_rev=_cast_real(_z_integrated(mp, -omega, dsym, 1, nodes), "d_bb_rev"),
    )


def commutator_defect(mp: MediumParams, omega: float,
                      nodes: int = DEFAULT_Z_NODES) -> float:
    """Langevin contribution to the output commutator of mode a.

    Uses the antisymmetric combination d1 - d2 projected on the probe row
    at +omega; with the calibrated scale,
    |A(omega)|^2 - |B(omega)|^2 + commutator_defect(omega) = 1.
    """
    ds = diffusion_set(mp.atom)
    return _cast_real(_z_integrated(mp, omega, ds.d1 - ds.d2, 0, nodes),
                      "commutator_defect")


def calibrate_langevin_scale(mp: MediumParams,
                             omega_ref: float = DEFAULT_CALIBRATION_FREQ,
                             nodes: int = DEFAULT_Z_NODES) -> float:
    """Positive scale restoring the canonical commutator at omega_ref.

    Solves |A|^2 - |B|^2 + s * (d1 - d2 coefficient) = 1 at the reference
    frequency.  Returns 1 when the identity already holds and the Langevin
    term vanishes (zero optical depth, or a synthetic pure-gain medium).
    """
    abcd = transfer(mp, omega_ref).abcd
    deficit = 1.0 - (abs(abcd[0, 0])**2 - abs(abcd[0, 1])**2)
    raw = commutator_defect(mp.with_scale(1.0), omega_ref, nodes)
    if abs(raw) < 1e-14:
        if abs(deficit) > 1e-9:
            raise CalibrationError(
                f"calibration impossible: commutator deficit {deficit:.3e} "
                f"with vanishing diffusion")
        return 1.0
    scale = deficit / raw
    if scale <= 0:
        raise CalibrationError(f"calibration produced non-positive scale {scale:.3e}")
    return scale


def calibrated(mp: MediumParams, omega_ref: float = DEFAULT_CALIBRATION_FREQ,
               nodes: int = DEFAULT_Z_NODES) -> MediumParams:
    """Copy of mp with langevin_scale set by calibrate_langevin_scale."""
    return mp.with_scale(calibrate_langevin_scale(mp, omega_ref, nodes))
