"""Propagation tests: generator, transfer, gains, Langevin coefficients."""

import numpy as np
import pytest

from fourwave.atom import AtomParams
from fourwave.errors import DomainError
from fourwave.propagation import (MediumParams, calibrate_langevin_scale,
                                  calibrated, commutator_defect, gains,
                                  generator, integrated_diffusion, transfer)
from fourwave.units import TWO_PI


def medium(gamma_e_mhz=5.75, gamma_g_mhz=0.01, omega0_mhz=3036.0,
           delta1_mhz=1000.0, delta2_mhz=0.0, rabi_mhz=300.0,
           optical_depth=150.0):
    atom = AtomParams.from_mhz(gamma_e_mhz, gamma_g_mhz, omega0_mhz,
                               delta1_mhz, delta2_mhz, rabi_mhz)
    return MediumParams(atom=atom, optical_depth=optical_depth)


FIG2 = dict(gamma_g_mhz=0.01, rabi_mhz=300.0, delta1_mhz=1000.0,
            optical_depth=150.0)
QBS = dict(gamma_g_mhz=0.5, rabi_mhz=520.0, delta1_mhz=1000.0,
           delta2_mhz=-52.0, optical_depth=300.0)


class TestGenerator:
    def test_zero_depth_is_zero(self):
        g = generator(medium(optical_depth=0.0), TWO_PI * 1.0)
        assert np.max(np.abs(g)) == 0

    def test_no_pump_decouples_modes(self):
        g = generator(medium(rabi_mhz=0.0), TWO_PI * 1.0)
        assert g[0, 1] == 0
        assert g[1, 0] == 0

    def test_resonance_pole_reported_with_frequency(self):
        # no pump, no ground decay: the ground-coherence row of the
        # coherence system vanishes exactly at omega = delta2
        from fourwave.errors import PoleError
        mp = medium(rabi_mhz=0.0, gamma_g_mhz=0.0, delta2_mhz=0.0)
        with pytest.raises(PoleError) as err:
            generator(mp, 0.0)
        assert err.value.omega == 0.0

    def test_absorption_peak_light_shifted_above_line(self):
        # probe absorption maximum sits above the bare one-photon detuning
        deltas = np.linspace(950.0, 1250.0, 301)
        absorption = []
        for d2 in deltas:
            g = generator(medium(gamma_g_mhz=0.001, rabi_mhz=500.0,
                                 delta1_mhz=1000.0, delta2_mhz=d2), 0.0)
            absorption.append(-g[0, 0].real)
        peak = deltas[int(np.argmax(absorption))]
        assert 1000.0 < peak < 1150.0


class TestTransfer:
    def test_identity_at_zero_depth(self):
        t = transfer(medium(optical_depth=0.0), TWO_PI * 2.0)
        assert np.allclose(t.abcd, np.eye(2), atol=1e-15)
        assert np.allclose(t.abcd_adjoint, np.eye(2), atol=1e-15)

    def test_det_identity(self):
        mp = medium(**FIG2)
        w = TWO_PI * 1.0
        t = transfer(mp, w)
        expected = np.exp(np.trace(generator(mp, w)))
        assert np.linalg.det(t.abcd) == pytest.approx(expected, rel=1e-9)

    def test_adjoint_is_conjugate_at_negated_frequency(self):
        mp = medium(**FIG2)
        w = TWO_PI * 3.0
        t = transfer(mp, w)
        again = np.conj(transfer(mp, -w).abcd)
        assert np.max(np.abs(t.abcd_adjoint - again)) < 1e-12

    def test_zero_frequency_matches_gains(self):
        mp = medium(**FIG2)
        t = transfer(mp, 0.0)
        g = gains(mp)
        assert g.gain_a == pytest.approx(abs(t.abcd[0, 0])**2, rel=1e-14)
        assert g.gain_b == pytest.approx(abs(t.abcd[1, 0])**2, rel=1e-14)


class TestGains:
    def test_transparent_medium(self):
        g = gains(medium(optical_depth=0.0))
        assert (g.gain_a, g.gain_b) == (1.0, 0.0)
        assert (g.phase_a, g.phase_b) == (0.0, 0.0)

    def test_quantum_beamsplitter_total_gain_below_unity(self):
        g = gains(medium(**QBS))
        assert g.gain_a + g.gain_b < 1.0
        assert g.gain_b > 0.0

    def test_raman_dip_and_mixing_peak(self):
        # probe gain shows an absorption dip near two-photon resonance and
        # an adjacent amplification peak
        deltas = np.linspace(-100.0, 100.0, 201)
        ga = np.array([gains(medium(**{**FIG2, "delta2_mhz": d})).gain_a
                       for d in deltas])
        assert ga.min() < 0.6
        assert ga.max() > 1.01
        assert abs(deltas[ga.argmin()]) < 50
        assert abs(deltas[ga.argmax()]) < 50

    def test_phases_in_principal_branch(self):
        g = gains(medium(**FIG2, delta2_mhz=-48.0))
        assert -np.pi < g.phase_a <= np.pi
        assert -np.pi < g.phase_b <= np.pi

    def test_continuity_in_two_photon_detuning(self):
        deltas = np.linspace(-60, -40, 41)
        ga = [gains(medium(**{**FIG2, "delta2_mhz": d})).gain_a for d in deltas]
        steps = np.abs(np.diff(ga))
        assert steps.max() < 0.2 * (max(ga) - min(ga) + 1e-12)


class TestIntegratedDiffusion:
    def test_zero_depth(self):
        d = integrated_diffusion(medium(optical_depth=0.0), TWO_PI * 1.0)
        assert (d.d_aa, d.d_aa_rev, d.d_bb, d.d_bb_rev) == (0, 0, 0, 0)

    def test_nonnegative(self):
        d = integrated_diffusion(medium(**FIG2), TWO_PI * 1.0)
        for val in (d.d_aa, d.d_aa_rev, d.d_bb, d.d_bb_rev):
            assert val >= -1e-10

    def test_no_pump_keeps_conjugate_uncoupled(self):
        # with the pump off the mode coupling vanishes, so the b-channel
        # coefficients cannot enter the probe spectra (they weight |B|^2 = 0);
        # pure absorption still diffuses the probe channel
        mp = medium(rabi_mhz=0.0, delta2_mhz=1000.0, optical_depth=5.0)
        t = transfer(mp, TWO_PI * 1.0)
        assert t.abcd[0, 1] == 0
        assert t.abcd[1, 0] == 0
        d = integrated_diffusion(mp, TWO_PI * 1.0)
        assert d.d_aa > 0

    def test_matches_midpoint_riemann_sum(self):
        # independent quadrature route for the z-integral
        from fourwave.atom import build_coherence_system, diffusion_set, steady_state
        from fourwave.numkernel import expm
        mp = medium(**FIG2)
        w = TWO_PI * 1.0
        p = mp.atom
        m1p, s1, t = build_coherence_system(p, steady_state(p), w)
        kernel = t @ np.linalg.inv(m1p)
        pref = mp.optical_depth * p.gamma_e / 4.0
        gen_w = 1j * pref * (kernel @ s1)
        dsym = diffusion_set(p).dsym
        n = 20000
        zs = (np.arange(n) + 0.5) / n
        acc = 0.0
        for z in zs:
            u = expm(-gen_w * z)[0, :] @ kernel
            acc += (u @ dsym @ np.conj(u)).real / n
        oracle = pref * acc
        got = integrated_diffusion(mp, w).d_aa
        assert got == pytest.approx(oracle, rel=1e-6)

    def test_node_doubling_converged(self):
        mp = medium(**FIG2)
        a = integrated_diffusion(mp, TWO_PI * 1.0, nodes=64)
        b = integrated_diffusion(mp, TWO_PI * 1.0, nodes=128)
        for x, y in zip((a.d_aa, a.d_aa_rev, a.d_bb, a.d_bb_rev),
                        (b.d_aa, b.d_aa_rev, b.d_bb, b.d_bb_rev)):
            assert abs(x - y) <= 1e-6 * max(abs(y), 1e-12)

    def test_minimum_nodes_enforced(self):
        with pytest.raises(DomainError):
            integrated_diffusion(medium(**FIG2), TWO_PI * 1.0, nodes=4)


class TestCalibration:
    def test_zero_depth_returns_unity(self):
        assert calibrate_langevin_scale(medium(optical_depth=0.0)) == 1.0

    def test_commutator_identity_across_frequencies(self):
        mp = calibrated(medium(**FIG2))
        for f in np.linspace(0.2, 10.0, 12):
            w = TWO_PI * f
            abcd = transfer(mp, w).abcd
            lhs = abs(abcd[0, 0])**2 - abs(abcd[0, 1])**2 + commutator_defect(mp, w)
            assert lhs == pytest.approx(1.0, abs=1e-4)

    def test_exact_at_reference_frequency(self):
        mp = calibrated(medium(**QBS))
        w = TWO_PI * 1.0
        abcd = transfer(mp, w).abcd
        lhs = abs(abcd[0, 0])**2 - abs(abcd[0, 1])**2 + commutator_defect(mp, w)
        assert lhs == pytest.approx(1.0, abs=1e-6)

    def test_scale_positive(self):
        assert calibrate_langevin_scale(medium(**FIG2)) > 0
