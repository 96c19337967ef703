"""Noise-spectra tests, including the synthetic ideal-amplifier oracle."""

import numpy as np
import pytest

from fourwave.atom import AtomParams
from fourwave.errors import DomainError, NormalizationError
from fourwave.propagation import IntegratedDiffusion, MediumParams, calibrated
from fourwave.spectra import (NoiseSpectrum, compute_spectrum, inseparability,
                              inseparability_parts, intensity_difference_noise,
                              intensity_difference_noise_parts, phase_sum_noise,
                              phase_sum_noise_parts, probe_intensity_noise,
                              probe_intensity_noise_parts, probe_phase_noise,
                              probe_phase_noise_parts, symmetric_grid, to_dB)
from fourwave.units import TWO_PI


def medium(gamma_e_mhz=5.75, gamma_g_mhz=0.01, omega0_mhz=3036.0,
           delta1_mhz=2000.0, delta2_mhz=-217.0, rabi_mhz=2000.0,
           optical_depth=150.0):
    atom = AtomParams.from_mhz(gamma_e_mhz, gamma_g_mhz, omega0_mhz,
                               delta1_mhz, delta2_mhz, rabi_mhz)
    return MediumParams(atom=atom, optical_depth=optical_depth)


def bogoliubov(gain: float):
    """Synthetic phase-insensitive amplifier matrix, |A|^2 - |B|^2 = 1."""
    c, s = np.sqrt(gain), np.sqrt(gain - 1.0)
    return np.array([[c, s], [s, c]], dtype=complex)


NO_DIFFUSION = IntegratedDiffusion.zero()


class TestIdealAmplifierOracle:
    @pytest.mark.parametrize("gain", [1.0, 1.5, 3.0, 10.0])
    def test_pair_spectra(self, gain):
        abcd = bogoliubov(gain)
        expected = 1.0 / (2.0 * gain - 1.0)
        snm = intensity_difference_noise_parts(abcd, abcd, abcd, NO_DIFFUSION)
        sphp = phase_sum_noise_parts(abcd, abcd, abcd, NO_DIFFUSION)
        insep = inseparability_parts(abcd, abcd, abcd, NO_DIFFUSION)
        assert snm == pytest.approx(expected, abs=1e-12)
        assert sphp == pytest.approx(expected, abs=1e-12)
        assert insep == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("gain", [1.0, 1.5, 3.0, 10.0])
    def test_single_mode_spectra(self, gain):
        abcd = bogoliubov(gain)
        sna = probe_intensity_noise_parts(abcd, abcd, abcd, NO_DIFFUSION)
        assert sna == pytest.approx(2.0 * gain - 1.0, abs=1e-12)
        assert probe_phase_noise_parts(abcd, abcd, abcd, NO_DIFFUSION) == sna


class TestTransparentMedium:
    def test_all_spectra_at_standard_quantum_limit(self):
        mp = medium(optical_depth=0.0)
        w = TWO_PI * 1.0
        assert probe_intensity_noise(mp, w) == pytest.approx(1.0, abs=1e-12)
        assert probe_phase_noise(mp, w) == pytest.approx(1.0, abs=1e-12)
        assert intensity_difference_noise(mp, w) == pytest.approx(1.0, abs=1e-12)
        assert phase_sum_noise(mp, w) == pytest.approx(1.0, abs=1e-12)
        assert inseparability(mp, w) == pytest.approx(1.0, abs=1e-12)


@pytest.fixture(scope="module")
def mp():
    return calibrated(medium())


class TestMicroscopicSpectra:

    def test_intensity_and_phase_noise_identical(self, mp):
        w = TWO_PI * 1.0
        assert probe_intensity_noise(mp, w) == pytest.approx(
            probe_phase_noise(mp, w), abs=1e-12)

    def test_parity(self, mp):
        for f in (0.5, 1.0, 3.0):
            w = TWO_PI * f
            for fn in (probe_intensity_noise, intensity_difference_noise,
                       phase_sum_noise, inseparability):
                assert fn(mp, w) == pytest.approx(fn(mp, -w), abs=1e-10)

    def test_inseparability_is_half_sum(self, mp):
        w = TWO_PI * 1.5
        expected = 0.5 * (intensity_difference_noise(mp, w) + phase_sum_noise(mp, w))
        assert inseparability(mp, w) == expected

    def test_langevin_noise_never_improves_correlations(self, mp):
        for f in (0.5, 1.0, 2.0, 4.0):
            w = TWO_PI * f
            for fn in (intensity_difference_noise, phase_sum_noise, inseparability):
                with_noise = fn(mp, w, langevin=True)
                without = fn(mp, w, langevin=False)
                assert with_noise >= without - 1e-12

    def test_single_mode_floor(self, mp):
        for f in (0.3, 1.0, 5.0):
            assert probe_intensity_noise(mp, TWO_PI * f) >= 1.0 - 1e-6

    def test_sub_shot_noise_entanglement_point(self, mp):
        w = TWO_PI * 1.0
        assert intensity_difference_noise(mp, w) < 1.0
        assert phase_sum_noise(mp, w) < 1.0
        assert inseparability(mp, w) < 1.0


class TestHelpers:
    def test_db_conversion(self):
        assert to_dB(1.0) == 0.0
        assert to_dB(0.2) == pytest.approx(-6.9897, abs=1e-3)
        assert to_dB(0.5) == pytest.approx(-3.0103, abs=1e-3)
        with pytest.raises(DomainError):
            to_dB(0.0)

    def test_zero_gain_rejected(self):
        abcd0 = np.zeros((2, 2), dtype=complex)
        with pytest.raises(NormalizationError):
            probe_intensity_noise_parts(abcd0, np.eye(2), np.eye(2), NO_DIFFUSION)
        with pytest.raises(NormalizationError):
            intensity_difference_noise_parts(abcd0, np.eye(2), np.eye(2), NO_DIFFUSION)

    def test_symmetric_grid(self):
        grid = symmetric_grid(TWO_PI * 5.0, 10)
        assert np.allclose(grid, -grid[::-1])
        assert len(grid) == 10

    def test_compute_spectrum_labels_and_lengths(self):
        mp = medium(optical_depth=0.0)
        freqs = symmetric_grid(TWO_PI * 2.0, 6)
        spectrum = compute_spectrum(mp, freqs, "inseparability")
        assert isinstance(spectrum, NoiseSpectrum)
        assert spectrum.label == "inseparability"
        assert np.allclose(spectrum.values, 1.0, atol=1e-12)
        with pytest.raises(DomainError):
            compute_spectrum(mp, freqs, "nonsense")
