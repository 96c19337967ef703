"""Run configuration: flat key/value text format with section headers.

Grammar (INI dialect, parsed by configparser):

    [run]
    model = cold | vapor | eit | reference
    seed = <int>
    langevin = on | off
    omega_mhz = <float>          ; analysis frequency when not swept

    [atom]                        ; cold and vapor models
    gamma_e_mhz, gamma_g_mhz, omega0_mhz, delta1_mhz, delta2_mhz, rabi_mhz

    [medium]                      ; cold and vapor models
    optical_depth = <float>

    [vapor]                       ; vapor model only
    temperature_c, atomic_mass_u, wavelength_nm, pump_waist_um,
    probe_waist_um, cell_length_mm, cross_section_cm2

    [eit]                         ; eit model only
    gamma_e_mhz, gamma_g_mhz, delta1_mhz, rabi_c_mhz

    [reference]                   ; reference model only
    kind = pia | psa | chain
    gain = <float>                          ; pia, psa
    theta_deg, big_theta_deg = <float>      ; psa
    slice_gain, slice_transmission, n_slices ; chain

    [sweep]
    axis = <parameter key>        ; exactly one sweep axis
    start, stop = <float>
    count = <int >= 1>

    [output]
    path = <file>
    format = csv | json

    [quadrature]                  ; optional
    z_nodes = <int>               ; default 64
    velocity_order = <int>        ; default 40

Frequencies are ordinary frequencies in MHz (converted to rad/us once,
here), temperatures in Celsius, lengths in the units their key names say.
"""

import configparser
from dataclasses import dataclass, field

from .units import (ATOMIC_MASS_KG, celsius_to_kelvin, mhz_to_rad_us)

MODELS = ("cold", "vapor", "eit", "reference")
FORMATS = ("csv", "json")
REFERENCE_KINDS = ("pia", "psa", "chain")

SWEEP_AXES = {
    "cold": ("delta1_mhz", "delta2_mhz", "rabi_mhz", "optical_depth", "omega_mhz"),
    "vapor": ("delta1_mhz", "delta2_mhz", "rabi_mhz", "optical_depth",
              "omega_mhz", "temperature_c"),
    "eit": ("delta2_mhz",),
    "reference": ("gain", "slice_gain", "slice_transmission", "n_slices"),
}

_ATOM_KEYS = ("gamma_e_mhz", "gamma_g_mhz", "omega0_mhz",
              "delta1_mhz", "delta2_mhz", "rabi_mhz")
_VAPOR_KEYS = ("temperature_c", "atomic_mass_u", "wavelength_nm", "pump_waist_um",
               "probe_waist_um", "cell_length_mm", "cross_section_cm2")
_EIT_KEYS = ("gamma_e_mhz", "gamma_g_mhz", "delta1_mhz", "rabi_c_mhz")


@dataclass(frozen=True)
class Diagnostic:
    """One configuration problem, addressed by section.key."""

    key: str
    reason: str

    def __str__(self):
        return f"{self.key}: {self.reason}"


@dataclass
class RunConfig:
    """Parsed, unvalidated run configuration (raw key/value maps)."""

    model: str = ""
    seed: int = 0
    langevin: bool = True
    omega_mhz: float = 1.0
    atom: dict = field(default_factory=dict)
    medium: dict = field(default_factory=dict)
    vapor: dict = field(default_factory=dict)
    eit: dict = field(default_factory=dict)
    reference: dict = field(default_factory=dict)
    sweep_axis: str = ""
    sweep_start: float = 0.0
    sweep_stop: float = 0.0
    sweep_count: int = 0
    output_path: str = "out.csv"
    output_format: str = "csv"
    z_nodes: int = 64
    velocity_order: int = 40


class ConfigParseError(Exception):
    """Raised when the config text cannot be read at all."""


def _float_map(section) -> dict:
    return {k: section[k] for k in section}


def parse_config(text: str) -> RunConfig:
    """Parse config text; raises ConfigParseError on syntax errors."""
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigParseError(str(exc)) from exc

    cfg = RunConfig()
    run = parser["run"] if parser.has_section("run") else {}
    cfg.model = run.get("model", "")
    cfg.seed = int(run.get("seed", "0"))
    cfg.langevin = run.get("langevin", "on").strip().lower() not in ("off", "0", "false", "no")
    cfg.omega_mhz = float(run.get("omega_mhz", "1.0"))

    for name in ("atom", "medium", "vapor", "eit", "reference"):
        if parser.has_section(name):
            setattr(cfg, name, _float_map(parser[name]))

    if parser.has_section("sweep"):
        sweep = parser["sweep"]
        cfg.sweep_axis = sweep.get("axis", "")
        cfg.sweep_start = float(sweep.get("start", "0"))
        cfg.sweep_stop = float(sweep.get("stop", "0"))
        cfg.sweep_count = int(sweep.get("count", "0"))

    if parser.has_section("output"):
        out = parser["output"]
        cfg.output_path = out.get("path", cfg.output_path)
        cfg.output_format = out.get("format", cfg.output_format).strip().lower()

    if parser.has_section("quadrature"):
        quad = parser["quadrature"]
        cfg.z_nodes = int(quad.get("z_nodes", str(cfg.z_nodes)))
        cfg.velocity_order = int(quad.get("velocity_order", str(cfg.velocity_order)))
    return cfg


def _require_floats(diags, mapping, keys, section):
    for key in keys:
        if key not in mapping:
            diags.append(Diagnostic(f"{section}.{key}", "missing required key"))
            continue
        try:
            float(mapping[key])
        except ValueError:
            diags.append(Diagnostic(f"{section}.{key}",
                                    f"not a number: {mapping[key]!r}"))


def validate(cfg: RunConfig) -> list[Diagnostic]:
    """All problems that would make run() reject this configuration."""
    diags: list[Diagnostic] = []
    if cfg.model not in MODELS:
        diags.append(Diagnostic("run.model", f"must be one of {MODELS}, got {cfg.model!r}"))
        return diags

    if cfg.model in ("cold", "vapor"):
        _require_floats(diags, cfg.atom, _ATOM_KEYS, "atom")
        _require_floats(diags, cfg.medium, ("optical_depth",), "medium")
        if not diags and float(cfg.medium["optical_depth"]) < 0:
            diags.append(Diagnostic("medium.optical_depth", "must be >= 0"))
        if "gamma_e_mhz" in cfg.atom:
            try:
                if float(cfg.atom["gamma_e_mhz"]) <= 0:
                    diags.append(Diagnostic("atom.gamma_e_mhz", "must be > 0"))
            except ValueError:
                pass
    if cfg.model == "vapor":
        _require_floats(diags, cfg.vapor, _VAPOR_KEYS, "vapor")
    if cfg.model == "eit":
        _require_floats(diags, cfg.eit, _EIT_KEYS, "eit")
    if cfg.model == "reference":
        kind = cfg.reference.get("kind", "")
        if kind not in REFERENCE_KINDS:
            diags.append(Diagnostic("reference.kind",
                                    f"must be one of {REFERENCE_KINDS}, got {kind!r}"))
        elif kind in ("pia", "psa"):
            _require_floats(diags, cfg.reference, ("gain",), "reference")
        elif kind == "chain":
            _require_floats(diags, cfg.reference,
                            ("slice_gain", "slice_transmission", "n_slices"), "reference")

    axes = SWEEP_AXES[cfg.model]
    if cfg.model == "reference":
        kind = cfg.reference.get("kind", "")
        axes = {"pia": ("gain",), "psa": ("gain",),
                "chain": ("slice_gain", "slice_transmission", "n_slices")}.get(
                    kind, axes)
    if not cfg.sweep_axis:
        diags.append(Diagnostic("sweep.axis", "missing sweep axis"))
    elif cfg.sweep_axis not in axes:
        diags.append(Diagnostic("sweep.axis",
                                f"axis {cfg.sweep_axis!r} not valid for model "
                                f"{cfg.model!r}; one of {axes}"))
    if cfg.sweep_count < 1:
        diags.append(Diagnostic("sweep.count", f"must be >= 1, got {cfg.sweep_count}"))
    if cfg.output_format not in FORMATS:
        diags.append(Diagnostic("output.format",
                                f"must be one of {FORMATS}, got {cfg.output_format!r}"))
    if cfg.z_nodes < 8:
        diags.append(Diagnostic("quadrature.z_nodes", f"must be >= 8, got {cfg.z_nodes}"))
    if cfg.velocity_order < 16:
        diags.append(Diagnostic("quadrature.velocity_order",
                                f"must be >= 16, got {cfg.velocity_order}"))
    return diags


def atom_params_from(cfg: RunConfig):
    """AtomParams from the [atom] block; boundary MHz -> rad/us conversion."""
    from .atom import AtomParams
    a = {k: float(cfg.atom[k]) for k in _ATOM_KEYS}
    return AtomParams(
        gamma_e=mhz_to_rad_us(a["gamma_e_mhz"]),
        gamma_g=mhz_to_rad_us(a["gamma_g_mhz"]),
        omega0=mhz_to_rad_us(a["omega0_mhz"]),
        delta1=mhz_to_rad_us(a["delta1_mhz"]),
        delta2=mhz_to_rad_us(a["delta2_mhz"]),
        rabi=mhz_to_rad_us(a["rabi_mhz"]),
    )


def vapor_params_from(cfg: RunConfig):
    from .vapor import VaporParams
    v = {k: float(cfg.vapor[k]) for k in _VAPOR_KEYS}
    return VaporParams(
        temperature=celsius_to_kelvin(v["temperature_c"]),
        atomic_mass=v["atomic_mass_u"] * ATOMIC_MASS_KG,
        wavelength=v["wavelength_nm"] * 1e-9,
        pump_waist=v["pump_waist_um"] * 1e-6,
        probe_waist=v["probe_waist_um"] * 1e-6,
        cell_length=v["cell_length_mm"] * 1e-3,
        cross_section=v["cross_section_cm2"] * 1e-4,
    )


def eit_params_from(cfg: RunConfig):
    from .eit import LambdaParams
    e = {k: float(cfg.eit[k]) for k in _EIT_KEYS}
    return LambdaParams(
        gamma_e=mhz_to_rad_us(e["gamma_e_mhz"]),
        gamma_g=mhz_to_rad_us(e["gamma_g_mhz"]),
        delta1=mhz_to_rad_us(e["delta1_mhz"]),
        rabi_c=mhz_to_rad_us(e["rabi_c_mhz"]),
    )
