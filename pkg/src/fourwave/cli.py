"""Batch front-end: parameter sweeps emitting tabular spectra.

Subcommands:

    fourwave run --config cfg.ini [--out PATH] [--format csv|json]
                 [--threads N] [--db]
    fourwave validate --config cfg.ini
    fourwave reference --config cfg.ini [...]      ; model=reference shortcut

Output is deterministic for a fixed config and seed; sweep points may be
dispatched to a thread pool but are always written in sweep order.  Rows
whose frequency point sits on a resonance pole are emitted with an empty
value set and a 'pole' flag; the run still exits 0.
"""

import argparse
import dataclasses
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor

from . import config as cfgmod
from . import reference as refmod
from . import spectra as spec
from . import vapor as vapmod
from .config import ConfigParseError, RunConfig
from .errors import FourwaveError, PoleError
from .propagation import (IntegratedDiffusion, MediumParams,
                          calibrate_langevin_scale, integrated_diffusion,
                          transfer)
from .units import mhz_to_rad_us

NOISE_COLUMNS = ("S_Nminus", "S_phiplus", "inseparability", "S_Na", "S_N")


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    return f"{value:.12g}"


def _columns(model: str, kind: str = "") -> list[str]:
    if model == "cold":
        return ["sweep_value", "Ga", "Gb", "S_Nminus", "S_phiplus",
                "inseparability", "S_Na", "flag"]
    if model == "vapor":
        return ["sweep_value", "Ga", "Gb", "S_Nminus", "S_phiplus",
                "inseparability", "S_Na", "prepared_fraction", "flag"]
    if model == "eit":
        return ["sweep_value", "chi_re", "chi_im", "flag"]
    if kind == "psa":
        return ["sweep_value", "psa_gain", "S_N", "flag"]
    return ["sweep_value", "Ga", "Gb", "S_Nminus", "flag"]


def _sweep_values(cfg: RunConfig) -> list[float]:
    if cfg.sweep_count == 1:
        return [cfg.sweep_start]
    step = (cfg.sweep_stop - cfg.sweep_start) / (cfg.sweep_count - 1)
    return [cfg.sweep_start + i * step for i in range(cfg.sweep_count)]


def _medium_for(cfg: RunConfig, axis: str, value: float) -> MediumParams:
    atom = cfgmod.atom_params_from(cfg)
    depth = float(cfg.medium["optical_depth"])
    if axis in ("delta1_mhz", "delta2_mhz", "rabi_mhz"):
        field = {"delta1_mhz": "delta1", "delta2_mhz": "delta2",
                 "rabi_mhz": "rabi"}[axis]
        atom = dataclasses.replace(atom, **{field: mhz_to_rad_us(value)})
    elif axis == "optical_depth":
        depth = value
    return MediumParams(atom=atom, optical_depth=depth)


def _cold_row(cfg: RunConfig, axis: str, value: float) -> dict:
    mp = _medium_for(cfg, axis, value)
    omega = mhz_to_rad_us(value if axis == "omega_mhz" else cfg.omega_mhz)
    try:
        if cfg.langevin and mp.optical_depth > 0:
            mp = mp.with_scale(calibrate_langevin_scale(mp, nodes=cfg.z_nodes))
        abcd0 = transfer(mp, 0.0).abcd
        abcd_w = transfer(mp, omega).abcd
        abcd_mw = transfer(mp, -omega).abcd
        diff = integrated_diffusion(mp, omega, cfg.z_nodes) if cfg.langevin \
            else IntegratedDiffusion.zero()
        parts = (abcd0, abcd_w, abcd_mw, diff)
        snm = spec.intensity_difference_noise_parts(*parts)
        sphp = spec.phase_sum_noise_parts(*parts)
        sna = spec.probe_intensity_noise_parts(*parts)
    except PoleError:
        return {"sweep_value": value, "flag": "pole"}
    except FourwaveError as exc:
        return {"sweep_value": value, "flag": f"error:{exc}"}
    return {
        "sweep_value": value,
        "Ga": abs(abcd0[0, 0])**2,
        "Gb": abs(abcd0[1, 0])**2,
        "S_Nminus": snm,
        "S_phiplus": sphp,
        "inseparability": 0.5 * (snm + sphp),
        "S_Na": sna,
        "flag": "",
    }


def _vapor_row(cfg: RunConfig, axis: str, value: float) -> dict:
    mp = _medium_for(cfg, axis, value)
    vp = cfgmod.vapor_params_from(cfg)
    if axis == "temperature_c":
        vp = dataclasses.replace(vp, temperature=value + 273.15)
    omega = mhz_to_rad_us(value if axis == "omega_mhz" else cfg.omega_mhz)
    try:
        if cfg.langevin and mp.optical_depth > 0:
            mp = mp.with_scale(calibrate_langevin_scale(mp, nodes=cfg.z_nodes))
        order = cfg.velocity_order
        abcd0 = vapmod.doppler_transfer(mp, vp, 0.0, order)
        abcd_w = vapmod.doppler_transfer(mp, vp, omega, order)
        abcd_mw = vapmod.doppler_transfer(mp, vp, -omega, order)
        # cold-atom diffusion reused with the velocity-averaged transfer
        diff = integrated_diffusion(mp, omega, cfg.z_nodes) if cfg.langevin \
            else IntegratedDiffusion.zero()
        prepared, front_loss = vapmod.residual_transmission(mp, vp)
        parts = (abcd0, abcd_w, abcd_mw, diff)
        snm = spec.intensity_difference_noise_parts(*parts)
        sphp = spec.phase_sum_noise_parts(*parts)
        sna = spec.probe_intensity_noise_parts(*parts)
    except PoleError:
        return {"sweep_value": value, "flag": "pole"}
    except FourwaveError as exc:
        return {"sweep_value": value, "flag": f"error:{exc}"}
    return {
        "sweep_value": value,
        "Ga": front_loss * abs(abcd0[0, 0])**2,
        "Gb": front_loss * abs(abcd0[1, 0])**2,
        "S_Nminus": snm,
        "S_phiplus": sphp,
        "inseparability": 0.5 * (snm + sphp),
        "S_Na": sna,
        "prepared_fraction": prepared,
        "flag": "",
    }


def _eit_row(cfg: RunConfig, axis: str, value: float) -> dict:
    from .eit import susceptibility
    lp = cfgmod.eit_params_from(cfg)
    try:
        chi = susceptibility(lp, mhz_to_rad_us(value))
    except PoleError:
        return {"sweep_value": value, "flag": "pole"}
    return {"sweep_value": value, "chi_re": chi.real, "chi_im": chi.imag, "flag": ""}


def _reference_row(cfg: RunConfig, axis: str, value: float) -> dict:
    kind = cfg.reference.get("kind", "pia")
    try:
        if kind == "pia":
            gain = value if axis == "gain" else float(cfg.reference["gain"])
            n_a, n_b, _ = refmod.ideal_pia_means(gain, 1.0)
            return {"sweep_value": value, "Ga": n_a, "Gb": n_b,
                    "S_Nminus": refmod.ideal_pia_noise(gain), "flag": ""}
        if kind == "psa":
            gain = value if axis == "gain" else float(cfg.reference["gain"])
            theta = math.radians(float(cfg.reference.get("theta_deg", "0")))
            big = math.radians(float(cfg.reference.get("big_theta_deg", "90")))
            return {"sweep_value": value, "psa_gain": refmod.psa_gain(gain, theta),
                    "S_N": refmod.psa_noise(gain, theta, big), "flag": ""}
        params = {
            "slice_gain": float(cfg.reference["slice_gain"]),
            "slice_transmission": float(cfg.reference["slice_transmission"]),
            "n_slices": int(float(cfg.reference["n_slices"])),
        }
        if axis == "n_slices":
            params["n_slices"] = int(value)
        elif axis in params:
            params[axis] = value
        ga, gb, snm = refmod.sliced_amp_loss(refmod.SliceChainParams(**params))
        return {"sweep_value": value, "Ga": ga, "Gb": gb, "S_Nminus": snm, "flag": ""}
    except FourwaveError as exc:
        return {"sweep_value": value, "flag": f"error:{exc}"}


_ROW_BUILDERS = {"cold": _cold_row, "vapor": _vapor_row,
                 "eit": _eit_row, "reference": _reference_row}


def run(cfg: RunConfig, threads: int = 1, with_db: bool = False) -> int:
    """Execute the sweep and write the output file; returns exit status."""
    problems = cfgmod.validate(cfg)
    if problems:
        for d in problems:
            print(f"config error at {d}", file=sys.stderr)
        return 2
    values = _sweep_values(cfg)
    builder = _ROW_BUILDERS[cfg.model]
    axis = cfg.sweep_axis

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(lambda v: builder(cfg, axis, v), values))
    else:
        rows = [builder(cfg, axis, v) for v in values]

    columns = _columns(cfg.model, cfg.reference.get("kind", ""))
    if with_db:
        columns = _with_db_columns(columns, rows)
    labels = [f"sweep_value[{axis}]" if c == "sweep_value" else c
              for c in columns]     # axis key carries the unit
    text = _render_csv(labels, columns, rows) if cfg.output_format == "csv" \
        else _render_json(labels, columns, rows, cfg)
    with open(cfg.output_path, "w", newline="") as fh:
        fh.write(text)
    return 0


def _with_db_columns(columns, rows):
    out = list(columns)
    insert_at = out.index("flag")
    for name in [c for c in columns if c in NOISE_COLUMNS]:
        db_name = f"{name}_db"
        for row in rows:
            val = row.get(name)
            row[db_name] = 10.0 * math.log10(val) if isinstance(val, float) and val > 0 \
                else None
        out.insert(insert_at, db_name)
        insert_at += 1
    return out


def _render_csv(labels, columns, rows) -> str:
    lines = [",".join(labels)]
    for row in rows:
        lines.append(",".join(_fmt(row.get(c)) for c in columns))
    return "\n".join(lines) + "\n"


def _render_json(labels, columns, rows, cfg: RunConfig) -> str:
    payload = {
        "schema": {"columns": labels},
        "meta": {"model": cfg.model, "sweep_axis": cfg.sweep_axis, "seed": cfg.seed},
        "rows": [[row.get(c) if row.get(c) != "" else None for c in columns]
                 for row in rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def _load(path: str) -> RunConfig:
    with open(path) as fh:
        return cfgmod.parse_config(fh.read())


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="fourwave",
        description="Gain and quantum-noise spectra of double-lambda four-wave mixing")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("run", "validate", "reference"):
        p = sub.add_parser(name)
        p.add_argument("--config", required=True, help="path to the run configuration")
        if name != "validate":
            p.add_argument("--out", default=None, help="override output.path")
            p.add_argument("--format", default=None, choices=("csv", "json"))
            p.add_argument("--threads", type=int, default=1)
            p.add_argument("--db", action="store_true",
                           help="append decibel columns for noise quantities")
    args = parser.parse_args(argv)

    try:
        cfg = _load(args.config)
    except (OSError, ConfigParseError) as exc:
        print(f"cannot read config: {exc}", file=sys.stderr)
        return 2

    if args.command == "validate":
        problems = cfgmod.validate(cfg)
        for d in problems:
            print(str(d))
        return 0 if not problems else 2

    if args.command == "reference" and cfg.model != "reference":
        print("config error at run.model: the reference subcommand requires "
              f"model = reference, got {cfg.model!r}", file=sys.stderr)
        return 2
    if args.out:
        cfg.output_path = args.out
    if args.format:
        cfg.output_format = args.format
    try:
        return run(cfg, threads=args.threads, with_db=args.db)
    except FourwaveError as exc:
        print(f"run failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
