"""Command-line interface.

    hulthen-dirac spectrum      closed-form root pairs for a list of states
    hulthen-dirac table1        regression against the published reference table
    hulthen-dirac sweep         root pairs along a delta, mu or C axis
    hulthen-dirac wavefunction  sampled radial components of one state
    hulthen-dirac verify        closed form against the shooting oracle

Exit codes: 0 success, 2 configuration error, 3 solver or oracle failure.
"""

from __future__ import annotations

import argparse
import configparser
import logging
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import oracle, serialize
from .errors import HulthenError, InvalidParameterError, LabelError
from .model import bound_energy, energy_closed_form, nonrel_energy, nonrel_theta
from .params import (REFERENCE_C, REFERENCE_DELTAS, REFERENCE_MU, REFERENCE_STRENGTH,
                     PhysicalParams)
from .quantum_numbers import QuantumState, SymmetryKind, parse_label, render
from .reference import REFERENCE_TOLERANCE, printed_digits_match, reference_entries
from .wavefun import log_grid, nonrel_radial, spinor

EXIT_OK, EXIT_CONFIG, EXIT_SOLVER = 0, 2, 3
COMMANDS = ("spectrum", "table1", "sweep", "wavefunction", "verify")
VERIFY_TOLERANCE = 1e-5


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    mu: float = REFERENCE_MU
    delta: float | None = None
    strength: float = REFERENCE_STRENGTH
    c_const: float = REFERENCE_C
    symmetry: SymmetryKind = SymmetryKind.PSEUDOSPIN
    states: list | None = None
    axis: str = "delta"
    sweep_range: tuple[float, float, int] | None = None
    fmt: str = "csv"
    out: str | None = None
    centrifugal: oracle.Centrifugal = oracle.Centrifugal.HULTHEN_SQUARE
    nonrelativistic: bool = False
    tolerance: float | None = None
    points: int = 400
    r_max: float | None = None

    def params(self, delta: float | None = None, **over) -> PhysicalParams:
        d = delta if delta is not None else self.delta
        if d is None:
            raise ConfigError("--delta is required for this command")
        kw = dict(mu=self.mu, delta=d, strength=self.strength, c_const=self.c_const,
                  symmetry=self.symmetry)
        kw.update(over)
        return PhysicalParams(**kw)


# parsing -------------------------------------------------------------------

def parse_range(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"range {text!r} is not start:stop:steps")
    try:
        a, b, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ConfigError(f"range {text!r} is not start:stop:steps") from None
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ConfigError("sweep bounds must be finite")
    if n < 2:
        raise ConfigError("a sweep needs at least 2 steps")
    return a, b, n


def parse_states(text: str, nonrel: bool = False) -> list:
    """Comma-separated labels ("1s_1/2") or "n_r:kappa" pairs.

    With ``nonrel`` the pairs are "n_r:l" and come back as tuples.
    """
    out = []
    for tok in (t.strip() for t in text.split(",")):
        if not tok:
            continue
        try:
            if ":" in tok:
                a, b = tok.split(":")
                if nonrel:
                    n, ell = int(a), int(b)
                    if n < 0 or ell < 0:
                        raise ConfigError(f"negative quantum number in {tok!r}")
                    out.append((n, ell))
                else:
                    out.append(QuantumState(int(a), int(b)))
            else:
                st = parse_label(tok)
                out.append((st.n_r, st.ell) if nonrel else st)
        except (ValueError, LabelError) as exc:
            raise ConfigError(f"bad state {tok!r}: {exc}") from None
    return out


def default_states(symmetry: SymmetryKind) -> list[QuantumState]:
    """First members of the reference doublets: l_tilde 1..4 (pseudospin) or
    l 1..4 (spin), two radial numbers each."""
    if symmetry is SymmetryKind.PSEUDOSPIN:
        return [QuantumState(n, -lt) for lt in range(1, 5) for n in (1, 2)]
    return [QuantumState(n, -(ell + 1)) for ell in range(1, 5) for n in (0, 1)]


def _dominant(state: QuantumState, symmetry: SymmetryKind) -> int:
    return state.ell_tilde if symmetry is SymmetryKind.PSEUDOSPIN else state.ell


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hulthen-dirac",
                                description="Dirac-Hulthen spectra under spin/pseudospin symmetry")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--config", help="key=value file with a [run] section; flags win")
    p.add_argument("--mu", type=float)
    p.add_argument("--delta", type=float)
    p.add_argument("--strength", type=float, help="potential strength (Delta0 or Sigma0)")
    p.add_argument("--c-const", type=float, dest="c_const")
    p.add_argument("--symmetry", choices=("pseudospin", "spin"))
    p.add_argument("--states", help='e.g. "1s_1/2,0d_3/2" or "1:-1,0:2"')
    p.add_argument("--axis", choices=("delta", "mu", "c"))
    p.add_argument("--range", dest="sweep_range", help="start:stop:steps")
    p.add_argument("--format", dest="fmt", choices=("csv", "json"))
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--centrifugal", choices=("hulthen-square", "exact"))
    p.add_argument("--nonrelativistic", action="store_true", default=None,
                   help="Schrodinger limit; states are n_r:l")
    p.add_argument("--tolerance", type=float)
    p.add_argument("--points", type=int, help="wave-function grid points")
    p.add_argument("--r-max", type=float, dest="r_max")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


_FILE_KEYS = {
    "mu": float, "delta": float, "strength": float, "c_const": float, "symmetry": str,
    "states": str, "axis": str, "range": str, "format": str, "out": str,
    "centrifugal": str, "nonrelativistic": None, "tolerance": float, "points": int,
    "r_max": float,
}


def _read_config_file(path: str) -> dict:
    cp = configparser.ConfigParser()
    try:
        with open(path, encoding="utf-8") as fh:
            cp.read_file(fh)
    except (OSError, configparser.Error) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    if not cp.has_section("run"):
        raise ConfigError(f"config {path} has no [run] section")
    out = {}
    for key, raw in cp.items("run"):
        key = key.replace("-", "_")
        if key not in _FILE_KEYS:
            raise ConfigError(f"unknown config key {key!r}")
        conv = _FILE_KEYS[key]
        try:
            out[key] = cp.getboolean("run", key) if conv is None else conv(raw)
        except ValueError:
            raise ConfigError(f"bad value for {key}: {raw!r}") from None
    if "range" in out:
        out["sweep_range"] = out.pop("range")
    if "format" in out:
        out["fmt"] = out.pop("format")
    return out


def make_config(args: argparse.Namespace) -> RunConfig:
    merged = _read_config_file(args.config) if args.config else {}
    for key in ("mu", "delta", "strength", "c_const", "symmetry", "states", "axis",
                "sweep_range", "fmt", "out", "centrifugal", "nonrelativistic", "tolerance",
                "points", "r_max"):
        val = getattr(args, key)
        if val is not None:
            merged[key] = val
    cfg = RunConfig(args.command)
    try:
        for key in ("mu", "delta", "strength", "c_const", "tolerance", "r_max"):
            if key in merged:
                setattr(cfg, key, float(merged[key]))
        if "symmetry" in merged:
            cfg.symmetry = SymmetryKind.parse(merged["symmetry"])
        if "centrifugal" in merged:
            cfg.centrifugal = oracle.Centrifugal(merged["centrifugal"])
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    if "axis" in merged:
        if merged["axis"] not in ("delta", "mu", "c"):
            raise ConfigError(f"unknown axis {merged['axis']!r}")
        cfg.axis = merged["axis"]
    if "fmt" in merged:
        if merged["fmt"] not in ("csv", "json"):
            raise ConfigError(f"unknown format {merged['fmt']!r}")
        cfg.fmt = merged["fmt"]
    elif cfg.command == "verify":
        cfg.fmt = "json"
    cfg.out = merged.get("out")
    cfg.nonrelativistic = bool(merged.get("nonrelativistic", False))
    if "points" in merged:
        cfg.points = int(merged["points"])
        if cfg.points < 16:
            raise ConfigError("--points must be at least 16")
    if "sweep_range" in merged:
        cfg.sweep_range = parse_range(merged["sweep_range"])
    if "states" in merged:
        cfg.states = parse_states(merged["states"], cfg.nonrelativistic)
    if cfg.tolerance is not None and not cfg.tolerance > 0:
        raise ConfigError("--tolerance must be positive")
    return cfg


# commands -------------------------------------------------------------------

PAIR_COLUMNS = ["e_plus", "e_minus", "theta_sq_plus", "theta_sq_minus", "valid_plus",
                "valid_minus", "normalizable_plus", "normalizable_minus", "theta", "selected"]


def _pair_cells(params: PhysicalParams, state: QuantumState) -> dict:
    """Root pair of one state; errors become an ``error`` cell."""
    try:
        pair = energy_closed_form(params, state)
    except HulthenError as exc:
        return {"error": f"{type(exc).__name__}: {exc}"}
    row = {"e_plus": pair.e_plus, "e_minus": pair.e_minus,
           "theta_sq_plus": pair.theta_sq_plus, "theta_sq_minus": pair.theta_sq_minus,
           "valid_plus": pair.valid_plus, "valid_minus": pair.valid_minus,
           "normalizable_plus": pair.normalizable_plus,
           "normalizable_minus": pair.normalizable_minus}
    try:
        row["selected"] = bound_energy(params, state)
        branch = "minus" if row["selected"] == pair.e_minus else "plus"
        row["theta"] = pair.theta(branch)
    except HulthenError as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def cmd_spectrum(cfg: RunConfig):
    states = default_states(cfg.symmetry) if cfg.states is None else cfg.states
    deltas = [cfg.delta] if cfg.delta is not None else list(REFERENCE_DELTAS)
    rows = []
    for st in states:
        for d in deltas:
            row = {"delta": d, "state": render(st), "n_r": st.n_r, "kappa": st.kappa,
                   "l": _dominant(st, cfg.symmetry)}
            row.update(_pair_cells(cfg.params(d), st))
            rows.append(row)
    rows.sort(key=lambda r: (r["l"], r["n_r"], r["kappa"], r["delta"]))
    cols = ["delta", "state", "n_r", "kappa", "l"] + PAIR_COLUMNS + ["error"]
    meta = {"command": "spectrum", "mu": cfg.mu, "strength": cfg.strength,
            "c_const": cfg.c_const, "symmetry": cfg.symmetry.value}
    return rows, cols, meta, EXIT_OK


def cmd_table1(cfg: RunConfig):
    tol = REFERENCE_TOLERANCE if cfg.tolerance is None else cfg.tolerance
    rows = []
    for lt, n, d, printed in reference_entries():
        params = PhysicalParams(REFERENCE_MU, d, REFERENCE_STRENGTH, REFERENCE_C)
        e = bound_energy(params, QuantumState(n, -lt))
        diff = abs(e - printed)
        rows.append({"l_tilde": lt, "n_r": n, "delta": d, "state": render(QuantumState(n, -lt)),
                     "computed": e, "reference": printed, "abs_diff": diff,
                     "printed_digits": printed_digits_match(e, printed), "pass": diff <= tol})
    ok = all(r["pass"] for r in rows)
    worst = max(r["abs_diff"] for r in rows)
    cols = ["l_tilde", "n_r", "delta", "state", "computed", "reference", "abs_diff",
            "printed_digits", "pass"]
    meta = {"command": "table1", "tolerance": tol, "max_abs_diff": worst,
            "failures": sum(not r["pass"] for r in rows), "pass": ok}
    print(f"table1: {len(rows) - meta['failures']}/{len(rows)} within {tol:g}, "
          f"max |diff| {worst:.3g}", file=sys.stderr)
    return rows, cols, meta, EXIT_OK if ok else EXIT_SOLVER


def cmd_sweep(cfg: RunConfig):
    if cfg.sweep_range is None:
        raise ConfigError("sweep needs --range start:stop:steps")
    a, b, n = cfg.sweep_range
    states = default_states(cfg.symmetry) if cfg.states is None else cfg.states
    fixed_delta = cfg.delta if cfg.delta is not None else REFERENCE_DELTAS[-1]
    rows = []
    for x in np.linspace(a, b, n):
        x = float(x)
        over = {"delta": {}, "mu": {"mu": x}, "c": {"c_const": x}}[cfg.axis]
        for st in states:
            row = {cfg.axis: x, "state": render(st), "n_r": st.n_r, "kappa": st.kappa,
                   "l": _dominant(st, cfg.symmetry)}
            try:
                params = cfg.params(x if cfg.axis == "delta" else fixed_delta, **over)
            except InvalidParameterError as exc:
                row["error"] = f"{type(exc).__name__}: {exc}"
            else:
                row.update(_pair_cells(params, st))
            rows.append(row)
    cols = [cfg.axis, "state", "n_r", "kappa", "l"] + PAIR_COLUMNS + ["error"]
    meta = {"command": "sweep", "axis": cfg.axis, "mu": cfg.mu, "delta": fixed_delta,
            "strength": cfg.strength, "c_const": cfg.c_const, "symmetry": cfg.symmetry.value}
    if cfg.axis == "delta":
        meta.pop("delta")
    return rows, cols, meta, EXIT_OK


def cmd_wavefunction(cfg: RunConfig):
    if not cfg.states or len(cfg.states) != 1:
        raise ConfigError("wavefunction needs exactly one state in --states")
    delta = cfg.delta if cfg.delta is not None else REFERENCE_DELTAS[-1]
    if cfg.nonrelativistic:
        n, ell = cfg.states[0]
        r_max = cfg.r_max or _default_extent(nonrel_theta(cfg.mu, delta, n, ell), delta)
        f = nonrel_radial(cfg.mu, delta, n, ell, log_grid(1e-4, r_max, cfg.points))
        rows = [{"r": float(r), "R": float(v)} for r, v in zip(f.r, f.values)]
        meta = {"command": "wavefunction", "mu": cfg.mu, "delta": delta, "n_r": n, "l": ell,
                "energy": f.energy, "theta": f.theta, "nodes_R": f.node_count}
        return rows, ["r", "R"], meta, EXIT_OK
    params = cfg.params(delta)
    st = cfg.states[0]
    g, _ = spinor(params, st)
    r_max = cfg.r_max or _default_extent(g.theta, delta)
    g, f = spinor(params, st, g.energy, log_grid(1e-4, r_max, cfg.points))
    rows = [{"r": float(r), "G": float(x), "F": float(y)} for r, x, y in zip(g.r, g.values, f.values)]
    meta = {"command": "wavefunction", "state": render(st), "symmetry": params.symmetry.value,
            "mu": params.mu, "delta": delta, "strength": params.strength,
            "c_const": params.c_const, "energy": g.energy, "theta": g.theta,
            "nodes_G": g.node_count, "nodes_F": f.node_count}
    return rows, ["r", "G", "F"], meta, EXIT_OK


def _default_extent(theta: float, delta: float) -> float:
    return max(30.0 / theta, 10.0 / delta) if theta > 0 else 30.0 / delta


def _bracket(e: float, normalizable: bool) -> tuple[float, float]:
    # closed-form estimate; virtual states crowd the threshold, so keep it tight
    w = (1e-3 if normalizable else 1e-4) * max(1.0, abs(e))
    return e - w, e + w


def _verify_dirac(cfg: RunConfig, tol: float) -> list[dict]:
    states = default_states(cfg.symmetry) if cfg.states is None else cfg.states
    deltas = [cfg.delta] if cfg.delta is not None else list(REFERENCE_DELTAS)
    shoot = oracle.shoot_pseudospin if cfg.symmetry is SymmetryKind.PSEUDOSPIN else oracle.shoot_spin
    rows = []
    for st in states:
        for d in deltas:
            params = cfg.params(d)
            ell = _dominant(st, cfg.symmetry)
            row = {"delta": d, "state": render(st), "n_r": st.n_r, "kappa": st.kappa, "l": ell}
            try:
                pair = energy_closed_form(params, st)
                e = bound_energy(params, st)
            except HulthenError as exc:
                row["error"] = f"{type(exc).__name__}: {exc}"
                row["pass"] = False
                rows.append(row)
                continue
            normalizable = pair.normalizable("minus" if e == pair.e_minus else "plus")
            row["closed_form"] = e
            row["normalizable"] = normalizable
            _shoot_into(row, lambda c: shoot(params, pair.n, ell, c), e, normalizable, tol)
            if cfg.centrifugal is oracle.Centrifugal.EXACT and normalizable:
                try:
                    r = shoot(params, pair.n, ell, oracle.ShootConfig(centrifugal="exact"))
                    row["exact_mode"] = r.energy
                    row["exact_delta"] = r.energy - e
                except HulthenError as exc:
                    row["error"] = f"exact mode: {type(exc).__name__}: {exc}"
            rows.append(row)
    return rows


def _shoot_into(row: dict, run, e: float, normalizable: bool, tol: float):
    try:
        res = run(oracle.ShootConfig(bracket=_bracket(e, normalizable)))
    except HulthenError as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
        row["pass"] = False
        return
    row["oracle"] = res.energy
    row["abs_diff"] = abs(res.energy - e)
    row["rel_diff"] = row["abs_diff"] / max(abs(e), 1e-300)
    row["tail"] = res.tail.value
    row["nodes"] = res.nodes
    row["pass"] = row["abs_diff"] <= tol


def _verify_nonrel(cfg: RunConfig, tol: float) -> list[dict]:
    if not cfg.states:
        raise ConfigError("non-relativistic verify needs --states n_r:l,...")
    deltas = [cfg.delta] if cfg.delta is not None else list(REFERENCE_DELTAS)
    rows = []
    for n, ell in cfg.states:
        for d in deltas:
            row = {"delta": d, "state": f"{n}:{ell}", "n_r": n, "l": ell}
            e = nonrel_energy(cfg.mu, d, n, ell)
            normalizable = e < 0 and nonrel_theta(cfg.mu, d, n, ell) > 0
            row["closed_form"] = e
            row["normalizable"] = normalizable
            if normalizable:
                run = lambda c: oracle.shoot_schrodinger(cfg.mu, d, n, ell, oracle.ShootConfig())
            else:
                run = lambda c: oracle.shoot_schrodinger(cfg.mu, d, n, ell, c)
            if e < 0:
                _shoot_into(row, run, e, normalizable, tol)
            else:
                row["error"] = "closed-form energy is not negative"
                row["pass"] = False
            rows.append(row)
    return rows


def cmd_verify(cfg: RunConfig):
    tol = VERIFY_TOLERANCE if cfg.tolerance is None else cfg.tolerance
    if cfg.nonrelativistic:
        rows = _verify_nonrel(cfg, tol)
    else:
        rows = _verify_dirac(cfg, tol)
    ok = all(r.get("pass") for r in rows)
    cols = ["delta", "state", "n_r", "kappa", "l", "closed_form", "oracle", "abs_diff",
            "rel_diff", "normalizable", "tail", "nodes", "exact_mode", "exact_delta", "pass",
            "error"]
    diffs = [r["abs_diff"] for r in rows if "abs_diff" in r]
    meta = {"command": "verify", "tolerance": tol, "nonrelativistic": cfg.nonrelativistic,
            "mu": cfg.mu, "symmetry": cfg.symmetry.value, "strength": cfg.strength,
            "c_const": cfg.c_const, "max_abs_diff": max(diffs) if diffs else None,
            "failures": sum(not r.get("pass") for r in rows), "pass": ok}
    print(f"verify: {len(rows) - meta['failures']}/{len(rows)} within {tol:g}"
          + (f", max |diff| {meta['max_abs_diff']:.3g}" if diffs else ""), file=sys.stderr)
    return rows, cols, meta, EXIT_OK if ok else EXIT_SOLVER


HANDLERS = {"spectrum": cmd_spectrum, "table1": cmd_table1, "sweep": cmd_sweep,
            "wavefunction": cmd_wavefunction, "verify": cmd_verify}


def run(cfg: RunConfig) -> tuple[str, int]:
    rows, cols, meta, code = HANDLERS[cfg.command](cfg)
    # CSV carries a metadata header only for sampled wave functions
    if cfg.fmt == "csv" and cfg.command != "wavefunction":
        meta = None
    return serialize.render(rows, cols, cfg.fmt, meta), code


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = make_config(args)
        text, code = run(cfg)
    except (ConfigError, InvalidParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except HulthenError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
