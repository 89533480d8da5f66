"""Batch front-end: config-driven decoherence runs, sweeps and invariant checks.

Exit codes: 0 ok, 1 config error, 2 quadrature non-convergence, 3 check
failure.  Config is a JSON document; any key may be overridden with an
environment variable SOFTDECO_<KEY_PATH> (path segments joined by
underscores and uppercased, e.g. SOFTDECO_CUTOFFS_OMEGA_UV).
"""

from __future__ import annotations

import argparse
import copy
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import currents, decoherence, experiment, kinematics, numerics, whichpath

__all__ = ["main", "entrypoint", "ConfigError", "load_config"]

ENV_PREFIX = "SOFTDECO_"

CSV_COLUMNS = [
    "sweep_param",
    "value",
    "gamma_full",
    "gamma_dressed",
    "gamma_sub",
    "gamma_hard",
    "closed_dressed",
    "closed_sub",
    "closed_hard",
    "D",
    "V_max",
    "err_est",
    "status",
]

DEFAULT_CONFIG = {
    "geometry": {"l": 1.0, "tau": 100.0},
    "cutoffs": {"lambda_ir": 0.0, "omega_uv": 10.0, "beta": None},
    "charge": {"Q": 1.0, "alpha": numerics.FINE_STRUCTURE_ALPHA},
    "quadrature": {
        "n_theta": 48,
        "n_phi": 96,
        "panels_per_period": 4,
        "rel_tol": 1e-8,
        "abs_tol": 1e-12,
    },
    "variants": ["dressed", "sub", "hard"],
    "sweep": None,
    "slit": None,
    "mirror": None,
}

_SWEEP_KEYS = {"parameter", "start", "stop", "points", "scale"}
_VALID_VARIANTS = ("full", "dressed", "sub", "hard")


class ConfigError(ValueError):
    def __init__(self, key: str, message: str):
        super().__init__(f"config error at '{key}': {message}")
        self.key = key


def _known_paths(tree, prefix=()):
    paths = []
    for key, val in tree.items():
        path = prefix + (key,)
        paths.append(path)
        if isinstance(val, dict):
            paths.extend(_known_paths(val, path))
    # sweep/slit/mirror default to None; enumerate their keys explicitly
    for block, keys in (
        ("sweep", _SWEEP_KEYS),
        ("slit", {"a_o", "b_o", "d_o", "L_o", "v_over_c", "Q", "alpha", "ell_o"}),
        ("mirror", {"r_o", "Z_o", "epsilon", "g_o", "q", "X_o", "U_o"}),
    ):
        for key in keys:
            paths.append((block, key))
    return paths


def _deep_merge(base: dict, extra: dict, prefix=""):
    for key, val in extra.items():
        dotted = f"{prefix}{key}"
        if isinstance(val, dict) and isinstance(base.get(key), dict):
            _deep_merge(base[key], val, prefix=dotted + ".")
        else:
            base[key] = val


def _apply_env_overrides(cfg: dict, environ):
    paths = {("_".join(p)).upper(): p for p in _known_paths(DEFAULT_CONFIG)}
    for name, raw in environ.items():
        if not name.startswith(ENV_PREFIX):
            continue
        suffix = name[len(ENV_PREFIX) :]
        path = paths.get(suffix)
        if path is None:
            raise ConfigError(name, "unknown override key")
        try:
            value = json.loads(raw)
        except json.JSONDecodeError:
            value = raw
        node = cfg
        for seg in path[:-1]:
            if node.get(seg) is None:
                node[seg] = {}
            node = node[seg]
        node[path[-1]] = value


def _require_number(cfg, dotted, minimum=None, strict=False, allow_none=False):
    node = cfg
    for seg in dotted.split("."):
        if not isinstance(node, dict) or seg not in node:
            raise ConfigError(dotted, "missing key")
        node = node[seg]
    if node is None:
        if allow_none:
            return None
        raise ConfigError(dotted, "must not be null")
    if not isinstance(node, (int, float)) or isinstance(node, bool):
        raise ConfigError(dotted, f"expected a number, got {node!r}")
    if minimum is not None:
        if strict and not node > minimum:
            raise ConfigError(dotted, f"must be > {minimum}, got {node}")
        if not strict and not node >= minimum:
            raise ConfigError(dotted, f"must be >= {minimum}, got {node}")
    return float(node)


def _validate(cfg: dict):
    l = _require_number(cfg, "geometry.l", minimum=0.0)
    tau = _require_number(cfg, "geometry.tau", minimum=0.0, strict=True)
    if l / tau >= 1.0:
        raise ConfigError("geometry.l", f"speed l/tau = {l / tau} must be < 1")
    lam = _require_number(cfg, "cutoffs.lambda_ir", minimum=0.0)
    uv = _require_number(cfg, "cutoffs.omega_uv", minimum=0.0, strict=True)
    if lam >= uv:
        raise ConfigError("cutoffs.lambda_ir", "must be < cutoffs.omega_uv")
    beta = _require_number(cfg, "cutoffs.beta", minimum=0.0, strict=True, allow_none=True)
    _require_number(cfg, "charge.Q")
    _require_number(cfg, "charge.alpha", minimum=0.0, strict=True)
    for key, lo in (
        ("quadrature.n_theta", 8),
        ("quadrature.n_phi", 16),
        ("quadrature.panels_per_period", 4),
    ):
        val = _require_number(cfg, key, minimum=lo)
        if val != int(val):
            raise ConfigError(key, "must be an integer")
    _require_number(cfg, "quadrature.rel_tol", minimum=0.0, strict=True)
    _require_number(cfg, "quadrature.abs_tol", minimum=0.0, strict=True)
    variants = cfg.get("variants")
    if not isinstance(variants, list) or not all(
        v in _VALID_VARIANTS for v in variants
    ):
        raise ConfigError("variants", f"must be a subset of {_VALID_VARIANTS}")
    if "full" in variants and lam == 0.0 and l > 0:
        raise ConfigError(
            "cutoffs.lambda_ir",
            "variant 'full' with lambda_ir = 0 is infrared divergent: the "
            "leading soft current difference scales as 1/omega and drives "
            "Gamma ~ ln(1/lambda) -> infinity",
        )
    sweep = cfg.get("sweep")
    if sweep is not None:
        if not isinstance(sweep, dict):
            raise ConfigError("sweep", "must be an object")
        missing = _SWEEP_KEYS - set(sweep)
        if missing:
            raise ConfigError("sweep", f"missing keys: {sorted(missing)}")
        if sweep["scale"] not in ("linear", "log"):
            raise ConfigError("sweep.scale", "must be 'linear' or 'log'")
        pts = sweep["points"]
        if not isinstance(pts, int) or pts < 0:
            raise ConfigError("sweep.points", "must be a non-negative integer")
        param = sweep["parameter"]
        if not isinstance(param, str) or tuple(param.split(".")) not in set(
            _known_paths(DEFAULT_CONFIG)
        ):
            raise ConfigError("sweep.parameter", f"unknown parameter {param!r}")
        if sweep["scale"] == "log" and sweep["start"] <= 0:
            raise ConfigError("sweep.start", "log scale requires start > 0")
    if beta is not None and beta <= 0:
        raise ConfigError("cutoffs.beta", "must be > 0")


def load_config(path: str | None, environ=None) -> dict:
    """Load, merge and validate a run configuration."""
    cfg = copy.deepcopy(DEFAULT_CONFIG)
    if path is not None:
        try:
            with open(path) as fh:
                user = json.load(fh)
        except FileNotFoundError:
            raise ConfigError(path, "file not found")
        except json.JSONDecodeError as exc:
            raise ConfigError(path, f"invalid JSON at line {exc.lineno} column {exc.colno}")
        if not isinstance(user, dict):
            raise ConfigError(path, "top level must be an object")
        _deep_merge(cfg, user)
    _apply_env_overrides(cfg, environ if environ is not None else os.environ)
    _validate(cfg)
    return cfg


def _spec_from(cfg) -> numerics.QuadratureSpec:
    q = cfg["quadrature"]
    return numerics.QuadratureSpec(
        n_theta=int(q["n_theta"]),
        n_phi=int(q["n_phi"]),
        panels_per_period=int(q["panels_per_period"]),
        rel_tol=q["rel_tol"],
        abs_tol=q["abs_tol"],
    )


def _cut_from(cfg) -> decoherence.CutoffSet:
    c = cfg["cutoffs"]
    return decoherence.CutoffSet(
        omega_uv=c["omega_uv"], lambda_ir=c["lambda_ir"], beta=c["beta"]
    )


def _e2_from(cfg) -> float:
    return 4.0 * math.pi * cfg["charge"]["alpha"] * cfg["charge"]["Q"] ** 2


def _fmt(x) -> str:
    if x is None:
        return ""
    return f"{x:.11e}"


def _compute_point(cfg):
    geom = kinematics.InterferometerGeometry(cfg["geometry"]["l"], cfg["geometry"]["tau"])
    cut = _cut_from(cfg)
    spec = _spec_from(cfg)
    e2 = _e2_from(cfg)
    variants = cfg["variants"]
    report = decoherence.decoherence_report(
        geom, cut, spec, e2, include_full="full" in variants
    )
    summary = whichpath.summarize(max(report.gamma_dressed, 0.0))
    return report, summary


def cmd_gamma(cfg, out_path=None) -> int:
    report, summary = _compute_point(cfg)
    closed = report.closed
    payload = {
        "gamma": {
            "full": report.gamma_full,
            "dressed": report.gamma_dressed,
            "sub": report.gamma_sub,
            "hard": report.gamma_hard,
        },
        "closed_form": {
            "dressed": closed.dressed,
            "sub": closed.sub,
            "hard": closed.hard,
            "dressed_asymptotic": closed.dressed_asymptotic,
            "sub_asymptotic": closed.sub_asymptotic,
            "hard_asymptotic": closed.hard_asymptotic,
            "hard_halved": closed.hard_halved,
        },
        "deviation": {
            "dressed": _rel_dev(report.gamma_dressed, closed.dressed),
            "sub": _rel_dev(report.gamma_sub, closed.sub),
            "hard": _rel_dev(report.gamma_hard, closed.hard),
        },
        "error_estimates": report.errors,
        "which_path": {
            "D": summary.distinguishability,
            "V_max": summary.visibility_bound,
            "overlap": summary.overlap,
            "guess_bound": summary.guess_bound,
        },
        "converged": report.converged,
    }
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if report.converged else 2


def _rel_dev(a, b):
    if b == 0:
        return abs(a - b)
    return abs(a - b) / abs(b)


def _sweep_values(sweep):
    n = sweep["points"]
    if n == 0:
        return np.array([])
    if n == 1:
        return np.array([float(sweep["start"])])
    if sweep["scale"] == "log":
        return np.geomspace(sweep["start"], sweep["stop"], n)
    return np.linspace(sweep["start"], sweep["stop"], n)


def _set_dotted(cfg, dotted, value):
    node = cfg
    segs = dotted.split(".")
    for seg in segs[:-1]:
        node = node[seg]
    node[segs[-1]] = value


def _sweep_row(cfg, param, value):
    point_cfg = copy.deepcopy(cfg)
    _set_dotted(point_cfg, param, float(value))
    row = {col: "" for col in CSV_COLUMNS}
    row["sweep_param"] = param
    row["value"] = _fmt(float(value))
    try:
        _validate(point_cfg)
        report, summary = _compute_point(point_cfg)
        cells = {
            "gamma_full": report.gamma_full,
            "gamma_dressed": report.gamma_dressed,
            "gamma_sub": report.gamma_sub,
            "gamma_hard": report.gamma_hard,
            "closed_dressed": report.closed.dressed,
            "closed_sub": report.closed.sub,
            "closed_hard": report.closed.hard,
            "D": summary.distinguishability,
            "V_max": summary.visibility_bound,
            "err_est": max(report.errors.values()) if report.errors else 0.0,
        }
        for key, val in cells.items():
            if val is not None and not math.isfinite(val):
                row["status"] = "non-finite"
                return row
        for key, val in cells.items():
            row[key] = _fmt(val)
        row["status"] = "ok" if report.converged else "non-converged"
    except (ConfigError, ValueError) as exc:
        row["status"] = f"error: {exc}"
    return row


def cmd_sweep(cfg, out_path, threads=1) -> int:
    sweep = cfg.get("sweep")
    if sweep is None:
        raise ConfigError("sweep", "sweep block required for the sweep command")
    values = _sweep_values(sweep)
    param = sweep["parameter"]
    if threads > 1 and len(values) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(lambda v: _sweep_row(cfg, param, v), values))
    else:
        rows = [_sweep_row(cfg, param, v) for v in values]
    lines = [",".join(CSV_COLUMNS)]
    for row in rows:
        lines.append(",".join(str(row[col]) for col in CSV_COLUMNS))
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    bad = [r for r in rows if r["status"] == "non-converged"]
    return 2 if bad else 0


def cmd_estimate_slit(cfg, out_path=None) -> int:
    slit_cfg = cfg.get("slit")
    if slit_cfg is None:
        raise ConfigError("slit", "slit block required for estimate-slit")
    try:
        slit = experiment.SlitGeometry(**slit_cfg)
    except (TypeError, ValueError) as exc:
        raise ConfigError("slit", str(exc))
    printed, flagged, ratio = experiment.gamma_hard_2slit(slit)
    payload = {
        "gamma_dressed_2slit": experiment.gamma_dressed_2slit(slit),
        "gamma_hard_2slit_printed": printed,
        "gamma_hard_2slit_with_velocity_factor": flagged,
        "gamma_hard_printed_over_flagged": ratio,
        "acceleration_A_center": experiment.slit_acceleration(slit, 0.0, "A"),
        "acceleration_B_center": experiment.slit_acceleration(slit, 0.0, "B"),
    }
    mirror_cfg = cfg.get("mirror")
    if mirror_cfg is not None:
        try:
            mirror = experiment.ParticleMirror(**mirror_cfg)
        except (TypeError, ValueError) as exc:
            raise ConfigError("mirror", str(exc))
        regime = "far" if mirror.Z_o > mirror.r_o else "near"
        payload["mirror"] = {
            "vdw_potential": experiment.vdw_potential(mirror, regime),
            "vdw_regime": regime,
            "surface_coupling": experiment.surface_coupling(mirror),
            "rayleigh_rate": experiment.rayleigh_rate(mirror, mirror.q),
        }
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


# ---------------------------------------------------------------------------
# check command: named invariant suite


def _random_worldline(rng) -> kinematics.Worldline:
    n_seg = int(rng.integers(2, 5))
    event = kinematics.FourVector(*rng.uniform(-1.0, 1.0, size=4))
    segments = []
    for _ in range(n_seg):
        v3 = rng.uniform(-0.5, 0.5, size=3)
        vel = kinematics.four_velocity(v3)
        dur = float(rng.uniform(0.1, 2.0))
        segments.append(kinematics.WorldlineSegment(event, vel, dur))
        event = segments[-1].end_event
    return kinematics.Worldline(segments)


def _random_momentum(rng, omega=None) -> kinematics.PhotonMomentum:
    n = rng.normal(size=3)
    n /= np.linalg.norm(n)
    if omega is None:
        omega = float(10.0 ** rng.uniform(-2, 1))
    return kinematics.PhotonMomentum(omega, n)


def _loglog_slope(x, y):
    return float(np.polyfit(np.log(x), np.log(y), 1)[0])


def _check_conservation(cfg, rng):
    worst = 0.0
    for _ in range(200):
        w = _random_worldline(rng)
        q = _random_momentum(rng)
        qv = q.four_vector()
        triple = currents.soft_decompose(w, q)
        full = currents.current_fourier(w, q)
        # round-off in the hard remainder is absolute, set by the size of
        # the currents it was subtracted from, so normalize by that scale
        scale = max(j.norm() for j in (full, triple.j_div, triple.j_sub))
        if scale == 0:
            continue
        for j in (full, triple.j_div, triple.j_sub, triple.j_hard):
            worst = max(worst, abs(qv.dot(j)) / scale)
    return worst <= 1e-12, f"max |q.j|/|j| = {worst:.3e}"


def _check_soft_scaling(cfg, rng):
    w = _random_worldline(rng)
    n = rng.normal(size=3)
    n /= np.linalg.norm(n)
    omegas = np.geomspace(1e-8, 1e-4, 9)
    mags = {"div": [], "sub": [], "hard": []}
    for om in omegas:
        t = currents.soft_decompose(w, kinematics.PhotonMomentum(float(om), n))
        mags["div"].append(t.j_div.norm())
        mags["sub"].append(t.j_sub.norm())
        mags["hard"].append(t.j_hard.norm())
    slopes = {k: _loglog_slope(omegas, v) for k, v in mags.items()}
    ok = (
        abs(slopes["div"] + 1.0) < 0.01
        and abs(slopes["sub"]) < 0.01
        and abs(slopes["hard"] - 1.0) < 0.01
    )
    return ok, f"slopes div={slopes['div']:.4f} sub={slopes['sub']:.4f} hard={slopes['hard']:.4f}"


def _check_sphere_identity(cfg, rng):
    spec = _spec_from(cfg)
    worst = 0.0
    for v in (0.1, 0.3, 0.6, 0.9):
        def f(nx, ny, nz, v=v):
            return 1.0 / (1.0 - v * nz)

        got = numerics.sphere_integrate(f, spec).value
        want = 4.0 * math.pi * numerics.atanh_over_x(v)
        worst = max(worst, abs(got - want) / want)
    return worst <= 1e-8, f"max relative deviation {worst:.3e}"


def _check_freq_identity(cfg, rng):
    spec = _spec_from(cfg)
    worst = 0.0
    for x in (1.0, 10.0, 1e3, 1e6):
        def g(om):
            return 2.0 * (1.0 - np.cos(om)) / om

        got = numerics.freq_integrate(g, 0.0, x, 1.0, spec).value
        want = 2.0 * (
            numerics.EULER_GAMMA + math.log(x) - numerics.cosine_integral(x)
        )
        worst = max(worst, abs(got - want) / abs(want))
    return worst <= 1e-8, f"max relative deviation {worst:.3e}"


def _check_dressed_closed_form(cfg, rng):
    geom = kinematics.InterferometerGeometry(
        cfg["geometry"]["l"], cfg["geometry"]["tau"]
    )
    if geom.v == 0:
        return True, "trivial at v = 0"
    cut = _cut_from(cfg)
    spec = _spec_from(cfg)
    e2 = _e2_from(cfg)
    got = decoherence.gamma_dressed(geom, cut, spec, e2).value
    want = decoherence.closed_forms(geom, cut, e2).dressed
    dev = abs(got - want) / want
    return dev <= 1e-6, f"relative deviation {dev:.3e}"


def _check_duality(cfg, rng):
    gammas = np.linspace(0.0, 20.0, 81)
    worst = 0.0
    for gm in gammas:
        s = whichpath.summarize(float(gm))
        worst = max(
            worst, abs(s.distinguishability**2 + s.visibility_bound**2 - 1.0)
        )
    return worst <= 1e-12, f"max |D^2 + V^2 - 1| = {worst:.3e}"


def _check_divergence_full(cfg, rng):
    geom = kinematics.InterferometerGeometry(
        cfg["geometry"]["l"], cfg["geometry"]["tau"]
    )
    if geom.v == 0:
        return True, "trivial at v = 0"
    spec = _spec_from(cfg)
    e2 = _e2_from(cfg)
    cut = decoherence.CutoffSet(
        omega_uv=cfg["cutoffs"]["omega_uv"], lambda_ir=1e-4 / geom.tau
    )
    fit = decoherence.divergence_coefficient(geom, cut, spec, e2, variant="full")
    want = e2 * decoherence.closed_forms(geom, cut, e2).angular_exact / (
        32.0 * math.pi**3
    )
    dev = abs(fit.coefficient - want) / want
    return dev <= 1e-3 and fit.ok, f"relative deviation {dev:.3e}, R^2 = {fit.r_squared}"


def _check_divergence_dressed(cfg, rng):
    geom = kinematics.InterferometerGeometry(
        cfg["geometry"]["l"], cfg["geometry"]["tau"]
    )
    if geom.v == 0:
        return True, "trivial at v = 0"
    spec = _spec_from(cfg)
    e2 = _e2_from(cfg)
    cut = decoherence.CutoffSet(
        omega_uv=cfg["cutoffs"]["omega_uv"], lambda_ir=1e-4 / geom.tau
    )
    fit = decoherence.divergence_coefficient(geom, cut, spec, e2, variant="dressed")
    bound = 1e-4 * e2 * geom.v**2
    return abs(fit.coefficient) <= bound, f"|b| = {abs(fit.coefficient):.3e} vs bound {bound:.3e}"


def _check_boundary_soft_theorem(cfg, rng):
    worst = None
    for _ in range(3):
        w = _random_worldline(rng)
        n = rng.normal(size=3)
        n /= np.linalg.norm(n)
        omegas = np.geomspace(1e-5, 1e-2, 7)
        resid = []
        for om in omegas:
            q = kinematics.PhotonMomentum(float(om), n)
            j = currents.current_fourier(w, q)
            s0f, s1f = currents.soft_factors(q, w.end_event, w.final_velocity)
            s0i, s1i = currents.soft_factors(q, w.start_event, w.initial_velocity)
            pred = (s0f - s0i) + (s1f - s1i)
            diff = 1j * j.conjugate() - pred
            resid.append(diff.norm())
        slope = _loglog_slope(omegas, np.array(resid))
        dev = abs(slope - 1.0)
        worst = dev if worst is None else max(worst, dev)
    return worst <= 0.02, f"max slope deviation {worst:.4f}"


CHECKS = [
    ("conservation_random_draws", _check_conservation),
    ("soft_scaling_exponents", _check_soft_scaling),
    ("sphere_vs_closed_form", _check_sphere_identity),
    ("freq_vs_closed_form", _check_freq_identity),
    ("dressed_vs_closed_form", _check_dressed_closed_form),
    ("duality_identity", _check_duality),
    ("divergence_coefficient_full", _check_divergence_full),
    ("divergence_coefficient_dressed", _check_divergence_dressed),
    ("boundary_soft_theorem", _check_boundary_soft_theorem),
]


def cmd_check(cfg, seed=0) -> int:
    rng = np.random.default_rng(seed)
    all_ok = True
    for name, fn in CHECKS:
        ok, detail = fn(cfg, rng)
        all_ok = all_ok and ok
        print(f"{'PASS' if ok else 'FAIL'}  {name}  ({detail})")
    return 0 if all_ok else 3


# ---------------------------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="softdeco",
        description="Infrared-photon decoherence of a two-path interferometer",
    )
    parser.add_argument("--threads", type=int, default=1, help="sweep workers")
    parser.add_argument("--seed", type=int, default=0, help="seed for random draws")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gamma = sub.add_parser("gamma", help="compute decoherence for one configuration")
    p_gamma.add_argument("--config", required=True)
    p_gamma.add_argument("--out")

    p_sweep = sub.add_parser("sweep", help="parameter sweep to CSV")
    p_sweep.add_argument("--config", required=True)
    p_sweep.add_argument("--out", required=True)

    p_check = sub.add_parser("check", help="run the invariant suite")
    p_check.add_argument("--config")

    p_slit = sub.add_parser("estimate-slit", help="two-slit / mirror estimators")
    p_slit.add_argument("--config", required=True)
    p_slit.add_argument("--out")
    return parser


def main(argv=None, environ=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(getattr(args, "config", None), environ=environ)
        if args.command == "gamma":
            return cmd_gamma(cfg, args.out)
        if args.command == "sweep":
            return cmd_sweep(cfg, args.out, threads=args.threads)
        if args.command == "check":
            return cmd_check(cfg, seed=args.seed)
        if args.command == "estimate-slit":
            return cmd_estimate_slit(cfg, args.out)
        parser.error(f"unknown command {args.command}")
    except ConfigError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except decoherence.IRDivergenceError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    return 0


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
