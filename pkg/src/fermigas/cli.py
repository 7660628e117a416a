"""Command-line front-end emitting the universal curves as data tables.

Subcommands map one-to-one onto library operations; output is CSV or JSON
and byte-identical across runs for identical configuration.  A flat
key=value config file (``#`` comments) named by the FERMIGAS_CONFIG
environment variable supplies defaults; explicit flags win.  Exit codes:
0 success, 1 numerical failure or unwritable output, 2 usage error.
"""

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import bose, oracle, perturb, profiles, scales, thermo
from .curves import UniversalCurve, render
from .errors import DomainError, FermiGasError

_FIG_GRID_STEPS = 200   # default t grid for the mu, heat and size curves
_FIG_GRID_TMAX = 2.0
_PROFILE_SMAX = 1.5     # default s grid for the density profiles
_PROFILE_SAMPLES = 300

CONFIG_ENV_VAR = "FERMIGAS_CONFIG"


@dataclass(frozen=True)
class RunConfig:
    """Validated invocation: one command, its parameters, format and path."""

    command: str
    params: dict
    fmt: str
    output: str


def _positive_float(text):
    v = float(text)
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return v


def _nonneg_float(text):
    v = float(text)
    if not (v >= 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"expected a non-negative number, got {text!r}")
    return v


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _float_list(text):
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one number")
    return values


def _add_trap_options(sub):
    sub.add_argument("--preset", choices=sorted(scales.PRESETS))
    sub.add_argument("--mass", type=_positive_float, help="particle mass in kg")
    sub.add_argument("--omega-r", type=_positive_float, help="radial frequency in rad/s")
    sub.add_argument("--lambda", dest="lam", type=_positive_float,
                     help="axial/radial anisotropy")
    sub.add_argument("--n", dest="n_particles", type=_positive_int,
                     help="particle number")


def _trap_spec(args):
    if args.preset is not None:
        return scales.PRESETS[args.preset]
    missing = [name for name, val in (("--mass", args.mass),
                                      ("--omega-r", args.omega_r),
                                      ("--lambda", args.lam),
                                      ("--n", args.n_particles)) if val is None]
    if missing:
        raise DomainError("give --preset or all of " + ", ".join(missing))
    return scales.TrapSpec(mass=args.mass, omega_r=args.omega_r,
                           lam=args.lam, n_particles=args.n_particles)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fermigas",
        description="Universal curves of the harmonically trapped ideal Fermi gas",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--output", default=None, help="output path (default stdout)")
    subs = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, hint):
        return subs.add_parser(name, help=hint, parents=[common])

    for name, hint in (("mu-curve", "reduced chemical potential vs temperature"),
                       ("heat-curve", "heat capacity per particle vs temperature"),
                       ("msd-curve", "mean-square cloud size vs temperature")):
        sub = add_parser(name, hint)
        sub.add_argument("--t-min", type=_nonneg_float, default=0.0)
        sub.add_argument("--t-max", type=_positive_float, default=_FIG_GRID_TMAX)
        sub.add_argument("--steps", type=_positive_int, default=_FIG_GRID_STEPS)

    sub = add_parser("profile", "universal density profile at given t")
    sub.add_argument("--t", type=_float_list, default=[0.0, 0.25, 0.5, 0.75, 1.0])
    sub.add_argument("--s-max", type=_positive_float, default=_PROFILE_SMAX)
    sub.add_argument("--samples", type=_positive_int, default=_PROFILE_SAMPLES)
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--space", dest="kind", action="store_const",
                       const="space", default="space")
    group.add_argument("--momentum", dest="kind", action="store_const",
                       const="momentum")

    sub = add_parser("scales", "characteristic scales of a physical trap")
    _add_trap_options(sub)

    sub = add_parser("perturb", "linear response to a trap perturbation")
    sub.add_argument("--delta-v", required=True,
                     help="two-column CSV of (s, dV/E_F) covering [0, 1]")

    sub = add_parser("bose-compare", "Thomas-Fermi Bose cloud contrast")
    _add_trap_options(sub)
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--u-bose", type=_positive_float,
                       help="contact interaction in trap units")
    group.add_argument("--a-scatt", type=_positive_float,
                       help="s-wave scattering length in units of sigma_r")

    sub = add_parser("oracle", "exact level-sum cross-validation")
    sub.add_argument("--n", dest="n_particles", type=_positive_int, default=10_000)
    sub.add_argument("--lambda", dest="lam", type=_positive_float, default=1.0)
    sub.add_argument("--t", type=_positive_float, default=0.2)
    sub.add_argument("--shells", type=_float_list, default=[10, 20, 40, 80])

    sub = add_parser("validity", "semiclassical validity margins")
    sub.add_argument("--n", dest="n_particles", type=_positive_int, default=100_000)
    sub.add_argument("--lambda", dest="lam", type=_positive_float, default=1.0)
    sub.add_argument("--radii", type=_float_list,
                     default=[round(x, 3) for x in np.linspace(0.0, 1.2, 25)])

    return parser


def _load_config_file(path):
    entries = {}
    try:
        fh = open(path, "r", encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read config file {path!r}: {exc}")
    with fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected key=value, got {raw!r}")
            key, value = (tok.strip() for tok in line.split("=", 1))
            entries[key] = value
    return entries


def _explicit_options(argv):
    seen = set()
    for token in argv:
        if token.startswith("--"):
            seen.add(token.split("=", 1)[0])
    return seen


def _apply_config(parser, sub_actions, args, argv):
    path = os.environ.get(CONFIG_ENV_VAR)
    if not path:
        return
    entries = _load_config_file(path)
    explicit = _explicit_options(argv)
    by_option = {}
    for action in sub_actions:
        for opt in action.option_strings:
            by_option[opt] = action
    for key, value in entries.items():
        opt = "--" + key
        if key in ("format", "output"):
            if opt not in explicit:
                setattr(args, key, value if key == "output"
                        else _validated_format(value))
            continue
        action = by_option.get(opt)
        if action is None or isinstance(action, argparse._StoreConstAction):
            raise DomainError(f"unknown config key {key!r} for command {args.command!r}")
        if opt in explicit:
            continue
        convert = action.type if action.type is not None else str
        try:
            setattr(args, action.dest, convert(value))
        except (ValueError, argparse.ArgumentTypeError) as exc:
            raise DomainError(f"bad config value {key}={value!r}: {exc}")


def _validated_format(value):
    if value not in ("csv", "json"):
        raise DomainError(f"format must be csv or json, got {value!r}")
    return value


def parse_argv(argv) -> RunConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    sub_actions = []
    for action in parser._subparsers._group_actions:
        if isinstance(action, argparse._SubParsersAction):
            sub_actions = action.choices[args.command]._actions
    _apply_config(parser, sub_actions, args, argv)
    params = {k: v for k, v in vars(args).items()
              if k not in ("command", "format", "output")}
    return RunConfig(command=args.command, params=params,
                     fmt=args.format, output=args.output)


def _t_grid(p):
    if p["t_max"] <= p["t_min"]:
        raise DomainError("--t-max must exceed --t-min")
    if p["steps"] < 2:
        raise DomainError("--steps must be at least 2")
    return np.linspace(p["t_min"], p["t_max"], p["steps"])


def _kv_artifact(pairs, fmt):
    if fmt == "json":
        return json.dumps(dict(pairs), indent=2) + "\n"
    lines = ["key,value"]
    for key, value in pairs:
        if isinstance(value, float):
            lines.append(f"{key},{value:.17g}")
        else:
            lines.append(f"{key},{value}")
    return "\n".join(lines) + "\n"


def _run_mu_curve(p, fmt):
    mu_curve, _ = thermo.thermo_curve(_t_grid(p))
    return render(mu_curve, fmt)


def _run_heat_curve(p, fmt):
    _, c_curve = thermo.thermo_curve(_t_grid(p))
    return render(c_curve, fmt)


def _run_msd_curve(p, fmt):
    grid = _t_grid(p)
    samples = tuple((float(t), profiles.mean_square_size(float(t))) for t in grid)
    return render(UniversalCurve("t", "msd", samples), fmt)


def _run_profile(p, fmt):
    ts = p["t"]
    if any(t < 0 for t in ts):
        raise DomainError("profile temperatures must be non-negative")
    if p["samples"] < 2:
        raise DomainError("--samples must be at least 2")
    x_label = "s" if p["kind"] == "space" else "q"
    grid = np.linspace(0.0, p["s_max"], p["samples"])
    blocks = []
    for t in ts:
        samples = tuple((float(x), profiles.density(float(x), t)) for x in grid)
        blocks.append((t, UniversalCurve(x_label, "density", samples)))
    if fmt == "json":
        doc = [{"t": t, **curve.to_json_obj()} for t, curve in blocks]
        return json.dumps(doc, indent=2) + "\n"
    chunks = [f"# t = {t:.17g}\n" + curve.to_csv() for t, curve in blocks]
    return "\n".join(chunks)


def _run_scales(p, fmt, args_ns):
    spec = _trap_spec(args_ns)
    sc = scales.derive_scales(spec)
    pairs = [
        ("mass_kg", spec.mass),
        ("omega_r_rad_s", spec.omega_r),
        ("lambda", spec.lam),
        ("n_particles", spec.n_particles),
        ("e_fermi_j", sc.e_fermi),
        ("t_fermi_k", sc.t_fermi),
        ("r_fermi_m", sc.r_fermi),
        ("k_fermi_per_m", sc.k_fermi),
        ("inv_k_fermi_m", 1.0 / sc.k_fermi),
        ("sigma_r_m", sc.sigma_r),
        ("level_spacing_j", sc.level_spacing),
    ]
    return _kv_artifact(pairs, fmt)


def _read_delta_v_table(path):
    rows = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        for row in csv.reader(fh):
            if not row or row[0].lstrip().startswith("#"):
                continue
            try:
                rows.append((float(row[0]), float(row[1])))
            except (ValueError, IndexError):
                if not rows:
                    continue  # header row
                raise DomainError(f"{path}: malformed table row {row!r}")
    if len(rows) < 2:
        raise DomainError(f"{path}: need at least two (s, dV/E_F) rows")
    s, v = zip(*rows)
    return perturb.PerturbationField.from_table(s, v)


def _run_perturb(p, fmt):
    fld = _read_delta_v_table(p["delta_v"])
    resp = perturb.density_response(fld)
    if fmt == "json":
        doc = {
            "delta_e_fermi": resp.delta_e_fermi,
            "samples": [[float(s), float(dn)]
                        for s, dn in zip(resp.s_grid, resp.delta_n)],
        }
        return json.dumps(doc, indent=2) + "\n"
    lines = [f"# delta_e_fermi_over_e_fermi = {resp.delta_e_fermi:.17g}",
             "s,delta_n"]
    lines.extend(f"{s:.17g},{dn:.17g}" for s, dn in zip(resp.s_grid, resp.delta_n))
    return "\n".join(lines) + "\n"


def _run_bose_compare(p, fmt, args_ns):
    spec = _trap_spec(args_ns)
    sc = scales.derive_scales(spec)
    pauli = bose.pauli_pseudopotential(sc)
    hbar_omega = scales.HBAR * spec.omega_r
    u_eff_trap = pauli.u_eff / (hbar_omega * sc.sigma_r ** 3)
    if p["u_bose"] is not None:
        params = bose.BoseParams(spec.n_particles, spec.lam, u_bose=p["u_bose"])
    elif p["a_scatt"] is not None:
        params = bose.BoseParams(spec.n_particles, spec.lam, a_scatt=p["a_scatt"])
    else:
        # the gas mimicked by its own Pauli pseudopotential
        params = bose.BoseParams(spec.n_particles, spec.lam, u_bose=u_eff_trap)
    rb = bose.bose_radius(params)
    pairs = [
        ("n_particles", spec.n_particles),
        ("lambda", spec.lam),
        ("u_bose_trap_units", params.u_bose),
        ("a_scatt_sigma", params.a_scatt),
        ("r_bose_sigma", rb),
        ("r_bose_m", rb * sc.sigma_r),
        ("mu_bose_hbar_omega", bose.bose_chemical_potential(params)),
        ("r_fermi_sigma", sc.r_fermi / sc.sigma_r),
        ("r_fermi_m", sc.r_fermi),
        ("pauli_u_eff_j_m3", pauli.u_eff),
        ("pauli_u_eff_trap_units", u_eff_trap),
        ("pauli_a_eff_m", pauli.a_eff),
        ("kf_a_eff", pauli.kf_a_eff),
    ]
    return _kv_artifact(pairs, fmt)


def _run_oracle(p, fmt):
    comp = oracle.continuum_comparison(p["n_particles"], p["lam"], p["t"])
    pairs = [
        ("n_particles", p["n_particles"]),
        ("lambda", p["lam"]),
        ("t", p["t"]),
        ("mu_exact_hbar_omega", comp.mu_exact),
        ("mu_continuum_hbar_omega", comp.mu_continuum),
        ("zero_point_hbar_omega", comp.zero_point),
        ("gap_raw_over_e_fermi", comp.gap_raw),
        ("gap_adjusted_over_e_fermi", comp.gap_adjusted),
    ]
    if p["lam"] == 1.0:
        for shell in p["shells"]:
            n_closed = oracle.closed_shell_count(int(shell))
            exact = oracle.exact_central_density(n_closed)
            semi = oracle.semiclassical_central_density(n_closed)
            pairs.append((f"central_density_ratio_shell_{int(shell)}", exact / semi))
    return _kv_artifact(pairs, fmt)


def _run_validity(p, fmt):
    rep = oracle.validity_report(p["n_particles"], p["lam"], p["radii"])
    if fmt == "json":
        def finite(x):
            return float(x) if math.isfinite(x) else None

        doc = {
            "shell_thickness_sigma": rep.shell_thickness_sigma,
            "inv_k_fermi_sigma": rep.inv_k_fermi_sigma,
            "rows": [
                {"s": float(s), "margin": finite(m), "cell_scale": finite(c)}
                for s, m, c in zip(rep.radii, rep.margin, rep.cell_scale)
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    lines = [f"# shell_thickness_sigma = {rep.shell_thickness_sigma:.17g}",
             f"# inv_k_fermi_sigma = {rep.inv_k_fermi_sigma:.17g}",
             "s,margin,cell_scale"]
    lines.extend(f"{s:.17g},{m:.17g},{c:.17g}"
                 for s, m, c in zip(rep.radii, rep.margin, rep.cell_scale))
    return "\n".join(lines) + "\n"


def dispatch(config: RunConfig) -> int:
    p = config.params
    ns = argparse.Namespace(**p)
    if config.command == "mu-curve":
        text = _run_mu_curve(p, config.fmt)
    elif config.command == "heat-curve":
        text = _run_heat_curve(p, config.fmt)
    elif config.command == "msd-curve":
        text = _run_msd_curve(p, config.fmt)
    elif config.command == "profile":
        text = _run_profile(p, config.fmt)
    elif config.command == "scales":
        text = _run_scales(p, config.fmt, ns)
    elif config.command == "perturb":
        text = _run_perturb(p, config.fmt)
    elif config.command == "bose-compare":
        text = _run_bose_compare(p, config.fmt, ns)
    elif config.command == "oracle":
        text = _run_oracle(p, config.fmt)
    elif config.command == "validity":
        text = _run_validity(p, config.fmt)
    else:
        raise DomainError(f"unknown command {config.command!r}")
    if config.output is None:
        sys.stdout.write(text)
    else:
        with open(config.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return 0


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        config = parse_argv(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except DomainError as exc:
        print(f"fermigas: error: {exc}", file=sys.stderr)
        return 2
    try:
        return dispatch(config)
    except DomainError as exc:
        print(f"fermigas: error: {exc}", file=sys.stderr)
        return 2
    except (FermiGasError, OSError, ArithmeticError) as exc:
        print(f"fermigas: numerical failure: {exc}", file=sys.stderr)
        return 1
