"""``nadosc`` command-line front end.

Exit codes: 0 when every asserted check passes, 1 on a failed check or an
output error, 2 on invalid input (arguments, config, unsupported settings).
Reports and results go to stdout or the requested files; diagnostics go to stderr.
"""

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, fields

from . import results
from .clifford import build_dirac_set, verify_clifford, verify_gamma_set
from .errors import ConfigError, InvalidInputError, NadoscError
from .gauge_algebra import build_charges, verify_lie
from .gauge_poly import gauge_report
from .hamiltonian import OscParams, assemble, spectrum
from .nonabelian_fields import GaugeParams, field_components, fields_report
from .report import CheckReport
from .symmetry import angular_report, build_angular, commutator_report, spin_identity_check

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
TOL_ENV = "NADOSC_TOL"


@dataclass(frozen=True)
class RunConfig:
    dimension: int
    mass: float
    omega: float
    truncation: int
    eta: float = 0.0
    lam: float = 0.0
    phi: tuple = (0.0, 0.0, 0.0)
    B0: float = 0.0
    E0: tuple = (0.0, 0.0)
    kappa: float = 1.0
    e_charge: float = 1.0
    q_charge: float = 1.0
    extra_sign: int = -1
    kappa_q: float = 1.0
    guard_fraction: float = 0.5
    tolerance: float = 1e-10

    def osc_params(self):
        return OscParams(
            dimension=self.dimension,
            mass=self.mass,
            omega=self.omega,
            truncation=self.truncation,
            eta=self.eta,
            phi=self.phi,
            extra_sign=self.extra_sign,
            guard_fraction=self.guard_fraction,
            tolerance=self.tolerance,
        )

    def gauge_params(self):
        return GaugeParams(
            B0=self.B0,
            E0=self.E0,
            eta=self.eta,
            lam=self.lam,
            phi=self.phi,
            kappa=self.kappa,
            e_charge=self.e_charge,
            q_charge=self.q_charge,
            mass=self.mass,
            omega=self.omega,
        )


# JSON key -> attribute name; every other key maps to itself.
KEY_TO_ATTR = {"lambda": "lam"}
ATTR_TO_KEY = {v: k for k, v in KEY_TO_ATTR.items()}
REQUIRED = ("dimension", "mass", "omega", "truncation")
VECTORS = {"phi": 3, "E0": 2}
INTEGERS = ("dimension", "truncation", "extra_sign")


def _number(key, value):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{key}: expected a number", key)
    if not math.isfinite(value):
        raise ConfigError(f"{key}: must be finite", key)
    return value


def _coerce(key, value):
    if key in VECTORS:
        if not isinstance(value, list) or len(value) != VECTORS[key]:
            raise ConfigError(f"{key}: expected a list of {VECTORS[key]} numbers", key)
        return tuple(float(_number(key, v)) for v in value)
    value = _number(key, value)
    if key in INTEGERS:
        if value != int(value):
            raise ConfigError(f"{key}: expected an integer", key)
        return int(value)
    return float(value)


def _validate(cfg):
    rules = (
        ("dimension", cfg.dimension in (1, 2), "must be 1 or 2"),
        ("mass", cfg.mass > 0, "must be positive"),
        ("omega", cfg.omega > 0, "must be positive"),
        ("truncation", cfg.truncation >= 1, "must be at least 1"),
        ("eta", cfg.eta >= 0, "must be non-negative"),
        ("extra_sign", cfg.extra_sign in (-1, 1), "must be -1 or +1"),
        ("guard_fraction", 0 < cfg.guard_fraction <= 1, "must lie in (0, 1]"),
        ("tolerance", cfg.tolerance > 0, "must be positive"),
        ("kappa_q", cfg.kappa_q != 0, "must be nonzero"),
    )
    for key, ok, msg in rules:
        if not ok:
            raise ConfigError(f"{key}: {msg}", key)


def parse_config(text):
    """Validated RunConfig from a JSON object; absent optional keys take defaults."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    known = {ATTR_TO_KEY.get(f.name, f.name) for f in fields(RunConfig)}
    for key in raw:
        if key not in known:
            raise ConfigError(f"{key}: unknown key", key)
    for key in REQUIRED:
        if key not in raw:
            raise ConfigError(f"{key}: required", key)
    kwargs = {KEY_TO_ATTR.get(k, k): _coerce(k, v) for k, v in raw.items()}
    cfg = RunConfig(**kwargs)
    _validate(cfg)
    return cfg


def serialize_config(cfg):
    return results.dumps({ATTR_TO_KEY.get(f.name, f.name): getattr(cfg, f.name) for f in fields(cfg)})


def load_config(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from None
    cfg = parse_config(text)
    override = os.environ.get(TOL_ENV)
    if override:
        try:
            tol = float(override)
        except ValueError:
            raise ConfigError(f"{TOL_ENV}: not a number", TOL_ENV) from None
        if not tol > 0:
            raise ConfigError(f"{TOL_ENV}: must be positive", TOL_ENV)
        cfg = RunConfig(**{**{f.name: getattr(cfg, f.name) for f in fields(cfg)}, "tolerance": tol})
    return cfg


def _emit(report, out):
    out.write(report.render() + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify_algebra(args, out):
    g = build_dirac_set()
    rep = CheckReport("algebra")
    for part in (verify_clifford(g), verify_gamma_set(g), spin_identity_check(g), verify_lie(build_charges(1.0))):
        rep.extend(part)
    return _emit(rep, out)


def cmd_gauge_check(args, out):
    return _emit(gauge_report(args.example), out)


def cmd_fields(args, out):
    cfg = load_config(args.config)
    p = cfg.gauge_params()
    cs = build_charges(cfg.kappa_q)
    for name, comp in field_components(p, cs).items():
        out.write(f"{name}: abelian = {comp['abelian']}; color = {comp['color']}\n")
    return _emit(fields_report(p, cs, build_dirac_set()), out)


def cmd_spectrum(args, out):
    cfg = load_config(args.config)
    p = cfg.osc_params()
    g = build_dirac_set()
    cs = build_charges(cfg.kappa_q)
    h, _ = assemble(p, g, cs)
    res = spectrum(h, check_convergence=args.converge, g=g, cs=cs)
    results.write_results(res, args.out, "json", stdout=out)
    if args.csv:
        results.write_results(res, args.csv, "csv", stdout=out)
    return EXIT_OK


def cmd_symmetry(args, out):
    cfg = load_config(args.config)
    p = cfg.osc_params()
    g = build_dirac_set()
    h, f = assemble(p, g, build_charges(cfg.kappa_q))
    a = build_angular(f, g)
    rep = angular_report(a, f, p.guard_fraction).extend(commutator_report(a, h, f, g, p))
    return _emit(rep, out)


def build_parser():
    parser = argparse.ArgumentParser(prog="nadosc", description="Non-Abelian Dirac oscillator checks and spectra.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("verify-algebra", help="Clifford, spin and Lie-algebra identities").set_defaults(func=cmd_verify_algebra)

    gc = sub.add_parser("gauge-check", help="gauge invariance of the worked potentials")
    gc.add_argument("--example", type=int, choices=(1, 2), required=True)
    gc.set_defaults(func=cmd_gauge_check)

    fl = sub.add_parser("fields", help="non-Abelian field tensor and interaction term")
    fl.add_argument("--config", required=True)
    fl.set_defaults(func=cmd_fields)

    sp = sub.add_parser("spectrum", help="eigenvalues of the truncated Hamiltonian")
    sp.add_argument("--config", required=True)
    sp.add_argument("--out", required=True, help="JSON output path, or - for stdout")
    sp.add_argument("--csv", help="optional CSV output path")
    sp.add_argument("--converge", action="store_true", help="flag eigenvalues stable under N -> 2N")
    sp.set_defaults(func=cmd_spectrum)

    sy = sub.add_parser("symmetry", help="angular-momentum commutators (dimension 2)")
    sy.add_argument("--config", required=True)
    sy.set_defaults(func=cmd_symmetry)
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, stdout)
    except InvalidInputError as exc:
        print(f"nadosc: input error: {exc}", file=stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"nadosc: output error: {exc}", file=stderr)
        return EXIT_FAIL
    except NadoscError as exc:
        print(f"nadosc: {exc}", file=stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
