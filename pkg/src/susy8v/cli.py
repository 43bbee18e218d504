"""Command-line entry point: ``susy8v verify`` and ``susy8v emit``."""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from . import scalars as sc
from .checks import SUITES, RunConfig, golden_table, run_suite
from .combinatorics import asm_count
from .eigensolver import homogeneous_psi
from .exactpoly import serialize

SCHEMA = 1
CONFIG_KEYS = {"n_max", "p_values", "zeta_values", "mu_grid", "nu_grid", "seed", "tolerances", "precision", "draws"}


class ConfigError(Exception):
    pass


def load_config(path: str | None, overrides: dict) -> RunConfig:
    """Build a RunConfig from an optional TOML file and command-line overrides."""
    values = {}
    if path:
        try:
            with open(path, "rb") as fh:
                values = tomllib.load(fh)
        except (OSError, tomllib.TOMLDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        unknown = set(values) - CONFIG_KEYS
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        if "zeta_values" in values:
            values["zeta_values"] = tuple(Fraction(str(z)) for z in values["zeta_values"])
        for key in ("p_values", "mu_grid", "nu_grid"):
            if key in values:
                values[key] = tuple(values[key])
        return RunConfig(**values)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ConfigError(str(exc)) from exc


def report_payload(results) -> dict:
    body = [r.payload() for r in results]
    digest = hashlib.sha256(json.dumps(body, sort_keys=True).encode()).hexdigest()
    return {"schema": SCHEMA, "sha256": digest, "passed": all(r.passed for r in results), "results": body}


def render(results, fmt: str) -> str:
    if fmt == "json":
        payload = report_payload(results)
        for row, r in zip(payload["results"], results):
            row["wall_time"] = round(r.wall_time, 6)
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check_id", "anchor", "residual", "exact", "tolerance", "passed", "wall_time"])
        for r in results:
            w.writerow([r.check_id, r.anchor, r.residual, r.exact, r.tolerance, r.passed, f"{r.wall_time:.4f}"])
        return buf.getvalue()
    return summary(results)


def summary(results) -> str:
    width = max((len(r.check_id) for r in results), default=10)
    lines = []
    for r in results:
        value = "exact" if r.exact is not None else f"{r.residual:.2e} < {r.tolerance:.0e}"
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.check_id:<{width}}  {value}")
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    overrides = {"n_max": args.n_max, "seed": args.seed}
    if args.tol is not None:
        overrides["tolerances"] = {"*": args.tol}
    try:
        cfg = load_config(args.config, overrides)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    if cfg.precision != 53:
        os.environ["SUSY8V_PRECISION"] = str(cfg.precision)
    results = run_suite(args.suite, cfg, jobs=args.jobs)
    text = render(results, args.format)
    if args.out:
        Path(args.out).write_text(text)
        sys.stdout.write(summary(results) if args.format != "text" else text)
    else:
        sys.stdout.write(text)
    return 0 if all(r.passed for r in results) else 1


def golden_text(k: int) -> str:
    table = golden_table(k, oracle=True)
    return "# label\tvalue\n" + "".join(f"{label}\t{value}\n" for label, value in table.items())


def table_rows(cfg: RunConfig):
    """Prediction rows (n, name, parameter, exact, float, residual)."""
    rows = []
    for n in range(0, cfg.n_max + 1):
        rows.append((n, "S", "m", serialize(sc.S_predict(n)), "", ""))
        for s, label in ((1, "Sbar+"), (-1, "Sbar-")):
            rows.append((n, label, "n", serialize(sc.Sbar_predict(n, sign=s)), "", ""))
        for k in range(1, n + 2):
            val = asm_count("A_refined", n + 1, k)
            rows.append((n + 1, "A(n,k)", f"k={k}", str(val), f"{float(val):.17g}", ""))
        rows.append((n + 1, "A(n)", "", str(asm_count("A", n + 1)), f"{float(asm_count('A', n + 1)):.17g}", ""))
        for zeta in cfg.zeta_values:
            psi = homogeneous_psi(n, zeta)["psi"]
            for mu in cfg.mu_grid:
                pred = sc.S_predict(n, Fraction(mu), zeta).to_fraction()
                res = abs(sc.S_measure(n, Fraction(mu), psi) - pred)
                rows.append((n, "S", f"zeta={zeta};m={mu}", str(pred), f"{float(pred):.17g}", str(res)))
            for nu in cfg.nu_grid:
                for s, label in ((1, "Sbar+"), (-1, "Sbar-")):
                    pred = sc.Sbar_predict(n, Fraction(nu), zeta, s).to_fraction()
                    res = abs(sc.Sbar_measure(n, Fraction(nu), s, psi) - pred)
                    rows.append((n, label, f"zeta={zeta};n={nu}", str(pred), f"{float(pred):.17g}", str(res)))
            norm = sc.norm_predict(n, zeta).to_fraction()
            rows.append((n, "norm", f"zeta={zeta}", str(norm), f"{float(norm):.17g}", str(abs(sc.norm_measure(psi) - norm))))
    return rows


def tables_text(cfg: RunConfig) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "name", "parameter", "exact", "float", "residual"])
    w.writerows(table_rows(cfg))
    return buf.getvalue()


def cmd_emit(args) -> int:
    try:
        cfg = load_config(args.config, {"n_max": args.n_max, "seed": args.seed})
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    out = Path(args.out) if args.out else None
    if args.what == "goldens":
        target = out or Path(__file__).parent / "goldens"
        target.mkdir(parents=True, exist_ok=True)
        for k in range(1, 5):
            (target / f"H{2 * k}.txt").write_text(golden_text(k))
        print(f"wrote H2..H8 goldens to {target}")
    else:
        text = tables_text(cfg)
        if out:
            out.write_text(text)
            print(f"wrote {out}")
        else:
            sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="susy8v", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run identity check suites")
    v.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    v.add_argument("--n-max", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--tol", type=float, help="override every numeric tolerance")
    v.add_argument("--out")
    v.add_argument("--format", choices=["json", "csv", "text"], default="text")
    v.add_argument("--config", help="TOML file with RunConfig keys")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)
    e = sub.add_parser("emit", help="regenerate goldens or prediction tables")
    e.add_argument("what", choices=["goldens", "tables"])
    e.add_argument("--out", help="directory for goldens, file for tables")
    e.add_argument("--n-max", type=int)
    e.add_argument("--seed", type=int)
    e.add_argument("--config")
    e.set_defaults(func=cmd_emit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
