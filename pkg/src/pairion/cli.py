"""Command-line interface: spectra, cross sections, crossover energies, oracle runs.

Every subcommand produces one table.  ``--format csv`` writes a header row
with unit-bearing column names followed by rows formatted to 12 significant
digits; ``--format json`` writes a single object that echoes the inputs,
the table, the units and the physical constants used.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from . import __version__
from .numerics import DEFAULT_CONFIG, QuadratureConfig, QuadratureError, RootFindingError
from .units import CONSTANTS, hydrogenlike_binding, to_millibarn

__all__ = ["main", "build_parser", "Table", "render"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3


class NumericalFailure(RuntimeError):
    def __init__(self, quantity: str, cause: Exception):
        super().__init__(f"numerical failure while computing {quantity}: {cause}")
        self.quantity = quantity


@contextlib.contextmanager
def computing(quantity: str):
    """Tag numerical failures with the quantity being evaluated."""
    try:
        yield
    except (QuadratureError, RootFindingError, FloatingPointError) as exc:
        raise NumericalFailure(quantity, exc) from exc


@dataclass
class Table:
    command: str
    columns: list[str]
    rows: list[list]
    units: dict[str, str]
    inputs: dict
    notes: list[str] = field(default_factory=list)


def _fmt(v) -> str:
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".12g")
    return str(v)


def _json_value(v):
    if isinstance(v, (float, np.floating)):
        return float(v) if math.isfinite(v) else None
    return v


def render(table: Table, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(table.columns)
        for row in table.rows:
            w.writerow([_fmt(v) for v in row])
        return buf.getvalue()
    doc = {
        "command": table.command,
        "version": __version__,
        "inputs": table.inputs,
        "columns": table.columns,
        "units": table.units,
        "rows": [[_json_value(v) for v in r] for r in table.rows],
        "notes": table.notes,
        "provenance": CONSTANTS.provenance(),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _grid(lo: float, hi: float, n: int, log: bool) -> np.ndarray:
    if not lo < hi:
        raise ValueError(f"grid needs min < max, got {lo} >= {hi}")
    if n < 2:
        raise ValueError("grid needs at least 2 points")
    if log:
        if lo <= 0:
            raise ValueError("log grid needs min > 0")
        return np.geomspace(lo, hi, n)
    return np.linspace(lo, hi, n)


def _cfg(args) -> QuadratureConfig:
    return DEFAULT_CONFIG.with_(
        rel_tol=args.rel_tol, abs_tol=args.abs_tol, max_subdivisions=args.max_subdivisions
    )


# -- spectrum ---------------------------------------------------------------

def spectrum_table(mode: str, xmin: float, xmax: float, points: int, log: bool,
                   Z: int | None = None, cfg: QuadratureConfig = DEFAULT_CONFIG) -> Table:
    from .fast_spectrum import t_fast
    from .matching import overlap_report
    from .slow_spectrum import t_slow, t_slow_approx

    grid = _grid(xmin, xmax, points, log)
    inputs = {"mode": mode, "xmin": xmin, "xmax": xmax, "points": points, "log": log, "Z": Z}
    if mode == "fast":
        with computing("T_f"):
            rows = [[x, float(t_fast(x))] for x in grid]
        return Table("spectrum", ["eps2_over_m", "T_f_dimensionless"], rows,
                     {"eps2_over_m": "m", "T_f_dimensionless": "1"}, inputs)
    if mode == "slow":
        rows = []
        for e in grid:
            with computing(f"T_s at eps/I={e:.6g}"):
                rows.append([e, t_slow(e, cfg), t_slow_approx(e)])
        return Table("spectrum", ["eps_over_I", "T_s_dimensionless", "T_s_approx_dimensionless"],
                     rows, {"eps_over_I": "I", "T_s_dimensionless": "1",
                            "T_s_approx_dimensionless": "1"}, inputs)
    if mode == "matched":
        if Z is None:
            raise ValueError("--mode matched needs --Z")
        with computing(f"matched spectra for Z={Z}"):
            rep = overlap_report(Z, grid, cfg)
        rows = [[p.eps2, p.t_f, p.t_f_matched, p.t_s_scaled] for p in rep.points]
        cols = ["eps2_over_m", "T_f_dimensionless", "T_f_matched_dimensionless",
                "T_s_times_m_over_I_dimensionless"]
        return Table("spectrum", cols, rows, {c: ("m" if c == "eps2_over_m" else "1") for c in cols},
                     inputs, [f"I = {rep.binding:.12g} m for Z={Z}"])
    raise ValueError(f"unknown spectrum mode {mode!r}")


# -- xsection ---------------------------------------------------------------

def xsection_table(element: str | None, shell: str | None, Z: int | None, units: str,
                   C: float | None, experiment: bool, data_path: str | None,
                   cfg: QuadratureConfig = DEFAULT_CONFIG) -> Table:
    from . import cross_section as xs

    conv = to_millibarn if units == "mb" else (lambda s: s)
    unit = "mb" if units == "mb" else "alpha_re2"
    inputs = {"element": element, "shell": shell, "Z": Z, "units": units, "C": C,
              "experiment": experiment}
    data = xs.load_binding_energies(data_path) if (element or experiment) else None
    notes: list[str] = []
    if experiment:
        rows = [[r["element"], r["shell"], r["computed_mb"], r["published_prediction_mb"],
                 r["experiment_mb"], r["experiment_err_mb"]]
                for r in xs.experimental_comparison(xs.C_DEFAULT if C is None else C, data)]
        cols = ["element", "shell", "computed_mb", "published_prediction_mb",
                "experiment_mb", "experiment_err_mb"]
        notes.append("experiment: 1 GeV photons, ionization in coincidence with pair creation")
        return Table("xsection", cols, rows, {c: ("mb" if c.endswith("mb") else "") for c in cols},
                     inputs, notes)
    if element is not None:
        if shell is None:
            raise ValueError("--element needs --shell")
        c_val = xs.C_DEFAULT if C is None else C
        sig = xs.sigma_shell(element, shell, c_val, data)
        cols = ["element", "shell", "C", f"sigma_{unit}"]
        return Table("xsection", cols, [[element, shell, c_val, conv(sig)]],
                     {"C": "1", f"sigma_{unit}": unit}, inputs, notes)
    if Z is not None:
        with computing(f"C(Z={Z})"):
            c_val = xs.big_c(Z, cfg) if C is None else C
        sig = xs.sigma_kshell_ion(Z, c_val)
        cols = ["Z", "I_over_m", "C", f"sigma_{unit}"]
        row = [Z, hydrogenlike_binding(Z), c_val, conv(sig)]
        if Z == 1:
            cols.append(f"literature_total_inelastic_{unit}")
            row.append(conv(xs.LITERATURE_HYDROGEN))
            notes.append("literature value: totally inelastic cross section of hydrogen, 19 alpha r_e^2")
        return Table("xsection", cols, [row], {"I_over_m": "m", "C": "1", cols[3]: unit,
                                                **({cols[4]: unit} if Z == 1 else {})}, inputs, notes)
    raise ValueError("xsection needs --element/--shell, --Z, or --experiment")


# -- crossover --------------------------------------------------------------

def _parse_range(text: str) -> range:
    try:
        lo, hi = (int(v) for v in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def crossover_table(Zs: Sequence[int], mode: str, C: float | None) -> Table:
    from .cross_section import C_DEFAULT
    from .crossover import omega0_curve

    with computing("omega0"):
        res = omega0_curve(Zs, mode, C_DEFAULT if C is None else C)
    rows = [[r.Z, r.omega0, r.y0, r.sigma_at_crossover, r.electrons_for_compton] for r in res]
    cols = ["Z", "omega0_MeV", "omega0_over_m", "sigma_alpha_re2", "compton_electrons"]
    return Table("crossover", cols, rows,
                 {"omega0_MeV": "MeV", "omega0_over_m": "m", "sigma_alpha_re2": "alpha_re2"},
                 {"Z": list(Zs), "mode": mode, "C": C})


# -- oracle -----------------------------------------------------------------

def oracle_table(which: str, cfg: QuadratureConfig = DEFAULT_CONFIG) -> Table:
    if which == "fast":
        from .fast_spectrum import t_fast, t_fast_oracle
        rows = []
        for x in (0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0):
            with computing(f"T_f oracle at x={x}"):
                a, b = float(t_fast(x)), t_fast_oracle(x, cfg)
            rows.append([x, a, b, abs(a - b) / a])
        cols = ["eps2_over_m", "T_f_closed", "T_f_quadrature", "rel_diff"]
    elif which == "bh":
        from .bh_oracle import coefficient_14_9
        rows = []
        for w in (1e4, 1e5):
            with computing(f"Bethe-Heitler coefficient at omega={w:g} m"):
                c = coefficient_14_9(w)
            rows.append([w, c, c / (14.0 / 9.0) - 1.0])
        cols = ["omega_over_m", "coefficient", "rel_diff_from_14_9"]
    elif which == "slow":
        from .slow_spectrum import j1_closed, j_integral, k_slow, k_zero_closed
        rows = []
        with computing("K(0)"):
            rows.append([0.0, k_slow(0.0, cfg), k_zero_closed(), math.nan])
        for e in (1.0, 25.0, 100.0, 400.0):
            with computing(f"J at eps/I={e:g}"):
                j = j_integral(e, cfg)
            rows.append([e, k_slow(e, cfg), j, abs(j - j1_closed(e)) / j1_closed(e)])
        cols = ["eps_over_I", "K", "J_or_K0_closed", "rel_diff_J_J1"]
    else:
        raise ValueError(f"unknown oracle {which!r}")
    return Table("oracle", cols, rows, {c: "1" for c in cols}, {"which": which})


# -- figures ----------------------------------------------------------------

def figure_tables(cfg: QuadratureConfig = DEFAULT_CONFIG) -> dict[str, Table]:
    return {
        "fig3_fast_spectrum": spectrum_table("fast", 1e-3, 100.0, 200, True),
        "fig4_slow_spectrum": spectrum_table("slow", 0.0, 10.0, 101, False, cfg=cfg),
        "fig5_matching_Z20": spectrum_table("matched", 1e-3, 0.9, 120, True, Z=20, cfg=cfg),
        "fig6_omega0_ion": crossover_table(range(1, 51), "ion", None),
        "fig6_omega0_atom": crossover_table(range(1, 51), "atom", None),
    }


# -- entry point ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--rel-tol", type=float, default=DEFAULT_CONFIG.rel_tol)
    common.add_argument("--abs-tol", type=float, default=DEFAULT_CONFIG.abs_tol)
    common.add_argument("--max-subdivisions", type=int, default=DEFAULT_CONFIG.max_subdivisions)

    p = argparse.ArgumentParser(prog="pairion", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spectrum", parents=[common], help="tabulate an energy spectrum")
    s.add_argument("--mode", choices=("fast", "slow", "matched"), default="fast")
    s.add_argument("--Z", type=int)
    s.add_argument("--xmin", type=float, default=1e-3)
    s.add_argument("--xmax", type=float, default=100.0)
    s.add_argument("--points", type=int, default=200)
    s.add_argument("--log", action="store_true", help="logarithmic grid")

    x = sub.add_parser("xsection", parents=[common], help="total cross section")
    x.add_argument("--element")
    x.add_argument("--shell", help="K, L (all L subshells), L1, 3s, ...")
    x.add_argument("--Z", type=int, help="one-electron ion of charge Z")
    x.add_argument("--units", choices=("mb", "alpha_re2"), default="alpha_re2")
    x.add_argument("--C", type=float, help="override the constant C")
    x.add_argument("--experiment", action="store_true", help="compare with 1 GeV measurements")
    x.add_argument("--data", help="binding-energy JSON (default: $PAIRION_BINDING_DATA or bundled)")

    c = sub.add_parser("crossover", parents=[common], help="photon energy where Compton is overtaken")
    grp = c.add_mutually_exclusive_group(required=True)
    grp.add_argument("--Z", type=int)
    grp.add_argument("--Z-range", type=_parse_range, metavar="LO:HI")
    c.add_argument("--mode", choices=("ion", "atom"), default="ion")
    c.add_argument("--C", type=float)

    o = sub.add_parser("oracle", parents=[common], help="independent numerical checks")
    o.add_argument("which", choices=("fast", "bh", "slow"))

    f = sub.add_parser("figures", parents=[common], help="write all figure datasets")
    f.add_argument("--outdir", required=True)
    return p


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, newline="")
    else:
        sys.stdout.write(text)


def run(args: argparse.Namespace) -> int:
    cfg = _cfg(args)
    if args.command == "spectrum":
        t = spectrum_table(args.mode, args.xmin, args.xmax, args.points, args.log, args.Z, cfg)
    elif args.command == "xsection":
        t = xsection_table(args.element, args.shell, args.Z, args.units, args.C,
                           args.experiment, args.data, cfg)
    elif args.command == "crossover":
        t = crossover_table([args.Z] if args.Z is not None else args.Z_range, args.mode, args.C)
    elif args.command == "oracle":
        t = oracle_table(args.which, cfg)
    else:
        out = Path(args.outdir)
        out.mkdir(parents=True, exist_ok=True)
        ext = "csv" if args.format == "csv" else "json"
        for name, tab in figure_tables(cfg).items():
            _emit(render(tab, args.format), str(out / f"{name}.{ext}"))
        return EXIT_OK
    _emit(render(t, args.format), args.output)
    if args.format == "csv":
        for n in t.notes:
            print(f"note: {n}", file=sys.stderr)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except NumericalFailure as exc:
        print(f"pairion: error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except QuadratureError as exc:
        print(f"pairion: error: numerical failure while computing {args.command}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, KeyError) as exc:
        print(f"pairion: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
