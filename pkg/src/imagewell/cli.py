"""Command-line frontend emitting CSV/JSON datasets for every study.

Exit codes: 0 on success, 2 for usage or domain errors, 3 for eigensolver
failures, 1 for i/o failures.  Floats are printed with 17 significant
digits so identical configurations produce byte-identical files, which
keeps golden-file regression diffs exact.  When --output is omitted,
single-file commands write to stdout unless IMAGEWELL_OUTPUT_DIR is set.
"""

import functools
import json
import math
import os
from pathlib import Path

import click
import numpy as np

from . import analysis, potential as pot
from .solver import solve
from .special_functions import EULER_GAMMA

OUTPUT_DIR_ENV = "IMAGEWELL_OUTPUT_DIR"


def _fmt(v):
    if isinstance(v, float) and math.isnan(v):
        return ""
    return f"{v:.17g}" if isinstance(v, float) else str(v)


def _csv(header, rows):
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _json_text(obj):
    return json.dumps(obj, indent=2) + "\n"


def _resolve_output(output, default_name):
    if output is not None:
        return Path(output)
    env_dir = os.environ.get(OUTPUT_DIR_ENV)
    if env_dir:
        return Path(env_dir) / default_name
    return None


def _emit(text, path):
    if path is None:
        click.echo(text, nl=False)
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        click.echo(f"wrote {path}", err=True)


def _resolve_outdir(output):
    if output is not None:
        return Path(output)
    env_dir = os.environ.get(OUTPUT_DIR_ENV)
    return Path(env_dir) if env_dir else Path(".")


def _handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except np.linalg.LinAlgError as exc:  # subclasses ValueError
            click.echo(f"solver failure: {exc}", err=True)
            raise SystemExit(3)
        except ValueError as exc:
            click.echo(f"error: {exc}", err=True)
            raise SystemExit(2)
        except OSError as exc:
            click.echo(f"i/o failure: {exc}", err=True)
            raise SystemExit(1)
    return wrapper


def _format_option(fn):
    return click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
                        default="csv", show_default=True,
                        help="Output format.")(fn)


def _output_option(fn):
    return click.option("--output", "-o", type=click.Path(path_type=Path),
                        default=None,
                        help="Output path (default: stdout, or "
                             f"${OUTPUT_DIR_ENV}/<name> when set).")(fn)


@click.group()
def main():
    """Eigenvalues and eigenfunctions of an electron between grounded planes."""


@main.command("potential")
@click.option("--L", "L", type=float, default=1.0, show_default=True,
              help="Plane separation (Bohr radii).")
@click.option("--samples", type=int, default=399, show_default=True,
              help="Number of interior sample positions.")
@_format_option
@_output_option
@_handle_errors
def cmd_potential(L, samples, fmt, output):
    """Tabulate the three potential forms across the gap."""
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    x = L * np.arange(1, samples + 1) / (samples + 1)
    closed = pot.potential_closed(x, L)
    no_gamma = closed - EULER_GAMMA / (2.0 * L)
    first = pot.potential_first_image(x, L)
    path = _resolve_output(output, f"potential.{fmt}")
    if fmt == "csv":
        rows = zip(x.tolist(), closed.tolist(), no_gamma.tolist(), first.tolist())
        _emit(_csv(["x", "closed", "closed_no_2gamma", "first_image"], rows), path)
    else:
        _emit(_json_text({
            "L": L,
            "x": x.tolist(),
            "closed": closed.tolist(),
            "closed_no_2gamma": no_gamma.tolist(),
            "first_image": first.tolist(),
        }), path)


@main.command("convergence")
@click.option("--x", "x", type=float, default=0.5, show_default=True,
              help="Evaluation position.")
@click.option("--L", "L", type=float, default=1.0, show_default=True,
              help="Plane separation (Bohr radii).")
@click.option("--terms", type=int, multiple=True, default=(20, 200, 2000),
              show_default=True, help="Series term counts (repeatable).")
@_format_option
@_output_option
@_handle_errors
def cmd_convergence(x, L, terms, fmt, output):
    """Truncated image-series values against the closed form."""
    table = pot.convergence_table(x, L, terms)
    path = _resolve_output(output, f"convergence.{fmt}")
    if fmt == "csv":
        rows = [(n, v) for n, v in table.rows]
        rows.append(("closed", table.closed_form))
        _emit(_csv(["terms", "potential"], rows), path)
    else:
        _emit(_json_text({
            "rows": [{"terms": n, "potential": v} for n, v in table.rows],
            "closed_form": table.closed_form,
        }), path)


def _solution_tables(sol):
    rows = []
    for i, e in enumerate(sol.energies):
        n = i + 1
        e = float(e)
        defect = analysis.quantum_defect(e, n, sol.L) if e > 0.0 else math.nan
        rows.append((n, e, defect, analysis.pib_energy(n, sol.L)))
    return rows


@main.command("solve")
@click.option("--L", "L", type=float, required=True,
              help="Plane separation (Bohr radii).")
@click.option("--M", "M", type=int, default=None,
              help="Grid order (default: adequacy rule for this L).")
@click.option("--n-states", type=int, default=10, show_default=True,
              help="Number of states to report.")
@click.option("--states", "want_states", is_flag=True,
              help="Also write the wavefunctions on the padded grid.")
@_format_option
@_output_option
@_handle_errors
def cmd_solve(L, M, n_states, want_states, fmt, output):
    """Energies, quantum defects and optional wavefunctions at one separation."""
    m = analysis.default_order(L) if M is None else M
    sol = solve(m, L, n_states)
    rows = _solution_tables(sol)
    path = _resolve_output(output, f"solve.{fmt}")
    if fmt == "csv":
        _emit(_csv(["N", "energy", "defect", "pib"], rows), path)
        if want_states:
            if path is None:
                raise ValueError("--states needs --output (or IMAGEWELL_OUTPUT_DIR)")
            header = ["x"] + [f"psi_{k + 1}" for k in range(n_states)]
            srows = np.column_stack([sol.grid.scaled_nodes, sol.states.T])
            spath = path.with_name(path.stem + "_states.csv")
            _emit(_csv(header, srows.tolist()), spath)
    else:
        record = sol.to_json_dict()
        if not want_states:
            del record["states"], record["x"]
        record["defects"] = [r[2] for r in rows]
        record["pib"] = [r[3] for r in rows]
        _emit(_json_text(record), path)


@main.command("sweep")
@click.option("--L", "L_values", type=float, multiple=True,
              help="Explicit separations (repeatable); overrides the range.")
@click.option("--L-min", type=float, default=1.0, show_default=True)
@click.option("--L-max", type=float, default=100.0, show_default=True)
@click.option("--num", type=int, default=25, show_default=True,
              help="Number of separations in the range.")
@click.option("--log/--linear", "log_spaced", default=True, show_default=True,
              help="Log- or linearly-spaced range.")
@click.option("--M", "M", type=int, default=None,
              help="Grid order override (default: per-L adequacy rule).")
@click.option("--n-states", type=int, default=10, show_default=True)
@_format_option
@_output_option
@_handle_errors
def cmd_sweep(L_values, l_min, l_max, num, log_spaced, M, n_states, fmt, output):
    """Lowest energies as a function of separation, with ideal-box markers."""
    if not L_values:
        if num < 2:
            raise ValueError(f"range sweep needs --num >= 2, got {num}")
        space = np.geomspace if log_spaced else np.linspace
        L_values = space(l_min, l_max, num).tolist()
    points = analysis.energy_sweep(L_values, n_states, M=M)
    path = _resolve_output(output, f"sweep.{fmt}")
    if fmt == "csv":
        header = (["L", "M"] + [f"E{k + 1}" for k in range(n_states)]
                  + [f"pib{k + 1}" for k in range(n_states)])
        rows = [[p.L, p.M, *p.energies.tolist(),
                 *(analysis.pib_energy(k + 1, p.L) for k in range(n_states))]
                for p in points]
        _emit(_csv(header, rows), path)
    else:
        _emit(_json_text({"points": [{
            "L": p.L,
            "M": p.M,
            "energies": p.energies.tolist(),
            "pib": [analysis.pib_energy(k + 1, p.L) for k in range(n_states)],
        } for p in points]}), path)


@main.command("splitting")
@click.option("--L", "L_values", type=float, multiple=True,
              default=tuple(float(L) for L in range(10, 85, 5)),
              help="Separations to evaluate (repeatable).")
@click.option("--M", "M", type=int, default=None,
              help="Grid order override (default: per-L adequacy rule).")
@_format_option
@_output_option
@_handle_errors
def cmd_splitting(L_values, M, fmt, output):
    """Numeric pair splitting against the analytic tunneling estimate."""
    records = analysis.splitting_sweep(L_values, M=M)
    path = _resolve_output(output, f"splitting.{fmt}")
    if fmt == "csv":
        rows = [(r.L, r.dE_numeric, abs(r.dE_analytic), r.dE_analytic)
                for r in records]
        _emit(_csv(["L", "dE_numeric", "dE_analytic_abs", "dE_analytic_signed"],
                   rows), path)
    else:
        _emit(_json_text({"records": [{
            "L": r.L,
            "M": r.M,
            "dE_numeric": r.dE_numeric,
            "dE_analytic_abs": abs(r.dE_analytic),
            "dE_analytic_signed": r.dE_analytic,
            "resolvable": r.resolvable,
        } for r in records]}), path)


@main.command("waveforms")
@click.option("--L", "L_values", type=float, multiple=True,
              default=(1.0, 20.0, 40.0, 100.0), show_default=True,
              help="Separations to evaluate (repeatable).")
@click.option("--M", "M", type=int, default=None,
              help="Grid order override (default: per-L adequacy rule).")
@_format_option
@_output_option
@_handle_errors
def cmd_waveforms(L_values, M, fmt, output):
    """First eigenfunction pair on the padded grid for each separation."""
    solutions = []
    for L in L_values:
        m = analysis.default_order(L) if M is None else M
        solutions.append(solve(m, L, n_states=2))
    meta = [{
        "L": s.L,
        "M": s.M,
        "energies": s.energies.tolist(),
        "parities": [p.value for p in s.parities],
        "max_imag": s.max_imag,
        "file": f"waveforms_L{s.L:g}.csv",
    } for s in solutions]
    if fmt == "json":
        path = _resolve_output(output, "waveforms.json")
        for entry, s in zip(meta, solutions):
            del entry["file"]
            entry["x"] = s.grid.scaled_nodes.tolist()
            entry["psi_1"] = s.states[0].tolist()
            entry["psi_2"] = s.states[1].tolist()
        _emit(_json_text({"runs": meta}), path)
        return
    outdir = _resolve_outdir(output)
    for entry, s in zip(meta, solutions):
        rows = np.column_stack([s.grid.scaled_nodes, s.states.T]).tolist()
        _emit(_csv(["x", "psi_1", "psi_2"], rows), outdir / entry["file"])
    _emit(_json_text({"runs": meta}), outdir / "waveforms_meta.json")


@main.command("limits")
@click.option("--L", "L", type=float, default=10000.0, show_default=True,
              help="Plane separation (Bohr radii).")
@click.option("--M", "M", type=int, default=2000, show_default=True,
              help="Grid order.")
@click.option("--n-states", type=int, default=10, show_default=True)
@_format_option
@_output_option
@_handle_errors
def cmd_limits(L, M, n_states, fmt, output):
    """Large-separation levels against the image-state ladder."""
    sol = solve(M, L, n_states)
    rows = [(i + 1, float(e), analysis.image_state_energy((i + 2) // 2))
            for i, e in enumerate(sol.energies)]
    path = _resolve_output(output, f"limits.{fmt}")
    if fmt == "csv":
        _emit(_csv(["n", "calculated", "limiting"], rows), path)
    else:
        _emit(_json_text({
            "L": L, "M": M, "max_imag": sol.max_imag,
            "rows": [{"n": n, "calculated": c, "limiting": lim}
                     for n, c, lim in rows],
        }), path)


if __name__ == "__main__":
    main()
