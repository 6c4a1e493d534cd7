"""Render the seven-figure gallery from imagewell CLI CSV files.

Each figure is described by a FigureSpec naming its input files, the axis
scales, and the output image.  Rendering only reads the CSVs: all numbers
come from the command-line tool, so the gallery regenerates from data on
disk without touching the solver.

Gallery:

1. potential comparison: closed form with and without the 2*gamma
   screening constant vs the first-image-only potential
2. energy vs level number, log-log, against the ideal-box line (slope 2)
3. quantum defect vs level number, log-log, in the trust-boundary window
4. lowest ten energies vs separation, with ideal-box markers at L = 1, 2
5. zoom on the lowest pair vs separation
6. pair splitting vs the analytic tunneling estimate, semilog
7. 4x2 grid of the first eigenfunction pair at L = 1, 20, 40, 100
"""

from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

WAVEFORM_SEPARATIONS = (1.0, 20.0, 40.0, 100.0)

#: Expected header per input role; the CLI writes these schemas.
SCHEMAS = {
    "potential": ["x", "closed", "closed_no_2gamma", "first_image"],
    "solve": ["N", "energy", "defect", "pib"],
    "sweep_prefix": ["L", "M"],  # then E1..Ek, pib1..pibk
    "splitting": ["L", "dE_numeric", "dE_analytic_abs", "dE_analytic_signed"],
    "waveforms": ["x", "psi_1", "psi_2"],
}

#: Canonical input CSV filenames per figure, as emitted by the CLI.
INPUT_FILES = {
    1: ["potential.csv"],
    2: ["solve.csv"],
    3: ["solve.csv"],
    4: ["sweep.csv"],
    5: ["sweep.csv"],
    6: ["splitting.csv"],
    7: [f"waveforms_L{L:g}.csv" for L in WAVEFORM_SEPARATIONS],
}

AXIS_SCALES = {
    1: ("linear", "linear"),
    2: ("log", "log"),
    3: ("log", "log"),
    4: ("log", "linear"),
    5: ("linear", "linear"),
    6: ("linear", "log"),
    7: ("linear", "linear"),
}


class SchemaError(RuntimeError):
    """Input CSV is missing, empty, or does not match the expected schema."""


@dataclass(frozen=True)
class FigureSpec:
    figure_id: int
    input_csv_paths: tuple[Path, ...]
    xscale: str
    yscale: str
    output: Path


def figure_spec(figure_id, data_dir, out_dir, image_format="png"):
    """Canonical spec for one gallery figure over a CLI output directory."""
    figure_id = int(figure_id)
    if figure_id not in INPUT_FILES:
        raise ValueError(f"figure_id must be 1..7, got {figure_id}")
    data_dir = Path(data_dir)
    xscale, yscale = AXIS_SCALES[figure_id]
    return FigureSpec(
        figure_id=figure_id,
        input_csv_paths=tuple(data_dir / name for name in INPUT_FILES[figure_id]),
        xscale=xscale,
        yscale=yscale,
        output=Path(out_dir) / f"fig{figure_id}.{image_format}",
    )


def _read_csv(path, expected, prefix_only=False):
    """Load a CLI CSV as a dict of float columns, validating the header."""
    want = ",".join(expected) + (",..." if prefix_only else "")
    if not Path(path).exists():
        raise SchemaError(f"{path}: missing input; expected schema: {want}")
    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines:
        raise SchemaError(f"{path}: empty file; expected schema: {want}")
    header = lines[0].split(",")
    ok = header[:len(expected)] == expected if prefix_only else header == expected
    if not ok:
        raise SchemaError(f"{path}: header {','.join(header)!r} does not match "
                          f"expected schema: {want}")
    if len(lines) == 1:
        raise SchemaError(f"{path}: no data rows; expected schema: {want}")
    cells = [ln.split(",") for ln in lines[1:]]
    cols = {}
    for j, name in enumerate(header):
        cols[name] = np.array([float(row[j]) if row[j] else np.nan
                               for row in cells])
    return cols


def _fig1(spec):
    data = _read_csv(spec.input_csv_paths[0], SCHEMAS["potential"])
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    ax.plot(data["x"], data["closed"], label="closed form")
    ax.plot(data["x"], data["closed_no_2gamma"], "--", label="without 2*gamma")
    ax.plot(data["x"], data["first_image"], ":", label="first image only")
    ax.set_xlabel("x (Bohr)")
    ax.set_ylabel("V (hartree)")
    ax.set_ylim(bottom=1.2 * np.min(data["closed"]))
    ax.legend()
    ax.set_title("Image potential between the planes")
    return fig


def _fig2(spec):
    data = _read_csv(spec.input_csv_paths[0], SCHEMAS["solve"])
    keep = data["energy"] > 0.0
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    ax.plot(data["N"][keep], data["energy"][keep], label="computed")
    ax.plot(data["N"], data["pib"], "--", label="ideal box (slope 2)")
    ax.set_xlabel("level N")
    ax.set_ylabel("E (hartree)")
    ax.legend()
    ax.set_title("Spectrum vs level number")
    return fig


def _fig3(spec):
    data = _read_csv(spec.input_csv_paths[0], SCHEMAS["solve"])
    n, d = data["N"], data["defect"]
    keep = (n >= 45) & (n <= 65) & np.isfinite(d) & (d > 0.0)
    if not keep.any():
        keep = np.isfinite(d) & (d > 0.0)
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    ax.plot(n[keep], d[keep], marker="o")
    ax.set_xlabel("level N")
    ax.set_ylabel("quantum defect")
    ax.set_title("Defect diagnostic near the trust boundary")
    return fig


def _sweep_columns(path):
    cols = _read_csv(path, SCHEMAS["sweep_prefix"], prefix_only=True)
    n_states = sum(1 for name in cols if name.startswith("E"))
    if n_states == 0 or not all(f"pib{k + 1}" in cols for k in range(n_states)):
        raise SchemaError(f"{path}: expected schema: L,M,E1..Ek,pib1..pibk")
    return cols, n_states


def _fig4(spec):
    cols, n_states = _sweep_columns(spec.input_csv_paths[0])
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    for k in range(n_states):
        ax.plot(cols["L"], cols[f"E{k + 1}"])
    marker_rows = np.isin(cols["L"], (1.0, 2.0))
    if marker_rows.any():
        for k in range(n_states):
            ax.scatter(cols["L"][marker_rows], cols[f"pib{k + 1}"][marker_rows],
                       marker="+", color="k", zorder=3)
    ax.set_xlabel("L (Bohr)")
    ax.set_ylabel("E (hartree)")
    ax.set_title(f"Lowest {n_states} energies vs separation")
    return fig


def _fig5(spec):
    cols, n_states = _sweep_columns(spec.input_csv_paths[0])
    if n_states < 2:
        raise SchemaError(f"{spec.input_csv_paths[0]}: pair zoom needs E1 and E2")
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    ax.plot(cols["L"], cols["E1"], label="ground")
    ax.plot(cols["L"], cols["E2"], label="first excited")
    ax.set_xlabel("L (Bohr)")
    ax.set_ylabel("E (hartree)")
    ax.legend()
    ax.set_title("Splitting of the lowest pair")
    return fig


def _fig6(spec):
    data = _read_csv(spec.input_csv_paths[0], SCHEMAS["splitting"])
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    ax.plot(data["L"], data["dE_numeric"], marker="o", label="computed")
    ax.plot(data["L"], data["dE_analytic_abs"], "--",
            label="|tunneling estimate|")
    ax.set_xlabel("L (Bohr)")
    ax.set_ylabel("dE (hartree)")
    ax.legend()
    ax.set_title("Pair splitting vs the analytic estimate")
    return fig


def _fig7(spec):
    runs = [(_read_csv(p, SCHEMAS["waveforms"]), p) for p in spec.input_csv_paths]
    fig, axes = plt.subplots(len(runs), 2, figsize=(9.6, 2.4 * len(runs)),
                             squeeze=False)
    for row, (data, path) in enumerate(runs):
        label = Path(path).stem.replace("waveforms_L", "L = ")
        for col, name in enumerate(("psi_1", "psi_2")):
            ax = axes[row][col]
            ax.plot(data["x"], data[name])
            ax.axhline(0.0, lw=0.5, color="0.7")
            ax.set_ylabel(name if col == 0 else "")
        axes[row][0].set_title(f"{label}: ground state", fontsize=9)
        axes[row][1].set_title(f"{label}: first excited", fontsize=9)
    for ax in axes[-1]:
        ax.set_xlabel("x (Bohr)")
    fig.suptitle("First eigenfunction pair across separations")
    return fig


_RENDERERS = {1: _fig1, 2: _fig2, 3: _fig3, 4: _fig4, 5: _fig5, 6: _fig6, 7: _fig7}


def render(spec):
    """Render one figure, write ``spec.output`` and return the Figure."""
    fig = _RENDERERS[spec.figure_id](spec)
    for ax in fig.axes:
        ax.set_xscale(spec.xscale)
        ax.set_yscale(spec.yscale)
    fig.tight_layout()
    spec.output.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(spec.output)
    return fig
