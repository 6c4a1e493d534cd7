"""Figure gallery for the imagewell datasets (CSV in, PNG/SVG out)."""

from .render import (
    AXIS_SCALES,
    INPUT_FILES,
    SCHEMAS,
    WAVEFORM_SEPARATIONS,
    FigureSpec,
    SchemaError,
    figure_spec,
    render,
)

__all__ = [
    "AXIS_SCALES",
    "INPUT_FILES",
    "SCHEMAS",
    "WAVEFORM_SEPARATIONS",
    "FigureSpec",
    "SchemaError",
    "figure_spec",
    "render",
]
