"""Command-line entry point: render the gallery from a data directory."""

from pathlib import Path

import click
import matplotlib.pyplot as plt

from .render import SchemaError, figure_spec, render


@click.command()
@click.option("--data-dir", type=click.Path(path_type=Path), default=Path("."),
              show_default=True, help="Directory holding the imagewell CSV output.")
@click.option("--out-dir", type=click.Path(path_type=Path), default=Path("plots"),
              show_default=True, help="Directory for the rendered images.")
@click.option("--figure", "figures", type=click.IntRange(1, 7), multiple=True,
              help="Figure number(s) to render (default: all seven).")
@click.option("--image-format", type=click.Choice(["png", "svg"]), default="png",
              show_default=True)
def main(data_dir, out_dir, figures, image_format):
    """Render the figure gallery from imagewell CLI CSV files."""
    targets = figures or tuple(range(1, 8))
    for figure_id in targets:
        spec = figure_spec(figure_id, data_dir, out_dir, image_format)
        try:
            fig = render(spec)
        except SchemaError as exc:
            click.echo(f"error: {exc}", err=True)
            raise SystemExit(1)
        plt.close(fig)
        click.echo(f"wrote {spec.output}", err=True)


if __name__ == "__main__":
    main()
