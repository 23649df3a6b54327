"""Expression language, subcommands and SVG output behind the ``klein`` command."""

from .evaluate import evaluate, parse_blade
from .main import run
from .parser import parse, to_source
from .svg import PlotItem, PlotSpec, render_svg

__all__ = ["evaluate", "parse", "parse_blade", "to_source", "run", "render_svg", "PlotSpec", "PlotItem"]
