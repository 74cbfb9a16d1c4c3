"""Command line, flat-file formats, SVG output and benchmarks."""
from .serialize import *  # noqa: F401,F403
from .svg import scatter_svg  # noqa: F401
