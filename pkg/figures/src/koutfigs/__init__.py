"""Figure rendering for K-out robustness sweep CSVs.

Three batch scripts, each reading the sweep CSV contract and writing one
image: connectivity curves with threshold lines, outside-giant curves with
an optional theoretical bound, and the K-out vs Erdos-Renyi comparison.
"""

from .comparison import render_comparison
from .connectivity import render_connectivity
from .csvio import SchemaError, read_sweep_csv
from .outside_giant import render_outside_giant

__all__ = [
    "SchemaError",
    "read_sweep_csv",
    "render_connectivity",
    "render_outside_giant",
    "render_comparison",
]
