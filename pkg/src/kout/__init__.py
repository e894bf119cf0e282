"""Random K-out graphs under uniform node deletion.

Sampling (:mod:`kout.graphs`), deletion (:mod:`kout.deletion`), component
analysis (:mod:`kout.analysis`), design thresholds and disconnection bounds
(:mod:`kout.thresholds`), Monte Carlo sweeps (:mod:`kout.montecarlo`), and
an exact enumeration oracle for tiny instances (:mod:`kout.oracle`).
"""

from .analysis import ComponentSummary, components, is_connected
from .deletion import DeletionSpec, ResidualGraph, delete_explicit, delete_uniform
from .errors import (
    InstanceTooLargeError,
    InvalidParameterError,
    InvalidProfileError,
    SweepError,
)
from .graphs import (
    BaselineGraph,
    KOutGraph,
    SelectionProfile,
    adjacency_from_selections,
    load_graph,
    sample_er,
    sample_kout,
    write_graph,
)
from .montecarlo import (
    ExperimentConfig,
    SweepResult,
    SweepRow,
    TrialResult,
    compare_er,
    run_sweep,
    run_trial,
)
from .oracle import exact_event_probability, exact_probability
from .thresholds import (
    BoundReport,
    ThresholdQuery,
    cut_event_probability,
    cut_event_probability_exact,
    cut_event_upper_bound,
    cut_event_upper_bound_exact,
    min_k,
    r1,
    r2,
    r3,
    r4,
    resolve_threshold,
    union_bound_pz,
)

__version__ = "0.1.0"

__all__ = [
    "BaselineGraph",
    "BoundReport",
    "ComponentSummary",
    "DeletionSpec",
    "ExperimentConfig",
    "InstanceTooLargeError",
    "InvalidParameterError",
    "InvalidProfileError",
    "KOutGraph",
    "ResidualGraph",
    "SelectionProfile",
    "SweepError",
    "SweepResult",
    "SweepRow",
    "ThresholdQuery",
    "TrialResult",
    "adjacency_from_selections",
    "compare_er",
    "components",
    "cut_event_probability",
    "cut_event_probability_exact",
    "cut_event_upper_bound",
    "cut_event_upper_bound_exact",
    "delete_explicit",
    "delete_uniform",
    "exact_event_probability",
    "exact_probability",
    "is_connected",
    "load_graph",
    "min_k",
    "r1",
    "r2",
    "r3",
    "r4",
    "resolve_threshold",
    "run_sweep",
    "run_trial",
    "sample_er",
    "sample_kout",
    "union_bound_pz",
    "write_graph",
]
