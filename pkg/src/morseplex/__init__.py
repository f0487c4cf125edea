"""Random discrete Morse spectra of finite simplicial complexes.

A run tears a complex down by random elementary collapses, deleting a top
face as critical whenever no free face exists; the counts of critical faces
per dimension form the Morse vector, and the distribution of vectors over
rounds is the discrete Morse spectrum.
"""
from __future__ import annotations

from . import generators
from .complexes import (
    BudgetExceededError,
    SimplicialComplex,
    as_simplicial_complex,
    from_facets,
    read_complex,
    write_complex,
)
from .engine import (
    CollapseTrace,
    TraceInvalidError,
    round_seed,
    run_many,
    run_once,
    run_once_normalized,
    verify_trace,
)
from .hasse import HasseDiagram, RunState
from .spectra import (
    Spectrum,
    analytic_spectrum_A,
    analytic_spectrum_B,
    build_report,
    c_avg,
    c_avg_normalized,
    exact_spectrum_bruteforce,
    normalize_vector,
    pathological_rate,
    pathological_rate_argmin,
)
from .topology import (
    GroupPresentation,
    MorseCheckReport,
    betti_gf2,
    check_morse_output,
    connected_components,
    edge_path_presentation,
)

__version__ = "0.1.0"

__all__ = [
    "SimplicialComplex", "from_facets", "as_simplicial_complex",
    "read_complex", "write_complex", "BudgetExceededError",
    "HasseDiagram", "RunState",
    "run_once", "run_once_normalized", "run_many", "verify_trace",
    "CollapseTrace", "TraceInvalidError", "round_seed",
    "Spectrum", "normalize_vector", "c_avg", "c_avg_normalized",
    "exact_spectrum_bruteforce", "analytic_spectrum_A", "analytic_spectrum_B",
    "pathological_rate", "pathological_rate_argmin", "build_report",
    "betti_gf2", "check_morse_output", "MorseCheckReport",
    "connected_components", "edge_path_presentation", "GroupPresentation",
    "generators",
    "RandomDiscreteMorse",
]


def __getattr__(name):
    # the estimator pulls in sklearn; keep CLI startup light
    if name == "RandomDiscreteMorse":
        from .estimator import RandomDiscreteMorse

        return RandomDiscreteMorse
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
