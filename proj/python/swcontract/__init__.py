"""Contraction certificates and simulation for switched systems.

Thin Python surface over the compiled core. Norms, matrices, signals and
graphs cross the boundary as plain JSON-compatible dicts/lists using the same
schemas as the command-line tool.
"""

try:
    from swcontract._swcontract import *  # noqa: F401,F403
    from swcontract._swcontract import __doc__ as _core_doc  # noqa: F401
except ImportError:  # in-tree runs: the module sits next to the package dir
    from _swcontract import *  # noqa: F401,F403

__all__ = [
    "matrix_measure",
    "induced_norm",
    "norm_eval",
    "beta",
    "certify_staircase",
    "certify_ltv_two_mode",
    "solve_min_period",
    "simulate_linear",
    "lambda2_graph",
    "sample_graph10",
    "repro_report",
]
