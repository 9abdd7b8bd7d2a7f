"""Partial Chebyshev polynomials and the quadratic embedding constant of fan graphs."""

from ._fanqec import (
    FanqecError,
    alpha,
    beta,
    distance_matrix,
    families,
    fan_edges,
    gamma,
    identity_suite,
    key_identity_residual,
    poly,
    qec_fan,
    qec_graph,
    run_cli,
    sigma,
    tau,
    zeros_of_s,
)

__all__ = [
    "FanqecError",
    "alpha",
    "beta",
    "distance_matrix",
    "families",
    "fan_edges",
    "gamma",
    "identity_suite",
    "key_identity_residual",
    "poly",
    "qec_fan",
    "qec_graph",
    "run_cli",
    "sigma",
    "tau",
    "zeros_of_s",
]
