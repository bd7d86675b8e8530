"""Python access to the Rosenau solver core."""

from ._core import (
    ConfigError,
    EllipticCase,
    NumericalError,
    RosenauError,
    check_identities,
    energy,
    evolve,
    nodes,
    solve_profile,
    spatial_convergence,
    temporal_convergence,
)

__all__ = [
    "ConfigError",
    "EllipticCase",
    "NumericalError",
    "RosenauError",
    "check_identities",
    "energy",
    "evolve",
    "nodes",
    "solve_profile",
    "spatial_convergence",
    "temporal_convergence",
]
