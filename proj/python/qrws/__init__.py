"""Quantum random walk search on the hypercube with a generalized Householder coin."""

from ._qrws import (
    QrwsError,
    aggregate,
    epsilon_tilde,
    hill_eval,
    hill_fit,
    iteration_count,
    phi_grid,
    robustness_epsilon,
    simulate,
    sweep,
    zeta_of_phi,
)

__all__ = [
    "QrwsError",
    "aggregate",
    "epsilon_tilde",
    "hill_eval",
    "hill_fit",
    "iteration_count",
    "phi_grid",
    "robustness_epsilon",
    "simulate",
    "sweep",
    "zeta_of_phi",
]
