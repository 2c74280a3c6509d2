"""Minmax k-sink location on trees for monotone min-max cost functions."""

from .feasibility import Configuration, Threshold, bounded_cost_iterative
from .oracles import (INF, AxiomReport, Oracle, eccentricity, eccentricity_oracle,
                      evacuation_oracle, evacuation_time, make_oracle, verify_axioms)
from .tree import Edge, Instance, build, path, star3
from .validation import TooLarge, brute_force_F, brute_force_optimal

__all__ = [
    "INF", "AxiomReport", "Configuration", "Edge", "Instance", "Oracle", "Threshold",
    "TooLarge", "brute_force_F", "brute_force_optimal", "bounded_cost_iterative", "build",
    "eccentricity", "eccentricity_oracle", "evacuation_oracle", "evacuation_time",
    "make_oracle", "path", "star3", "verify_axioms",
]
