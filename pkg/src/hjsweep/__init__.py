"""Fifth-order Hermite-WENO fast sweeping solvers for 2D static Hamilton-Jacobi equations.

The package solves H(grad(phi), x) = f(x) with phi prescribed on an inflow
set, on uniform Cartesian grids.  Two schemes are provided: a derivative-reuse
scheme that recycles upwind HWENO reconstructions as the stored derivative
data, and a companion scheme that evolves the first derivatives through
auxiliary transport equations.  Both reach fifth-order accuracy on smooth
problems and degrade gracefully across solution kinks.
"""

from __future__ import annotations

from .grid import Grid2D, PointCategory, build_grid, classify_points, sweep_orderings
from .hamiltonian import HamiltonianSpec, eikonal, quasi_p, quasi_sv
from .problems import Problem, available_problems, make_problem
from .report import ConvergenceTable, convergence_orders, error_norms
from .sweeper import DivergenceError, SolutionField, SolverConfig, SweepReport, solve

__all__ = [
    "ConvergenceTable",
    "DivergenceError",
    "Grid2D",
    "HamiltonianSpec",
    "PointCategory",
    "Problem",
    "SolutionField",
    "SolverConfig",
    "SweepReport",
    "available_problems",
    "build_grid",
    "classify_points",
    "convergence_orders",
    "eikonal",
    "error_norms",
    "make_problem",
    "quasi_p",
    "quasi_sv",
    "solve",
    "sweep_orderings",
]

__version__ = "0.1.0"
