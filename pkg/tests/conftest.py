import pytest

from hjsweep.problems import make_problem
from hjsweep.sweeper import SolverConfig, solve


@pytest.fixture(scope="session")
def warm():
    """Compile the jit kernels once so timed tests measure steady state."""
    for approach in (1, 2):
        prob, grid = make_problem("ex1", 40)
        solve(prob, grid, SolverConfig(approach=approach))
    prob, grid = make_problem("ex1", 40)
    solve(prob, grid, SolverConfig(approach=1, hybrid=True))
    return True


@pytest.fixture(scope="session")
def run_solver(warm):
    """Session cache of full solves keyed by problem, mesh, and overrides."""
    cache: dict = {}

    def run(pid: str, n: int, **overrides):
        key = (pid, n, tuple(sorted(overrides.items())))
        if key not in cache:
            prob, grid = make_problem(pid, n)
            field, report = solve(prob, grid, SolverConfig(**overrides))
            cache[key] = (prob, grid, field, report)
        return cache[key]

    run.cache = cache
    return run
