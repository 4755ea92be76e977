"""Command line front end.

Three subcommands: ``solve`` (one mesh, prints the table row), ``study``
(a mesh ladder, prints the full convergence table), and ``dump`` (solve and
write the field CSV).  Options may come from an INI config file; a section
named after the problem overrides ``[solver]``, and command-line flags
override both.

Exit codes: 0 success, 2 usage error, 3 divergence, 4 I/O failure.
Non-convergence at the iteration cap is reported on stderr but still exits
0 with artifacts written, so mesh ladders survive a stubborn coarse run.
"""

from __future__ import annotations

import argparse
import configparser
import os
import sys
from dataclasses import dataclass

from .problems import available_problems, make_problem
from .report import ConvergenceTable, write_csv_report, write_delta_csv, write_field_dump
from .sweeper import DivergenceError, InitializationError, SolverConfig, solve

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DIVERGED = 3
EXIT_IO = 4


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved invocation: problem, meshes, and solver overrides."""

    problem: str
    meshes: tuple[int, ...]
    approach: int = 1
    hybrid: bool = False
    omega: float | None = None
    epsilon: tuple[float, ...] | None = None
    gamma: tuple[float, float, float] | None = None
    delta_tol: float | None = None
    max_iterations: int | None = None
    freeze_tol: float | None = None
    out_dir: str = "."
    dump_field: bool = False

    def solver_config(self, mesh_index: int) -> SolverConfig:
        eps = None
        if self.epsilon is not None:
            eps = (
                self.epsilon[mesh_index]
                if len(self.epsilon) > 1
                else self.epsilon[0]
            )
        kwargs = dict(
            approach=self.approach,
            hybrid=self.hybrid,
            omega=self.omega,
            epsilon=eps,
            delta_tol=self.delta_tol,
            max_iterations=self.max_iterations,
            freeze_tol=self.freeze_tol,
        )
        if self.gamma is not None:
            kwargs["gamma"] = self.gamma
        return SolverConfig(**kwargs)


def _parse_floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(t) for t in text.split(",") if t.strip() != "")
    except ValueError as e:
        raise UsageError(f"bad float list {text!r}") from e


def _parse_meshes(text: str) -> tuple[int, ...]:
    try:
        meshes = tuple(int(t) for t in text.split(",") if t.strip() != "")
    except ValueError as e:
        raise UsageError(f"bad mesh list {text!r}") from e
    if not meshes:
        raise UsageError("mesh list is empty")
    return meshes


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hjsweep",
        description="Fifth-order Hermite-WENO fast sweeping solvers "
        "for static Hamilton-Jacobi equations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, mesh_flag: str):
        p.add_argument("--problem", required=True, help="problem id, e.g. ex1")
        if mesh_flag == "n":
            p.add_argument("--n", type=int, required=True, help="cells per side")
        else:
            p.add_argument(
                "--meshes", required=True, help="comma list of cells, e.g. 40,80,160"
            )
        p.add_argument("--approach", type=int, choices=(1, 2), default=None)
        p.add_argument("--hybrid", action="store_true", default=None)
        p.add_argument("--omega", type=float, default=None)
        p.add_argument(
            "--epsilon",
            default=None,
            help="weight regularizer; comma list gives a per-mesh schedule",
        )
        p.add_argument("--gamma", default=None, help="three comma floats")
        p.add_argument("--delta-tol", type=float, default=None)
        p.add_argument("--max-iterations", type=int, default=None)
        p.add_argument("--freeze-tol", type=float, default=None)
        p.add_argument("--config", default=None, help="INI config file")
        p.add_argument("--out", default=None, help="output directory")
        p.add_argument("--dump-field", action="store_true", default=None)

    add_common(sub.add_parser("solve", help="run one mesh"), "n")
    add_common(sub.add_parser("study", help="run a mesh ladder"), "meshes")
    add_common(sub.add_parser("dump", help="solve and dump the field"), "n")
    return parser


_FILE_KEYS = (
    "approach",
    "hybrid",
    "omega",
    "epsilon",
    "gamma",
    "delta_tol",
    "max_iterations",
    "freeze_tol",
    "out",
    "dump_field",
)


def _read_config_file(path: str, problem: str) -> dict:
    cp = configparser.ConfigParser()
    read = cp.read(path)
    if not read:
        raise OSError(f"config file {path!r} not readable")
    merged: dict = {}
    for section in ("solver", problem):
        if not cp.has_section(section):
            continue
        for key in cp[section]:
            norm = key.replace("-", "_")
            if norm not in _FILE_KEYS:
                raise UsageError(f"unknown config key {key!r} in [{section}]")
            merged[norm] = cp[section][key]
    return merged


def _coerce_file_values(raw: dict) -> dict:
    out: dict = {}
    for key, val in raw.items():
        if key == "approach":
            out[key] = int(val)
        elif key in ("hybrid", "dump_field"):
            out[key] = val.strip().lower() in ("1", "true", "yes", "on")
        elif key in ("omega", "delta_tol", "freeze_tol"):
            out[key] = float(val)
        elif key == "max_iterations":
            out[key] = int(val)
        elif key == "epsilon":
            out[key] = _parse_floats(val)
        elif key == "gamma":
            g = _parse_floats(val)
            if len(g) != 3:
                raise UsageError("gamma needs exactly three values")
            out[key] = g
        elif key == "out":
            out[key] = val
    return out


def _resolve_run(args) -> RunConfig:
    problem = args.problem
    if problem not in available_problems():
        raise UsageError(
            f"unknown problem {problem!r}; choose from {', '.join(available_problems())}"
        )
    fileval: dict = {}
    if args.config:
        fileval = _coerce_file_values(_read_config_file(args.config, problem))

    def pick(flag, key, default=None):
        if flag is not None:
            return flag
        return fileval.get(key, default)

    meshes = (
        _parse_meshes(args.meshes) if hasattr(args, "meshes") else (int(args.n),)
    )
    if any(m < 40 for m in meshes):
        raise UsageError(f"meshes must be at least 40 cells, got {meshes}")

    epsilon = args.epsilon
    if epsilon is not None:
        epsilon = _parse_floats(epsilon)
    else:
        epsilon = fileval.get("epsilon")
    if epsilon is not None and len(epsilon) not in (1, len(meshes)):
        raise UsageError(
            f"epsilon schedule length {len(epsilon)} does not match {len(meshes)} meshes"
        )

    gamma = args.gamma
    if gamma is not None:
        gamma = _parse_floats(gamma)
        if len(gamma) != 3:
            raise UsageError("gamma needs exactly three values")
    else:
        gamma = fileval.get("gamma")

    out_dir = pick(args.out, "out") or os.environ.get("HJ_SWEEP_OUT", ".")
    return RunConfig(
        problem=problem,
        meshes=meshes,
        approach=int(pick(args.approach, "approach", 1)),
        hybrid=bool(pick(args.hybrid, "hybrid", False)),
        omega=pick(args.omega, "omega"),
        epsilon=epsilon,
        gamma=gamma,
        delta_tol=pick(args.delta_tol, "delta_tol"),
        max_iterations=pick(args.max_iterations, "max_iterations"),
        freeze_tol=pick(args.freeze_tol, "freeze_tol"),
        out_dir=str(out_dir),
        dump_field=bool(pick(args.dump_field, "dump_field", False)),
    )


def _artifact_name(rc: RunConfig, single_n: int | None = None) -> str:
    name = f"{rc.problem}_a{rc.approach}"
    if rc.hybrid:
        name += "_hybrid"
    if single_n is not None:
        name += f"_n{single_n}"
    return name


def _run_ladder(rc: RunConfig):
    """Solve every mesh; returns per-mesh results and the last run pieces."""
    results = []
    deltas = []
    fields = []
    for k, cells in enumerate(rc.meshes):
        problem, grid = make_problem(rc.problem, cells)
        cfg = rc.solver_config(k).resolved(problem)
        field, rep = solve(problem, grid, cfg)
        if not rep.converged:
            print(
                f"warning: {rc.problem} N={cells} stopped at the iteration cap "
                f"({rep.iterations}) with delta {rep.delta_history[-1]:.3e}",
                file=sys.stderr,
            )
        l1 = rep.l1_error if rep.l1_error is not None else float("nan")
        linf = rep.linf_error if rep.linf_error is not None else float("nan")
        results.append((l1, linf, rep.iterations, cfg.epsilon, rep.wall_time))
        deltas.append(rep.delta_history)
        fields.append((problem, field))
    return results, deltas, fields


def run_command(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage problems and 0 for --help
        return int(e.code or 0)

    try:
        rc = _resolve_run(args)
        os.makedirs(rc.out_dir, exist_ok=True)
        results, deltas, fields = _run_ladder(rc)

        if args.command in ("solve", "study"):
            single = rc.meshes[0] if args.command == "solve" else None
            name = _artifact_name(rc, single)
            table = ConvergenceTable.from_runs(name, rc.meshes, results)
            write_csv_report(table, deltas[-1], rc.out_dir)
            if args.command == "study" and len(rc.meshes) > 1:
                for cells, hist in zip(rc.meshes, deltas):
                    write_delta_csv(
                        hist,
                        os.path.join(rc.out_dir, f"{name}_n{cells}_delta.csv"),
                    )
            for line in table.format_lines():
                print(line)
            if rc.dump_field or args.command == "dump":
                for cells, (problem, field) in zip(rc.meshes, fields):
                    write_field_dump(
                        field,
                        problem,
                        os.path.join(
                            rc.out_dir, f"{_artifact_name(rc, cells)}_field.csv"
                        ),
                    )
        else:  # dump
            for cells, (problem, field) in zip(rc.meshes, fields):
                path = os.path.join(
                    rc.out_dir, f"{_artifact_name(rc, cells)}_field.csv"
                )
                write_field_dump(field, problem, path)
                print(path)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (DivergenceError, InitializationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DIVERGED
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
