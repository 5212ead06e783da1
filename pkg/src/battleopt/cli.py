"""Seeded experiment runner.

Three subcommands: ``run`` executes one algorithm on one problem over a
number of trials and writes per-trial traces plus a summary; ``compare``
runs several algorithms under equal budgets and emits the mean/std table
with significance marks and average ranks; ``arnas`` searches a lookup
table over the discrete cell space and reports the regret against the
brute-force optimum.

Trial k uses seed (base seed + k), so any trial can be reproduced in
isolation and reruns are byte-identical. Every output file embeds the
resolved configuration. Exit status: 0 on success, 2 on configuration
errors, 1 on runtime errors. The default output directory comes from
``BATTLEOPT_OUT`` (falling back to ./battleopt-out) unless --out is given.
"""

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from .baselines import DeParams, PsoParams, run_de, run_pso, run_random_search
from .core import ConfigurationError, OptimizerConfig, RunResult, trial_rng
from .discrete import (
    TableError,
    brute_force_optimum,
    code_to_string,
    decode,
    load_table,
    table_problem,
)
from .embgo import EmbgoParams, run_embgo
from .mbgo import run_mbgo
from .problems import resolve_problem
from .stats import ComparisonMatrix, average_rank, significance_marks

__all__ = ["main", "ALGORITHMS"]

ENV_OUT_DIR = "BATTLEOPT_OUT"
_FALLBACK_OUT = "battleopt-out"


def _run_mbgo(problem, config, rng, params):
    return run_mbgo(
        problem,
        config,
        rng,
        delta_low=params.get("delta_low", 0.8),
        delta_high=params.get("delta_high", 1.2),
    )


def _run_embgo(problem, config, rng, params):
    ep = EmbgoParams(
        delta_low=params.get("delta_low", 0.8),
        delta_high=params.get("delta_high", 1.2),
        beta=params.get("beta", 1.5),
        independent_r=bool(params.get("independent_r", 1.0)),
    )
    return run_embgo(problem, config, rng, ep)


def _run_de(problem, config, rng, params):
    dp = DeParams(F=params.get("F", 0.8), Cr=params.get("Cr", 0.9))
    return run_de(problem, config, dp, rng)


def _run_pso(problem, config, rng, params):
    pp = PsoParams(
        w=params.get("w", 1.0),
        c1=params.get("c1", 2.05),
        c2=params.get("c2", 2.05),
        v_max=params.get("v_max", 2.0),
    )
    return run_pso(problem, config, pp, rng)


def _run_random(problem, config, rng, params):
    return run_random_search(problem, config, rng)


ALGORITHMS = {
    "mbgo": _run_mbgo,
    "embgo": _run_embgo,
    "de": _run_de,
    "pso": _run_pso,
    "random": _run_random,
}


def _parse_params(raw: list) -> dict:
    """--param entries: 'key=value' global or 'algorithm.key=value' scoped."""
    out: dict = {"": {}}
    for item in raw or []:
        if "=" not in item:
            raise ConfigurationError(f"--param expects key=value, got {item!r}")
        key, _, value = item.partition("=")
        key = key.strip()
        try:
            number = float(value)
        except ValueError:
            raise ConfigurationError(f"--param value must be numeric, got {item!r}")
        if "." in key:
            scope, _, name = key.partition(".")
            out.setdefault(scope.strip(), {})[name.strip()] = number
        else:
            out[""][key] = number
    return out


def _params_for(algorithm: str, parsed: dict) -> dict:
    merged = dict(parsed.get("", {}))
    merged.update(parsed.get(algorithm, {}))
    return merged


def _resolve_out(args) -> Path:
    out = args.out or os.environ.get(ENV_OUT_DIR) or _FALLBACK_OUT
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _slug(name: str) -> str:
    return name.replace(":", "-").replace("[", "-").replace("]", "")


def _config_header(pairs: dict) -> str:
    return "".join(f"# {key}={value}\n" for key, value in pairs.items())


def _execute_trials(problem, algorithm, params, pop, budget, trials, seed):
    runner = ALGORITHMS[algorithm]
    results = []
    for k in range(trials):
        config = OptimizerConfig(pop_size=pop, budget=budget, seed=seed + k)
        results.append(runner(problem, config, trial_rng(seed, k), params))
    return results


def _write_trace(path: Path, header: str, result: RunResult) -> None:
    diversity = dict(enumerate(pd for _, pd in result.diversity_trace))
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(header)
        handle.write("fes,best_fitness,diversity\n")
        for idx, (fes, fit) in enumerate(result.trace):
            pd = diversity.get(idx)
            pd_text = repr(pd) if pd is not None else "nan"
            handle.write(f"{fes},{fit!r},{pd_text}\n")


def _summary_rows(results) -> tuple:
    finals = np.array([r.final_fitness for r in results])
    return finals, {
        "mean": repr(float(finals.mean())),
        "std": repr(float(finals.std())),
        "best": repr(float(finals.min())),
        "worst": repr(float(finals.max())),
    }


def cmd_run(args) -> int:
    if args.trials < 1:
        raise ConfigurationError("--trials must be at least 1")
    if args.algorithm not in ALGORITHMS:
        raise ConfigurationError(
            f"unknown algorithm {args.algorithm!r}; known: {', '.join(sorted(ALGORITHMS))}"
        )
    problem = resolve_problem(args.problem, args.dim)
    params = _params_for(args.algorithm, _parse_params(args.param))
    out = _resolve_out(args)
    header_pairs = {
        "problem": problem.name,
        "dim": problem.dim,
        "algorithm": args.algorithm,
        "pop": args.pop,
        "budget": args.budget,
        "trials": args.trials,
        "seed": args.seed,
        "params": repr(sorted(params.items())),
    }
    header = _config_header(header_pairs)

    results = _execute_trials(
        problem, args.algorithm, params, args.pop, args.budget, args.trials, args.seed
    )
    stem = f"{_slug(problem.name)}_{args.algorithm}"
    for k, result in enumerate(results):
        _write_trace(out / f"{stem}_trial{k:03d}.csv", header, result)

    finals, stats_row = _summary_rows(results)
    summary_path = out / f"{stem}_summary.csv"
    with open(summary_path, "w", encoding="utf-8") as handle:
        handle.write(header)
        handle.write("trial,seed,final_fitness,fes_used\n")
        for k, result in enumerate(results):
            handle.write(f"{k},{result.seed},{result.final_fitness!r},{result.fes_used}\n")
        for key, value in stats_row.items():
            handle.write(f"# {key}={value}\n")
    print(f"wrote {summary_path} ({args.trials} trials)")
    for key, value in stats_row.items():
        print(f"  {key} = {value}")
    return 0


def cmd_compare(args) -> int:
    entries = list(args.algorithm)
    if len(entries) < 2:
        raise ConfigurationError("compare needs at least two --algorithm entries")
    # duplicate entries get distinct column labels (embgo, embgo#2, ...)
    labels, base_of, counts = [], {}, {}
    for name in entries:
        if name not in ALGORITHMS:
            raise ConfigurationError(f"unknown algorithm {name!r}")
        counts[name] = counts.get(name, 0) + 1
        label = name if counts[name] == 1 else f"{name}#{counts[name]}"
        labels.append(label)
        base_of[label] = name
    reference = args.reference or labels[0]
    if reference not in labels:
        raise ConfigurationError(f"--reference {reference!r} is not among the algorithms")
    if args.trials < 2:
        raise ConfigurationError("compare needs at least 2 trials for the tests")
    parsed = _parse_params(args.param)
    budgets = {
        label: int(_params_for(base_of[label], parsed).get("budget", args.budget))
        for label in labels
    }
    if len(set(budgets.values())) != 1:
        raise ConfigurationError(f"unequal budgets {budgets} make the comparison unfair")

    problems = [resolve_problem(name, args.dim) for name in args.problem]
    samples = {}
    for problem in problems:
        for label in labels:
            params = _params_for(base_of[label], parsed)
            params.pop("budget", None)
            results = _execute_trials(
                problem, base_of[label], params, args.pop, args.budget,
                args.trials, args.seed,
            )
            samples[(problem.name, label)] = [r.final_fitness for r in results]
    matrix = ComparisonMatrix(
        problems=[p.name for p in problems], algorithms=labels, samples=samples
    )
    marks = significance_marks(matrix, reference, alpha=args.alpha)
    ranks = average_rank(matrix)

    out = _resolve_out(args)
    report_path = out / "comparison.txt"
    with open(report_path, "w", encoding="utf-8") as handle:
        handle.write(
            _config_header(
                {
                    "problems": ",".join(p.name for p in problems),
                    "algorithms": ",".join(labels),
                    "reference": reference,
                    "dim": args.dim,
                    "pop": args.pop,
                    "budget": args.budget,
                    "trials": args.trials,
                    "seed": args.seed,
                    "alpha": args.alpha,
                }
            )
        )
        width = max(len(p.name) for p in problems) + 2
        col = 26
        handle.write("problem".ljust(width))
        for alg in labels:
            label = alg + (" (ref)" if alg == reference else "")
            handle.write(label.ljust(col))
        handle.write("\n")
        for problem in problems:
            handle.write(problem.name.ljust(width))
            for alg in labels:
                mean = matrix.mean(problem.name, alg)
                std = matrix.std(problem.name, alg)
                mark = marks.get((problem.name, alg), " ")
                handle.write(f"{mean:.4e} ({std:.2e}) {mark}".ljust(col))
            handle.write("\n")
        handle.write("avg rank".ljust(width))
        for alg in labels:
            handle.write(f"{ranks[alg]:.2f}".ljust(col))
        handle.write("\n")
        counts = {
            mark: sum(1 for v in marks.values() if v == mark) for mark in "+~-"
        }
        handle.write(f"# marks +/~/-: {counts['+']}/{counts['~']}/{counts['-']}\n")
    print(report_path.read_text(), end="")
    print(f"wrote {report_path}")
    return 0


def cmd_arnas(args) -> int:
    if args.algorithm not in ALGORITHMS:
        raise ConfigurationError(f"unknown algorithm {args.algorithm!r}")
    table = load_table(args.table)
    if not table.complete:
        raise ConfigurationError(f"table {args.table} is incomplete; arnas needs all codes")
    problem = table_problem(table)
    params = _params_for(args.algorithm, _parse_params(args.param))
    pop = args.pop if args.pop is not None else 50
    budget = args.budget if args.budget is not None else 5000
    trials = args.trials
    opt_code, opt_acc = brute_force_optimum(table)

    results = _execute_trials(problem, args.algorithm, params, pop, budget, trials, args.seed)
    out = _resolve_out(args)
    header = _config_header(
        {
            "table": args.table,
            "problem": problem.name,
            "algorithm": args.algorithm,
            "pop": pop,
            "budget": budget,
            "trials": trials,
            "seed": args.seed,
            "optimum_code": code_to_string(opt_code),
            "optimum_accuracy": repr(opt_acc),
        }
    )
    report_path = out / "arnas_report.txt"
    with open(report_path, "w", encoding="utf-8") as handle:
        handle.write(header)
        handle.write("trial,seed,code,accuracy,regret\n")
        for k, result in enumerate(results):
            code = decode(result.best.position)
            acc = -result.final_fitness
            handle.write(
                f"{k},{result.seed},{code_to_string(code)},{acc!r},{opt_acc - acc!r}\n"
            )
        _write_trace(out / "arnas_trace_trial000.csv", header, results[0])
    print(report_path.read_text(), end="")
    print(f"wrote {report_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="battleopt",
        description="Seeded metaheuristic experiment runner",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--pop", type=int, default=None, help="population size")
        p.add_argument("--budget", type=int, default=None, help="fitness-evaluation budget")
        p.add_argument("--trials", type=int, default=1, help="number of seeded trials")
        p.add_argument("--seed", type=int, default=0, help="base seed; trial k uses seed+k")
        p.add_argument("--out", default=None, help=f"output directory (default ${ENV_OUT_DIR})")
        p.add_argument(
            "--param",
            action="append",
            metavar="KEY=VALUE",
            help="algorithm parameter override, optionally scoped as alg.key=value",
        )

    run_p = sub.add_parser("run", help="run one algorithm on one problem")
    run_p.add_argument("--problem", required=True, help="problem name, e.g. sphere or rastrigin:sr7")
    run_p.add_argument("--algorithm", required=True, help=f"one of {', '.join(sorted(ALGORITHMS))}")
    run_p.add_argument("--dim", type=int, default=10)
    common(run_p)
    run_p.set_defaults(func=cmd_run, pop=50, budget=10000)

    cmp_p = sub.add_parser("compare", help="compare algorithms under equal budgets")
    cmp_p.add_argument("--problem", action="append", required=True, help="repeatable problem name")
    cmp_p.add_argument("--algorithm", action="append", required=True, help="repeatable algorithm name")
    cmp_p.add_argument("--reference", default=None, help="reference algorithm for the marks")
    cmp_p.add_argument("--dim", type=int, default=10)
    cmp_p.add_argument("--alpha", type=float, default=0.05)
    common(cmp_p)
    cmp_p.set_defaults(func=cmd_compare, pop=50, budget=10000)

    arnas_p = sub.add_parser("arnas", help="discrete cell search over a lookup table")
    arnas_p.add_argument("--table", required=True, help="path to a code,accuracy table file")
    arnas_p.add_argument("--algorithm", default="embgo")
    common(arnas_p)
    arnas_p.set_defaults(func=cmd_arnas)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "pop", None) is None:
        args.pop = 50
    if getattr(args, "budget", None) is None and args.command != "arnas":
        args.budget = 10000
    try:
        return args.func(args)
    except (ConfigurationError, TableError, KeyError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # runtime failure
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
