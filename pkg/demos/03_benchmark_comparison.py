"""Desk-scale algorithm comparison with the full statistical protocol.

Runs four optimizers on three transformed benchmarks, then applies the
pairwise Mann-Whitney tests with Holm correction versus a reference and
reports marks and average ranks. Expect a couple of minutes.
"""

import numpy as np

import battleopt as bo

PROBLEMS = ["sphere:sr", "rastrigin:sr", "bent-cigar:sr"]
ALGORITHMS = {
    "embgo": lambda p, c: bo.run_embgo(p, c),
    "mbgo": lambda p, c: bo.run_mbgo(p, c),
    "de": lambda p, c: bo.run_de(p, c),
    "random": lambda p, c: bo.run_random_search(p, c),
}
TRIALS = 12
DIM = 10

samples = {}
for spec in PROBLEMS:
    problem = bo.resolve_problem(spec, DIM)
    for alg, run in ALGORITHMS.items():
        finals = []
        for trial in range(TRIALS):
            config = bo.OptimizerConfig(pop_size=50, budget=10_000, seed=trial)
            finals.append(run(problem, config).final_fitness)
        samples[(spec, alg)] = finals
        print(f"{spec:14s} {alg:7s} mean {np.mean(finals):.4e} std {np.std(finals):.2e}")

matrix = bo.ComparisonMatrix(
    problems=PROBLEMS, algorithms=list(ALGORITHMS), samples=samples
)
marks = bo.significance_marks(matrix, reference="embgo", alpha=0.05)
ranks = bo.average_rank(matrix)

print("\nmarks versus embgo ('+' embgo significantly better, '-' worse, '~' none):")
for spec in PROBLEMS:
    row = "  ".join(f"{alg}:{marks.get((spec, alg), ' ')}" for alg in ALGORITHMS if alg != "embgo")
    print(f"  {spec:14s} {row}")

print("\naverage ranks (lower is better):")
for alg, rank in sorted(ranks.items(), key=lambda kv: kv[1]):
    print(f"  {alg:7s} {rank:.2f}")
