"""Quickstart: one seeded run of each optimizer on the 10-D sphere.

Every run is a pure function of (problem, config, seed): rerunning this
script prints exactly the same numbers.
"""

import numpy as np

import battleopt as bo

problem = bo.make_problem("sphere", 10)
config = bo.OptimizerConfig(pop_size=50, budget=10_000, seed=1)

runners = {
    "mbgo": bo.run_mbgo,
    "embgo": bo.run_embgo,
    "de": bo.run_de,
    "pso": bo.run_pso,
    "random": bo.run_random_search,
}

print(f"problem: {problem.name} (dim={problem.dim}), budget {config.budget} FEs\n")
for name, run in runners.items():
    result = run(problem, config)
    print(f"{name:7s} final fitness {result.final_fitness:.4e} "
          f"after {result.fes_used} evaluations")

# The best-so-far trace is non-increasing and plot-ready.
result = bo.run_embgo(problem, config)
fes, fits = zip(*result.trace)
print("\nembgo convergence (every 40th checkpoint):")
for f, v in list(zip(fes, fits))[::40]:
    print(f"  {f:6d} FEs -> {v:.3e}")
