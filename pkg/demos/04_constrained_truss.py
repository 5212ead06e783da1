"""Constrained design optimization through the static penalty.

The three-bar truss minimizes structural volume over two cross-section
areas subject to three stress constraints. The penalty weight 1e7 makes
any violation dominate the objective, so optimizers converge to the
feasible optimum near 263.896.
"""

import numpy as np

import battleopt as bo

problem = bo.three_bar_truss_problem(penalty_weight=1e7)
print(f"problem: {problem.name}, bounds [0,1]^2, known optimum ~{problem.known_optimum:.4f}\n")

# hand-evaluate a few designs
for x in ([1.0, 1.0], [0.7887, 0.4082], [0.3, 0.2]):
    f, g = bo.three_bar_truss(np.array(x))
    feasible = all(gi <= 0 for gi in g)
    print(f"x={x}: volume {f:8.3f}, constraints {['%+.3f' % gi for gi in g]}, "
          f"{'feasible' if feasible else 'INFEASIBLE'}")

print("\n30 seeded runs, 10,000 evaluations each:")
finals = []
for seed in range(30):
    config = bo.OptimizerConfig(pop_size=100, budget=10_000, seed=seed)
    finals.append(bo.run_embgo(problem, config).final_fitness)
finals = np.array(finals)
print(f"  best  {finals.min():.6f}")
print(f"  mean  {finals.mean():.6f}")
print(f"  worst {finals.max():.6f}")

best_seed = int(np.argmin(finals))
result = bo.run_embgo(problem, bo.OptimizerConfig(pop_size=100, budget=10_000, seed=best_seed))
f, g = bo.three_bar_truss(result.best.position)
print(f"\nbest design x = {result.best.position}, volume {f:.6f}")
print(f"stress constraints at the optimum: {g} (first one active)")
