"""Population diversity as an exploration/exploitation lens.

The diversity indicator is the normalized mean absolute deviation from
the population centroid, always in [0, 1]. Tracking it alongside the
fitness trace shows how each battle-game variant trades exploration for
exploitation as the budget drains.
"""

import numpy as np

import battleopt as bo

problem = bo.resolve_problem("rastrigin:sr", 10)
config = bo.OptimizerConfig(pop_size=50, budget=15_000, seed=4)

mbgo = bo.run_mbgo(problem, config)
embgo = bo.run_embgo(problem, config)

print(f"{problem.name}: final fitness mbgo {mbgo.final_fitness:.3e}, "
      f"embgo {embgo.final_fitness:.3e}\n")

print("diversity trace (iteration, PD) at matched evaluation counts:")
print(f"{'FEs':>8s} {'mbgo PD':>12s} {'embgo PD':>12s}")
mbgo_pd = dict(mbgo.diversity_trace)
embgo_pd = dict(embgo.diversity_trace)
mbgo_fes = {it: fes for it, (fes, _) in enumerate(mbgo.trace)}
embgo_fes = {it: fes for it, (fes, _) in enumerate(embgo.trace)}

# mbgo spends 2N evaluations per iteration, embgo N: iteration k of mbgo
# matches iteration 2k of embgo at equal budgets.
for k in range(0, len(mbgo.diversity_trace), 20):
    if 2 * k in embgo_pd:
        print(f"{mbgo_fes[k]:8d} {mbgo_pd[k]:12.5f} {embgo_pd[2 * k]:12.5f}")

final_iter_m = max(mbgo_pd)
final_iter_e = max(embgo_pd)
print(f"\nfinal diversity: mbgo {mbgo_pd[final_iter_m]:.5f} "
      f"(iteration {final_iter_m}), embgo {embgo_pd[final_iter_e]:.5f} "
      f"(iteration {final_iter_e})")
