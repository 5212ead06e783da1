"""Reference optimizers for the comparison protocol.

Differential evolution with the cur-to-rand/1 scheme, global-best PSO
with a hard velocity clamp, and uniform random search as the sanity
floor. All three honor the shared run contract: seeded stream, hard
evaluation budget, non-increasing best-so-far trace.
"""

from dataclasses import dataclass

import numpy as np

from .core import (
    ConfigurationError,
    EvaluationBudget,
    Individual,
    OptimizerConfig,
    RunResult,
    best_worst,
    clamp,
    greedy_replace,
    init_population,
    make_rng,
)
from .stats import population_diversity

__all__ = ["DeParams", "PsoParams", "run_de", "run_pso", "run_random_search"]


@dataclass(frozen=True)
class DeParams:
    """DE/cur-to-rand/1 with binomial crossover."""

    F: float = 0.8
    Cr: float = 0.9

    def __post_init__(self):
        if self.F < 0:
            raise ConfigurationError("scaling factor F must be non-negative")
        if not 0.0 <= self.Cr <= 1.0:
            raise ConfigurationError("crossover rate Cr must lie in [0, 1]")


@dataclass(frozen=True)
class PsoParams:
    """Global-best PSO; velocities are clamped to [-v_max, v_max]."""

    w: float = 1.0
    c1: float = 2.05
    c2: float = 2.05
    v_max: float = 2.0

    def __post_init__(self):
        if self.v_max <= 0:
            raise ConfigurationError("v_max must be positive")


def run_de(
    problem,
    config: OptimizerConfig,
    params: DeParams = None,
    rng: np.random.Generator = None,
) -> RunResult:
    """DE/cur-to-rand/1: V = x_i + F (x_r1 - x_i) + F (x_r2 - x_r3).

    r1, r2, r3 are distinct and differ from i. Binomial crossover keeps
    each mutant gene with probability Cr plus one forced dimension, so the
    trial equals the parent in every non-crossed dimension. Greedy
    replacement as in the battle-game optimizers.
    """
    if params is None:
        params = DeParams()
    if config.pop_size < 4:
        raise ConfigurationError("de needs a population of at least 4")
    if config.budget < config.pop_size:
        raise ConfigurationError("budget must cover the initial evaluations")
    if rng is None:
        rng = make_rng(config.seed)
    bounds = problem.bounds
    evaluate = problem.evaluate
    n, dim = config.pop_size, bounds.dim

    pop = init_population(n, bounds, rng)
    budget = EvaluationBudget(config.budget)
    for ind in pop:
        budget.take()
        ind.fitness = evaluate(ind.position)

    trace = [(budget.used, min(ind.fitness for ind in pop))]
    diversity = [(0, population_diversity(pop, bounds))]
    iteration = 0

    while not budget.exhausted:
        iteration += 1
        for i in range(n):
            if budget.exhausted:
                break
            ind = pop[i]
            peers = rng.choice(n - 1, size=3, replace=False)
            peers[peers >= i] += 1
            x1, x2, x3 = (pop[j].position for j in peers)
            mutant = (
                ind.position
                + params.F * (x1 - ind.position)
                + params.F * (x2 - x3)
            )
            forced = rng.integers(dim)
            cross = rng.random(dim) < params.Cr
            cross[forced] = True
            trial = clamp(np.where(cross, mutant, ind.position), bounds)
            budget.take()
            pop[i] = greedy_replace(ind, Individual(trial, evaluate(trial)))
        trace.append((budget.used, min(ind.fitness for ind in pop)))
        diversity.append((iteration, population_diversity(pop, bounds)))

    best, _ = best_worst(pop)
    return RunResult(
        best=best.copy(),
        trace=trace,
        diversity_trace=diversity,
        seed=config.seed,
        fes_used=budget.used,
    )


def run_pso(
    problem,
    config: OptimizerConfig,
    params: PsoParams = None,
    rng: np.random.Generator = None,
) -> RunResult:
    """Global-best PSO with zero initial velocities.

    Members accept every move; monotonicity lives in the personal and
    global bests, and the trace reports the global best.
    """
    if params is None:
        params = PsoParams()
    if config.pop_size < 2:
        raise ConfigurationError("pso needs a population of at least 2")
    if config.budget < config.pop_size:
        raise ConfigurationError("budget must cover the initial evaluations")
    if rng is None:
        rng = make_rng(config.seed)
    bounds = problem.bounds
    evaluate = problem.evaluate
    n, dim = config.pop_size, bounds.dim

    positions = rng.uniform(bounds.lower, bounds.upper, size=(n, dim))
    velocities = np.zeros((n, dim))
    budget = EvaluationBudget(config.budget)
    fitness = np.empty(n)
    for i in range(n):
        budget.take()
        fitness[i] = evaluate(positions[i])
    pbest = positions.copy()
    pbest_fit = fitness.copy()
    g = int(np.argmin(pbest_fit))
    gbest = pbest[g].copy()
    gbest_fit = float(pbest_fit[g])

    trace = [(budget.used, gbest_fit)]
    diversity = [(0, population_diversity(positions, bounds))]
    iteration = 0

    while not budget.exhausted:
        iteration += 1
        for i in range(n):
            if budget.exhausted:
                break
            r1 = rng.random(dim)
            r2 = rng.random(dim)
            velocities[i] = (
                params.w * velocities[i]
                + params.c1 * r1 * (pbest[i] - positions[i])
                + params.c2 * r2 * (gbest - positions[i])
            )
            np.clip(velocities[i], -params.v_max, params.v_max, out=velocities[i])
            positions[i] = clamp(positions[i] + velocities[i], bounds)
            budget.take()
            f = evaluate(positions[i])
            if f < pbest_fit[i]:
                pbest_fit[i] = f
                pbest[i] = positions[i]
                if f < gbest_fit:
                    gbest_fit = float(f)
                    gbest = positions[i].copy()
        trace.append((budget.used, gbest_fit))
        diversity.append((iteration, population_diversity(positions, bounds)))

    return RunResult(
        best=Individual(gbest.copy(), gbest_fit),
        trace=trace,
        diversity_trace=diversity,
        seed=config.seed,
        fes_used=budget.used,
    )


def run_random_search(
    problem,
    config: OptimizerConfig,
    rng: np.random.Generator = None,
) -> RunResult:
    """Budget i.i.d. uniform samples; the best is kept.

    The trace records every improvement plus the final budget point; no
    persistent population exists, so the diversity trace is empty.
    """
    if config.budget < 1:
        raise ConfigurationError("budget must be at least 1")
    if rng is None:
        rng = make_rng(config.seed)
    bounds = problem.bounds
    evaluate = problem.evaluate

    best_pos = None
    best_fit = np.inf
    trace = []
    for k in range(1, config.budget + 1):
        x = rng.uniform(bounds.lower, bounds.upper)
        f = evaluate(x)
        if best_pos is None or f < best_fit:
            best_fit = float(f)
            best_pos = x
            trace.append((k, best_fit))
    if trace[-1][0] != config.budget:
        trace.append((config.budget, best_fit))

    return RunResult(
        best=Individual(best_pos.copy(), best_fit),
        trace=trace,
        diversity_trace=[],
        seed=config.seed,
        fes_used=config.budget,
    )
