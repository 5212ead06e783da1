"""Multiplayer battle game optimizer: safe-zone movement plus enemy battles.

Each iteration makes two full passes over the population. The movement
pass steers every member relative to a hypersphere (the safe zone)
centered on the current best; the battle pass confronts every member
with one random enemy. Every candidate is clamped to the box, evaluated,
and kept only on strict improvement, so two evaluations per member are
consumed per full iteration.
"""

import math

import numpy as np

from .core import (
    Bounds,
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

__all__ = [
    "RADIUS_EPSILON",
    "SafeZone",
    "safe_zone_radius",
    "in_safe_zone",
    "move_inside",
    "move_outside",
    "battle_dir",
    "battle_vs_stronger",
    "battle_vs_weaker",
    "pick_enemy",
    "run_mbgo",
]

# Keeps the safe-zone radius positive when best and worst coincide.
RADIUS_EPSILON = 1e-12


class SafeZone:
    """Hypersphere around the current best individual."""

    __slots__ = ("center", "radius")

    def __init__(self, center: np.ndarray, radius: float):
        self.center = center
        self.radius = radius


def safe_zone_radius(
    best: Individual,
    worst: Individual,
    rng: np.random.Generator,
    delta_low: float = 0.8,
    delta_high: float = 1.2,
) -> SafeZone:
    """Zone centered on the best member, radius (||best - worst|| + eps) * delta.

    delta ~ U(delta_low, delta_high) amplifies the best-to-worst distance;
    the epsilon keeps the radius positive for a collapsed population.
    """
    delta = rng.uniform(delta_low, delta_high)
    gap = float(np.linalg.norm(best.position - worst.position))
    return SafeZone(center=best.position, radius=(gap + RADIUS_EPSILON) * delta)


def in_safe_zone(x: Individual, zone: SafeZone) -> bool:
    """Euclidean membership test, boundary inclusive."""
    return float(np.linalg.norm(x.position - zone.center)) <= zone.radius


def move_inside(
    x_i: Individual,
    x_best: Individual,
    rng: np.random.Generator,
    bounds: Bounds = None,
) -> np.ndarray:
    """In-zone move: x_i + x_best * sin(2 pi r), one scalar r per call."""
    r = rng.random()
    candidate = x_i.position + x_best.position * math.sin(2.0 * math.pi * r)
    return clamp(candidate, bounds) if bounds is not None else candidate


def move_outside(
    x_i: Individual,
    x_best: Individual,
    rng: np.random.Generator,
    bounds: Bounds = None,
) -> np.ndarray:
    """Out-of-zone move, each dimension independently.

    With its own r ~ U(0, 1) per dimension: a standard-normal jitter when
    r < 0.5, otherwise a convex step toward the best scaled by the same r.
    Draw order is r vector first, then the normal jitter vector.
    """
    d = x_i.position.size
    r = rng.random(d)
    theta = rng.normal(0.0, 1.0, d)
    toward_best = x_i.position + (x_best.position - x_i.position) * r
    candidate = np.where(r < 0.5, x_i.position + theta, toward_best)
    return clamp(candidate, bounds) if bounds is not None else candidate


def battle_dir(x_i: Individual, x_enemy: Individual) -> np.ndarray:
    """Differential vector pointing away from the fitter combatant.

    x_i - x_enemy when x_i is strictly fitter, x_enemy - x_i otherwise
    (ties take the second branch).
    """
    if x_i.fitness < x_enemy.fitness:
        return x_i.position - x_enemy.position
    return x_enemy.position - x_i.position


def battle_vs_stronger(
    x_i: Individual,
    x_enemy: Individual,
    direction: np.ndarray,
    rng: np.random.Generator,
    bounds: Bounds = None,
) -> np.ndarray:
    """Confronting a stronger enemy: per dimension, step from self or enemy.

    Each dimension draws its own r, used both to pick the base point
    (self when r < 0.5, enemy otherwise) and to scale the step.
    """
    d = x_i.position.size
    r = rng.random(d)
    candidate = np.where(
        r < 0.5, x_i.position + direction * r, x_enemy.position + direction * r
    )
    return clamp(candidate, bounds) if bounds is not None else candidate


def battle_vs_weaker(
    x_i: Individual,
    direction: np.ndarray,
    rng: np.random.Generator,
    bounds: Bounds = None,
) -> np.ndarray:
    """Confronting a weaker enemy: x_i + dir * cos(2 pi r), scalar r."""
    r = rng.random()
    candidate = x_i.position + direction * math.cos(2.0 * math.pi * r)
    return clamp(candidate, bounds) if bounds is not None else candidate


def pick_enemy(i: int, n: int, rng: np.random.Generator) -> int:
    """Uniform index over the other n - 1 members (never i itself)."""
    j = int(rng.integers(n - 1))
    return j + 1 if j >= i else j


def run_mbgo(
    problem,
    config: OptimizerConfig,
    rng: np.random.Generator = None,
    *,
    delta_low: float = 0.8,
    delta_high: float = 1.2,
    movement_phase: bool = True,
    battle_phase: bool = True,
) -> RunResult:
    """Full two-phase run until the evaluation budget is exhausted.

    The safe zone is recomputed from the current best/worst before each
    individual's movement step, and enemies are redrawn per battle step.
    The phase flags exist for ablation studies only.
    """
    if config.pop_size < 2:
        raise ConfigurationError("mbgo needs a population of at least 2")
    if config.budget < config.pop_size:
        raise ConfigurationError("budget must cover the initial evaluations")
    if rng is None:
        rng = make_rng(config.seed)
    bounds = problem.bounds
    evaluate = problem.evaluate

    pop = init_population(config.pop_size, bounds, rng)
    budget = EvaluationBudget(config.budget)
    for ind in pop:
        budget.take()
        ind.fitness = evaluate(ind.position)

    trace = [(budget.used, min(ind.fitness for ind in pop))]
    diversity = [(0, population_diversity(pop, bounds))]
    iteration = 0

    while not budget.exhausted:
        iteration += 1
        if movement_phase:
            for i in range(len(pop)):
                if budget.exhausted:
                    break
                ind = pop[i]
                best, worst = best_worst(pop)
                zone = safe_zone_radius(best, worst, rng, delta_low, delta_high)
                if in_safe_zone(ind, zone):
                    candidate = move_inside(ind, best, rng, bounds)
                else:
                    candidate = move_outside(ind, best, rng, bounds)
                budget.take()
                pop[i] = greedy_replace(ind, Individual(candidate, evaluate(candidate)))
        if battle_phase:
            for i in range(len(pop)):
                if budget.exhausted:
                    break
                ind = pop[i]
                enemy = pop[pick_enemy(i, len(pop), rng)]
                direction = battle_dir(ind, enemy)
                if enemy.fitness < ind.fitness:
                    candidate = battle_vs_stronger(ind, enemy, direction, rng, bounds)
                else:
                    candidate = battle_vs_weaker(ind, direction, rng, bounds)
                budget.take()
                pop[i] = greedy_replace(ind, Individual(candidate, evaluate(candidate)))
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
