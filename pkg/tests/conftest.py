import math

import numpy as np
import pytest

from battleopt import OptimizerConfig, make_problem, run_random_search


class FixedRng:
    """Scripted stand-in for a numpy Generator.

    ``uniforms`` feeds random() and uniform() as unit draws (uniform
    scales them into [low, high]), ``normals`` feeds normal() as standard
    draws scaled by loc/scale, ``integers`` feeds integers() and choice().
    """

    def __init__(self, uniforms=(), normals=(), integers=()):
        self.uniforms = list(uniforms)
        self.normals = list(normals)
        self.ints = list(integers)

    def random(self, size=None):
        if size is None:
            return self.uniforms.pop(0)
        return np.array([self.uniforms.pop(0) for _ in range(size)])

    def uniform(self, low=0.0, high=1.0, size=None):
        if size is None:
            return low + (high - low) * self.uniforms.pop(0)
        return np.array(
            [low + (high - low) * self.uniforms.pop(0) for _ in range(size)]
        )

    def normal(self, loc=0.0, scale=1.0, size=None):
        if size is None:
            return loc + scale * self.normals.pop(0)
        return np.array([loc + scale * self.normals.pop(0) for _ in range(size)])

    def integers(self, low, high=None, size=None):
        if size is None:
            return self.ints.pop(0)
        return np.array([self.ints.pop(0) for _ in range(size)], dtype=int)

    def choice(self, n, size=None, replace=True):
        return np.array([self.ints.pop(0) for _ in range(size)], dtype=int)


class RecordingRng:
    """Pass-through wrapper that records every unit uniform drawn."""

    def __init__(self, rng):
        self._rng = rng
        self.uniform_draws = []

    def random(self, size=None):
        value = self._rng.random(size)
        if size is None:
            self.uniform_draws.append(value)
        else:
            self.uniform_draws.extend(value.tolist())
        return value

    def __getattr__(self, name):
        return getattr(self._rng, name)


@pytest.fixture
def fixed_rng():
    return FixedRng


@pytest.fixture(scope="session")
def random_sphere_finals():
    """Random-search oracle: 10 final fitnesses on the 10-D sphere, 20k FEs."""
    problem = make_problem("sphere", 10)
    finals = []
    for seed in range(10):
        config = OptimizerConfig(pop_size=50, budget=20000, seed=seed)
        finals.append(run_random_search(problem, config).final_fitness)
    return finals


def make_individual(position, fitness=math.nan):
    from battleopt import Individual

    return Individual(np.asarray(position, dtype=float), fitness)
