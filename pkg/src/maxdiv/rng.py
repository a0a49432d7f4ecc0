"""Reproducible random generators keyed by (seed, stream)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["RandomSource", "uniform_open"]


@dataclass(frozen=True)
class RandomSource:
    """Address of a reproducible random stream.

    The same (seed, stream, branch) triple always yields a generator
    producing the same draw sequence; distinct stream indices (and
    distinct substream branches under one stream) give statistically
    independent generators for the same seed.
    """

    seed: int
    stream: int = 0
    branch: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.seed < 0 or self.stream < 0 or any(b < 0 for b in self.branch):
            raise ValueError("seed, stream, and branch indices must be nonnegative integers")

    def generator(self) -> np.random.Generator:
        return np.random.default_rng(
            np.random.SeedSequence(self.seed, spawn_key=(self.stream, *self.branch))
        )

    def substream(self, index: int) -> "RandomSource":
        """Child source; children of distinct indices never collide across sources."""
        return RandomSource(self.seed, self.stream, self.branch + (index,))


def uniform_open(rng: np.random.Generator, size: int | None = None):
    """Uniform draws restricted to the open interval (0, 1).

    numpy's random() covers [0, 1); exact zeros are redrawn because the
    quantile transforms used downstream are undefined at u = 0.
    """
    if size is None:
        u = rng.random()
        while u == 0.0:
            u = rng.random()
        return u
    u = rng.random(size)
    zero = u == 0.0
    while np.any(zero):
        u[zero] = rng.random(int(zero.sum()))
        zero = u == 0.0
    return u
