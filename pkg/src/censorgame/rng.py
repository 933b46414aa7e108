"""Counter-based random numbers for reproducible Monte Carlo runs.

Every uniform draw is a pure function of ``(seed, trial, channel, index)``:

    h = splitmix64(seed)
    h = splitmix64(h ^ trial)
    h = splitmix64(h ^ channel)
    h = splitmix64(h ^ index)
    u = (h >> 11) * 2**-53

with the standard SplitMix64 increment and finalizer (all arithmetic mod
2**64). ``index`` is the round index for per-round draws. Because nothing is
sequential, trials can be evaluated in any order, or all at once with numpy,
and still produce bit-identical results.

Channels in use: 0 defender strategy, 1 attacker strategy, 2 round type,
3 builder inclusion.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1

CH_DEFENDER = 0
CH_ATTACKER = 1
CH_SCHEDULE = 2
CH_INCLUSION = 3

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)


def _u64(x) -> np.ndarray:
    if isinstance(x, int):
        x = x & MASK64
    return np.atleast_1d(np.asarray(x, dtype=np.uint64))


def splitmix64(x) -> np.ndarray:
    z = _u64(x) + _GOLDEN
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def hash64(seed, trial, channel, index) -> np.ndarray:
    h = splitmix64(seed)
    h = splitmix64(h ^ _u64(trial))
    h = splitmix64(h ^ _u64(channel))
    return splitmix64(h ^ _u64(index))


def uniforms(seed, trial, channel, index) -> np.ndarray:
    """Uniform doubles in [0, 1); arguments broadcast like numpy arrays."""
    h = hash64(seed, trial, channel, index)
    return (h >> np.uint64(11)).astype(np.float64) * (1.0 / (1 << 53))


class Substream:
    """Draws for a single trial."""

    def __init__(self, seed: int, trial: int = 0):
        self.seed = int(seed) & MASK64
        self.trial = int(trial)

    def uniform(self, index: int, channel: int) -> float:
        return float(uniforms(self.seed, self.trial, channel, index)[0])

    def uniform_block(self, count: int, channel: int) -> np.ndarray:
        return uniforms(self.seed, self.trial, channel, np.arange(count, dtype=np.uint64))
