"""Defender and attacker strategies for the single-builder games.

Defenders implement ``next_bid(state, round_type)``; attackers implement
``respond(state, round_type, defender_bid)`` and see the defender's bid before
answering. Every strategy carries a ``descriptor`` (``kind`` plus numeric
parameters) that round-trips through the CLI config.

Whenever a strategy decides to take a round it bids exactly the minimum that
wins it: the defender's bid in regular rounds, ``k`` times it in special ones.
"""

from __future__ import annotations

from typing import Optional

from .core import GameState, RoundType, winning_cost
from .rng import Substream
from .solver import (
    ThresholdTable,
    get_table,
    optimal_attacker_response,
    optimal_defender_bid,
)


class StrategyConfigError(ValueError):
    pass


class DefenderStrategy:
    kind = "defender"

    def next_bid(self, state: GameState, round_type: RoundType):
        raise NotImplementedError

    @property
    def descriptor(self) -> dict:
        return {"kind": self.kind}


class AttackerStrategy:
    kind = "attacker"

    def respond(self, state: GameState, round_type: RoundType, defender_bid):
        raise NotImplementedError

    @property
    def descriptor(self) -> dict:
        return {"kind": self.kind}


class ConstantFractionDefender(DefenderStrategy):
    """Bid ``d0 / n0`` forever, where ``(d0, n0)`` are the budget and required
    wins when the strategy is adopted (the first query if not given)."""

    kind = "constant_fraction"

    def __init__(self, adoption_state: Optional[GameState] = None):
        self.bid = None
        if adoption_state is not None:
            self._adopt(adoption_state)

    def _adopt(self, state):
        if state.n < 1:
            raise StrategyConfigError("cannot adopt at a state with no wins left")
        self.bid = state.d / state.n

    def next_bid(self, state, round_type):
        if self.bid is None:
            self._adopt(state)
        # rounding in d0 - j * (d0 / n0) can leave d a few ulps below the bid
        return min(self.bid, state.d)

    @property
    def descriptor(self):
        return {"kind": self.kind}


class OptimalDefender(DefenderStrategy):
    kind = "optimal"

    def __init__(self, k, table: Optional[ThresholdTable] = None, epsilon=None):
        self.k = k
        self.table = table if table is not None else get_table(k)
        self.epsilon = epsilon

    def next_bid(self, state, round_type):
        return optimal_defender_bid(state, round_type, self.k, self.table, self.epsilon)

    @property
    def descriptor(self):
        d = {"kind": self.kind}
        if self.epsilon is not None:
            d["epsilon"] = self.epsilon
        return d


class RandomDefender(DefenderStrategy):
    """Bid a uniform fraction in ``[low, high]`` of the current budget."""

    kind = "random"

    def __init__(self, stream: Substream, low: float = 0.0, high: float = 1.0):
        if not 0 <= low <= high <= 1:
            raise StrategyConfigError("need 0 <= low <= high <= 1")
        self.stream = stream
        self.low = low
        self.high = high
        self._calls = 0

    def next_bid(self, state, round_type):
        u = self.stream.uniform(self._calls, channel=0)
        self._calls += 1
        frac = self.low + (self.high - self.low) * u
        return min(state.d, frac * state.d)

    @property
    def descriptor(self):
        return {"kind": self.kind, "low": self.low, "high": self.high}


class ThresholdFilterAttacker(AttackerStrategy):
    """Take a round iff its minimal winning cost is at most ``theta`` and affordable."""

    kind = "threshold_filter"

    def __init__(self, theta, k=1.0):
        if theta < 0:
            raise StrategyConfigError("theta must be nonnegative")
        self.theta = theta
        self.k = k

    def respond(self, state, round_type, defender_bid):
        cost = winning_cost(round_type, self.k, defender_bid)
        if cost <= self.theta and cost <= state.a:
            return cost
        return 0

    @property
    def descriptor(self):
        return {"kind": self.kind, "theta": self.theta}


class FractionAttacker(AttackerStrategy):
    """Take every round the defender bids at most ``d0 / n0`` on, paying the
    minimal winning cost (so up to ``k d0 / n0`` in special rounds)."""

    kind = "fraction"

    def __init__(self, k=1.0, adoption_state: Optional[GameState] = None):
        self.k = k
        self.cap = None
        if adoption_state is not None:
            self._adopt(adoption_state)

    def _adopt(self, state):
        if state.n < 1:
            raise StrategyConfigError("cannot adopt at a state with no wins left")
        self.cap = state.d / state.n

    def respond(self, state, round_type, defender_bid):
        if self.cap is None:
            self._adopt(state)
        cost = winning_cost(round_type, self.k, defender_bid)
        if defender_bid <= self.cap and cost <= state.a:
            return cost
        return 0

    @property
    def descriptor(self):
        return {"kind": self.kind}


class OptimalAttacker(AttackerStrategy):
    kind = "optimal"

    def __init__(self, k, table: Optional[ThresholdTable] = None):
        self.k = k
        self.table = table if table is not None else get_table(k)

    def respond(self, state, round_type, defender_bid):
        return optimal_attacker_response(state, round_type, self.k, defender_bid, self.table)


class RandomAttacker(AttackerStrategy):
    """Counter-bid a uniform fraction in ``[low, high]`` of the remaining budget."""

    kind = "random"

    def __init__(self, stream: Substream, low: float = 0.0, high: float = 1.0):
        if not 0 <= low <= high <= 1:
            raise StrategyConfigError("need 0 <= low <= high <= 1")
        self.stream = stream
        self.low = low
        self.high = high
        self._calls = 0

    def respond(self, state, round_type, defender_bid):
        u = self.stream.uniform(self._calls, channel=1)
        self._calls += 1
        return min(state.a, (self.low + (self.high - self.low) * u) * state.a)

    @property
    def descriptor(self):
        return {"kind": self.kind, "low": self.low, "high": self.high}


def defender_constant_fraction(adoption_state=None) -> ConstantFractionDefender:
    return ConstantFractionDefender(adoption_state)


def defender_optimal(k, epsilon=None) -> OptimalDefender:
    return OptimalDefender(k, epsilon=epsilon)


def attacker_threshold_filter(theta, k=1.0) -> ThresholdFilterAttacker:
    return ThresholdFilterAttacker(theta, k)


def attacker_fraction(adoption_state=None, k=1.0) -> FractionAttacker:
    return FractionAttacker(k, adoption_state)


def attacker_optimal(k) -> OptimalAttacker:
    return OptimalAttacker(k)


def baseline_random(seed: int, role: str = "defender", low: float = 0.0, high: float = 1.0,
                    trial: int = 0):
    stream = Substream(seed, trial)
    if role == "defender":
        return RandomDefender(stream, low, high)
    if role == "attacker":
        return RandomAttacker(stream, low, high)
    raise StrategyConfigError(f"unknown role {role!r}")


def defender_from_descriptor(desc: dict, k=1.0, seed: int = 0, trial: int = 0) -> DefenderStrategy:
    kind = desc.get("kind")
    if kind == "constant_fraction":
        return ConstantFractionDefender()
    if kind == "optimal":
        return OptimalDefender(k, epsilon=desc.get("epsilon"))
    if kind == "random":
        return RandomDefender(Substream(desc.get("seed", seed), trial),
                              desc.get("low", 0.0), desc.get("high", 1.0))
    raise StrategyConfigError(f"unknown defender kind {kind!r}")


def attacker_from_descriptor(desc: dict, k=1.0, seed: int = 0, trial: int = 0) -> AttackerStrategy:
    kind = desc.get("kind")
    if kind == "threshold_filter":
        if "theta" not in desc:
            raise StrategyConfigError("threshold_filter needs a 'theta' parameter")
        return ThresholdFilterAttacker(desc["theta"], k)
    if kind == "fraction":
        return FractionAttacker(k)
    if kind == "optimal":
        return OptimalAttacker(k)
    if kind == "random":
        return RandomAttacker(Substream(desc.get("seed", seed), trial),
                              desc.get("low", 0.0), desc.get("high", 1.0))
    raise StrategyConfigError(f"unknown attacker kind {kind!r}")
