"""Playouts of the single-builder games and seeded Monte Carlo for the variant
with random round types."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field, replace
from typing import Callable, List, Optional, Sequence

from .core import (
    GameOutcome,
    GameParams,
    GameParamsError,
    GameState,
    Player,
    RoundResult,
    RoundType,
    resolve_round,
    schedule_string,
    special_count,
    terminal_status,
    validate_params,
)
from .rng import CH_SCHEDULE, Substream


class StrategyFault(RuntimeError):
    """A strategy returned a bid it cannot pay, or a negative one."""

    def __init__(self, round_index: int, role: str, bid, budget):
        self.round_index = round_index
        self.role = role
        super().__init__(
            f"round {round_index}: {role} bid {bid!r} outside its budget [0, {budget!r}]"
        )


@dataclass
class GameTrace:
    params: GameParams
    schedule: tuple
    rounds: List[RoundResult]
    outcome: GameOutcome
    final_state: GameState

    @property
    def winner(self) -> Optional[Player]:
        if self.outcome is GameOutcome.DEFENDER_WON:
            return Player.DEFENDER
        if self.outcome is GameOutcome.ATTACKER_WON:
            return Player.ATTACKER
        return None

    def spent(self, player: Player) -> float:
        return sum(r.payment for r in self.rounds if r.winner is player)

    def replay(self) -> GameState:
        """Re-apply every recorded round from the initial state."""
        state = GameState.initial(self.params, self.schedule)
        for res in self.rounds:
            state = resolve_round(state, res.round_type, res.defender_bid, res.attacker_bid,
                                  self.params.special_factor)[0]
        return state

    def to_dict(self) -> dict:
        p = self.params
        fs = self.final_state
        return {
            "params": {
                "total_rounds": p.total_rounds,
                "required_wins": p.required_wins,
                "special_factor": p.special_factor,
                "attacker_budget": p.attacker_budget,
                "defender_budget": p.defender_budget,
                "special_prob": p.special_prob,
            },
            "schedule": schedule_string(self.schedule),
            "rounds": [r.to_dict() for r in self.rounds],
            "outcome": self.outcome.value,
            "final_state": {"t": fs.t, "n": fs.n, "s": fs.s, "d": float(fs.d), "a": float(fs.a)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["round", "round_type", "defender_bid", "attacker_bid", "winner", "payment",
                    "defender_budget", "attacker_budget"])
        d, a = self.params.defender_budget, self.params.attacker_budget
        for i, r in enumerate(self.rounds):
            if r.winner is Player.DEFENDER:
                d -= r.payment
            else:
                a -= r.payment
            w.writerow([i, r.round_type.value, repr(float(r.defender_bid)),
                        repr(float(r.attacker_bid)), r.winner.value, repr(float(r.payment)),
                        repr(float(d)), repr(float(a))])
        return buf.getvalue()


def play_game(params: GameParams, schedule: Sequence[RoundType], defender, attacker,
              reveal_schedule: bool = True) -> GameTrace:
    """Play until the game is decided.

    With ``reveal_schedule=False`` strategies see ``s`` as 1 in a special round
    and 0 otherwise, so they learn nothing about future round types.
    """
    validate_params(params)
    schedule = tuple(RoundType(rt) for rt in schedule)
    if len(schedule) != params.total_rounds:
        raise GameParamsError(
            f"schedule has {len(schedule)} rounds, expected {params.total_rounds}")
    k = params.special_factor
    state = GameState.initial(params, schedule)
    rounds = []
    for i, rt in enumerate(schedule):
        if terminal_status(state) is not GameOutcome.ONGOING:
            break
        view = state if reveal_schedule else replace(state, s=int(rt.is_special))
        bid = defender.next_bid(view, rt)
        if not 0 <= bid <= state.d:
            raise StrategyFault(i, "defender", bid, state.d)
        counter = attacker.respond(view, rt, bid)
        if not 0 <= counter <= state.a:
            raise StrategyFault(i, "attacker", counter, state.a)
        state, res = resolve_round(state, rt, bid, counter, k)
        rounds.append(res)
    return GameTrace(params, schedule, rounds, terminal_status(state), state)


def sample_schedule(total_rounds: int, p: float, stream: Substream) -> tuple:
    """Round ``r`` is special iff its uniform draw on the schedule channel is below ``p``."""
    if not 0 <= p <= 1:
        raise GameParamsError(f"p must lie in [0, 1], got {p}")
    u = stream.uniform_block(total_rounds, CH_SCHEDULE)
    return tuple(RoundType.SPECIAL if x < p else RoundType.REGULAR for x in u)


def hoeffding_bound(t: int, delta: float) -> float:
    """``1 - 2 exp(-2 delta^2 / t)`` clamped to [0, 1]: probability that the
    number of special rounds lands within ``delta`` of its mean."""
    if t < 1 or delta <= 0:
        raise ValueError("need t >= 1 and delta > 0")
    return min(1.0, max(0.0, 1.0 - 2.0 * math.exp(-2.0 * delta * delta / t)))


@dataclass
class MonteCarloReport:
    trials: int
    defender_wins: int
    seed: int
    hoeffding_floor: Optional[float] = None
    special_counts: List[int] = field(default_factory=list, repr=False)

    @property
    def estimated_win_rate(self) -> float:
        return self.defender_wins / self.trials if self.trials else float("nan")

    @property
    def std_error(self) -> float:
        r = self.estimated_win_rate
        return math.sqrt(max(r * (1 - r), 0.0) / self.trials) if self.trials else float("nan")

    def merge(self, other: "MonteCarloReport") -> "MonteCarloReport":
        if self.seed != other.seed:
            raise ValueError("cannot merge reports with different seeds")
        return MonteCarloReport(self.trials + other.trials,
                                self.defender_wins + other.defender_wins,
                                self.seed, self.hoeffding_floor,
                                self.special_counts + other.special_counts)

    def to_dict(self) -> dict:
        out = {
            "trials": self.trials,
            "defender_wins": self.defender_wins,
            "seed": self.seed,
            "estimated_win_rate": self.estimated_win_rate,
            "hoeffding_floor": self.hoeffding_floor,
        }
        if self.special_counts:
            out["mean_special_rounds"] = sum(self.special_counts) / len(self.special_counts)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        d = self.to_dict()
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(d))
        w.writerow(["" if v is None else (repr(v) if isinstance(v, float) else v) for v in d.values()])
        return buf.getvalue()


StrategyFactory = Callable[[int], object]


def run_probabilistic(params: GameParams, defender_factory: StrategyFactory,
                      attacker_factory: StrategyFactory, trials: int, seed: int,
                      hoeffding_delta: Optional[float] = None) -> MonteCarloReport:
    """Monte Carlo over random schedules; each round is special with
    probability ``params.special_prob``.

    The factories are called with the trial index and must return fresh
    strategy objects. Trial ``i`` draws its schedule from ``Substream(seed, i)``.
    """
    validate_params(params)
    if params.special_prob is None:
        raise GameParamsError("special_prob is required for the probabilistic game")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    wins = 0
    counts = []
    for i in range(trials):
        schedule = sample_schedule(params.total_rounds, params.special_prob, Substream(seed, i))
        trace = play_game(params, schedule, defender_factory(i), attacker_factory(i),
                          reveal_schedule=False)
        counts.append(special_count(schedule))
        wins += trace.outcome is GameOutcome.DEFENDER_WON
    floor = None
    if hoeffding_delta is not None:
        floor = hoeffding_bound(params.total_rounds, hoeffding_delta)
    return MonteCarloReport(trials, wins, seed, floor, counts)
