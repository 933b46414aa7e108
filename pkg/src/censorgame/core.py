"""Game parameters, state and single-round rules shared by every variant.

A game is played between a defender, who must land ``required_wins``
transactions within ``total_rounds`` blocks, and an attacker who bribes block
builders to censor them. In each round the defender bids first, the attacker
observes the bid and counter-bids, and the round winner pays their own bid.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Iterable, Optional, Sequence


class GameParamsError(ValueError):
    """Raised for parameter sets that violate the game's assumptions."""


class BidError(ValueError):
    """Raised when a bid is negative or exceeds the bidder's budget."""


class RoundType(enum.Enum):
    REGULAR = "R"
    SPECIAL = "S"

    @property
    def is_special(self) -> bool:
        return self is RoundType.SPECIAL


class Player(enum.Enum):
    DEFENDER = "defender"
    ATTACKER = "attacker"


class GameOutcome(enum.Enum):
    ONGOING = "ongoing"
    DEFENDER_WON = "defender_won"
    ATTACKER_WON = "attacker_won"


Schedule = tuple  # tuple[RoundType, ...]


def parse_schedule(text: str) -> Schedule:
    """Parse a string such as ``"SRRS"`` into a round schedule."""
    try:
        return tuple(RoundType(ch) for ch in text.strip().upper())
    except ValueError:
        raise GameParamsError(f"schedule may only contain 'S' and 'R': {text!r}") from None


def schedule_string(schedule: Iterable[RoundType]) -> str:
    return "".join(rt.value for rt in schedule)


def special_count(schedule: Iterable[RoundType]) -> int:
    return sum(1 for rt in schedule if rt is RoundType.SPECIAL)


def front_loaded_schedule(total_rounds: int, specials: int) -> Schedule:
    """All special rounds first, then regular ones."""
    if not 0 <= specials <= total_rounds:
        raise GameParamsError(f"special count {specials} outside [0, {total_rounds}]")
    return (RoundType.SPECIAL,) * specials + (RoundType.REGULAR,) * (total_rounds - specials)


@dataclass(frozen=True)
class GameParams:
    total_rounds: int
    required_wins: int
    special_factor: float = 1.0
    attacker_budget: float = 0.0
    defender_budget: float = 0.0
    special_prob: Optional[float] = None

    @property
    def attacker_wins_needed(self) -> int:
        return self.total_rounds - self.required_wins + 1


def validate_params(params: GameParams) -> GameParams:
    T, N = params.total_rounds, params.required_wins
    if int(T) != T or int(N) != N:
        raise GameParamsError("total_rounds and required_wins must be integers")
    if T < 1:
        raise GameParamsError(f"total_rounds must be >= 1, got {T}")
    if N < 1:
        raise GameParamsError(f"required_wins must be >= 1, got {N}")
    if N > T:
        raise GameParamsError(f"N exceeds T ({N} > {T})")
    if params.special_factor < 1:
        raise GameParamsError(f"special_factor must be >= 1, got {params.special_factor}")
    if params.attacker_budget < 0 or params.defender_budget < 0:
        raise GameParamsError("budgets must be nonnegative")
    p = params.special_prob
    if p is not None and not 0 <= p <= 1:
        raise GameParamsError(f"special_prob must lie in [0, 1], got {p}")
    return params


@dataclass(frozen=True)
class GameState:
    """Position before a round: rounds left, wins the defender still needs,
    special rounds left, and both remaining budgets."""

    t: int
    n: int
    s: int
    d: float
    a: float

    @classmethod
    def initial(cls, params: GameParams, schedule: Sequence[RoundType] = ()) -> "GameState":
        return cls(
            t=params.total_rounds,
            n=params.required_wins,
            s=special_count(schedule),
            d=params.defender_budget,
            a=params.attacker_budget,
        )

    @property
    def is_terminal(self) -> bool:
        return terminal_status(self) is not GameOutcome.ONGOING


@dataclass(frozen=True)
class RoundResult:
    round_type: RoundType
    defender_bid: float
    attacker_bid: float
    winner: Player
    payment: float

    def to_dict(self) -> dict:
        return {
            "round_type": self.round_type.value,
            "defender_bid": float(self.defender_bid),
            "attacker_bid": float(self.attacker_bid),
            "winner": self.winner.value,
            "payment": float(self.payment),
        }


def winning_cost(round_type: RoundType, k, defender_bid):
    """Smallest attacker bid that takes the round against ``defender_bid``."""
    return k * defender_bid if round_type is RoundType.SPECIAL else defender_bid


def round_winner(round_type: RoundType, k, defender_bid, attacker_bid) -> Player:
    # ties go to the attacker
    if attacker_bid >= winning_cost(round_type, k, defender_bid):
        return Player.ATTACKER
    return Player.DEFENDER


def resolve_round(state: GameState, round_type: RoundType, defender_bid, attacker_bid, k=1):
    """Play one round from ``state``; returns ``(next_state, RoundResult)``."""
    if state.is_terminal:
        raise GameParamsError(f"cannot play a round from terminal state {state}")
    if defender_bid < 0 or defender_bid > state.d:
        raise BidError(f"defender bid {defender_bid} outside [0, {state.d}]")
    if attacker_bid < 0 or attacker_bid > state.a:
        raise BidError(f"attacker bid {attacker_bid} outside [0, {state.a}]")
    special = round_type is RoundType.SPECIAL
    if special and state.s < 1:
        raise GameParamsError("special round requested with no special rounds remaining")

    winner = round_winner(round_type, k, defender_bid, attacker_bid)
    s = state.s - 1 if special else state.s
    if winner is Player.ATTACKER:
        nxt = replace(state, t=state.t - 1, s=s, a=state.a - attacker_bid)
        payment = attacker_bid
    else:
        nxt = replace(state, t=state.t - 1, n=state.n - 1, s=s, d=state.d - defender_bid)
        payment = defender_bid
    return nxt, RoundResult(round_type, defender_bid, attacker_bid, winner, payment)


def apply_round(state: GameState, round_type: RoundType, defender_bid, attacker_bid, k=1) -> GameState:
    return resolve_round(state, round_type, defender_bid, attacker_bid, k)[0]


def terminal_status(state: GameState) -> GameOutcome:
    if state.n <= 0:
        return GameOutcome.DEFENDER_WON
    if state.n > state.t:
        return GameOutcome.ATTACKER_WON
    return GameOutcome.ONGOING
