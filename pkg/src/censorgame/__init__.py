"""Censorship games between a defender who wants transactions included and an
attacker who bribes block builders to leave them out."""

from .core import (
    BidError,
    GameOutcome,
    GameParams,
    GameParamsError,
    GameState,
    Player,
    RoundResult,
    RoundType,
    apply_round,
    parse_schedule,
    resolve_round,
    validate_params,
)
from .engine import GameTrace, MonteCarloReport, StrategyFault, play_game, run_probabilistic
from .solver import (
    ArithmeticMode,
    DomainError,
    ThresholdTable,
    bounds,
    optimal_attacker_response,
    optimal_defender_bid,
    threshold_coefficient,
)

__all__ = [
    "ArithmeticMode", "BidError", "DomainError", "GameOutcome", "GameParams", "GameParamsError",
    "GameState", "GameTrace", "MonteCarloReport", "Player", "RoundResult", "RoundType",
    "StrategyFault", "ThresholdTable", "apply_round", "bounds", "optimal_attacker_response",
    "optimal_defender_bid", "parse_schedule", "play_game", "resolve_round", "run_probabilistic",
    "threshold_coefficient", "validate_params",
]
__version__ = "0.1.0"
