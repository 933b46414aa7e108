import pytest

from censorgame.core import (
    BidError,
    GameOutcome,
    GameParams,
    GameParamsError,
    GameState,
    Player,
    RoundType,
    apply_round,
    front_loaded_schedule,
    parse_schedule,
    resolve_round,
    round_winner,
    schedule_string,
    special_count,
    terminal_status,
    validate_params,
    winning_cost,
)

R, S = RoundType.REGULAR, RoundType.SPECIAL


def test_parse_and_format_schedule():
    sched = parse_schedule("SRrs")
    assert sched == (S, R, R, S)
    assert schedule_string(sched) == "SRRS"
    assert special_count(sched) == 2
    with pytest.raises(GameParamsError):
        parse_schedule("SX")


def test_front_loaded_schedule():
    assert front_loaded_schedule(4, 1) == (S, R, R, R)
    with pytest.raises(GameParamsError):
        front_loaded_schedule(3, 4)


@pytest.mark.parametrize("kwargs, msg", [
    (dict(total_rounds=3, required_wins=4), "N exceeds T"),
    (dict(total_rounds=0, required_wins=0), "total_rounds"),
    (dict(total_rounds=3, required_wins=1, special_factor=0.5), "special_factor"),
    (dict(total_rounds=3, required_wins=1, attacker_budget=-1), "nonnegative"),
    (dict(total_rounds=3, required_wins=1, special_prob=1.5), "special_prob"),
])
def test_validate_params_rejects(kwargs, msg):
    with pytest.raises(GameParamsError, match=msg):
        validate_params(GameParams(**kwargs))


def test_attacker_wins_needed():
    assert GameParams(10, 4).attacker_wins_needed == 7


def test_winning_cost_and_ties():
    assert winning_cost(S, 3, 2.0) == 6.0
    assert winning_cost(R, 3, 2.0) == 2.0
    # equal bids go to the attacker
    assert round_winner(R, 1, 1.0, 1.0) is Player.ATTACKER
    assert round_winner(S, 2, 1.0, 1.99) is Player.DEFENDER


def test_resolve_round_updates_state():
    st = GameState(t=3, n=2, s=1, d=1.0, a=2.0)
    nxt, res = resolve_round(st, S, 0.5, 0.9, k=2)
    assert res.winner is Player.DEFENDER and res.payment == 0.5
    assert nxt == GameState(2, 1, 0, 0.5, 2.0)
    nxt2 = apply_round(nxt, R, 0.25, 0.25)
    assert nxt2 == GameState(1, 1, 0, 0.5, 1.75)
    assert terminal_status(nxt2) is GameOutcome.ONGOING
    assert terminal_status(apply_round(nxt2, R, 0.1, 0.1)) is GameOutcome.ATTACKER_WON


def test_resolve_round_errors():
    st = GameState(2, 1, 0, 1.0, 1.0)
    with pytest.raises(BidError):
        resolve_round(st, R, 1.5, 0.0)
    with pytest.raises(BidError):
        resolve_round(st, R, 0.5, -0.1)
    with pytest.raises(GameParamsError):
        resolve_round(st, S, 0.5, 0.0)
    with pytest.raises(GameParamsError):
        resolve_round(GameState(1, 0, 0, 1.0, 1.0), R, 0.0, 0.0)


def test_terminal_status():
    assert terminal_status(GameState(3, 0, 0, 0, 0)) is GameOutcome.DEFENDER_WON
    assert terminal_status(GameState(1, 2, 0, 0, 0)) is GameOutcome.ATTACKER_WON
    assert terminal_status(GameState(2, 2, 0, 0, 0)) is GameOutcome.ONGOING


def test_initial_state_counts_specials():
    p = GameParams(3, 2, 2.0, 5.0, 1.0)
    assert GameState.initial(p, parse_schedule("SRS")) == GameState(3, 2, 2, 1.0, 5.0)
