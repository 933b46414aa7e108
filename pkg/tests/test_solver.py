import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from censorgame.core import GameParamsError, GameState, RoundType
from censorgame.solver import (
    ArithmeticMode,
    DomainError,
    ThresholdTable,
    alice_threshold_g1,
    asymptotic_gap,
    attacker_requirements,
    boundary_value,
    bounds,
    constant_bid_lower_bound,
    default_epsilon,
    get_table,
    optimal_attacker_response,
    optimal_defender_bid,
    required_defender_budget,
    schedule_coefficient,
    swap_invariance_check,
    threshold_budget,
    threshold_coefficient,
)

R, S = RoundType.REGULAR, RoundType.SPECIAL
EXACT = ArithmeticMode.EXACT


def test_threshold_without_specials():
    assert alice_threshold_g1(7, 1) == 7
    assert alice_threshold_g1(5, 5) == pytest.approx(0.2)
    assert alice_threshold_g1(50000, 60) == pytest.approx(49941 / 60)


@pytest.mark.parametrize("t, n, s, k, want", [
    (3, 1, 1, 60, 62),
    (2, 2, 1, 2, Fraction(2, 3)),
    (4, 2, 4, 3, Fraction(9, 2)),
    (5, 2, 0, 7, Fraction(2)),
])
def test_boundary_values(t, n, s, k, want):
    assert boundary_value(t, n, s, k, exact=True) == want
    assert boundary_value(t, n, s, k) == pytest.approx(float(want), rel=1e-15)


def test_overlapping_boundaries_agree():
    for t in range(1, 30):
        for k in (1, 2, 9):
            k = Fraction(k)
            # n = 1 and s = 0
            assert k * 0 + t == Fraction(t - 1 + 1, 1)
            # n = t and s = t: k / (t + 0) == k (t - t + 1) / t
            assert k / t == k * 1 / t
            assert boundary_value(t, 1, 0, k, True) == t
            assert boundary_value(t, t, t, k, True) == k / t
            assert boundary_value(t, t, 0, k, True) == Fraction(1, t)


def test_small_interior_value():
    assert threshold_coefficient(3, 2, 1, 2.0) == pytest.approx(1.25, rel=1e-15)
    assert threshold_coefficient(3, 2, 1, 2, mode=EXACT) == Fraction(5, 4)


def test_no_specials_closed_form():
    table = ThresholdTable(13.0)
    for t in range(1, 51):
        for n in range(1, t + 1):
            assert table.coefficient(t, n, 0) == pytest.approx((t - n + 1) / n, rel=1e-12)


def test_large_instance_value():
    # value produced by the layered recurrence; see the README on reference values
    assert threshold_coefficient(50000, 60, 1000, 60.0) == pytest.approx(1784.1997, abs=1e-3)


def test_budgets():
    assert threshold_budget(3, 2, 1, 2, 4) == pytest.approx(5.0)
    assert threshold_budget(3, 2, 1, 2, 0) == 0
    assert required_defender_budget(3, 2, 1, 2, 5) == pytest.approx(4.0)
    assert required_defender_budget(50000, 60, 0, 1, 1e10) == pytest.approx(1.2014e7, rel=1e-3)
    assert required_defender_budget(50000, 60, 1000, 60, 1e10) == pytest.approx(5.6048e6, rel=1e-3)
    assert threshold_budget(50000, 60, 1000, 60, 5.6e6) == pytest.approx(1e10, rel=0.01)


def test_domain_errors():
    with pytest.raises(DomainError):
        threshold_coefficient(3, 4, 0)
    with pytest.raises(DomainError):
        threshold_coefficient(3, 1, 4)
    with pytest.raises(GameParamsError):
        ThresholdTable(0.5)


def test_orderings_agree():
    table = ThresholdTable(7.0)
    for t in range(2, 25):
        for n in range(1, t + 1):
            for s in range(0, t + 1):
                a = table.coefficient(t, n, s, order="special-first")
                b = table.coefficient(t, n, s, order="regular-first")
                assert a == pytest.approx(b, rel=1e-12)
    with pytest.raises(ValueError):
        table.coefficient(3, 2, 1, order="sideways")


def test_table_memo_and_csv():
    table = ThresholdTable(2.0)
    table.coefficient(6, 3, 2)
    assert (6, 3, 2) in table.entries
    csv_text = table.to_csv()
    assert csv_text.startswith("t,n,s,k,coefficient\n")
    assert get_table(2.0) is get_table(2.0)


def test_swap_invariance_examples():
    assert swap_invariance_check(2, 2, (S, R), (R, S), 2) == 0
    assert swap_invariance_check(3, 2, (S, R, R), (S, R, R), 2) == 0
    rng = random.Random(0)
    base = [S] * 3 + [R] * 3
    for _ in range(10):
        a, b = base[:], base[:]
        rng.shuffle(a)
        rng.shuffle(b)
        assert swap_invariance_check(6, 3, a, b, 5) <= 1e-9
    assert swap_invariance_check(6, 3, a, b, 5, exact=True) == 0


def test_schedule_coefficient_exact():
    assert schedule_coefficient(2, (S, R, R), 2, exact=True) == Fraction(5, 4)
    assert schedule_coefficient(2, (R, R, S), 2, exact=True) == Fraction(5, 4)


def test_bounds_examples():
    big = bounds(50000, 60, 1000, 60)
    assert big.lower / threshold_coefficient(50000, 60, 1000, 60) == pytest.approx(0.985, abs=5e-3)
    small = bounds(214, 57, 57, 25)
    assert small.lower == pytest.approx(3.19, abs=0.01)
    assert small.upper == pytest.approx(26.8, abs=0.05)
    one = bounds(10, 3, 5, 1)
    assert one.lower == pytest.approx(8 / 3) and one.upper == pytest.approx(8 / 3)
    with pytest.raises(DomainError):
        bounds(10, 5, 2, 3)
    assert constant_bid_lower_bound(214, 57, 57, 25) == pytest.approx(small.lower)


def test_asymptotic_gap():
    assert asymptotic_gap(50000, 60, 1000, 60) == pytest.approx(3600 / 109000)
    assert asymptotic_gap(214, 57, 57, 25) == pytest.approx(25 * 57 / (214 + 24 * 57))
    assert asymptotic_gap(10 ** 9, 1, 5, 3) < 1e-8


def test_defender_bid_examples():
    st_ = GameState(3, 2, 1, 1.0, 5.0)
    assert optimal_defender_bid(st_, R, 2) == pytest.approx(7 / 12)
    exact = optimal_defender_bid(GameState(3, 2, 1, Fraction(1), Fraction(5)), R, 2,
                                 table=get_table(2, EXACT))
    assert exact == Fraction(7, 12)
    assert optimal_defender_bid(GameState(2, 2, 0, 10.0, 3.0), R, 5) == pytest.approx(3 + 3e-9)
    assert optimal_defender_bid(GameState(2, 2, 1, 10.0, 3.0), S, 2) == pytest.approx(1.5 + 3e-9)
    assert optimal_defender_bid(GameState(1, 1, 0, 5.0, 0.0), R, 1) == 5.0
    assert optimal_defender_bid(GameState(2, 2, 0, 10.0, 3.0), R, 1, epsilon=0.5) == 3.5
    assert default_epsilon(0.1) == 1e-9


def test_attacker_response_examples():
    st_ = GameState(3, 2, 1, 1.0, 5.0)
    assert optimal_attacker_response(st_, R, 2, 0.9) == 0
    assert optimal_attacker_response(st_, R, 2, 0.3) == pytest.approx(0.3)
    let_win, win_now, cost = attacker_requirements(st_, R, 2, 0.3)
    assert cost == pytest.approx(0.3) and win_now == pytest.approx(0.3 + 2 / 3)
    assert let_win == pytest.approx(3 * 0.7)
    assert optimal_attacker_response(GameState(1, 1, 0, 1.0, 0.0), R, 1, 0.5) == 0


def test_attacker_tie_prefers_letting_win():
    st_ = GameState(3, 2, 1, 1.0, 100.0)
    b = optimal_defender_bid(st_, R, 2, epsilon=0)
    let_win, win_now, _ = attacker_requirements(st_, R, 2, b)
    assert let_win == pytest.approx(win_now)
    # at equal requirements the attacker concedes the round


def test_float_and_exact_agree():
    ft = ThresholdTable(3.0)
    et = ThresholdTable(3, EXACT)
    for t in range(1, 41):
        for n in range(1, t + 1):
            for s in range(0, t + 1, 3):
                assert ft.coefficient(t, n, s) == pytest.approx(float(et.coefficient(t, n, s)), rel=1e-9)


@settings(max_examples=200, deadline=None)
@given(t=st.integers(1, 100), data=st.data(), k=st.sampled_from([1.0, 2.0, 4.5, 60.0]))
def test_monotonicity(t, data, k):
    n = data.draw(st.integers(1, t))
    s = data.draw(st.integers(0, t))
    table = get_table(k)
    v = table.coefficient(t, n, s)
    tol = 1e-12 * v
    assert table.coefficient(t + 1, n, s) >= v - tol
    if s < t:
        assert table.coefficient(t, n, s + 1) >= v - tol
    if n < t:
        assert table.coefficient(t, n + 1, s) <= v + tol


@settings(max_examples=200, deadline=None)
@given(t=st.integers(1, 60), data=st.data(), k=st.sampled_from([1.0, 3.0, 25.0]))
def test_sandwich_property(t, data, k):
    n = data.draw(st.integers(1, t))
    s = data.draw(st.integers(min(n - 1, t), t))
    bp = bounds(t, n, s, k)
    v = threshold_coefficient(t, n, s, k)
    assert bp.lower * (1 - 1e-12) <= v <= bp.upper * (1 + 1e-12)


@settings(max_examples=100, deadline=None)
@given(t=st.integers(1, 30), data=st.data(), c=st.fractions(min_value=Fraction(1, 100), max_value=100))
def test_linearity_exact(t, data, c):
    n = data.draw(st.integers(1, t))
    s = data.draw(st.integers(0, t))
    d = Fraction(7, 3)
    base = threshold_budget(t, n, s, 3, d, EXACT)
    assert threshold_budget(t, n, s, 3, c * d, EXACT) == c * base


@settings(max_examples=100, deadline=None)
@given(t=st.integers(2, 40), data=st.data(), d=st.floats(0.01, 1e6))
def test_bids_telescope_without_specials(t, data, d):
    # winning every remaining round at the optimal bids never overdraws d
    n = data.draw(st.integers(1, t - 1))
    state = GameState(t, n, 0, d, 0.0)
    spent = 0.0
    while state.n > 0:
        b = optimal_defender_bid(state, R, 1.0)
        assert 0 <= b <= state.d
        spent += b
        state = GameState(state.t - 1, state.n - 1, 0, state.d - b, 0.0)
    assert spent <= d * (1 + 1e-12)
