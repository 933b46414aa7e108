"""Censorship rounds with ``m`` builders, any one of whom can include the
defender's transaction.

Each round the defender posts a payment offer for includers and the attacker
posts a per-builder bribe ``c`` for not including. Myopic builders play the
symmetric equilibrium of that one-round game; the round goes to the defender
iff at least one builder includes. Two payment rules are supported:

* budget-balanced: a fixed total ``B`` split among all includers;
* conditional: ``B`` to a sole includer, ``b`` each when two or more include.
"""

from __future__ import annotations

import csv
import enum
import io
import math
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .core import GameParams, validate_params
from .engine import MonteCarloReport, StrategyFault
from .rng import CH_ATTACKER, CH_DEFENDER, CH_INCLUSION, uniforms


class EquilibriumError(ValueError):
    pass


class Mechanism(enum.Enum):
    BUDGET_BALANCED = "budget_balanced"
    CONDITIONAL = "conditional"


class Regime(enum.Enum):
    ALL_EXCLUDE = "all_exclude"
    ALL_INCLUDE = "all_include"
    MIXED = "mixed"


@dataclass(frozen=True)
class BudgetBalancedOffer:
    B: float
    c: float

    def __post_init__(self):
        if self.B < 0 or self.c < 0:
            raise EquilibriumError("offers must be nonnegative")


@dataclass(frozen=True)
class ConditionalOffer:
    B: float
    b: float
    c: float

    def __post_init__(self):
        if self.B < 0 or self.b < 0 or self.c < 0:
            raise EquilibriumError("offers must be nonnegative")
        if self.b >= self.B:
            raise EquilibriumError(f"need b < B, got b={self.b}, B={self.B}")


@dataclass(frozen=True)
class EquilibriumSolution:
    p: float
    regime: Regime
    m: int
    attacker_win_prob: float
    defender_win_prob: float
    expected_spend_attacker: float
    expected_spend_defender: float

    def to_dict(self) -> dict:
        d = asdict(self)
        d["regime"] = self.regime.value
        return d


def _check_m(m: int) -> None:
    if int(m) != m or m < 2:
        raise EquilibriumError(f"equilibrium analysis needs m >= 2 builders, got {m}")


def balanced_gap(p, B, c, m):
    """``B (1 - (1 - p)^m) - m p c``; zero at the mixed equilibrium."""
    with np.errstate(divide="ignore"):
        included = -np.expm1(m * np.log1p(-np.asarray(p, float)))
    return B * included - m * p * c


def indifference_residual_balanced(p, B, c, m):
    """Expected payoff of including minus that of excluding, for a builder
    whose ``m - 1`` rivals each include with probability ``p``."""
    total = 0.0
    for j in range(m):
        total += math.comb(m - 1, j) * p ** j * (1 - p) ** (m - 1 - j) * B / (j + 1)
    return total - c


def _bisect(f, lo: float, hi: float) -> float:
    """Root of ``f`` with ``f > 0`` on the ``lo`` side, to machine precision."""
    for _ in range(2000):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi or hi - lo <= 1e-16 * hi:
            break
        fm = f(mid)
        if fm == 0:
            return mid
        if fm > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _balanced_solution(p, B, c, m, regime):
    pa = (1.0 - p) ** m
    return EquilibriumSolution(
        p=p, regime=regime, m=m,
        attacker_win_prob=pa, defender_win_prob=1.0 - pa,
        expected_spend_attacker=(1.0 - p) * m * c,
        expected_spend_defender=(1.0 - pa) * B,
    )


def solve_budget_balanced(offer: BudgetBalancedOffer, m: int) -> EquilibriumSolution:
    _check_m(m)
    B, c = float(offer.B), float(offer.c)
    if B <= c:
        return _balanced_solution(0.0, B, c, m, Regime.ALL_EXCLUDE)
    if B >= m * c:
        return _balanced_solution(1.0, B, c, m, Regime.ALL_INCLUDE)
    # gap(p) / p -> m (B - c) > 0 as p -> 0, so the sign sequence starts positive
    grid = np.arange(1, 1025) / 1024.0
    signs = np.concatenate([[1.0], np.sign(balanced_gap(grid, B, c, m))])
    signs = signs[signs != 0]
    if np.count_nonzero(signs[1:] != signs[:-1]) != 1:
        raise EquilibriumError(f"indifference condition has no unique root for B={B}, c={c}, m={m}")
    p = _bisect(lambda x: float(balanced_gap(x, B, c, m)), 0.0, 1.0)
    return _balanced_solution(p, B, c, m, Regime.MIXED)


def conditional_residual(p, B, b, c, m):
    q = (1.0 - p) ** (m - 1)
    return q * B + (1.0 - q) * b - c


def _conditional_spend_defender(p, B, b, m):
    sole = m * p * (1 - p) ** (m - 1) * B
    many = sum(math.comb(m, t) * p ** t * (1 - p) ** (m - t) * t * b for t in range(2, m + 1))
    return sole + many


def solve_conditional(offer: ConditionalOffer, m: int) -> EquilibriumSolution:
    _check_m(m)
    B, b, c = float(offer.B), float(offer.b), float(offer.c)
    if c >= B:
        p, regime = 0.0, Regime.ALL_EXCLUDE
    elif c <= b:
        p, regime = 1.0, Regime.ALL_INCLUDE
    else:
        p, regime = 1.0 - ((c - b) / (B - b)) ** (1.0 / (m - 1)), Regime.MIXED
    pa = (1.0 - p) ** m
    return EquilibriumSolution(
        p=p, regime=regime, m=m,
        attacker_win_prob=pa, defender_win_prob=1.0 - pa,
        expected_spend_attacker=(1.0 - p) * m * c,
        expected_spend_defender=_conditional_spend_defender(p, B, b, m),
    )


def solve(mechanism: Mechanism, m: int, B, c, b=0.0) -> EquilibriumSolution:
    if Mechanism(mechanism) is Mechanism.BUDGET_BALANCED:
        return solve_budget_balanced(BudgetBalancedOffer(B, c), m)
    return solve_conditional(ConditionalOffer(B, b, c), m)


def inclusion_probability(mechanism: Mechanism, m: int, B, c, b=0.0) -> np.ndarray:
    """Equilibrium inclusion probability for arrays of offers."""
    _check_m(m)
    B, c, b = np.broadcast_arrays(np.asarray(B, float), np.asarray(c, float), np.asarray(b, float))
    if Mechanism(mechanism) is Mechanism.CONDITIONAL:
        with np.errstate(divide="ignore", invalid="ignore"):
            mixed = 1.0 - ((c - b) / (B - b)) ** (1.0 / (m - 1))
        return np.where(c >= B, 0.0, np.where(c <= b, 1.0, mixed))
    p = np.where(B <= c, 0.0, 1.0)
    todo = (B > c) & (B < m * c)
    if np.any(todo):
        # offers repeat heavily across trials; solve each distinct pair once
        pairs, inverse = np.unique(B[todo] + 1j * c[todo], return_inverse=True)
        Bt, ct = pairs.real, pairs.imag
        lo = np.zeros(Bt.shape)
        hi = np.ones(Bt.shape)
        for _ in range(1100):
            mid = 0.5 * (lo + hi)
            moved = (mid > lo) & (mid < hi) & (hi - lo > 1e-16 * hi)
            if not moved.any():
                break
            pos = balanced_gap(mid, Bt, ct, m) > 0
            lo = np.where(moved & pos, mid, lo)
            hi = np.where(moved & ~pos, mid, hi)
        p = p.copy()
        p[todo] = (0.5 * (lo + hi))[inverse.reshape(-1)]
    return p


def inclusion_lower_bound(c, B, m: int) -> float:
    """Lower bound ``1 - (c/B)^(m/(m-1))`` on the defender's round-win
    probability under the budget-balanced rule, for ``c < B``."""
    _check_m(m)
    if not 0 <= c < B:
        raise EquilibriumError(f"bound needs 0 <= c < B, got c={c}, B={B}")
    return 1.0 - (c / B) ** (m / (m - 1))


def attacker_certain_win_condition(T: int, N: int, m: int, D, A) -> bool:
    """Attacker bribing ``D/N`` per builder every round surely wins when
    ``(T - N + 1) m D / N <= A``."""
    return (T - N + 1) * m * D / N <= A


def defender_likely_win_condition(T: int, N: int, m: int, D, A):
    """``(holds, floor)``: a defender offering ``D/N`` every round wins with
    probability at least ``floor`` when ``A < (T - 4N + 1) m D / N``."""
    return A < (T - 4 * N + 1) * m * D / N, 1.0 - math.exp(-2.0 * N / 3.0)


def required_defender_budget_gm(T: int, N: int, m: int, A) -> float:
    """Defender budget at which the certain-win attacker condition becomes tight."""
    return A * N / ((T - N + 1) * m)


# --- simulation -------------------------------------------------------------

@dataclass
class RoundView:
    """Per-trial arrays describing the ongoing games before a round."""

    round_index: int
    rounds_left: np.ndarray
    wins_needed: np.ndarray
    d: np.ndarray
    a: np.ndarray
    u: np.ndarray  # this party's uniform draw for the round


class ConstantOffer:
    """Defender posting ``B = d0 / n0`` (or a fixed ``B``) and ``b`` every round."""

    def __init__(self, B: Optional[float] = None, b: float = 0.0):
        self.B = B
        self.b = b

    def __call__(self, view: RoundView, params: GameParams, m: int):
        B0 = params.defender_budget / params.required_wins if self.B is None else self.B
        return np.minimum(B0, view.d), np.minimum(self.b, view.d / m)


class RandomOffer:
    """Defender posting a uniform fraction in ``[low, high]`` of its budget."""

    def __init__(self, low: float = 0.0, high: float = 1.0, b: float = 0.0):
        self.low, self.high, self.b = low, high, b

    def __call__(self, view, params, m):
        B = (self.low + (self.high - self.low) * view.u) * view.d
        return np.minimum(B, view.d), np.minimum(self.b, view.d / m)


def _affordable(c, a, m):
    c = np.minimum(c, a / m)
    return np.where(m * c > a, np.nextafter(c, 0.0), c)


class ConstantBribe:
    """Attacker bribing a fixed ``c`` per non-includer while budget allows."""

    def __init__(self, c: float):
        self.c = c

    def __call__(self, view, params, m, B, b):
        return _affordable(np.full(view.a.shape, float(self.c)), view.a, m)


class ProportionalBribe:
    """Attacker bribing ``ratio * B - epsilon`` against the posted offer ``B``."""

    def __init__(self, ratio: float, epsilon: float = 0.0):
        self.ratio, self.epsilon = ratio, epsilon

    def __call__(self, view, params, m, B, b):
        return _affordable(np.maximum(self.ratio * B - self.epsilon, 0.0), view.a, m)


@dataclass
class GMReport(MonteCarloReport):
    mechanism: str = ""
    m: int = 0
    rounds_played: int = 0
    attacker_round_wins: int = 0
    mean_defender_spend: float = 0.0
    mean_attacker_spend: float = 0.0

    def to_dict(self) -> dict:
        out = super().to_dict()
        out.update(mechanism=self.mechanism, m=self.m, rounds_played=self.rounds_played,
                   attacker_round_wins=self.attacker_round_wins,
                   mean_defender_spend=self.mean_defender_spend,
                   mean_attacker_spend=self.mean_attacker_spend)
        return out


def simulate_gm(params: GameParams, m: int, mechanism: Mechanism, defender, attacker,
                trials: int, seed: int) -> GMReport:
    """Monte Carlo over ``trials`` independent games, vectorized across trials.

    Builder ``j`` of trial ``i`` includes in round ``r`` iff
    ``uniforms(seed, i, CH_INCLUSION, r * m + j) < p``. The attacker pays every
    non-includer, including in rounds the defender wins.
    """
    validate_params(params)
    _check_m(m)
    mechanism = Mechanism(mechanism)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    T, N = params.total_rounds, params.required_wins
    ids = np.arange(trials, dtype=np.uint64)
    d = np.full(trials, float(params.defender_budget))
    a = np.full(trials, float(params.attacker_budget))
    need_d = np.full(trials, N, dtype=np.int64)
    need_a = np.full(trials, T - N + 1, dtype=np.int64)
    rounds_played = 0
    attacker_round_wins = 0
    builders = np.arange(m, dtype=np.uint64)
    for r in range(T):
        live = (need_d > 0) & (need_a > 0)
        if not live.any():
            break
        idx = np.nonzero(live)[0]
        sub = ids[idx]
        left = np.full(idx.size, T - r)
        view_d = RoundView(r, left, need_d[idx], d[idx], a[idx],
                           uniforms(seed, sub, CH_DEFENDER, r))
        B, b = defender(view_d, params, m)
        B = np.broadcast_to(np.asarray(B, float), idx.shape)
        b = np.broadcast_to(np.asarray(b, float), idx.shape)
        view_a = RoundView(r, left, need_d[idx], d[idx], a[idx],
                           uniforms(seed, sub, CH_ATTACKER, r))
        c = np.broadcast_to(np.asarray(attacker(view_a, params, m, B, b), float), idx.shape)

        worst_d = np.maximum(B, m * b) if mechanism is Mechanism.CONDITIONAL else B
        bad = (B < 0) | (b < 0) | (worst_d > d[idx])
        if bad.any():
            i = int(np.argmax(bad))
            raise StrategyFault(r, "defender", float(worst_d[i]), float(d[idx][i]))
        if mechanism is Mechanism.CONDITIONAL and np.any(b >= B):
            raise StrategyFault(r, "defender", float(b[np.argmax(b >= B)]), "b must stay below B")
        bad = (c < 0) | (m * c > a[idx])
        if bad.any():
            i = int(np.argmax(bad))
            raise StrategyFault(r, "attacker", float(m * c[i]), float(a[idx][i]))

        p = inclusion_probability(mechanism, m, B, c, b)
        u = uniforms(seed, sub[:, None], CH_INCLUSION, np.uint64(r * m) + builders[None, :])
        includers = np.count_nonzero(u < p[:, None], axis=1)

        if mechanism is Mechanism.BUDGET_BALANCED:
            pay_d = np.where(includers >= 1, B, 0.0)
        else:
            pay_d = np.where(includers == 1, B, np.where(includers >= 2, includers * b, 0.0))
        d[idx] -= pay_d
        a[idx] -= c * (m - includers)
        won = includers >= 1
        need_d[idx] -= won
        need_a[idx] -= ~won
        rounds_played += idx.size
        attacker_round_wins += int(np.count_nonzero(~won))

    defender_wins = int(np.count_nonzero(need_d <= 0))
    return GMReport(
        trials=trials, defender_wins=defender_wins, seed=seed,
        mechanism=mechanism.value, m=m, rounds_played=rounds_played,
        attacker_round_wins=attacker_round_wins,
        mean_defender_spend=float(np.mean(params.defender_budget - d)),
        mean_attacker_spend=float(np.mean(params.attacker_budget - a)),
    )


def sweep_csv(rows) -> str:
    """CSV for equilibrium sweeps; ``rows`` are ``(mechanism, m, B, b, c, solution)``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["mechanism", "m", "B", "b", "c", "p", "P_A", "E_A", "E_D"])
    for mech, m, B, b, c, sol in rows:
        w.writerow([Mechanism(mech).value, m, repr(float(B)), repr(float(b)), repr(float(c)),
                    repr(sol.p), repr(sol.attacker_win_prob), repr(sol.expected_spend_attacker),
                    repr(sol.expected_spend_defender)])
    return buf.getvalue()
