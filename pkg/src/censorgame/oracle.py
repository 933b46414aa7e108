"""Exhaustive solver for small integer-budget games.

Bids, budgets and the special factor are integers, so the game tree is finite
and can be searched outright. Nothing here uses the threshold recurrence; the
results serve as an independent check on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .core import GameParamsError, Player, RoundType, parse_schedule, special_count

MAX_ROUNDS = 8
MAX_DEFENDER_BUDGET = 64
# thresholds reach k * t * d, so the attacker cap has to cover that range
MAX_ATTACKER_BUDGET = 64 * 3 * MAX_ROUNDS


@dataclass(frozen=True)
class IntGameSpec:
    n: int
    schedule: tuple
    d: int
    a: int
    k: int = 1

    def __post_init__(self):
        sched = self.schedule
        if isinstance(sched, str):
            sched = parse_schedule(sched)
        object.__setattr__(self, "schedule", tuple(RoundType(rt) for rt in sched))
        t = len(self.schedule)
        for name in ("n", "d", "a", "k"):
            if int(getattr(self, name)) != getattr(self, name):
                raise GameParamsError(f"{name} must be an integer")
        if not 1 <= self.n <= t <= MAX_ROUNDS:
            raise GameParamsError(f"need 1 <= n <= t <= {MAX_ROUNDS}, got n={self.n}, t={t}")
        if not 0 <= self.d <= MAX_DEFENDER_BUDGET:
            raise GameParamsError(f"defender budget must lie in [0, {MAX_DEFENDER_BUDGET}]")
        if not 0 <= self.a <= MAX_ATTACKER_BUDGET:
            raise GameParamsError(f"attacker budget must lie in [0, {MAX_ATTACKER_BUDGET}]")
        if self.k < 1:
            raise GameParamsError("k must be >= 1")

    @property
    def t(self) -> int:
        return len(self.schedule)

    @property
    def s(self) -> int:
        return special_count(self.schedule)


@lru_cache(maxsize=256)
def _searcher(schedule: tuple, k: int):
    T = len(schedule)
    costs = tuple(k if rt is RoundType.SPECIAL else 1 for rt in schedule)

    @lru_cache(maxsize=None)
    def attacker_wins(i: int, n: int, d: int, a: int) -> bool:
        if n == 0:
            return False
        if n > T - i:
            return True
        mult = costs[i]
        # the defender needs one bid that beats both attacker replies
        for b in range(d, -1, -1):
            if attacker_wins(i + 1, n - 1, d - b, a):
                continue
            cost = mult * b
            if cost <= a and attacker_wins(i + 1, n, d, a - cost):
                continue
            return False
        return True

    return attacker_wins


def minimax_winner(spec: IntGameSpec) -> Player:
    win = _searcher(spec.schedule, spec.k)(0, spec.n, spec.d, spec.a)
    return Player.ATTACKER if win else Player.DEFENDER


@lru_cache(maxsize=256)
def _threshold_table(schedule: tuple, k: int):
    T = len(schedule)
    costs = tuple(k if rt is RoundType.SPECIAL else 1 for rt in schedule)

    @lru_cache(maxsize=None)
    def need(i: int, n: int, d: int) -> float:
        """Least attacker budget that still wins from round ``i``."""
        if n == 0:
            return math.inf
        if n > T - i:
            return 0
        best = 0
        for b in range(d + 1):
            concede = need(i + 1, n - 1, d - b)
            take = costs[i] * b + need(i + 1, n, d)
            best = max(best, min(concede, take))
        return best

    return need


def grid_threshold(n: int, schedule, d: int, k: int = 1) -> int:
    """Least integer attacker budget that forces a win.

    Computed by backward induction on the attacker's requirement, which is
    valid because a larger attacker budget never hurts the attacker.
    """
    spec = IntGameSpec(n, schedule, d, 0, k)
    return int(_threshold_table(spec.schedule, spec.k)(0, spec.n, spec.d))


def grid_threshold_by_scan(n: int, schedule, d: int, k: int = 1) -> int:
    """Same as :func:`grid_threshold` by bisecting on ``a`` with :func:`minimax_winner`."""
    lo, hi = 0, MAX_ATTACKER_BUDGET
    if minimax_winner(IntGameSpec(n, schedule, d, hi, k)) is Player.DEFENDER:
        raise GameParamsError("threshold exceeds the attacker budget cap")
    while lo < hi:
        mid = (lo + hi) // 2
        if minimax_winner(IntGameSpec(n, schedule, d, mid, k)) is Player.ATTACKER:
            hi = mid
        else:
            lo = mid + 1
    return lo
