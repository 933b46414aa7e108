"""Attacker winning thresholds for the sequential censorship game.

The minimal attacker budget that forces a win from ``(t, n, s, d)`` is
``coefficient(t, n, s) * d``. The coefficient has no known closed form away
from the table edges, so it is computed by dynamic programming over one of two
layerings: consume the special rounds first (one layer per special round,
bottoming out at the all-regular closed form) or the regular rounds first
(bottoming out at the all-special closed form). Each layer holds the
coefficients for every remaining-win count up to ``n``, so a query costs
``O(min(s, t - s) * n)``.
"""

from __future__ import annotations

import csv
import enum
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .core import GameParamsError, GameState, RoundType, special_count


class ArithmeticMode(enum.Enum):
    FLOAT64 = "float64"
    EXACT = "exact"


class DomainError(ValueError):
    """Raised when ``(t, n, s)`` lies outside the solver's domain."""


def _check_domain(t: int, n: int, s: int) -> None:
    if not (1 <= n <= t):
        raise DomainError(f"need 1 <= n <= t, got t={t}, n={n}")
    if not (0 <= s <= t):
        raise DomainError(f"need 0 <= s <= t, got t={t}, s={s}")


def alice_threshold_g1(t: int, n: int):
    """Coefficient without special rounds: the attacker wins iff a >= result * d."""
    _check_domain(t, n, 0)
    return (t - n + 1) / n


def is_boundary(t: int, n: int, s: int) -> bool:
    return n == 1 or n == t or s == 0 or s == t


def boundary_value(t: int, n: int, s: int, k, exact: bool = False):
    """Closed-form coefficient on the table edges (n=1, s=0, s=t or n=t)."""
    _check_domain(t, n, s)
    if exact:
        k = Fraction(k)
        one = Fraction(1)
    else:
        k = float(k)
        one = 1.0
    if n == 1:
        return k * s + (t - s) * one
    if n == t:
        return k / (s + k * (t - s))
    if s == 0:
        return one * (t - n + 1) / n
    if s == t:
        return k * (t - n + 1) / n
    raise DomainError(f"({t}, {n}, {s}) is not on the boundary")


class ThresholdTable:
    """Memoized coefficients for one special-round factor ``k``.

    ``entries`` maps ``(t, n, s)`` to the coefficient. Every DP run stores all
    the cells it touched, so later queries along a playout are mostly lookups.
    """

    def __init__(self, k, mode: ArithmeticMode = ArithmeticMode.FLOAT64):
        if k < 1:
            raise GameParamsError(f"special factor must be >= 1, got {k}")
        self.mode = ArithmeticMode(mode)
        self.k = Fraction(k) if self.exact else float(k)
        self.entries: dict = {}

    @property
    def exact(self) -> bool:
        return self.mode is ArithmeticMode.EXACT

    def _num(self, x):
        return Fraction(x) if self.exact else float(x)

    def coefficient(self, t: int, n: int, s: int, order: str = "auto"):
        """Coefficient for ``(t, n, s)``.

        ``order`` selects the layering: ``"special-first"``, ``"regular-first"``
        or ``"auto"`` (whichever has fewer layers). An explicit order always
        recomputes and does not touch the memo, so the two layerings can be
        compared against each other.
        """
        _check_domain(t, n, s)
        key = (t, n, s)
        if order == "auto":
            hit = self.entries.get(key)
            if hit is not None:
                return hit
            if is_boundary(t, n, s):
                value = boundary_value(t, n, s, self.k, self.exact)
                self.entries[key] = value
                return value
            order = "special-first" if s <= t - s else "regular-first"
            cells = self._run(t, n, s, order)
            self.entries.update(cells)
            return cells[key]
        if order not in ("special-first", "regular-first"):
            raise ValueError(f"unknown DP order {order!r}")
        return self._run(t, n, s, order)[key]

    def _run(self, t: int, n: int, s: int, order: str) -> dict:
        k = self.k
        one = self._num(1)
        cells = {}
        if order == "special-first":
            # layer j: j specials left among (t - s) + j rounds
            regular = t - s
            prev = {m: one * (regular - m + 1) / m for m in range(1, min(n, regular) + 1)}
            cells.update({(regular, m, 0): v for m, v in prev.items()})
            factor = k
            layers = s
        else:
            # layer j: s specials among s + j rounds
            prev = {m: k * (s - m + 1) / m for m in range(1, min(n, s) + 1)}
            cells.update({(s, m, s): v for m, v in prev.items()})
            factor = one
            layers = t - s
        for j in range(1, layers + 1):
            if order == "special-first":
                tt, ss = t - s + j, j
            else:
                tt, ss = s + j, s
            cur = {}
            for m in range(1, min(n, tt) + 1):
                if m == 1:
                    v = k * ss + (tt - ss) * one
                elif m == tt:
                    v = k / (ss + k * (tt - ss))
                else:
                    lose = prev[m - 1]
                    v = lose * (factor + prev[m]) / (factor + lose)
                cur[m] = v
                cells[(tt, m, ss)] = v
            prev = cur
        return cells

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "n", "s", "k", "coefficient"])
        for (t, n, s), v in sorted(self.entries.items()):
            w.writerow([t, n, s, float(self.k), repr(float(v))])
        return buf.getvalue()


_TABLES: dict = {}


def get_table(k, mode: ArithmeticMode = ArithmeticMode.FLOAT64) -> ThresholdTable:
    """Shared table per ``(k, mode)``."""
    mode = ArithmeticMode(mode)
    key = (Fraction(k), mode)
    table = _TABLES.get(key)
    if table is None:
        table = _TABLES[key] = ThresholdTable(k, mode)
    return table


def threshold_coefficient(t: int, n: int, s: int, k=1.0,
                          mode: ArithmeticMode = ArithmeticMode.FLOAT64, order: str = "auto"):
    return get_table(k, mode).coefficient(t, n, s, order=order)


def threshold_budget(t, n, s, k, d, mode: ArithmeticMode = ArithmeticMode.FLOAT64):
    """Minimal attacker budget that forces a win against defender budget ``d``."""
    if d < 0:
        raise DomainError("defender budget must be nonnegative")
    return threshold_coefficient(t, n, s, k, mode) * d


def required_defender_budget(t, n, s, k, a, mode: ArithmeticMode = ArithmeticMode.FLOAT64):
    """Any defender budget strictly above the result defeats attacker budget ``a``."""
    if a < 0:
        raise DomainError("attacker budget must be nonnegative")
    return a / threshold_coefficient(t, n, s, k, mode)


def schedule_coefficient(n: int, schedule: Sequence[RoundType], k, exact: bool = False):
    """Coefficient for a concrete round order, by direct recursion on the schedule.

    Unlike the table, this never uses the count-only closed forms for ``s = 0``
    or ``s = t``: it peels rounds off the front of ``schedule`` in the given
    order and stops only when one win is needed or every round must be won.
    """
    schedule = tuple(RoundType(rt) for rt in schedule)
    T = len(schedule)
    _check_domain(T, n, special_count(schedule))
    kk = Fraction(k) if exact else float(k)
    one = Fraction(1) if exact else 1.0
    suffix_specials = [0] * (T + 1)
    for i in range(T - 1, -1, -1):
        suffix_specials[i] = suffix_specials[i + 1] + schedule[i].is_special

    @lru_cache(maxsize=None)
    def value(i: int, m: int):
        t = T - i
        s = suffix_specials[i]
        if m == 1:
            return kk * s + (t - s) * one
        if m == t:
            return kk / (s + kk * (t - s))
        factor = kk if schedule[i].is_special else one
        lose = value(i + 1, m - 1)
        return lose * (factor + value(i + 1, m)) / (factor + lose)

    return value(0, n)


def swap_invariance_check(t: int, n: int, schedule_a, schedule_b, k, exact: bool = False):
    """Relative difference of the coefficient between two orderings with the
    same special count."""
    if len(schedule_a) != t or len(schedule_b) != t:
        raise DomainError("schedules must both have length t")
    if special_count(schedule_a) != special_count(schedule_b):
        raise DomainError("schedules have different special counts")
    va = schedule_coefficient(n, schedule_a, k, exact)
    vb = schedule_coefficient(n, schedule_b, k, exact)
    return abs(va - vb) / max(abs(va), abs(vb))


@dataclass(frozen=True)
class BoundsPair:
    lower: float
    upper: float


def bounds(t: int, n: int, s: int, k) -> BoundsPair:
    """Sandwich on the coefficient, valid when at least n - 1 rounds are special.

    The lower end is what the attacker must spend against a defender who
    bids ``d / n`` every round.
    """
    _check_domain(t, n, s)
    if n - 1 > s:
        raise DomainError(f"bounds need n - 1 <= s, got n={n}, s={s}")
    base = t + s * (k - 1)
    return BoundsPair((base - k * (n - 1)) / n, (base - (n - 1)) / n)


def constant_bid_lower_bound(t: int, n: int, s: int, k) -> float:
    return bounds(t, n, s, k).lower


def asymptotic_gap(t: int, n: int, s: int, k) -> float:
    """``k n / (t + (k - 1) s)``; the lower bound is tight as this goes to 0."""
    return k * n / (t + (k - 1) * s)


def default_epsilon(a) -> float:
    return 1e-9 * max(1.0, float(a))


def _table(k, table: Optional[ThresholdTable]) -> ThresholdTable:
    return table if table is not None else get_table(k)


def _check_live(state: GameState, round_type: RoundType) -> None:
    if state.is_terminal:
        raise DomainError(f"state {state} is terminal")
    if round_type is RoundType.SPECIAL and state.s < 1:
        raise DomainError("special round with no special rounds remaining")


def optimal_defender_bid(state: GameState, round_type: RoundType, k,
                         table: Optional[ThresholdTable] = None, epsilon=None):
    """Bid that leaves the attacker indifferent between conceding and winning.

    With one win left the defender bids everything. When every remaining
    round must be won the bid depends on the attacker's budget instead:
    just above ``a`` (regular) or ``a / k`` (special).
    """
    _check_live(state, round_type)
    table = _table(k, table)
    t, n, d, a = state.t, state.n, state.d, state.a
    if n == 1:
        return d
    if n == t:
        eps = default_epsilon(a) if epsilon is None else epsilon
        target = a / table.k + eps if round_type.is_special else a + eps
        return min(d, target)
    s_next = state.s - 1 if round_type.is_special else state.s
    lose = table.coefficient(t - 1, n - 1, s_next)
    win = table.coefficient(t - 1, n, s_next)
    factor = table.k if round_type.is_special else 1
    return min(d, d * (lose - win) / (factor + lose))


def attacker_requirements(state: GameState, round_type: RoundType, k, defender_bid,
                          table: Optional[ThresholdTable] = None):
    """Budgets the attacker needs to still force a win after conceding the
    round (first) or winning it at minimal cost (second)."""
    _check_live(state, round_type)
    table = _table(k, table)
    t, n, d = state.t, state.n, state.d
    s_next = state.s - 1 if round_type.is_special else state.s
    cost = table.k * defender_bid if round_type.is_special else defender_bid
    if n - 1 == 0:
        let_win = math.inf
    else:
        let_win = table.coefficient(t - 1, n - 1, s_next) * (d - defender_bid)
    if n > t - 1:
        win_now = cost
    else:
        win_now = cost + table.coefficient(t - 1, n, s_next) * d
    return let_win, win_now, cost


def optimal_attacker_response(state: GameState, round_type: RoundType, k, defender_bid,
                              table: Optional[ThresholdTable] = None):
    """Attacker bid: ``cost`` to take the round, ``0`` to concede.

    Picks the cheaper affordable branch, conceding on ties and whenever
    neither branch is affordable.
    """
    let_win, win_now, cost = attacker_requirements(state, round_type, k, defender_bid, table)
    a = state.a
    if let_win <= a and let_win <= win_now:
        return 0
    if win_now <= a and cost <= a:
        return cost
    return 0
