"""Command-line front end.

Subcommands: ``solve``, ``bids``, ``simulate``, ``sweep``, ``eval``, ``oracle``.
Every command reads an optional JSON config (``--config``) whose fields can be
overridden by flags; see the README for the schema. Output goes to stdout or
``--out`` as JSON or CSV.

Exit codes: 0 success, 1 usage/config error, 2 golden-value failure in
``eval``, 3 strategy fault during simulation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import multiproposer as mp
from .core import (
    GameParams,
    GameParamsError,
    GameState,
    RoundType,
    front_loaded_schedule,
    parse_schedule,
    special_count,
    terminal_status,
    GameOutcome,
    validate_params,
)
from .engine import StrategyFault, play_game, run_probabilistic
from .oracle import IntGameSpec, grid_threshold, minimax_winner
from .solver import (
    ArithmeticMode,
    DomainError,
    alice_threshold_g1,
    asymptotic_gap,
    bounds,
    get_table,
    optimal_defender_bid,
)
from .strategies import StrategyConfigError, attacker_from_descriptor, defender_from_descriptor

SCHEMA_VERSION = 1
MAX_SWEEP_CELLS = 10 ** 7

OPTIMAL = {"kind": "optimal"}

EXIT_OK, EXIT_USAGE, EXIT_GOLDEN, EXIT_FAULT = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    game: str = "G1K"
    total_rounds: Optional[int] = None
    required_wins: Optional[int] = None
    special_factor: float = 1.0
    attacker_budget: Optional[float] = None
    defender_budget: Optional[float] = None
    special_prob: Optional[float] = None
    schedule: Optional[str] = None
    specials: Optional[int] = None
    # None picks the game's default: optimal play, or constant offers and D/N bribes for GM
    defender: Optional[dict] = None
    attacker: Optional[dict] = None
    mechanism: str = "budget_balanced"
    m: Optional[int] = None
    trials: int = 1000
    seed: int = 0
    exact: bool = False
    unit: Optional[str] = None
    format: str = "json"
    out: Optional[str] = None
    sweep: dict = field(default_factory=dict)
    oracle: dict = field(default_factory=dict)

    PARAM_KEYS = ("total_rounds", "required_wins", "special_factor", "attacker_budget",
                  "defender_budget", "special_prob")

    @classmethod
    def from_dict(cls, raw: dict) -> "RunConfig":
        raw = dict(raw)
        version = raw.pop("schema_version", SCHEMA_VERSION)
        if version != SCHEMA_VERSION:
            raise ConfigError(f"unsupported schema_version {version}")
        cfg = cls()
        params = raw.pop("params", {})
        for key, value in params.items():
            if key not in cls.PARAM_KEYS:
                raise ConfigError(f"unknown params field {key!r}")
            setattr(cfg, key, value)
        sched = raw.pop("schedule", None)
        if isinstance(sched, dict):
            forms = [k for k in ("string", "specials", "p") if sched.get(k) is not None]
            if len(forms) != 1:
                raise ConfigError("schedule needs exactly one of 'string', 'specials', 'p'")
            form = forms[0]
            if form == "string":
                cfg.schedule = sched["string"]
            elif form == "specials":
                cfg.specials = sched["specials"]
            else:
                cfg.special_prob = sched["p"]
        elif sched is not None:
            cfg.schedule = sched
        output = raw.pop("output", {})
        cfg.format = output.get("format", cfg.format)
        cfg.out = output.get("path", cfg.out)
        for key, value in raw.items():
            if key not in cls.__dataclass_fields__ or key in cls.PARAM_KEYS:
                raise ConfigError(f"unknown config field {key!r}")
            setattr(cfg, key, value)
        return cfg

    def params(self, need_budgets: bool = False) -> GameParams:
        if self.total_rounds is None or self.required_wins is None:
            raise ConfigError("total_rounds (-T) and required_wins (-N) are required")
        if need_budgets and (self.attacker_budget is None or self.defender_budget is None):
            raise ConfigError("attacker_budget (-A) and defender_budget (-D) are required")
        p = GameParams(
            total_rounds=int(self.total_rounds),
            required_wins=int(self.required_wins),
            special_factor=float(self.special_factor),
            attacker_budget=float(self.attacker_budget or 0.0),
            defender_budget=float(self.defender_budget or 0.0),
            special_prob=None if self.special_prob is None else float(self.special_prob),
        )
        try:
            return validate_params(p)
        except GameParamsError as exc:
            raise ConfigError(str(exc)) from None

    def concrete_schedule(self) -> tuple:
        T = int(self.total_rounds)
        if self.schedule is not None and self.specials is not None:
            raise ConfigError("give either an explicit schedule or a special count, not both")
        if self.schedule is not None:
            sched = parse_schedule(self.schedule)
            if len(sched) != T:
                raise ConfigError(f"schedule has {len(sched)} rounds, expected {T}")
            return sched
        if self.game == "G1":
            return front_loaded_schedule(T, 0)
        return front_loaded_schedule(T, int(self.specials or 0))

    def special_total(self) -> int:
        if self.game == "G1":
            return 0
        if self.schedule is not None:
            return special_count(parse_schedule(self.schedule))
        return int(self.specials or 0)

    @property
    def mode(self) -> ArithmeticMode:
        return ArithmeticMode.EXACT if self.exact else ArithmeticMode.FLOAT64


def _num(x):
    if isinstance(x, Fraction):
        return float(x)
    return x


def _exact_str(x):
    return f"{x.numerator}/{x.denominator}" if isinstance(x, Fraction) else None


# --- commands -----------------------------------------------------------------

def cmd_solve(cfg: RunConfig) -> dict:
    params = cfg.params()
    T, N, k = params.total_rounds, params.required_wins, params.special_factor
    s = cfg.special_total()
    table = get_table(k, cfg.mode)
    coef = table.coefficient(T, N, s)
    report = {
        "total_rounds": T, "required_wins": N, "specials": s, "special_factor": k,
        "coefficient": _num(coef),
        "coefficient_no_specials": alice_threshold_g1(T, N),
        "asymptotic_gap": asymptotic_gap(T, N, s, k),
        "arithmetic": cfg.mode.value,
    }
    if _exact_str(coef):
        report["coefficient_exact"] = _exact_str(coef)
    if cfg.defender_budget is not None:
        report["threshold_budget"] = _num(coef * table._num(cfg.defender_budget))
    if cfg.attacker_budget is not None:
        report["required_defender_budget"] = _num(table._num(cfg.attacker_budget) / coef)
        report["required_defender_budget_no_specials"] = cfg.attacker_budget / alice_threshold_g1(T, N)
        if cfg.m:
            report["required_defender_budget_multi_builder"] = mp.required_defender_budget_gm(
                T, N, int(cfg.m), cfg.attacker_budget)
    if N - 1 <= s:
        bp = bounds(T, N, s, k)
        report["lower_bound"] = bp.lower
        report["upper_bound"] = bp.upper
        report["lower_bound_ratio"] = bp.lower / float(coef)
    if cfg.unit:
        report["unit"] = cfg.unit
    return report


def bid_paths(cfg: RunConfig, offset: int = 0, limit: Optional[int] = None) -> list:
    """Optimal defender bids along the path where the defender wins every
    round and the path where the attacker censors every round."""
    params = cfg.params()
    schedule = cfg.concrete_schedule()
    if limit is None and params.total_rounds > 10 ** 4:
        raise ConfigError("more than 10^4 rounds: use --limit/--offset to page the listing")
    k = params.special_factor
    table = get_table(k, cfg.mode)
    a0 = cfg.attacker_budget
    rows = []
    for path in ("defender_wins", "attacker_censors"):
        state = GameState(params.total_rounds, params.required_wins, special_count(schedule),
                          table._num(params.defender_budget),
                          table._num(a0) if a0 is not None else 0)
        for i, rt in enumerate(schedule):
            if terminal_status(state) is not GameOutcome.ONGOING:
                break
            needs_a = state.n == state.t and state.n > 1
            bid = alt = None
            if not (needs_a and a0 is None):
                bid = optimal_defender_bid(state, rt, k, table)
                # what the bid would have been had this round been the other type
                other = RoundType.REGULAR if rt.is_special else RoundType.SPECIAL
                if other.is_special and state.s < 1:
                    alt = None
                else:
                    alt = optimal_defender_bid(state, other, k, table)
            rows.append({
                "path": path, "round": i, "round_type": rt.value,
                "t": state.t, "n": state.n, "s": state.s,
                "defender_budget": _num(state.d),
                "attacker_budget": _num(state.a) if a0 is not None else None,
                "bid": _num(bid) if bid is not None else None,
                "fraction": _num(bid / state.d) if bid is not None and state.d > 0 else None,
                "other_type_bid": _num(alt) if alt is not None else None,
            })
            s_next = state.s - rt.is_special
            if bid is None:
                bid = 0
            if path == "defender_wins":
                state = GameState(state.t - 1, state.n - 1, s_next, state.d - bid, state.a)
            else:
                cost = k * bid if rt.is_special else bid
                a = state.a - cost if a0 is not None else state.a
                state = GameState(state.t - 1, state.n, s_next, state.d, a)
    end = None if limit is None else offset + limit
    return rows[offset:end]


def cmd_bids(cfg: RunConfig, offset: int = 0, limit: Optional[int] = None) -> dict:
    return {"rows": bid_paths(cfg, offset, limit)}


def _gm_defender(desc: Optional[dict]):
    desc = desc or {}
    kind = desc.get("kind", "constant")
    if kind in ("constant", "constant_fraction"):
        return mp.ConstantOffer(desc.get("B"), desc.get("b", 0.0))
    if kind == "random":
        return mp.RandomOffer(desc.get("low", 0.0), desc.get("high", 1.0), desc.get("b", 0.0))
    raise ConfigError(f"unknown multi-builder defender kind {kind!r}")


def _gm_attacker(desc: Optional[dict], params: GameParams):
    desc = desc or {}
    kind = desc.get("kind", "fraction")
    if kind == "constant":
        return mp.ConstantBribe(desc["c"])
    if kind == "fraction":
        return mp.ConstantBribe(params.defender_budget / params.required_wins)
    if kind == "proportional":
        return mp.ProportionalBribe(desc.get("ratio", 1.0), desc.get("epsilon", 0.0))
    raise ConfigError(f"unknown multi-builder attacker kind {kind!r}")


def cmd_simulate(cfg: RunConfig):
    """Returns a GameTrace (G1, G1K) or a report (G1KP, GM)."""
    game = cfg.game.upper()
    if game in ("G1", "G1K"):
        params = cfg.params(need_budgets=True)
        if game == "G1" and params.special_factor != 1 and cfg.special_total():
            raise ConfigError("G1 has no special rounds")
        schedule = cfg.concrete_schedule()
        k = params.special_factor
        return play_game(params, schedule,
                         defender_from_descriptor(cfg.defender or OPTIMAL, k, cfg.seed),
                         attacker_from_descriptor(cfg.attacker or OPTIMAL, k, cfg.seed))
    if game == "G1KP":
        params = cfg.params(need_budgets=True)
        if params.special_prob is None:
            raise ConfigError("G1KP needs special_prob (-p)")
        k = params.special_factor
        return run_probabilistic(
            params,
            lambda i: defender_from_descriptor(cfg.defender or OPTIMAL, k, cfg.seed, i),
            lambda i: attacker_from_descriptor(cfg.attacker or OPTIMAL, k, cfg.seed, i),
            int(cfg.trials), int(cfg.seed),
            hoeffding_delta=cfg.sweep.get("hoeffding_delta") if cfg.sweep else None,
        )
    if game == "GM":
        params = cfg.params(need_budgets=True)
        if not cfg.m:
            raise ConfigError("GM needs the builder count m")
        return mp.simulate_gm(params, int(cfg.m), cfg.mechanism, _gm_defender(cfg.defender),
                              _gm_attacker(cfg.attacker, params), int(cfg.trials), int(cfg.seed))
    raise ConfigError(f"unknown game {cfg.game!r}")


def parse_values(spec, kind=float) -> list:
    """``[1, 2]``, ``"1,2,5"`` or ``"start:stop:step"`` (inclusive stop)."""
    if spec is None:
        return []
    if isinstance(spec, (int, float)):
        return [kind(spec)]
    if isinstance(spec, list):
        return [kind(v) for v in spec]
    if isinstance(spec, dict):
        spec = f"{spec['start']}:{spec['stop']}:{spec.get('step', 1)}"
    text = str(spec)
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError(f"range must be start:stop:step, got {text!r}")
        start, stop, step = (Fraction(p) for p in parts)
        if step <= 0:
            raise ConfigError("range step must be positive")
        count = int((stop - start) / step) + 1
        return [kind(start + i * step) for i in range(max(count, 0))]
    return [kind(v) for v in text.split(",") if v.strip()]


def cmd_sweep(cfg: RunConfig) -> str:
    sw = cfg.sweep
    if any(key in sw for key in ("B", "c", "m")):
        return _sweep_equilibria(cfg)
    ts = parse_values(sw.get("t"), int)
    ns = parse_values(sw.get("n"), int)
    ks = parse_values(sw.get("k", 1.0), float)
    s_frac = sw.get("s_per_t")
    ss = parse_values(sw.get("s", 0 if s_frac is None else None), int)
    if not ts or not ns or not ks:
        raise ConfigError("threshold sweep needs t, n and k values")
    cells = len(ts) * len(ns) * len(ks) * (1 if s_frac is not None else len(ss))
    if cells > MAX_SWEEP_CELLS:
        raise ConfigError(f"sweep grid has {cells} cells, limit is {MAX_SWEEP_CELLS}")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "n", "s", "k", "coefficient", "lower_bound", "upper_bound", "asymptotic_gap"])
    for k in ks:
        table = get_table(k, cfg.mode)
        for t in ts:
            s_values = [int(t * s_frac)] if s_frac is not None else ss
            for n in ns:
                for s in s_values:
                    try:
                        coef = float(table.coefficient(t, n, s))
                    except DomainError:
                        continue
                    lo = hi = ""
                    if n - 1 <= s:
                        bp = bounds(t, n, s, k)
                        lo, hi = repr(bp.lower), repr(bp.upper)
                    w.writerow([t, n, s, repr(k), repr(coef), lo, hi,
                                repr(asymptotic_gap(t, n, s, k))])
    return buf.getvalue()


def _sweep_equilibria(cfg: RunConfig) -> str:
    sw = cfg.sweep
    mech = mp.Mechanism(sw.get("mechanism", cfg.mechanism))
    Bs = parse_values(sw.get("B", 1.0))
    cs = parse_values(sw.get("c"))
    ms = parse_values(sw.get("m", cfg.m), int)
    bs = parse_values(sw.get("b", 0.0))
    if not cs or not ms:
        raise ConfigError("equilibrium sweep needs c and m values")
    cells = len(Bs) * len(cs) * len(ms) * len(bs)
    if cells > MAX_SWEEP_CELLS:
        raise ConfigError(f"sweep grid has {cells} cells, limit is {MAX_SWEEP_CELLS}")
    rows = []
    for m in ms:
        for B in Bs:
            for b in bs:
                for c in cs:
                    if mech is mp.Mechanism.CONDITIONAL and b >= B:
                        continue
                    rows.append((mech, m, B, b, c, mp.solve(mech, m, B, c, b)))
    return mp.sweep_csv(rows)


@dataclass(frozen=True)
class GoldenCheck:
    name: str
    value: float
    low: float
    high: float

    @property
    def passed(self) -> bool:
        return self.low <= self.value <= self.high


def golden_checks() -> list:
    """Challenge-period numbers for a one-week window with 2% default-ordering
    proposers, a $10B attacker and k = 60."""
    A = 1e10
    t60 = get_table(60)
    big = t60.coefficient(50000, 60, 1000)
    big_bounds = bounds(50000, 60, 1000, 60)
    t25 = get_table(25)
    small = t25.coefficient(214, 57, 57)
    small_bounds = bounds(214, 57, 57, 25)
    return [
        GoldenCheck("coefficient(50000,60,1000,k=60)", big, 1785, 1787),
        GoldenCheck("lower_bound/coefficient at (50000,60,1000,k=60)",
                    big_bounds.lower / big, 0.980, 0.990),
        GoldenCheck("coefficient(214,57,57,k=25)", small, 9.05, 9.15),
        GoldenCheck("lower_bound(214,57,57,k=25)", small_bounds.lower, 3.18, 3.20),
        GoldenCheck("upper_bound(214,57,57,k=25)", small_bounds.upper, 26.75, 26.85),
        GoldenCheck("lower_bound/coefficient at (214,57,57,k=25)",
                    small_bounds.lower / small, 0.346, 0.356),
        GoldenCheck("required defender budget, no specials, A=1e10",
                    A / alice_threshold_g1(50000, 60), 1.19e7, 1.21e7),
        GoldenCheck("required defender budget, 1000 specials, A=1e10",
                    A / big, 5.5e6, 5.7e6),
        GoldenCheck("required defender budget, m=20 builders, A=1e10",
                    mp.required_defender_budget_gm(50000, 60, 20, A), 0.0, 1e6),
    ]


def cmd_eval() -> tuple:
    checks = golden_checks()
    lines = []
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append(f"{status}  {c.name} = {c.value:.6g}  (expected [{c.low:g}, {c.high:g}])")
    ok = all(c.passed for c in checks)
    return ok, "\n".join(lines) + "\n"


def cmd_oracle(cfg: RunConfig) -> dict:
    o = dict(cfg.oracle)
    sched = o.get("schedule", cfg.schedule)
    n = o.get("n", cfg.required_wins)
    d = o.get("d", cfg.defender_budget)
    a = o.get("a", cfg.attacker_budget)
    k = o.get("k", cfg.special_factor)
    if sched is None or n is None or d is None or a is None:
        raise ConfigError("oracle needs schedule, n (-N), d (-D) and a (-A)")
    try:
        spec = IntGameSpec(int(n), sched, int(d), int(a), int(k))
    except (GameParamsError, ValueError) as exc:
        raise ConfigError(str(exc)) from None
    coef = float(get_table(spec.k).coefficient(spec.t, spec.n, spec.s))
    threshold = grid_threshold(spec.n, spec.schedule, spec.d, spec.k)
    predicted = "attacker" if spec.a >= coef * spec.d else "defender"
    return {
        "winner": minimax_winner(spec).value,
        "threshold": threshold,
        "continuous_threshold": coef * spec.d,
        "solver_prediction": predicted,
        "deviation": threshold - coef * spec.d,
    }


# --- I/O ----------------------------------------------------------------------

def _to_csv(report) -> str:
    if hasattr(report, "to_csv"):
        return report.to_csv()
    if isinstance(report, dict) and "rows" in report:
        rows = report["rows"]
        buf = io.StringIO()
        if rows:
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            for r in rows:
                w.writerow({key: ("" if v is None else (repr(v) if isinstance(v, float) else v))
                            for key, v in r.items()})
        return buf.getvalue()
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(report))
    w.writerow(["" if v is None else (repr(v) if isinstance(v, float) else v)
                for v in report.values()])
    return buf.getvalue()


def _to_json(report) -> str:
    if hasattr(report, "to_json"):
        return report.to_json()
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON run configuration")
    common.add_argument("--seed", type=int)
    common.add_argument("--trials", type=int)
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"))
    common.add_argument("--exact", action="store_true", default=None,
                        help="exact rational arithmetic where supported")
    common.add_argument("--unit", help="currency label carried into reports")
    common.add_argument("-T", "--total-rounds", type=int)
    common.add_argument("-N", "--required-wins", type=int)
    common.add_argument("-k", "--special-factor", type=float)
    common.add_argument("-A", "--attacker-budget", type=float)
    common.add_argument("-D", "--defender-budget", type=float)
    common.add_argument("-p", "--special-prob", type=float)
    common.add_argument("-s", "--specials", type=int, help="number of special rounds (placed first)")
    common.add_argument("--schedule", help="explicit round types, e.g. SRRS")
    common.add_argument("--game", choices=("G1", "G1K", "G1KP", "GM"))
    common.add_argument("-m", "--builders", dest="m", type=int)
    common.add_argument("--mechanism", choices=[m.value for m in mp.Mechanism])
    common.add_argument("--defender", help="strategy descriptor as JSON, e.g. '{\"kind\": \"optimal\"}'")
    common.add_argument("--attacker", help="strategy descriptor as JSON")

    parser = argparse.ArgumentParser(prog="censorgame", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("solve", parents=[common], help="threshold coefficient, budgets and bounds")
    bids = sub.add_parser("bids", parents=[common], help="optimal defender bid schedule")
    bids.add_argument("--offset", type=int, default=0)
    bids.add_argument("--limit", type=int)
    sub.add_parser("simulate", parents=[common], help="play a game or run Monte Carlo")
    sweep = sub.add_parser("sweep", parents=[common], help="CSV sweep over a parameter grid")
    for name in ("t", "n", "s", "B", "c", "b"):
        sweep.add_argument(f"--{name}-values", dest=f"sweep_{name}")
    sweep.add_argument("--k-values", dest="sweep_k")
    sweep.add_argument("--m-values", dest="sweep_m")
    sweep.add_argument("--s-per-t", dest="sweep_s_per_t", type=float)
    sub.add_parser("eval", parents=[common], help="check the challenge-period golden numbers")
    oracle = sub.add_parser("oracle", parents=[common], help="brute-force integer game check")
    oracle.add_argument("--oracle-k", dest="oracle_k", type=int)
    return parser


def config_from_args(args) -> RunConfig:
    if args.config:
        with open(args.config) as fh:
            cfg = RunConfig.from_dict(json.load(fh))
    else:
        cfg = RunConfig()
    for name in ("seed", "trials", "format", "exact", "unit", "total_rounds", "required_wins",
                 "special_factor", "attacker_budget", "defender_budget", "special_prob",
                 "specials", "schedule", "game", "m", "mechanism", "out"):
        value = getattr(args, name, None)
        if value is not None:
            setattr(cfg, name, value)
    for role in ("defender", "attacker"):
        value = getattr(args, role, None)
        if value:
            try:
                setattr(cfg, role, json.loads(value))
            except json.JSONDecodeError:
                setattr(cfg, role, {"kind": value})
    sweep = dict(cfg.sweep)
    for key, value in vars(args).items():
        if key.startswith("sweep_") and value is not None:
            sweep[key[len("sweep_"):]] = value
    cfg.sweep = sweep
    if getattr(args, "oracle_k", None) is not None:
        cfg.oracle = dict(cfg.oracle, k=args.oracle_k)
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        if args.command == "eval":
            ok, text = cmd_eval()
            _emit(text, cfg.out)
            return EXIT_OK if ok else EXIT_GOLDEN
        if args.command == "sweep":
            _emit(cmd_sweep(cfg), cfg.out)
            return EXIT_OK
        if args.command == "solve":
            report = cmd_solve(cfg)
        elif args.command == "bids":
            report = cmd_bids(cfg, args.offset, args.limit)
        elif args.command == "simulate":
            report = cmd_simulate(cfg)
        else:
            report = cmd_oracle(cfg)
        _emit(_to_csv(report) if cfg.format == "csv" else _to_json(report), cfg.out)
        return EXIT_OK
    except StrategyFault as exc:
        print(f"strategy fault: {exc}", file=sys.stderr)
        return EXIT_FAULT
    except (ConfigError, GameParamsError, DomainError, StrategyConfigError,
            mp.EquilibriumError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
