"""Prime-point search: an obstruction precheck, then either direct
enumeration over small prime boxes or a two-phase sweep (sample a prime
outer block, solve the induced linear equation in primes)."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product

from .congruence import (
    ObstructionReport,
    ReachabilitySet,
    assemble_point,
    block_sizes,
    epsilon_for_family,
    obstruction_admits_primes,
    odd_residue_reachability,
)
from .errors import (
    HypothesisViolationError,
    InvalidArgumentError,
    ResourceLimitError,
)
from .invariants import (
    VarietyFamily,
    VarietyPoint,
    coordinate_count,
    decompose,
    delta_eval,
)
from .primes import is_prime, primes_up_to
from .vaughan import LinearEquation, check_conditions, enumerate_prime_solutions

_DIRECT_CAP = 200_000
_Y_PRIME_BOUND = 60


@dataclass(frozen=True)
class SearchConfig:
    family: VarietyFamily
    m: int
    coordinate_bound: int
    budget: int = 1_000_000
    limit: int = 3
    seed: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or isinstance(self.m, bool) or self.m == 0:
            raise InvalidArgumentError(f"m must be a nonzero integer, got {self.m!r}")
        if self.coordinate_bound < 2:
            raise InvalidArgumentError(
                f"coordinate bound must be >= 2, got {self.coordinate_bound}")
        if self.budget < 1:
            raise InvalidArgumentError(f"budget must be >= 1, got {self.budget}")
        if self.limit < 1:
            raise InvalidArgumentError(f"limit must be >= 1, got {self.limit}")


@dataclass(frozen=True)
class PrimePointReport:
    points: tuple[VarietyPoint, ...]
    verified: tuple[bool, ...]
    obstruction_precheck: ObstructionReport | None
    odd_flags: tuple[bool, ...] = ()
    strategy: str = ""
    diagnostics: dict = field(default_factory=dict)
    reachability: ReachabilitySet | None = None


def verify_point(point: VarietyPoint, m: int, signed: bool = False) -> bool:
    """Exact recheck: every coordinate prime (positive unless signed) and the
    family's form evaluates to m."""
    for c in point.coordinates:
        v = abs(c) if signed else c
        if v < 2 or not is_prime(v):
            return False
    return delta_eval(point) == m


def _try_reachability(family: VarietyFamily) -> ReachabilitySet | None:
    try:
        return odd_residue_reachability(family, epsilon_for_family(family))
    except ResourceLimitError:
        return None


def _report(found: list[VarietyPoint], config: SearchConfig,
            precheck: ObstructionReport | None, strategy: str,
            diag: dict) -> PrimePointReport:
    reach = None
    if precheck is not None and not precheck.admissible:
        reach = _try_reachability(config.family)
    return PrimePointReport(
        points=tuple(found),
        verified=tuple(verify_point(p, config.m) for p in found),
        obstruction_precheck=precheck,
        odd_flags=tuple(all(c != 2 for c in p.coordinates) for p in found),
        strategy=strategy,
        diagnostics=diag,
        reachability=reach,
    )


def _direct_search(config: SearchConfig, pool: list[int],
                   precheck: ObstructionReport | None) -> PrimePointReport:
    count = coordinate_count(config.family)
    found: list[VarietyPoint] = []
    budget = config.budget
    for combo in product(pool, repeat=count):
        if budget <= 0:
            break
        budget -= 1
        point = VarietyPoint(config.family, combo)
        if delta_eval(point) == config.m:
            found.append(point)
            if len(found) >= config.limit:
                break
    diag = {"strategy": "direct", "pool": len(pool),
            "budget_left": budget, "exhausted": budget <= 0}
    return _report(found, config, precheck, "direct", diag)


def _vaughan_search(config: SearchConfig,
                    precheck: ObstructionReport | None) -> PrimePointReport:
    family = config.family
    xi_count, y_count, z_count = block_sizes(family)
    odd_pool = [p for p in primes_up_to(min(config.coordinate_bound,
                                            _Y_PRIME_BOUND)) if p != 2]
    found: list[VarietyPoint] = []
    budget = config.budget
    candidates = 0
    z_combos: list[tuple[int, ...]] = [()]
    if z_count:
        z_combos = list(combinations_with_replacement(odd_pool, z_count))
    done = False
    for z_vals in z_combos:
        if done:
            break
        for y_vals in combinations_with_replacement(odd_pool, y_count):
            if done:
                break
            if budget <= 0:
                done = True
                break
            budget -= 1
            candidates += 1
            probe = assemble_point(family, (1,) * xi_count, y_vals, z_vals)
            dec = decompose(probe)
            if any(f == 0 for f in dec.f_values):
                continue
            target = config.m - dec.g_value
            if target == 0:
                continue
            try:
                eq = LinearEquation(dec.f_values, target)
            except InvalidArgumentError:
                continue
            if not check_conditions(eq).solvable:
                continue
            budget -= len(odd_pool)
            try:
                sols = enumerate_prime_solutions(
                    eq, config.coordinate_bound, "positive",
                    config.limit - len(found))
            except ResourceLimitError:
                continue
            for xi in sols:
                point = assemble_point(family, xi, y_vals, z_vals)
                if verify_point(point, config.m):
                    found.append(point)
                if len(found) >= config.limit:
                    done = True
                    break
    diag = {"strategy": "vaughan", "outer_candidates": candidates,
            "budget_left": max(budget, 0), "exhausted": budget <= 0}
    return _report(found, config, precheck, "vaughan", diag)


def find_prime_points(config: SearchConfig, force: bool = False) -> PrimePointReport:
    """Search for prime points with form value m. An inadmissible obstruction
    class short-circuits to an empty report citing reachability unless
    `force`; an exhausted budget reports diagnostics, never a false negative."""
    family = config.family
    precheck: ObstructionReport | None
    try:
        precheck = obstruction_admits_primes(family, config.m)
    except HypothesisViolationError:
        if not force:
            raise
        precheck = None
    if precheck is not None and not precheck.admissible and not force:
        diag = {"reason": "congruence class obstructed", "m": config.m}
        return _report([], config, precheck, "precheck", diag)
    pool = primes_up_to(config.coordinate_bound)
    count = coordinate_count(family)
    if len(pool) ** count <= _DIRECT_CAP:
        report = _direct_search(config, pool, precheck)
        # a completed direct enumeration is authoritative either way
        if report.points or not report.diagnostics.get("exhausted"):
            return report
    return _vaughan_search(config, precheck)
