"""Regenerate tests/fixtures/vaughan_battery.json from scratch.

Counts come from brute enumeration over sympy primes, written independently
of the package (full cartesian product for the small battery, pair
enumeration with a solved last slot for the growth table).

Run from the repository root:

    python3 tools/gen_vaughan_fixtures.py
"""
from __future__ import annotations

import json
from itertools import product
from pathlib import Path

import sympy

COMMAND = "python3 tools/gen_vaughan_fixtures.py"

BATTERY = [
    {"alphas": [1, 1, 1], "m": 11, "T": 20, "mode": "positive", "allow_two": True},
    {"alphas": [1, 1, 1], "m": 11, "T": 20, "mode": "signed", "allow_two": True},
    {"alphas": [1, 1, 1], "m": 11, "T": 20, "mode": "positive", "allow_two": False},
    {"alphas": [1, 1, 1], "m": 6, "T": 2, "mode": "positive", "allow_two": True},
    {"alphas": [2, 2, 2], "m": 6, "T": 10, "mode": "signed", "allow_two": True},
    {"alphas": [2, 2, 2], "m": 6, "T": 10, "mode": "positive", "allow_two": True},
    {"alphas": [1, 2, 3], "m": 10, "T": 20, "mode": "positive", "allow_two": True},
    {"alphas": [3, 5, 7], "m": 15, "T": 30, "mode": "signed", "allow_two": True},
    {"alphas": [1, 1, 2], "m": 9, "T": 20, "mode": "positive", "allow_two": True},
    {"alphas": [5, -3, 2], "m": 4, "T": 25, "mode": "signed", "allow_two": True},
    {"alphas": [1, 1, 1, 1], "m": 12, "T": 15, "mode": "positive", "allow_two": True},
    {"alphas": [1, 1, 1], "m": 100, "T": 50, "mode": "positive", "allow_two": True},
]

GROWTH_TS = [500, 1000, 2000]
GROWTH_SOLVABLE = {"alphas": [1, 1, 1], "m": 11}
GROWTH_FAILING = {"alphas": [1, 1, 1], "m": 4}
RATIO_FLOOR = 5


def candidates(T: int, mode: str, allow_two: bool) -> list[int]:
    primes = [p for p in sympy.primerange(2, T + 1) if allow_two or p != 2]
    if mode == "signed":
        return [-p for p in primes] + primes
    return primes


def count_full_product(alphas, m, T, mode, allow_two) -> int:
    cands = candidates(T, mode, allow_two)
    hits = 0
    for combo in product(cands, repeat=len(alphas)):
        if sum(a * c for a, c in zip(alphas, combo)) == m:
            hits += 1
    return hits


def count_solved_last(alphas, m, T, mode) -> int:
    """Pair enumeration for n=3 signed growth tables."""
    assert len(alphas) == 3
    cands = candidates(T, mode, True)
    ok = set(cands)
    a1, a2, a3 = alphas
    hits = 0
    for p1 in cands:
        rem1 = m - a1 * p1
        for p2 in cands:
            num = rem1 - a2 * p2
            q, r = divmod(num, a3)
            if r == 0 and q in ok and sympy.isprime(abs(q)):
                hits += 1
    return hits


def main() -> None:
    battery = []
    for inst in BATTERY:
        count = count_full_product(inst["alphas"], inst["m"], inst["T"],
                                   inst["mode"], inst["allow_two"])
        battery.append({**inst, "expected_count": count})
        print(f"{inst['alphas']} m={inst['m']} T={inst['T']} "
              f"{inst['mode']} two={inst['allow_two']}: {count}")
    growth = {"Ts": GROWTH_TS, "mode": "signed",
              "solvable": dict(GROWTH_SOLVABLE), "failing": dict(GROWTH_FAILING)}
    growth["solvable"]["counts"] = [
        count_solved_last(GROWTH_SOLVABLE["alphas"], GROWTH_SOLVABLE["m"], T, "signed")
        for T in GROWTH_TS]
    growth["failing"]["counts"] = [
        count_solved_last(GROWTH_FAILING["alphas"], GROWTH_FAILING["m"], T, "signed")
        for T in GROWTH_TS]
    ratio = growth["solvable"]["counts"][-1] / max(growth["failing"]["counts"][-1], 1)
    growth["ratio_at_last_T"] = ratio
    growth["ratio_floor"] = RATIO_FLOOR
    print("growth solvable:", growth["solvable"]["counts"])
    print("growth failing:", growth["failing"]["counts"])
    print("ratio at T=2000:", ratio)
    out = {
        "generated_by": COMMAND,
        "battery": battery,
        "growth": growth,
    }
    path = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "vaughan_battery.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(out, indent=2) + "\n")
    print("wrote", path)


if __name__ == "__main__":
    main()
