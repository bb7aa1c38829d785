"""Cross-checks between orbit enumeration and Burnside counting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .andre2d import burnside_sum_2d, count_2d, enumerate_2d, max_index
from .andrehd import burnside_sum_hd, count_hd, enumerate_hd
from .field import FiniteField, NotPrimePower, make_field, prime_power

BRIDGE_QS = (5, 7, 9, 11, 13)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def prime_powers(lo: int, hi: int) -> list[int]:
    out = []
    for q in range(lo, hi + 1):
        try:
            prime_power(q)
        except NotPrimePower:
            continue
        out.append(q)
    return out


def hd_pairs(max_states: int) -> Iterator[tuple[int, int]]:
    """All ``(n, q)`` with n >= 1, q >= 3 and ``(n+1)**(q-1) <= max_states``."""
    q = 3
    while 2 ** (q - 1) <= max_states:
        try:
            prime_power(q)
        except NotPrimePower:
            q += 1
            continue
        n = 1
        while (n + 1) ** (q - 1) <= max_states:
            yield n, q
            n += 1
        q += 1


def run_verify(
    max_q_2d: int = 13,
    max_states_hd: int = 10**5,
    count_2d_fn: Callable[[FiniteField, int], int] = count_2d,
    enumerate_2d_fn: Callable[[FiniteField, int], list] = enumerate_2d,
    count_hd_fn: Callable[[int, FiniteField], int] = count_hd,
) -> list[Check]:
    """Run every agreement check; the ``*_fn`` hooks let tests inject faults."""
    checks = []
    for q in prime_powers(5, max_q_2d):
        f = make_field(q)
        for i in range(2, max_index(q) + 1):
            total, order = burnside_sum_2d(f, i)
            checks.append(Check(f"integral2d q={q} index={i}", total % order == 0,
                                f"{total} / {order}"))
            enum, count = len(enumerate_2d_fn(f, i)), count_2d_fn(f, i)
            checks.append(Check(f"enum2d=count2d q={q} index={i}", enum == count,
                                f"enumerated {enum}, counted {count}"))
    for n, q in hd_pairs(max_states_hd):
        f = make_field(q)
        total, order = burnside_sum_hd(n, f)
        checks.append(Check(f"integralhd n={n} q={q}", total % order == 0, f"{total} / {order}"))
        e = enumerate_hd(n, f, state_cap=max_states_hd)
        count = count_hd_fn(n, f)
        checks.append(Check(f"enumhd=counthd n={n} q={q}", e.total_orbits - 1 == count,
                            f"enumerated {e.total_orbits} orbits, counted {count} + 1"))
        checks.append(Check(f"regular orbit n={n} q={q}", e.regular_orbit_size == n + 1,
                            f"size {e.regular_orbit_size}"))
    for q in BRIDGE_QS:
        if q > max_q_2d:
            continue
        f = make_field(q)
        lhs = count_hd_fn(1, f)
        rhs = 1 + sum(count_2d_fn(f, i) for i in range(2, max_index(q) + 1))
        checks.append(Check(f"bridge q={q}", lhs == rhs, f"counthd(1) = {lhs}, 1 + sum count2d = {rhs}"))
    return checks


def summarize(checks: list[Check]) -> str:
    lines = [f"{'PASS' if c.ok else 'FAIL'}  {c.name}" + ("" if c.ok else f": {c.detail}")
             for c in checks]
    failed = sum(not c.ok for c in checks)
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n"
