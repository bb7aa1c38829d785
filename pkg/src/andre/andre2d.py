"""Two-dimensional André planes of order q**2.

An André spread of PG(3, q) is fixed by the set of norm surfaces it
reverses, a subset of F*.  Two such subsets of size 2..(q-1)/2 give isomorphic
planes exactly when one is carried to the other by a map ``f -> a * f**(+-t)``
(``t`` a field automorphism), or, when both have size (q-1)/2, to the
complement of the other.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import NamedTuple

from .field import FiniteField
from .perm import CycleStructure, Perm, PermGroup, generate_group, orbits


class IndexOutOfRange(ValueError):
    pass


class NonIntegerBurnside(ArithmeticError):
    pass


class XiElement(NamedTuple):
    """The map ``f -> alpha * f**(sign * p**tau)`` on F*, by indices."""

    alpha: int
    tau: int
    sign: int

    def perm(self, field: FiniteField) -> Perm:
        m = field.q - 1
        mult = self.sign * pow(field.p, self.tau, m)
        return Perm([(self.alpha + mult * k) % m for k in range(m)], check=False)


def max_index(q: int) -> int:
    return (q - 1) // 2


def check_index(field: FiniteField, index: int) -> None:
    if not 2 <= index <= max_index(field.q):
        raise IndexOutOfRange(
            f"index must lie in 2..{max_index(field.q)} for q = {field.q}, got {index}")


def xi_generators(field: FiniteField) -> list[Perm]:
    """Multiplication by w, inversion and (for e > 1) Frobenius, as perms of F*."""
    gens = [XiElement(1, 0, 1).perm(field), XiElement(0, 0, -1).perm(field)]
    if field.e > 1:
        gens.append(XiElement(0, 1, 1).perm(field))
    return gens


@lru_cache(maxsize=None)
def xi_group(field: FiniteField) -> PermGroup:
    return generate_group(xi_generators(field))


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """Integer partitions of ``n`` in descending lexicographic order."""
    if n == 0:
        return ((),)
    out = []

    def rec(rest, largest, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(rest, largest), 0, -1):
            prefix.append(part)
            rec(rest - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


@lru_cache(maxsize=None)
def _partition_multiplicities(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    return tuple(tuple(sorted(Counter(lam).items())) for lam in partitions(n))


def fixed_subsets(cs: CycleStructure, index: int) -> int:
    """Number of ``index``-subsets that are unions of whole cycles of ``cs``."""
    total = 0
    for mults in _partition_multiplicities(index):
        term = 1
        for length, k in mults:
            term *= comb(cs.get(length, 0), k)
            if not term:
                break
        total += term
    return total


def complement_fixed(cs: CycleStructure) -> int:
    """Half-size subsets ``b`` with ``g(b)`` equal to the complement of ``b``."""
    if all(length % 2 == 0 for length, k in cs.items() if k):
        return 2 ** cs.num_cycles
    return 0


def _fixed_sum(items, index: int, maximal: bool) -> int:
    total = 0
    for cs, k in items:
        total += k * fixed_subsets(cs, index)
        if maximal:
            total += k * complement_fixed(cs)
    return total


def burnside_sum_2d(field: FiniteField, index: int, threads: int = 1) -> tuple[int, int]:
    """``(sum of fixed counts, group order)`` for the index-``index`` count.

    At the maximal index the group is extended by complementation, doubling
    its order; an element ``g`` composed with complementation contributes
    ``2**(cycles of g)`` when all cycles of ``g`` have even length.
    """
    check_index(field, index)
    group = xi_group(field)
    items = sorted(group.cycle_structure_counts().items(), key=lambda kv: kv[0].key())
    maximal = 2 * index == field.q - 1
    if threads > 1:
        chunks = [items[i::threads] for i in range(threads)]
        with ThreadPoolExecutor(threads) as pool:
            total = sum(pool.map(lambda c: _fixed_sum(c, index, maximal), chunks))
    else:
        total = _fixed_sum(items, index, maximal)
    return total, group.order * (2 if maximal else 1)


def count_2d(field: FiniteField, index: int, threads: int = 1) -> int:
    """Number of André planes of order q**2 and the given index, by Burnside."""
    total, order = burnside_sum_2d(field, index, threads)
    if total % order:
        raise NonIntegerBurnside(f"{total} is not divisible by {order} (q={field.q}, index={index})")
    return total // order


def complement(field: FiniteField, subset: tuple[int, ...]) -> tuple[int, ...]:
    s = set(subset)
    return tuple(k for k in range(field.q - 1) if k not in s)


def apply_perm(g: Perm, subset: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(g.images[k] for k in subset))


def orbits_2d(field: FiniteField, index: int) -> list[list[tuple[int, ...]]]:
    """Orbits of ``index``-subsets of F*, complements merged at maximal index."""
    check_index(field, index)
    states = list(combinations(range(field.q - 1), index))
    actions = [lambda s, g=g: apply_perm(g, s) for g in xi_generators(field)]
    if 2 * index == field.q - 1:
        actions.append(lambda s: complement(field, s))
    return orbits(actions, states)


def enumerate_2d(field: FiniteField, index: int) -> list[tuple[int, ...]]:
    """Lexicographically least subset (of positions) from each isomorphism class."""
    return [orb[0] for orb in orbits_2d(field, index)]
