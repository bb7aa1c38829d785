"""Higher-dimensional André planes of order q**(n+1).

An André spread of PG(2n+1, q) is described by an indicator function
assigning to each f in F* an automorphism ``x -> x**(q**r)`` of
GF(q**(n+1)) over GF(q).  We store it as the tuple of exponents ``r`` in
F*-position order.  Isomorphism classes are the orbits of the group of maps

    (f, r) -> (alpha * f**(+-t), (+-r - s) mod (n+1))

on the sets of pairs ``{(f, r(f))}``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple, Sequence

import numpy as np

from .andre2d import NonIntegerBurnside, XiElement
from .field import FiniteField
from .perm import CycleStructure, cycle_structure, orbit_labels

DEFAULT_STATE_CAP = 10**7


class StateSpaceTooLarge(RuntimeError):
    pass


class UpsilonElement(NamedTuple):
    """``(f, r) -> (alpha * f**(sign * p**tau), sign * r - sigma)``.

    ``alpha`` is an F* index, ``tau`` a Frobenius exponent (0 <= tau < e),
    ``sigma`` the exponent ``s`` of ``x -> x**(q**s)`` and ``sign`` is +1/-1.
    """

    alpha: int
    tau: int
    sigma: int
    sign: int

    def hat(self) -> XiElement:
        return XiElement(self.alpha, self.tau, self.sign)


def apply_upsilon(u: UpsilonElement, exps: Sequence[int], n: int, field: FiniteField) -> tuple[int, ...]:
    m = field.q - 1
    if len(exps) != m:
        raise ValueError(f"indicator of length {len(exps)} for q = {field.q}")
    target = u.hat().perm(field).images
    out = [0] * m
    for k, r in enumerate(exps):
        out[target[k]] = (u.sign * r - u.sigma) % (n + 1)
    return tuple(out)


def upsilon_generators(field: FiniteField) -> list[UpsilonElement]:
    """Multiplication by w, inversion, Frobenius of F, and ``x -> x**q`` on K."""
    return [
        UpsilonElement(1, 0, 0, 1),
        UpsilonElement(0, 0, 0, -1),
        UpsilonElement(0, 1 % field.e, 0, 1),
        UpsilonElement(0, 0, 1, 1),
    ]


def encode(exps: Sequence[int], n: int) -> int:
    """Base-(n+1) code, first position most significant (so codes sort lexicographically)."""
    code = 0
    for r in exps:
        code = code * (n + 1) + r
    return code


def decode(code: int, n: int, m: int) -> tuple[int, ...]:
    out = [0] * m
    for i in range(m - 1, -1, -1):
        code, out[i] = divmod(code, n + 1)
    return tuple(out)


def state_count(n: int, field: FiniteField) -> int:
    return (n + 1) ** (field.q - 1)


def upsilon_images(u: UpsilonElement, n: int, field: FiniteField) -> np.ndarray:
    """The action of ``u`` on all codes ``0..(n+1)**(q-1) - 1``, as an index array."""
    base = n + 1
    m = field.q - 1
    size = base**m
    codes = np.arange(size, dtype=np.int64)
    out = np.zeros(size, dtype=np.int64)
    target = u.hat().perm(field).images
    weights = [base ** (m - 1 - i) for i in range(m)]
    for k in range(m):
        digit = (codes // weights[k]) % base
        out += ((u.sign * digit - u.sigma) % base) * weights[target[k]]
    return out


@dataclass
class HDEnumeration:
    n: int
    q: int
    total_orbits: int
    representatives: list[tuple[int, ...]]
    orbit_sizes: list[int]
    regular_orbit_size: int

    @property
    def count(self) -> int:
        """Non-Desarguesian classes."""
        return len(self.representatives)


def enumerate_hd(n: int, field: FiniteField, state_cap: int = DEFAULT_STATE_CAP) -> HDEnumeration:
    """Orbit enumeration of all ``(n+1)**(q-1)`` indicator functions.

    The orbit of the all-zero indicator (the regular spread) is reported
    separately; ``representatives`` holds the least indicator of every other
    orbit, in increasing order.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    size = state_count(n, field)
    if size > state_cap:
        raise StateSpaceTooLarge(
            f"{size} indicator functions exceed the cap of {state_cap}; use count_hd instead")
    images = [upsilon_images(u, n, field) for u in upsilon_generators(field)]
    count, labels = orbit_labels(images, size)
    sizes = np.bincount(labels, minlength=count)
    firsts = np.unique(labels, return_index=True)[1]  # labels are ordered by first member
    m = field.q - 1
    reps = [decode(int(c), n, m) for c in firsts[1:]]
    return HDEnumeration(
        n=n,
        q=field.q,
        total_orbits=int(count),
        representatives=reps,
        orbit_sizes=[int(s) for s in sizes[1:]],
        regular_orbit_size=int(sizes[0]),
    )


def plus_fixed_count(cs: CycleStructure, n: int, o: int) -> int:
    """Indicators fixed by a plus-type element whose sigma has order ``o``."""
    total = 1
    for length, k in cs.items():
        if length % o:
            return 0
        total *= (n + 1) ** k
    return total


def minus_fixed_count(cs: CycleStructure, n: int, o: int) -> int:
    """Indicators fixed by a minus-type element whose sigma has order ``o``.

    Even cycles of the induced map on F* are free.  On an odd cycle the
    exponent r must satisfy 2r = -s mod (n+1): one solution for n even, two
    or none for n odd depending on the parity of s.
    """
    total = 1
    for length, k in cs.items():
        if length % 2 == 0:
            total *= (n + 1) ** k
        elif n % 2 == 0:
            continue
        elif ((n + 1) // o) % 2 == 0:
            total *= 2**k
        else:
            return 0
    return total


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _fixed_sum(field: FiniteField, n: int, alphas: Sequence[int]) -> int:
    weights = [(o, euler_phi(o)) for o in divisors(n + 1)]
    total = 0
    for alpha in alphas:
        for tau in range(field.e):
            plus = cycle_structure(XiElement(alpha, tau, 1).perm(field))
            minus = cycle_structure(XiElement(alpha, tau, -1).perm(field))
            for o, w in weights:
                total += w * (plus_fixed_count(plus, n, o) + minus_fixed_count(minus, n, o))
    return total


def burnside_sum_hd(n: int, field: FiniteField, threads: int = 1) -> tuple[int, int]:
    """``(sum of fixed counts, parameter group order 2(q-1)e(n+1))``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    alphas = list(range(field.q - 1))
    if threads > 1:
        chunks = [alphas[i::threads] for i in range(threads)]
        with ThreadPoolExecutor(threads) as pool:
            total = sum(pool.map(lambda c: _fixed_sum(field, n, c), chunks))
    else:
        total = _fixed_sum(field, n, alphas)
    return total, 2 * (field.q - 1) * field.e * (n + 1)


def count_hd(n: int, field: FiniteField, threads: int = 1) -> int:
    """Number of non-Desarguesian André planes from André spreads of PG(2n+1, q)."""
    total, order = burnside_sum_hd(n, field, threads)
    if total % order:
        raise NonIntegerBurnside(f"{total} is not divisible by {order} (n={n}, q={field.q})")
    return total // order - 1
