"""Finite fields GF(q) stored by discrete logarithm.

Nonzero elements are represented by their index ``k`` with respect to a
fixed primitive element ``w``: the integer ``k`` stands for ``w**k``.  The
group actions in this package only ever multiply, invert and apply Frobenius,
so index arithmetic mod ``q - 1`` is all that is needed.  Additive structure
is kept in a power table used for rendering and for testing.
"""

from __future__ import annotations

from functools import lru_cache

MAX_ORDER = 2**20

# Conway polynomials, coefficients listed from the constant term upward.
CONWAY = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (2, 2, 1),
    16: (1, 1, 0, 0, 1),
    25: (2, 4, 1),
    27: (1, 2, 0, 1),
    32: (1, 0, 1, 0, 0, 1),
    49: (3, 6, 1),
    64: (1, 1, 0, 1, 1, 0, 1),
    81: (2, 0, 0, 2, 1),
    121: (2, 7, 1),
    125: (3, 3, 0, 1),
    128: (1, 1, 0, 0, 0, 0, 0, 1),
}


class FieldError(ValueError):
    pass


class NotPrimePower(FieldError):
    pass


class TooSmall(FieldError):
    pass


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    p = ps[0]
    e = 0
    while q > 1:
        q //= p
        e += 1
    return p, e


def smallest_primitive_root(p: int) -> int:
    factors = prime_factors(p - 1)
    for g in range(1, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in factors):
            return g
    raise AssertionError("unreachable")


def _power_table(p: int, modulus: tuple[int, ...]) -> list[int] | None:
    """Encoded values of x**k for k = 0..q-2, or None if x is not primitive.

    Values are base-p integers, the coefficient of x**i being digit i.
    """
    e = len(modulus) - 1
    q = p**e
    top = p ** (e - 1)
    coeffs = modulus[:-1]
    table = [1]
    v = 1
    for _ in range(q - 2):
        # multiply by x, then reduce x**e = -(c0 + c1 x + ...)
        lead = v // top
        v = (v % top) * p
        if lead:
            digits = [(v // p**i) % p for i in range(e)]
            digits = [(d - lead * c) % p for d, c in zip(digits, coeffs)]
            v = sum(d * p**i for i, d in enumerate(digits))
        if v == 1:
            return None
        table.append(v)
    return table


def _find_primitive_polynomial(p: int, e: int) -> tuple[tuple[int, ...], list[int]]:
    # lexicographically first monic primitive polynomial; only for q outside CONWAY
    for code in range(p**e):
        coeffs = tuple((code // p**i) % p for i in range(e)) + (1,)
        if coeffs[0] == 0:
            continue
        table = _power_table(p, coeffs)
        if table is not None:
            return coeffs, table
    raise AssertionError(f"no primitive polynomial of degree {e} over GF({p})")


class FiniteField:
    """GF(q) with a canonical primitive element.

    Attributes:
        p: characteristic.
        e: degree over the prime field.
        q: order, ``p**e``.
        modulus: monic polynomial defining the field (constant term first);
            ``(-g, 1)`` for a prime field with primitive root ``g``.
        omega: the primitive element as an encoded value.
        conway: whether ``modulus`` is a Conway polynomial.
    """

    def __init__(self, q: int):
        p, e = prime_power(q)
        if q < 3:
            raise TooSmall(f"q must be at least 3, got {q}")
        if q > MAX_ORDER:
            raise FieldError(f"q = {q} exceeds the supported maximum {MAX_ORDER}")
        self.p, self.e, self.q = p, e, q
        if e == 1:
            g = smallest_primitive_root(p)
            self.modulus = ((-g) % p, 1)
            table = [1]
            for _ in range(q - 2):
                table.append(table[-1] * g % p)
            self.conway = True
        elif q in CONWAY:
            self.modulus = CONWAY[q]
            table = _power_table(p, self.modulus)
            assert table is not None, f"Conway polynomial for {q} is not primitive"
            self.conway = True
        else:
            self.modulus, table = _find_primitive_polynomial(p, e)
            self.conway = False
        self._values = tuple(table)
        self._logs = {v: k for k, v in enumerate(table)}
        self.omega = table[1]

    def __repr__(self):
        return f"FiniteField({self.q})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))

    @property
    def order(self) -> int:
        """Order of the multiplicative group, ``q - 1``."""
        return self.q - 1

    @property
    def is_prime(self) -> bool:
        return self.e == 1

    def mul(self, a: int, b: int) -> int:
        return (a + b) % (self.q - 1)

    def inv(self, a: int) -> int:
        return (-a) % (self.q - 1)

    def power(self, a: int, k: int) -> int:
        return (a * k) % (self.q - 1)

    def pow_frobenius(self, a: int, j: int) -> int:
        """Index of ``a**(p**j)``."""
        return (a * pow(self.p, j, self.q - 1)) % (self.q - 1)

    def value(self, k: int) -> int:
        """Encoded value of ``w**k`` (a plain integer for prime fields)."""
        return self._values[k % (self.q - 1)]

    def log(self, value: int) -> int:
        """Index of the nonzero element with the given encoded value."""
        try:
            return self._logs[value]
        except KeyError:
            raise FieldError(f"{value} is not a nonzero element of GF({self.q})") from None

    def fstar_positions(self) -> list[int]:
        return list(range(self.q - 1))

    def render(self, k: int) -> str:
        """``"3"`` for prime fields, ``"w^5"`` otherwise (``"1"`` for w^0)."""
        k %= self.q - 1
        if self.is_prime:
            return str(self._values[k])
        return "1" if k == 0 else f"w^{k}"

    def render_json(self, k: int) -> int | str:
        return self._values[k % (self.q - 1)] if self.is_prime else self.render(k)

    def parse(self, token: int | str) -> int:
        """Inverse of :meth:`render` / :meth:`render_json`."""
        if isinstance(token, int):
            return self.log(token)
        token = token.strip()
        if token.startswith("w^"):
            return int(token[2:]) % (self.q - 1)
        if token == "w":
            return 1 % (self.q - 1)
        return self.log(int(token))


@lru_cache(maxsize=None)
def make_field(q: int) -> FiniteField:
    return FiniteField(q)


def fstar_positions(field: FiniteField) -> list[int]:
    """Positions 0..q-2 of F*, position k holding ``w**k``."""
    return field.fstar_positions()
