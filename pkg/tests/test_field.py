import pytest

from andre.field import (
    CONWAY,
    FiniteField,
    NotPrimePower,
    TooSmall,
    fstar_positions,
    make_field,
    prime_power,
)

SMALL_Q = [q for q in range(3, 33) if q not in (6, 10, 12, 14, 15, 18, 20, 21, 22, 24, 26, 28, 30)]


def poly_mulmod(a, b, p, modulus):
    """Multiply encoded elements by schoolbook polynomial arithmetic mod ``modulus``."""
    e = len(modulus) - 1
    da = [(a // p**i) % p for i in range(e)]
    db = [(b // p**i) % p for i in range(e)]
    prod = [0] * (2 * e - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    for deg in range(len(prod) - 1, e - 1, -1):
        c = prod[deg]
        if c:
            for i in range(e + 1):
                prod[deg - e + i] = (prod[deg - e + i] - c * modulus[i]) % p
    return sum(prod[i] * p**i for i in range(e))


def poly_pow(a, k, p, modulus):
    out = 1
    for _ in range(k):
        out = poly_mulmod(out, a, p, modulus)
    return out


def poly_add(a, b, p, e):
    return sum((((a // p**i) + (b // p**i)) % p) * p**i for i in range(e))


def poly_eval(coeffs, x, p, modulus):
    """Evaluate a polynomial with GF(p) coefficients at an encoded element."""
    e = len(modulus) - 1
    acc, xp = 0, 1
    for c in coeffs:
        acc = poly_add(acc, poly_mulmod(c % p, xp, p, modulus), p, e)
        xp = poly_mulmod(xp, x, p, modulus)
    return acc


def test_q8_primitive_satisfies_cubic():
    f = make_field(8)
    w = f.omega
    # w^3 = w + 1: encoded w = 2 (x), w + 1 = 3
    assert w == 2
    assert f.value(3) == 3


def test_q9_primitive_satisfies_quadratic():
    f = make_field(9)
    assert f.omega == 3  # x
    assert f.value(2) == 3 + 1  # tau^2 = tau + 1


@pytest.mark.parametrize("q", [6, 10, 12, 100, 1])
def test_not_prime_power(q):
    with pytest.raises(NotPrimePower):
        make_field(q)


def test_too_small():
    with pytest.raises(TooSmall):
        make_field(2)


def test_q7_smallest_primitive_root():
    def order(g):
        k, x = 1, g
        while x != 1:
            x = x * g % 7
            k += 1
        return k

    expected = next(g for g in range(2, 7) if order(g) == 6)
    assert make_field(7).omega == expected == 3


def test_mul_inv_frobenius_examples():
    f5 = make_field(5)
    assert f5.value(f5.mul(f5.log(2), f5.log(3))) == 1
    assert f5.value(f5.inv(f5.log(2))) == 3
    f9 = make_field(9)
    assert f9.pow_frobenius(1, 1) == 3


def test_fstar_positions():
    f5 = make_field(5)
    assert [f5.value(k) for k in fstar_positions(f5)] == [1, 2, 4, 3]
    f3 = make_field(3)
    assert [f3.value(k) for k in fstar_positions(f3)] == [1, 2]
    f8 = make_field(8)
    assert [f8.render(k) for k in fstar_positions(f8)] == ["1"] + [f"w^{k}" for k in range(1, 7)]


@pytest.mark.parametrize("q", SMALL_Q)
def test_primitive_order(q):
    f = make_field(q)
    values = [f.value(k) for k in range(q - 1)]
    assert len(set(values)) == q - 1
    assert f.value(q - 1) == 1


@pytest.mark.parametrize("q", SMALL_Q)
def test_multiplication_matches_polynomial_oracle(q):
    f = make_field(q)
    for a in range(q - 1):
        for b in range(q - 1):
            expect = poly_mulmod(f.value(a), f.value(b), f.p, f.modulus)
            assert f.value(f.mul(a, b)) == expect


@pytest.mark.parametrize("q", SMALL_Q)
def test_frobenius(q):
    f = make_field(q)
    for a in range(q - 1):
        assert f.pow_frobenius(a, f.e) == a
        assert f.value(f.pow_frobenius(a, 1)) == poly_pow(f.value(a), f.p, f.p, f.modulus)


@pytest.mark.parametrize("q", sorted(CONWAY))
def test_conway_compatibility(q):
    """The norm of w to every subfield is a root of that subfield's Conway polynomial."""
    f = make_field(q)
    for d in range(1, f.e):
        if f.e % d:
            continue
        sub = make_field(f.p**d) if f.p**d > 2 else None
        k = (q - 1) // (f.p**d - 1)
        norm = f.value(k)
        if sub is None:  # GF(2): Conway polynomial x + 1
            assert norm == 1
            continue
        assert poly_eval(sub.modulus, norm, f.p, f.modulus) == 0


def test_non_conway_fallback_is_primitive():
    f = FiniteField(243)
    assert not f.conway
    assert len(set(f.value(k) for k in range(242))) == 242


def test_render_and_parse():
    f7, f9 = make_field(7), make_field(9)
    assert f7.render(0) == "1" and f7.render(1) == "3"
    assert f9.render(0) == "1" and f9.render(5) == "w^5"
    for f in (f7, f9):
        for k in range(f.q - 1):
            assert f.parse(f.render(k)) == k
            assert f.parse(f.render_json(k)) == k


def test_prime_power():
    assert prime_power(125) == (5, 3)
    assert prime_power(7) == (7, 1)
