import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hwquartic.errors import ModulusError
from hwquartic.ffield import (Fp2Element, PrimeModulus, binomial,
                              build_factorials, embed, is_prime,
                              is_square_fp2, modulus, multinomial, sqrt_fp,
                              sqrt_fp2_of_fp)

SMALL_PRIMES = (5, 7, 11, 13, 17, 19, 23)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}
    for n in range(2, 42):
        assert is_prime(n) == (n in primes)
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)


def test_modulus_rejects_bad_values():
    for bad in (4, 6, 1, 0, -7, 9, 2, 3):
        with pytest.raises(ModulusError):
            PrimeModulus(bad)
    with pytest.raises(ModulusError):
        PrimeModulus("11")


def test_factorial_tables():
    assert build_factorials(5).values == [1, 1, 2, 1, 4]
    # Wilson: (p-1)! = -1 mod p
    assert build_factorials(7).values[6] == 6
    assert build_factorials(13).values[4] == 24 % 13
    for p in SMALL_PRIMES:
        t = build_factorials(p)
        assert t.values[0] == 1
        for n in range(1, p):
            assert t.values[n] == t.values[n - 1] * n % p
            assert t.values[n] * t.inverses[n] % p == 1
        assert t.values[p - 1] == p - 1


def test_binomial_values():
    assert binomial(4, 2, 7).value == 6
    assert binomial(9, 0, 11).value == 1
    # (2p-1)/3 = 7, (p+1)/6 = 2 at p = 11
    assert binomial(7, 2, 11).value == 21 % 11
    assert binomial(3, 5, 7).value == 0


def test_binomial_rejects_large_top_index():
    with pytest.raises(ValueError):
        binomial(7, 2, 7)
    with pytest.raises(ValueError):
        binomial(-1, 0, 7)
    with pytest.raises(ValueError):
        binomial(4, -2, 7)


def test_binomial_factorial_law():
    # C(n,k) * k! * (n-k)! = n! for all n < p
    for p in (5, 7, 31):
        t = build_factorials(p)
        for n in range(p):
            for k in range(n + 1):
                lhs = binomial(n, k, p).value * t.values[k] % p * t.values[n - k] % p
                assert lhs == t.values[n]


def test_multinomial():
    assert multinomial(3, [1, 1, 1], 7).value == 6
    assert multinomial(9, [9], 11).value == 1
    assert multinomial(4, [2, 1, 1], 5).value == 12 % 5
    with pytest.raises(ValueError):
        multinomial(4, [2, 1], 5)
    with pytest.raises(ValueError):
        multinomial(4, [5, -1], 5)


def test_fp_arithmetic():
    m = modulus(7)
    a, b = m.element(3), m.element(5)
    assert (a + b).value == 1
    assert (a - b).value == 5
    assert (a * b).value == 1
    assert (a / b).value == (3 * pow(5, 5, 7)) % 7
    assert (-a).value == 4
    assert (a ** -1 * a).value == 1
    assert a + 4 == 0 and 4 + a == 0
    assert 1 - a == m.element(5)
    assert bool(m.zero()) is False
    with pytest.raises(ZeroDivisionError):
        a / m.zero()
    with pytest.raises(ZeroDivisionError):
        m.zero().inverse()
    with pytest.raises(ModulusError):
        a + modulus(11).element(1)


def test_fp2_arithmetic():
    m = modulus(11)
    s = m.nonresidue
    w = Fp2Element(0, 1, m)
    assert w * w == s
    x = Fp2Element(3, 4, m)
    y = Fp2Element(5, 9, m)
    # (a+bw)(c+dw) = (ac + bds) + (ad+bc)w
    z = x * y
    assert z.a == (3 * 5 + 4 * 9 * s) % 11
    assert z.b == (3 * 9 + 4 * 5) % 11
    assert (x * x.inverse()) == 1
    assert x / x == 1
    assert x + m.element(2) == Fp2Element(5, 4, m)
    assert m.element(2) * x == Fp2Element(6, 8, m)
    assert x ** 0 == 1
    with pytest.raises(ZeroDivisionError):
        x / Fp2Element(0, 0, m)


def test_frobenius_involution_fixes_base_field():
    for p in (5, 7):
        m = modulus(p)
        for a in range(p):
            for b in range(p):
                x = Fp2Element(a, b, m)
                assert x.frobenius().frobenius() == x
                assert x.frobenius() == x ** p
                assert (x.frobenius() == x) == (b == 0)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_PRIMES), st.integers(0, 100), st.integers(0, 100),
       st.integers(0, 100), st.integers(0, 100))
def test_fp2_mul_commutes_and_distributes(p, a, b, c, d):
    m = modulus(p)
    x, y = Fp2Element(a, b, m), Fp2Element(c, d, m)
    assert x * y == y * x
    assert (x + y) * (x - y) == x * x - y * y


def _squares(p):
    m = modulus(p)
    out = set()
    for a in range(p):
        for b in range(p):
            y = Fp2Element(a, b, m)
            out.add((y * y).a * p + (y * y).b)
    return out


@pytest.mark.parametrize("p", (5, 7, 11))
def test_is_square_fp2_matches_exhaustive_squaring(p):
    m = modulus(p)
    squares = _squares(p)
    for a in range(p):
        for b in range(p):
            x = Fp2Element(a, b, m)
            assert is_square_fp2(x) == (a * p + b in squares)


def test_is_square_fp2_omega_and_generator():
    # w = sqrt(s) is a square in F_{p^2} iff p = 3 mod 4: w^((p^2-1)/2)
    # = s^((p-1)/2 * (p+1)/2) = (-1)^((p+1)/2); exhaustive squaring agrees
    for p, expect in ((5, False), (7, True), (11, True), (13, False)):
        m = modulus(p)
        assert is_square_fp2(Fp2Element(0, 1, m)) is expect
    # a generator of F_{p^2}^x is never a square
    p = 5
    m = modulus(p)
    order = p * p - 1
    for a in range(p):
        for b in range(p):
            g = Fp2Element(a, b, m)
            if g.is_zero():
                continue
            if all((g ** (order // q)) != 1 for q in (2, 3)):
                assert not is_square_fp2(g)
    assert is_square_fp2(Fp2Element(1, 0, m))
    assert is_square_fp2(Fp2Element(0, 0, m))


def test_sqrt_fp():
    for p in SMALL_PRIMES:
        m = modulus(p)
        for v in range(p):
            rt = sqrt_fp(m.element(v))
            if pow(v, (p - 1) // 2, p) == p - 1:
                assert rt is None
            else:
                assert rt is not None and rt * rt == v


def test_sqrt_fp2_of_fp():
    for p in (5, 7, 11, 13):
        m = modulus(p)
        for v in range(p):
            rt = sqrt_fp2_of_fp(m.element(v))
            assert rt * rt == embed(m.element(v))


def test_nonresidue_is_deterministic_and_minimal():
    for p in SMALL_PRIMES:
        m = modulus(p)
        s = m.nonresidue
        assert pow(s, (p - 1) // 2, p) == p - 1
        for t in range(2, s):
            assert pow(t, (p - 1) // 2, p) == 1
