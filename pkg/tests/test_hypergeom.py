import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hwquartic.errors import CapacityError, ModulusError, PoleError
from hwquartic.families import c6_coeff_polys
from hwquartic.ffield import embed, modulus
from hwquartic.hypergeom import (RationalParam, alpha_beta, expectation_check,
                                 gauss_truncated, pochhammer, verify_euler,
                                 verify_gauss_lemma)
from hwquartic.unipoly import UniPoly


def test_rational_param_reduction():
    x = RationalParam(14, -4)
    assert (x.num, x.den) == (-7, 2)
    assert RationalParam(7, 6).residue(modulus(11)).value == 7 * pow(6, 9, 11) % 11
    with pytest.raises(ModulusError):
        RationalParam(1, 7).residue(modulus(7))
    with pytest.raises(ZeroDivisionError):
        RationalParam(1, 0)


def test_pochhammer_basics():
    m = modulus(11)
    assert pochhammer(RationalParam(1, 3), 0, m).value == 1
    # (1; n) = n!
    for n in range(11):
        assert pochhammer(1, n, m).value == m.factorials.values[n]
    assert pochhammer(1, 5, m).value == 120 % 11
    with pytest.raises(ValueError):
        pochhammer(1, -1, m)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from((11, 17, 23)), st.integers(0, 40), st.integers(0, 15))
def test_pochhammer_recurrence(p, x0, n):
    m = modulus(p)
    x = m.element(x0)
    assert pochhammer(x, n + 1, m) == pochhammer(x, n, m) * (x + n)


def test_appendix_congruence_example_p11_i2():
    # (-1)^2 (1/3; 2) = 4 * 5 = 9 mod 11, and 7!/5! = 42 = 9 mod 11
    m = modulus(11)
    lhs = pochhammer(RationalParam(1, 3), 2, m)
    assert lhs.value == 9
    fact = m.factorials.values
    assert lhs == fact[7] * modulus(11).element(fact[5]).inverse()


@pytest.mark.parametrize("p", (11, 17, 23, 29))
def test_appendix_congruences(p):
    """(-1)^i (1/3; i), (-1)^i (1/2; i) and ((2p+7)/6; i) against their
    factorial-ratio forms, for 0 <= i <= (p-1)/2."""
    m = modulus(p)
    fact = m.factorials
    one_third_top = (2 * p - 1) // 3
    one_half_top = (p - 1) // 2
    c_base = (p + 1) // 6
    for i in range((p - 1) // 2 + 1):
        sgn = (-1) ** i
        lhs = pochhammer(RationalParam(1, 3), i, m) * sgn
        assert lhs.value == fact.values[one_third_top] * \
            fact.inverses[one_third_top - i] % p
        lhs = pochhammer(RationalParam(1, 2), i, m) * sgn
        assert lhs.value == fact.values[one_half_top] * \
            fact.inverses[one_half_top - i] % p
        lhs = pochhammer(RationalParam(7, 6), i, m)
        assert lhs.value == fact.values[c_base + i] * fact.inverses[c_base] % p


def test_gauss_truncated_trivial_cases():
    m = modulus(11)
    s = gauss_truncated((1, 3), (1, 2), (7, 6), 0, m)
    assert s.poly == UniPoly([1], m)
    assert s.truncation == 0
    # a = 0 kills every term beyond the constant
    s = gauss_truncated(0, (1, 2), (7, 6), 5, m)
    assert s.poly == UniPoly([1], m)
    with pytest.raises(ValueError):
        gauss_truncated(0, 0, (7, 6), -1, m)


def test_series_coefficient_vanishing_range():
    """With c = (2p+7)/6 the (1/2; n) factor kills coefficients for
    (p+1)/2 <= n and the (5/6; n) factor for (p+1)/6 <= n; the truncation
    boundary coefficients (p-1)/2 resp. (p-5)/6 themselves survive.  They
    must: the truncations match coefficient polynomials of exactly those
    degrees."""
    for p in (11, 17, 23):
        m = modulus(p)
        pole_onset = (5 * p - 1) // 6  # where (c; n) itself vanishes
        g = gauss_truncated((1, 3), (1, 2), (7, 6), pole_onset - 1, m).poly
        assert g.coeffs[(p - 1) // 2] != 0
        for n in range((p + 1) // 2, pole_onset - 1):
            assert g.coeffs[n] == 0 if n < len(g.coeffs) else True
        assert g.degree == (p - 1) // 2
        g = gauss_truncated((5, 6), (2, 3), (7, 6), (p - 5) // 6, m).poly
        assert g.degree == (p - 5) // 6


def test_gauss_truncated_pole_error():
    m = modulus(11)
    with pytest.raises(PoleError):
        gauss_truncated((1, 3), (1, 2), (7, 6), (5 * 11 - 1) // 6, m)


@pytest.mark.parametrize("p", (11, 17, 23, 29, 41))
def test_verify_euler(p):
    assert verify_euler(modulus(p))


def test_verify_euler_wrong_class():
    with pytest.raises(ModulusError):
        verify_euler(modulus(7))


def test_verify_euler_up_to_200():
    from hwquartic.harness import primes_in
    for p in primes_in(5, 200):
        if p % 6 == 5:
            assert verify_euler(modulus(p)), p


def test_alpha_beta():
    for p in (11, 23):
        m = modulus(p)
        for rv in range(p):
            r = m.element(rv)
            alpha, beta = alpha_beta(r, m)
            assert alpha + beta == embed(r)
            assert alpha * beta == embed(m.one())
    # r = 0: alpha = -beta, still on the unit "circle"
    alpha, beta = alpha_beta(modulus(11).element(0), modulus(11))
    assert alpha == -beta
    assert (alpha / beta) == embed(modulus(11).element(-1))


@pytest.mark.parametrize("p", (11, 23, 47))
def test_verify_gauss_lemma(p):
    assert verify_gauss_lemma(modulus(p))


def test_verify_gauss_lemma_wrong_class():
    with pytest.raises(ModulusError):
        verify_gauss_lemma(modulus(13))


def test_expectation_check_p17():
    rep = expectation_check(modulus(17))
    assert rep.all_square is True
    assert rep.degree == 2 and rep.missing == 0
    assert {(z.a, z.b) for z in rep.roots} == {(8, 0), (15, 0)}


def test_expectation_check_p23():
    rep = expectation_check(modulus(23))
    assert rep.all_square is True
    assert rep.degree == 3 and rep.missing == 0


def test_expectation_check_preconditions():
    with pytest.raises(ValueError):
        expectation_check(modulus(11))  # p >= 17 required
    with pytest.raises(ModulusError):
        expectation_check(modulus(13))  # wrong residue class
    with pytest.raises(CapacityError):
        expectation_check(modulus(17), limit=100)


@pytest.mark.parametrize("p", (17, 23, 29))
def test_c2_roots_match_series_roots(p):
    """c2(r) = 0 iff the degree-(p-5)/6 series vanishes at t = alpha/beta."""
    m = modulus(p)
    c2 = c6_coeff_polys(m).c2
    g = gauss_truncated((5, 6), (2, 3), (7, 6), (p - 5) // 6, m).poly
    for rv in range(p):
        if rv in (2, p - 2):
            continue
        r = m.element(rv)
        alpha, beta = alpha_beta(r, m)
        assert c2.eval(r).is_zero() == g.eval(alpha / beta).is_zero()
