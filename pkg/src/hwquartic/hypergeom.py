"""Truncated Gauss hypergeometric series mod p and the identities they satisfy.

G(a,b,c;t) = sum_n (a;n)(b;n) / ((c;n)(1;n)) t^n with the rising
Pochhammer product (x;n) = x(x+1)...(x+n-1).  Rational parameters are
reduced to F_p residues before use, so e.g. the parameter written
(2p+7)/6 is handled as 7/6 mod p.  Truncations stay below the first
vanishing denominator factor; hitting one raises PoleError since the
parameter choices used here never do.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ModulusError, PoleError
from .families import c6_coeff_polys
from .ffield import (FpElement, _as_modulus, binomial, embed, is_square_fp2,
                     sqrt_fp2_of_fp)
from .unipoly import UniPoly, roots_over


@dataclass(frozen=True)
class RationalParam:
    """A rational hypergeometric parameter num/den in lowest terms."""

    num: int
    den: int = 1

    def __post_init__(self):
        if self.den == 0:
            raise ZeroDivisionError("zero denominator")
        g = gcd(self.num, self.den)
        sign = -1 if self.den < 0 else 1
        object.__setattr__(self, "num", sign * self.num // g)
        object.__setattr__(self, "den", sign * self.den // g)

    def residue(self, mod) -> FpElement:
        mod = _as_modulus(mod)
        if self.den % mod.p == 0:
            raise ModulusError(
                f"denominator {self.den} vanishes mod {mod.p}")
        return FpElement(self.num, mod) / self.den

    def __repr__(self):
        return f"{self.num}" if self.den == 1 else f"{self.num}/{self.den}"


def _as_param(x) -> RationalParam:
    if isinstance(x, RationalParam):
        return x
    if isinstance(x, tuple):
        return RationalParam(*x)
    return RationalParam(int(x))


def pochhammer(x, n: int, mod) -> FpElement:
    """(x; n) = x (x+1) ... (x+n-1) mod p (empty product for n = 0)."""
    mod = _as_modulus(mod)
    if n < 0:
        raise ValueError(f"negative Pochhammer length {n}")
    if isinstance(x, FpElement):
        x0 = x.value
    else:
        x0 = _as_param(x).residue(mod).value
    p = mod.p
    out = 1
    for k in range(n):
        out = out * ((x0 + k) % p) % p
    return FpElement(out, mod)


@dataclass(frozen=True)
class TruncatedSeries:
    """G^d(a,b,c;t) mod p: params, truncation degree, and the polynomial."""

    poly: UniPoly
    params: tuple
    truncation: int


def gauss_truncated(a, b, c, d: int, mod) -> TruncatedSeries:
    """Truncation of G(a,b,c;t) mod p to degree d.

    Term ratios are accumulated incrementally; a vanishing denominator
    factor (c;n) within the range is a pole and raises PoleError.
    """
    mod = _as_modulus(mod)
    if d < 0:
        raise ValueError(f"negative truncation degree {d}")
    a, b, c = _as_param(a), _as_param(b), _as_param(c)
    p = mod.p
    a0, b0, c0 = (x.residue(mod).value for x in (a, b, c))
    coeffs = [1]
    term = 1
    for n in range(1, d + 1):
        den = (c0 + n - 1) % p * (n % p) % p
        if den == 0:
            raise PoleError(
                f"(c;{n}) vanishes mod {p} for c = {c}: series truncation too deep")
        num = (a0 + n - 1) % p * ((b0 + n - 1) % p) % p
        term = term * num % p * pow(den, p - 2, p) % p
        coeffs.append(term)
    return TruncatedSeries(UniPoly(coeffs, mod), (a, b, c), d)


def _require_residue_5_mod_6(mod):
    mod = _as_modulus(mod)
    if mod.p % 6 != 5:
        raise ModulusError(f"p = {mod.p} is not 5 mod 6")
    return mod


def one_minus_t_power(e: int, mod) -> UniPoly:
    """(1 - t)^e as a polynomial, e < p."""
    mod = _as_modulus(mod)
    return UniPoly([binomial(e, k, mod).value * (-1) ** k for k in range(e + 1)],
                   mod)


def verify_euler(mod) -> bool:
    """Truncated Euler transformation for the parameters in play:

    G^((p-1)/2)(1/3, 1/2, (2p+7)/6; t)
        = (1-t)^((p+1)/3) * G^((p-5)/6)(5/6, 2/3, (2p+7)/6; t)

    as polynomials mod p, for p = 5 mod 6.
    """
    mod = _require_residue_5_mod_6(mod)
    p = mod.p
    c = RationalParam(7, 6)
    lhs = gauss_truncated((1, 3), (1, 2), c, (p - 1) // 2, mod).poly
    g2 = gauss_truncated((5, 6), (2, 3), c, (p - 5) // 6, mod).poly
    rhs = one_minus_t_power((p + 1) // 3, mod) * g2
    return lhs == rhs


def alpha_beta(r, mod):
    """The pair with alpha + beta = r and alpha * beta = 1, in F_{p^2}.

    These are the roots of Y^2 - r Y + 1, i.e. y^4 + r y^2 + 1 =
    (y^2 + alpha)(y^2 + beta); they live in F_p iff r^2 - 4 is a square.
    The same F_{p^2} code path is used either way.
    """
    mod = _as_modulus(mod)
    r = r if isinstance(r, FpElement) else FpElement(r, mod)
    root = sqrt_fp2_of_fp(r * r - 4)
    half = embed(FpElement(2, mod).inverse())
    alpha = (embed(r) + root) * half
    beta = (embed(r) - root) * half
    return alpha, beta


def verify_gauss_lemma(mod) -> bool:
    """The two series-vs-coefficient congruences behind the divisibility
    argument, checked pointwise at every r in F_p away from 2 and -2:

    binom((2p-1)/3, (p+1)/6) * beta^((p-1)/2)
        * G^((p-1)/2)(1/3, 1/2, (2p+7)/6; alpha/beta)  =  d1(r)
    binom((p-2)/3, (p+1)/6) * beta^((p-5)/6)
        * G^((p-5)/6)(5/6, 2/3, (2p+7)/6; alpha/beta)  =  d2(r)

    (alpha*beta = 1, so the (alpha*beta)^(-(p+1)/6) factor is 1).
    Pointwise evaluation at all p - 2 parameters is a complete identity
    test: both sides are polynomial of degree < p in r.
    """
    mod = _require_residue_5_mod_6(mod)
    p = mod.p
    c = RationalParam(7, 6)
    g1 = gauss_truncated((1, 3), (1, 2), c, (p - 1) // 2, mod).poly
    g2 = gauss_truncated((5, 6), (2, 3), c, (p - 5) // 6, mod).poly
    polys = c6_coeff_polys(mod)
    bin1 = embed(binomial((2 * p - 1) // 3, (p + 1) // 6, mod))
    bin2 = embed(binomial((p - 2) // 3, (p + 1) // 6, mod))
    for rv in range(p):
        if rv in (2, p - 2):
            continue
        r = FpElement(rv, mod)
        alpha, beta = alpha_beta(r, mod)
        t = alpha / beta
        lhs1 = bin1 * beta ** ((p - 1) // 2) * g1.eval(t)
        if lhs1 != embed(polys.d1.eval(r)):
            return False
        lhs2 = bin2 * beta ** ((p - 5) // 6) * g2.eval(t)
        if lhs2 != embed(polys.d2.eval(r)):
            return False
    return True


@dataclass(frozen=True)
class ExpectationReport:
    """Roots of G^((p-5)/6)(5/6, 2/3, (2p+7)/6; t) inside F_{p^2}.

    all_square says whether every root found is a square in F_{p^2}^x;
    missing counts roots of the truncation living outside F_{p^2}
    (degree minus the number found; 0 means the polynomial splits there).
    """

    p: int
    all_square: bool
    roots: tuple
    degree: int
    missing: int


def expectation_check(mod, limit: int | None = None) -> ExpectationReport:
    """Re-verification of the superspecial-parameter rationality expectation.

    For p = 5 mod 6, p >= 17: find every root of the degree-(p-5)/6
    truncated series in F_{p^2} by exhaustion and test each for being a
    square in F_{p^2}^x.  This op reports; the statement remains a
    conjecture and nothing here asserts it.
    """
    mod = _require_residue_5_mod_6(mod)
    p = mod.p
    if p < 17:
        raise ValueError(
            f"p = {p} < 17: the truncated series has no admissible roots")
    c = RationalParam(7, 6)
    g = gauss_truncated((5, 6), (2, 3), c, (p - 5) // 6, mod).poly
    roots = roots_over(g, 2, limit=limit)
    ordered = tuple(sorted(roots, key=lambda z: (z.a, z.b)))
    all_square = all(is_square_fp2(z) for z in ordered)
    return ExpectationReport(p=p, all_square=all_square, roots=ordered,
                             degree=g.degree, missing=g.degree - len(ordered))
