"""CLI front-end: quartic parsing, F_{p^2} point counts, verification sweeps.

Report schema (CSV columns, JSON keys identical):

    p,family,param,a_number,p_rank,newton_polygon,eo_type,status,detail

status is PASS, FAIL or SKIP; a_number/p_rank are empty when a row does
not carry a classification.  Exit codes: 0 all rows pass, 1 any failure,
2 usage error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import re
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

from . import families, hypergeom
from .errors import (CapacityError, IntegrityError, ModulusError, ParseError,
                     PoleError)
from .ffield import Fp2Element, FpElement, is_prime, modulus
from .hwcore import (HWMatrix, QuarticForm, a_number, hw_matrix,
                     hw_matrix_oracle, stable_rank)
from .unipoly import DEFAULT_ROOT_BOUND

#: default cap on p for exact F_{p^2} point counting (p^4 evaluations)
DEFAULT_POINT_BOUND = 60

SUITES = ("oracle", "c6-structure", "counts", "c9-table", "euler",
          "gauss-lemma", "expectation", "maximality")


# ---------------------------------------------------------------------------
# quartic parsing

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[xyz])|(?P<op>[-+*^]))")


def _tokenize(text):
    out = []
    pos = 0
    text = text.replace("−", "-")
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if stripped == "":
                break
            where = len(text) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}",
                             position=where)
        if m.lastgroup == "int":
            out.append(("int", int(m.group("int")), m.start("int")))
        elif m.lastgroup == "var":
            out.append(("var", m.group("var"), m.start("var")))
        else:
            out.append((m.group("op"), m.group("op"), m.start("op")))
        pos = m.end()
    return out


def parse_quartic(text: str, mod) -> QuarticForm:
    """Parse "c*x^i*y^j*z^k + ..." into a QuarticForm.

    Every term must have total degree 4; coefficients are integers,
    reduced mod p, with '-' folding into the coefficient sign.
    """
    if isinstance(mod, int):
        mod = modulus(mod)
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty quartic expression", position=0)
    terms: dict = {}
    i = 0
    n = len(toks)
    first = True
    while i < n:
        kind, _val, pos = toks[i]
        sign = 1
        if kind in "+-":
            if first and kind == "+":
                raise ParseError("leading '+' is not allowed", position=pos)
            sign = -1 if kind == "-" else 1
            i += 1
        elif not first:
            raise ParseError("expected '+' or '-' between terms", position=pos)
        first = False
        if i >= n:
            raise ParseError("dangling sign at end of expression", position=pos)
        term_pos = toks[i][2]
        coeff = 1
        if toks[i][0] == "int":
            coeff = toks[i][1]
            i += 1
            if i >= n or toks[i][0] != "*":
                where = toks[i][2] if i < n else term_pos
                raise ParseError("expected '*' between coefficient and monomial",
                                 position=where)
            i += 1
        expo = [0, 0, 0]
        saw_var = False
        while True:
            if i >= n or toks[i][0] != "var":
                where = toks[i][2] if i < n else term_pos
                raise ParseError("expected a variable x, y or z", position=where)
            v = "xyz".index(toks[i][1])
            i += 1
            e = 1
            if i < n and toks[i][0] == "^":
                i += 1
                if i >= n or toks[i][0] != "int":
                    where = toks[i][2] if i < n else term_pos
                    raise ParseError("expected an integer exponent after '^'",
                                     position=where)
                e = toks[i][1]
                i += 1
            expo[v] += e
            saw_var = True
            if i < n and toks[i][0] == "*":
                i += 1
                continue
            break
        if not saw_var:
            raise ParseError("term has no monomial part", position=term_pos)
        if sum(expo) != 4:
            snippet = text[term_pos:toks[i][2]] if i < n else text[term_pos:]
            raise ParseError(
                f"term '{snippet.strip()}' has degree {sum(expo)}, expected 4",
                position=term_pos)
        key = tuple(expo)
        terms[key] = (terms.get(key, 0) + sign * coeff) % mod.p
    return QuarticForm(terms, mod)


_C6_PARAM_RE = re.compile(
    r"^\s*(-?\d+)\s*(?:([+-])\s*(\d+)\s*\*\s*w\s*)?$")


def parse_c6_param(text: str, mod):
    """Parse a C6 parameter: a decimal integer, or "a+b*w" for F_{p^2}."""
    if isinstance(mod, int):
        mod = modulus(mod)
    m = _C6_PARAM_RE.match(text)
    if m is None:
        raise ParseError(f"cannot parse parameter {text!r}: want N or a+b*w",
                         position=0)
    a = int(m.group(1))
    if m.group(3) is None:
        return FpElement(a, mod)
    b = int(m.group(3)) * (-1 if m.group(2) == "-" else 1)
    return Fp2Element(a, b, mod)


# ---------------------------------------------------------------------------
# point counting over F_{p^2}

def _component(coeff):
    if isinstance(coeff, Fp2Element):
        return coeff.a, coeff.b
    return coeff.value, 0


def count_points_ext2(F: QuarticForm, bound: int | None = None) -> int:
    """Exact number of projective F_{p^2}-points of F = 0.

    Charts are disjoint by construction: z = 1 (all x, y), then z = 0,
    y = 1 (all x), then the single point (1:0:0).  Evaluation is
    vectorized over F_{p^2} componentwise; the default prime bound keeps
    the p^4-point main chart around 10^7 evaluations.
    """
    bound = DEFAULT_POINT_BOUND if bound is None else bound
    mod = F.modulus
    p = mod.p
    if p > bound:
        raise CapacityError(f"point counting needs p <= {bound}, got {p}")
    s = mod.nonresidue
    q = p * p
    XA = np.repeat(np.arange(p, dtype=np.int64), p)
    XB = np.tile(np.arange(p, dtype=np.int64), p)

    # chart z = 1: write F(x, y, 1) = sum_d cd(x) y^d and run Horner in y
    cda = [np.zeros(q, dtype=np.int64) for _ in range(5)]
    cdb = [np.zeros(q, dtype=np.int64) for _ in range(5)]
    for (i, j, _k), coeff in F.terms.items():
        ca, cb = _component(coeff)
        # coeff * x^i, in components
        ta, tb = np.full(q, ca, dtype=np.int64), np.full(q, cb, dtype=np.int64)
        for _ in range(i):
            ta, tb = (ta * XA + s * tb * XB) % p, (ta * XB + tb * XA) % p
        cda[j] = (cda[j] + ta) % p
        cdb[j] = (cdb[j] + tb) % p

    count = 0
    chunk = max(1, 1_000_000 // q)
    for lo in range(0, q, chunk):
        hi = min(lo + chunk, q)
        ya = XA[np.newaxis, :]
        yb = XB[np.newaxis, :]
        aa = np.broadcast_to(cda[4][lo:hi, np.newaxis], (hi - lo, q)).copy()
        ab = np.broadcast_to(cdb[4][lo:hi, np.newaxis], (hi - lo, q)).copy()
        for d in (3, 2, 1, 0):
            aa, ab = ((aa * ya + s * ab * yb + cda[d][lo:hi, np.newaxis]) % p,
                      (aa * yb + ab * ya + cdb[d][lo:hi, np.newaxis]) % p)
        count += int(np.count_nonzero((aa == 0) & (ab == 0)))

    # chart z = 0, y = 1: only terms with k = 0 survive
    ga = np.zeros(q, dtype=np.int64)
    gb = np.zeros(q, dtype=np.int64)
    for (i, _j, k), coeff in F.terms.items():
        if k:
            continue
        ca, cb = _component(coeff)
        ta, tb = np.full(q, ca, dtype=np.int64), np.full(q, cb, dtype=np.int64)
        for _ in range(i):
            ta, tb = (ta * XA + s * tb * XB) % p, (ta * XB + tb * XA) % p
        ga = (ga + ta) % p
        gb = (gb + tb) % p
    count += int(np.count_nonzero((ga == 0) & (gb == 0)))

    # the remaining point (1:0:0)
    x4 = F.terms.get((4, 0, 0))
    if x4 is None:
        count += 1
    return count


def hasse_weil_window(p: int, g: int = 3):
    return p * p + 1 - 2 * g * p, p * p + 1 + 2 * g * p


def is_maximal_ext2(F: QuarticForm, bound: int | None = None) -> bool:
    """True iff the F_{p^2} point count attains p^2 + 1 + 6p."""
    p = F.modulus.p
    return count_points_ext2(F, bound=bound) == p * p + 1 + 6 * p


# ---------------------------------------------------------------------------
# reports

_CSV_COLUMNS = ("p", "family", "param", "a_number", "p_rank",
                "newton_polygon", "eo_type", "status", "detail")


@dataclass(frozen=True)
class ReportRow:
    p: int
    family: str = ""
    param: str = ""
    a_number: "int | None" = None
    p_rank: "int | None" = None
    newton_polygon: str = ""
    eo_type: str = ""
    status: str = "PASS"
    detail: str = ""


@dataclass
class SweepReport:
    rows: list = field(default_factory=list)

    def add(self, **kw):
        self.rows.append(ReportRow(**kw))

    @property
    def failed(self) -> bool:
        return any(r.status == "FAIL" for r in self.rows)

    @property
    def exit_status(self) -> int:
        return 1 if self.failed else 0

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(_CSV_COLUMNS)
        for r in self.rows:
            w.writerow([
                r.p, r.family, r.param,
                "" if r.a_number is None else r.a_number,
                "" if r.p_rank is None else r.p_rank,
                r.newton_polygon, r.eo_type, r.status, r.detail,
            ])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "SweepReport":
        rows = []
        rd = csv.reader(io.StringIO(text))
        header = next(rd)
        if tuple(header) != _CSV_COLUMNS:
            raise ParseError(f"unexpected CSV header {header}")
        for rec in rd:
            rows.append(ReportRow(
                p=int(rec[0]), family=rec[1], param=rec[2],
                a_number=None if rec[3] == "" else int(rec[3]),
                p_rank=None if rec[4] == "" else int(rec[4]),
                newton_polygon=rec[5], eo_type=rec[6],
                status=rec[7], detail=rec[8]))
        return cls(rows)

    def to_json(self) -> str:
        return json.dumps([asdict(r) for r in self.rows], indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SweepReport":
        return cls([ReportRow(**obj) for obj in json.loads(text)])

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        return self.to_csv()


def format_eo(eo) -> str:
    return "(" + ",".join(str(v) for v in eo) + ")"


def _classification_columns(cls: families.Classification) -> dict:
    return dict(a_number=cls.a_number, p_rank=cls.p_rank,
                newton_polygon=cls.newton_polygon, eo_type=format_eo(cls.eo_type))


# ---------------------------------------------------------------------------
# corpora for the oracle suite

def fermat_form(mod) -> QuarticForm:
    return QuarticForm({(4, 0, 0): 1, (0, 4, 0): 1, (0, 0, 4): 1}, mod)


_EXPONENT_TRIPLES = [(i, j, 4 - i - j) for i in range(5) for j in range(5 - i)]


def random_sparse_quartic(rng: random.Random, mod) -> QuarticForm:
    """Random quartic with 3 to 6 terms and nonzero coefficients."""
    nterms = rng.randint(3, 6)
    support = rng.sample(_EXPONENT_TRIPLES, nterms)
    return QuarticForm({e: rng.randint(1, mod.p - 1) for e in support}, mod)


def oracle_corpus(mod, seed: "int | None" = None):
    """All C_r, the C9 form, Fermat, and 50 seeded random sparse quartics."""
    p = mod.p
    rng = random.Random(f"hw-oracle-{p}" if seed is None else seed)
    forms = [("c6 r=%d" % r, families.c6_form(mod, r))
             for r in range(p) if r not in (2, p - 2)]
    forms.append(("c9", families.c9_form(mod)))
    forms.append(("fermat", fermat_form(mod)))
    for t in range(50):
        forms.append((f"random#{t}", random_sparse_quartic(rng, mod)))
    return forms


# ---------------------------------------------------------------------------
# verification suites

def primes_in(lo: int, hi: int):
    return [p for p in range(max(lo, 5), hi + 1) if is_prime(p)]


def _matrix_detail(M: HWMatrix) -> str:
    return "[" + "; ".join("[" + ",".join(str(e) for e in row) + "]"
                           for row in M.entries) + "]"


def _suite_oracle(report, mod, **_kw):
    p = mod.p
    if p > 31:
        report.add(p=p, family="any", status="SKIP",
                   detail="oracle expansion bound is p <= 31")
        return
    bad = []
    forms = oracle_corpus(mod)
    for name, F in forms:
        if hw_matrix(F) != hw_matrix_oracle(F):
            bad.append(name)
    report.add(p=p, family="any",
               status="FAIL" if bad else "PASS",
               detail=(f"{len(forms)} forms agree" if not bad
                       else "disagreement on " + ", ".join(bad[:5])))


def _suite_c6_structure(report, mod, **_kw):
    p = mod.p
    anti = p % 6 == 5
    live = {(1, 3), (3, 1)} if anti else {(1, 1), (2, 2), (3, 3)}
    problems = []
    for row in (1, 2, 3):
        for col in (1, 2, 3):
            poly = families.c6_entry_poly(mod, row, col)
            if (row, col) not in live and not poly.is_zero:
                problems.append(f"slot {(row, col)} nonzero")
    polys = families.c6_coeff_polys(mod)
    attained = set()
    vals_main = polys.root_locus_poly().eval_all()
    vals_other = (polys.c1 if anti else polys.ct3).eval_all()
    vals_mid = None if anti else polys.ct2.eval_all()
    for r in range(p):
        if r in (0, 2, p - 2):
            continue
        rk = int(vals_main[r] != 0) + int(vals_other[r] != 0)
        if not anti:
            rk += int(vals_mid[r] != 0)
        attained.add(3 - rk)
    forbidden = 2 if anti else 1
    if forbidden in attained:
        problems.append(f"a-number {forbidden} attained")
    rng = random.Random(f"hw-structure-{p}")
    candidates = [r for r in range(p) if r not in (2, p - 2)]
    for r in rng.sample(candidates, min(3, len(candidates))):
        if hw_matrix(families.c6_form(mod, r)) != families.c6_hw(mod, r, polys):
            problems.append(f"entry polynomials disagree with hw_matrix at r={r}")
    report.add(p=p, family="c6",
               status="FAIL" if problems else "PASS",
               detail="; ".join(problems) if problems else
               ("anti-diagonal" if anti else "diagonal")
               + f", a-numbers attained {sorted(attained)}")


def _suite_counts(report, mod, **_kw):
    p = mod.p
    n = families.c6_count_max_a(mod)
    per_class = (p - 5) // 12 if p % 6 == 5 else (p - 1) // 12
    ok = n == p // 12 == per_class
    report.add(p=p, family="c6", status="PASS" if ok else "FAIL",
               detail=f"count={n} floor(p/12)={p // 12} class-form={per_class}")


def _suite_c9_table(report, mod, **_kw):
    p = mod.p
    try:
        cls = families.c9_classify(mod)
    except IntegrityError as exc:
        report.add(p=p, family="c9", status="FAIL", detail=str(exc))
        return
    report.add(p=p, family="c9", status="PASS",
               detail=f"p mod 9 = {p % 9}", **_classification_columns(cls))


def _wrong_class(report, mod, explicit, what):
    if explicit:
        raise ModulusError(f"p = {mod.p}: {what}")
    report.add(p=mod.p, family="c6", status="SKIP", detail=what)


def _suite_euler(report, mod, explicit=False, **_kw):
    if mod.p % 6 != 5:
        _wrong_class(report, mod, explicit, "needs p = 5 mod 6")
        return
    ok = hypergeom.verify_euler(mod)
    report.add(p=mod.p, family="c6", status="PASS" if ok else "FAIL",
               detail="truncated Euler transformation")


def _suite_gauss_lemma(report, mod, explicit=False, **_kw):
    if mod.p % 6 != 5:
        _wrong_class(report, mod, explicit, "needs p = 5 mod 6")
        return
    ok = hypergeom.verify_gauss_lemma(mod)
    report.add(p=mod.p, family="c6", status="PASS" if ok else "FAIL",
               detail="series/coefficient congruences at all r")


def _suite_expectation(report, mod, explicit=False, bound=None, **_kw):
    p = mod.p
    if p % 6 != 5 or p < 17:
        _wrong_class(report, mod, explicit, "needs p = 5 mod 6 and p >= 17")
        return
    limit = DEFAULT_ROOT_BOUND if bound is None else bound
    if p * p > limit:
        if explicit:
            raise CapacityError(
                f"p^2 = {p * p} exceeds exhaustion bound {limit}")
        report.add(p=p, family="c6", status="SKIP",
                   detail=f"p^2 = {p * p} exceeds exhaustion bound {limit}")
        return
    rep = hypergeom.expectation_check(mod, limit=limit)
    ok = rep.all_square and rep.missing == 0
    report.add(p=p, family="c6", status="PASS" if ok else "FAIL",
               detail=f"roots={len(rep.roots)} of deg={rep.degree} "
                      f"all_square={rep.all_square}")


def _suite_maximality(report, mod, explicit=False, bound=None,
                      c6_question=False, sweep_ext2=False, **_kw):
    p = mod.p
    pb = DEFAULT_POINT_BOUND if bound is None else bound
    if p > pb:
        if explicit:
            raise CapacityError(f"p = {p} exceeds point-count bound {pb}")
        report.add(p=p, family="c9", status="SKIP",
                   detail=f"p exceeds point-count bound {pb}")
        return
    count = count_points_ext2(families.c9_form(mod), bound=pb)
    maximal = count == p * p + 1 + 6 * p
    expected = p % 18 == 17
    report.add(p=p, family="c9",
               status="PASS" if maximal == expected else "FAIL",
               detail=f"points={count} hasse-weil-max={p * p + 1 + 6 * p} "
                      f"maximal={maximal} expected={expected}")
    if not c6_question or p % 6 != 5 or p < 17:
        return
    # informational sweep for the open question: is some C_r maximal?
    found = None
    for r in range(p):
        if r in (0, 2, p - 2):
            continue
        if is_maximal_ext2(families.c6_form(mod, r), bound=pb):
            found = str(r)
            break
    if found is None and sweep_ext2:
        for a in range(p):
            for b in range(1, p):
                r = Fp2Element(a, b, mod)
                if is_maximal_ext2(families.c6_form(mod, r), bound=pb):
                    found = str(r)
                    break
            if found:
                break
        coverage = "r swept over all of F_p2"
    else:
        coverage = "r swept over F_p only" + \
            ("" if found else "; F_p2 sweep not run (pass --sweep-ext2)")
    report.add(p=p, family="c6", param=found or "",
               status="PASS",
               detail=f"maximal C_r {'found at r=' + found if found else 'not found'}"
                      f" ({coverage})")


_SUITE_FUNCS = {
    "oracle": _suite_oracle,
    "c6-structure": _suite_c6_structure,
    "counts": _suite_counts,
    "c9-table": _suite_c9_table,
    "euler": _suite_euler,
    "gauss-lemma": _suite_gauss_lemma,
    "expectation": _suite_expectation,
    "maximality": _suite_maximality,
}


def run_suite(name: str, primes, explicit: bool = False, **kw):
    """Run one verification suite over an iterable of primes.

    Returns (SweepReport, exit_status).  Preconditions not met by a prime
    give SKIP rows in range mode and hard errors when the prime was
    requested explicitly.
    """
    if name not in _SUITE_FUNCS:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
    fn = _SUITE_FUNCS[name]
    report = SweepReport()
    for p in primes:
        fn(report, modulus(int(p)), explicit=explicit, **kw)
    return report, report.exit_status


# ---------------------------------------------------------------------------
# CLI

def _parse_range(text: str):
    m = re.match(r"^(\d+)\.\.(\d+)$", text)
    if m is None:
        raise ParseError(f"bad range {text!r}: want A..B")
    return int(m.group(1)), int(m.group(2))


def _resolve_primes(args):
    """(primes, explicit) from --p / --p-range."""
    if args.p is not None and args.p_range is not None:
        raise ParseError("--p and --p-range are mutually exclusive")
    if args.p is not None:
        if not is_prime(args.p) or args.p < 5:
            raise ModulusError(f"{args.p} is not a prime >= 5")
        return [args.p], True
    if args.p_range is not None:
        lo, hi = _parse_range(args.p_range)
        return primes_in(lo, hi), False
    raise ParseError("one of --p or --p-range is required")


def _resolve_family(args):
    fam = args.family
    if getattr(args, "quartic", None) is not None:
        if fam not in (None, "general"):
            raise ParseError("--quartic implies --family general")
        return "general"
    if fam is None:
        fam = "c6" if getattr(args, "r", None) is not None else None
    if fam is None:
        raise ParseError("need --family (or --quartic / --r)")
    return fam


def _form_for(args, mod):
    fam = _resolve_family(args)
    if fam == "general":
        return fam, args.quartic, parse_quartic(args.quartic, mod)
    if fam == "c9":
        return fam, "", families.c9_form(mod)
    if args.r is None:
        raise ParseError("--family c6 needs --r")
    r = parse_c6_param(args.r, mod)
    return fam, str(r), families.c6_form(mod, r)


def _cmd_hw(args) -> int:
    primes, _ = _resolve_primes(args)
    report = SweepReport()
    for p in primes:
        mod = modulus(p)
        fam, param, F = _form_for(args, mod)
        M = hw_matrix(F)
        report.add(p=p, family=fam, param=param,
                   a_number=a_number(M), p_rank=stable_rank(M),
                   detail=_matrix_detail(M))
    print(report.render(args.format), end="")
    return report.exit_status


def _cmd_classify(args) -> int:
    primes, _ = _resolve_primes(args)
    report = SweepReport()
    for p in primes:
        mod = modulus(p)
        fam = _resolve_family(args)
        if fam == "c6":
            r = parse_c6_param(args.r, mod)
            cls = families.c6_classify(mod, r)
            report.add(p=p, family=fam, param=str(r),
                       **_classification_columns(cls))
        elif fam == "c9":
            cls = families.c9_classify(mod)
            report.add(p=p, family=fam, **_classification_columns(cls))
        else:
            F = parse_quartic(args.quartic, mod)
            M = hw_matrix(F)
            report.add(p=p, family=fam, param=args.quartic,
                       a_number=a_number(M), p_rank=stable_rank(M),
                       detail="NP/EO lookup applies to c6/c9 families only")
    print(report.render(args.format), end="")
    return report.exit_status


def _cmd_enumerate(args) -> int:
    """One row per F_p-rational isomorphism class {r, -r}, plus a summary.

    The closure count (the floor(p/12) statement) includes parameters
    living in extensions, so the rational sweep may find fewer.
    """
    primes, _ = _resolve_primes(args)
    report = SweepReport()
    for p in primes:
        mod = modulus(p)
        polys = families.c6_coeff_polys(mod)
        max_a = 3 if p % 6 == 5 else 2
        rational = 0
        for r in range(1, (p - 1) // 2 + 1):
            if r == 2:
                continue
            cls = families.c6_classify(mod, r, polys)
            if cls.a_number == max_a:
                rational += 1
            report.add(p=p, family="c6", param=f"{r}",
                       **_classification_columns(cls),
                       detail=f"isomorphism class {{{r}, {p - r}}}")
        closure = families.c6_count_max_a(mod)
        expected = p // 12
        report.add(p=p, family="c6", param="max-a-count",
                   status="PASS" if closure == expected else "FAIL",
                   detail=f"classes over the closure with a={max_a}: {closure} "
                          f"(floor(p/12)={expected}), {rational} with r in F_p")
    print(report.render(args.format), end="")
    return report.exit_status


def _cmd_count_points(args) -> int:
    primes, _ = _resolve_primes(args)
    report = SweepReport()
    for p in primes:
        mod = modulus(p)
        fam, param, F = _form_for(args, mod)
        n = count_points_ext2(F, bound=args.bound)
        lo, hi = hasse_weil_window(p)
        report.add(p=p, family=fam, param=param,
                   detail=f"points={n} maximal={n == hi} window=[{lo},{hi}]")
    print(report.render(args.format), end="")
    return report.exit_status


def _cmd_verify(args) -> int:
    primes, explicit = _resolve_primes(args)
    report, status = run_suite(args.suite, primes, explicit=explicit,
                               bound=args.bound,
                               c6_question=args.c6_question,
                               sweep_ext2=args.sweep_ext2)
    print(report.render(args.format), end="")
    return status


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hwquartic",
        description="Hasse-Witt matrices and invariants of the C6/C9 "
                    "genus-3 quartic families over prime fields.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, family=True):
        sp.add_argument("--p", type=int, default=None, help="a single prime >= 5")
        sp.add_argument("--p-range", default=None, metavar="A..B",
                        help="sweep all primes in [A, B]")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        if family:
            sp.add_argument("--family", choices=("c6", "c9", "general"),
                            default=None)
            sp.add_argument("--r", default=None,
                            help="C6 parameter: integer or a+b*w")
            sp.add_argument("--quartic", default=None, metavar="EXPR",
                            help='general quartic, e.g. "x^3*z + y^4 + z^4"')

    sp = sub.add_parser("hw", help="print the Hasse-Witt matrix")
    common(sp)
    sp.set_defaults(fn=_cmd_hw)

    sp = sub.add_parser("classify",
                        help="a-number, p-rank, Newton polygon, EO type")
    common(sp)
    sp.set_defaults(fn=_cmd_classify)

    sp = sub.add_parser("enumerate",
                        help="classify every C6 isomorphism class at p")
    common(sp, family=False)
    sp.set_defaults(fn=_cmd_enumerate)

    sp = sub.add_parser("count-points",
                        help="exact projective point count over F_{p^2}")
    common(sp)
    sp.add_argument("--bound", type=int, default=None,
                    help=f"prime cap for counting (default {DEFAULT_POINT_BOUND})")
    sp.set_defaults(fn=_cmd_count_points)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=SUITES)
    common(sp, family=False)
    sp.add_argument("--bound", type=int, default=None,
                    help="capacity bound (points: prime cap; expectation: p^2 cap)")
    sp.add_argument("--c6-question", action="store_true",
                    help="also sweep C6 parameters for maximal curves")
    sp.add_argument("--sweep-ext2", action="store_true",
                    help="extend the C6 maximality sweep to r in F_{p^2} (slow)")
    sp.set_defaults(fn=_cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, ModulusError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (IntegrityError, PoleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
