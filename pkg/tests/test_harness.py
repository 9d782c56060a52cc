import json

import pytest

from hwquartic import families
from hwquartic.errors import CapacityError, ParseError
from hwquartic.ffield import Fp2Element, FpElement, modulus
from hwquartic.harness import (SweepReport, count_points_ext2,
                               hasse_weil_window, is_maximal_ext2, main,
                               oracle_corpus, parse_c6_param, parse_quartic,
                               primes_in, run_suite)
from hwquartic.hwcore import QuarticForm


# ---------------------------------------------------------------------------
# parsing

def test_parse_quartic_c6():
    F = parse_quartic("x^3*z + y^4 + 3*y^2*z^2 + z^4", 7)
    assert F == families.c6_form(modulus(7), 3)


def test_parse_quartic_c9():
    assert parse_quartic("x^3*y + y^3*z + z^4", 11) == \
        families.c9_form(modulus(11))


def test_parse_quartic_signs_and_reduction():
    F = parse_quartic("2*x^4 - 9*y^4 + x^2*y*z", 7)
    assert F.terms[(4, 0, 0)] == 2
    assert F.terms[(0, 4, 0)] == 7 - 2
    assert F.terms[(2, 1, 1)] == 1
    # coefficients reduce mod p; a term can cancel away entirely
    F = parse_quartic("7*x^4 + y^4", 7)
    assert (4, 0, 0) not in F.terms
    F = parse_quartic("-x^4 + y^4", 5)
    assert F.terms[(4, 0, 0)] == 4
    # repeated variables multiply out
    F = parse_quartic("x*x*y^2", 5)
    assert F.terms == {(2, 2, 0): FpElement(1, modulus(5))}


def test_parse_quartic_degree_error_names_term():
    with pytest.raises(ParseError) as exc:
        parse_quartic("x^3 + y^4", 7)
    assert "x^3" in str(exc.value) and "degree 3" in str(exc.value)


def test_parse_quartic_syntax_errors_carry_position():
    for text in ("x^3*z +", "3 y^4", "x^", "x^3*z ++ y^4", "x^3*w", "", "+x^4"):
        with pytest.raises(ParseError) as exc:
            parse_quartic(text, 7)
        assert exc.value.position is not None


def test_parse_c6_param():
    m = modulus(11)
    assert parse_c6_param("5", m) == FpElement(5, m)
    assert parse_c6_param("-3", m) == FpElement(8, m)
    assert parse_c6_param("1+2*w", m) == Fp2Element(1, 2, m)
    assert parse_c6_param("4 - 3*w", m) == Fp2Element(4, 8, m)
    with pytest.raises(ParseError):
        parse_c6_param("w+1", m)


# ---------------------------------------------------------------------------
# point counting

def test_count_points_degenerate_line():
    # z^4 = 0 cuts out the projective line z = 0, which has p^2 + 1 points
    for p in (5, 7):
        F = QuarticForm({(0, 0, 4): 1}, modulus(p))
        assert count_points_ext2(F) == p * p + 1


def test_count_points_c9_17_is_maximal():
    F = families.c9_form(modulus(17))
    assert count_points_ext2(F) == 392 == 17 * 17 + 1 + 6 * 17
    assert is_maximal_ext2(F)


def test_count_points_c9_19_below_bound():
    F = families.c9_form(modulus(19))
    n = count_points_ext2(F)
    assert n < 19 * 19 + 1 + 6 * 19


def test_maximality_examples():
    assert not is_maximal_ext2(families.c9_form(modulus(13)))
    # no C_r over F_7 is F_49-maximal (maximality needs p = 5 mod 6)
    m = modulus(7)
    assert not any(is_maximal_ext2(families.c6_form(m, r))
                   for r in range(7) if r not in (2, 5))


def test_count_points_capacity():
    with pytest.raises(CapacityError):
        count_points_ext2(families.c9_form(modulus(61)))
    count_points_ext2(families.c9_form(modulus(61)), bound=61)


def test_hasse_weil_window_respected():
    for p in (5, 7, 11):
        m = modulus(p)
        lo, hi = hasse_weil_window(p)
        for r in range(p):
            if r in (2, p - 2):
                continue
            n = count_points_ext2(families.c6_form(m, r))
            assert lo <= n <= hi
        n = count_points_ext2(families.c9_form(m))
        assert lo <= n <= hi


def test_count_points_brute_force_cross_check():
    # independent nested-loop count over all of P^2(F_{p^2}) for one form
    p = 5
    m = modulus(p)
    F = families.c6_form(m, 1)
    pts = 0
    els = [Fp2Element(a, b, m) for a in range(p) for b in range(p)]
    one = Fp2Element(1, 0, m)
    zero = Fp2Element(0, 0, m)

    def ev(x, y, z):
        acc = Fp2Element(0, 0, m)
        for (i, j, k), c in F.terms.items():
            acc = acc + c * x ** i * y ** j * z ** k
        return acc

    for x in els:
        for y in els:
            if ev(x, y, one).is_zero():
                pts += 1
    for x in els:
        if ev(x, one, zero).is_zero():
            pts += 1
    if ev(one, zero, zero).is_zero():
        pts += 1
    assert count_points_ext2(F) == pts


# ---------------------------------------------------------------------------
# reports and suites

def _sample_report():
    rep = SweepReport()
    rep.add(p=13, family="c6", param="3", a_number=0, p_rank=3,
            newton_polygon="3(1,0)+3(0,1)", eo_type="(1,2,3)",
            status="PASS", detail="ok")
    rep.add(p=17, family="c9", status="SKIP", detail="message, with comma")
    return rep


def test_csv_round_trip():
    rep = _sample_report()
    assert SweepReport.from_csv(rep.to_csv()) == rep
    header = rep.to_csv().splitlines()[0]
    assert header == "p,family,param,a_number,p_rank,newton_polygon,eo_type,status,detail"


def test_json_round_trip():
    rep = _sample_report()
    assert SweepReport.from_json(rep.to_json()) == rep
    objs = json.loads(rep.to_json())
    assert objs[0]["a_number"] == 0 and objs[1]["a_number"] is None


def test_primes_in():
    assert primes_in(5, 20) == [5, 7, 11, 13, 17, 19]
    assert primes_in(1, 6) == [5]


def test_oracle_corpus_is_deterministic():
    m = modulus(7)
    a = oracle_corpus(m)
    b = oracle_corpus(m)
    assert [n for n, _ in a] == [n for n, _ in b]
    assert all(fa == fb for (_, fa), (_, fb) in zip(a, b))
    assert sum(1 for name, _ in a if name.startswith("random")) == 50


def test_run_suite_oracle():
    rep, status = run_suite("oracle", [5, 7])
    assert status == 0
    assert all(r.status == "PASS" for r in rep.rows)


def test_run_suite_skips_wrong_class_in_range_mode():
    rep, status = run_suite("euler", [7, 11])
    assert status == 0
    assert [r.status for r in rep.rows] == ["SKIP", "PASS"]


def test_run_suite_unknown_name():
    with pytest.raises(ValueError):
        run_suite("nope", [5])


# ---------------------------------------------------------------------------
# CLI

def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cli_hw_general(capsys):
    code, out = run_cli(capsys, "hw", "--p", "7", "--quartic",
                        "x^3*z + y^4 + 3*y^2*z^2 + z^4")
    assert code == 0
    rep = SweepReport.from_csv(out)
    assert rep.rows[0].a_number == 0 and rep.rows[0].p_rank == 3


def test_cli_classify_c9_json(capsys):
    code, out = run_cli(capsys, "classify", "--p", "13", "--family", "c9",
                        "--format", "json")
    assert code == 0
    rep = SweepReport.from_json(out)
    assert rep.rows[0].a_number == 2 and rep.rows[0].eo_type == "(0,1,1)"


def test_cli_verify_range(capsys):
    code, out = run_cli(capsys, "verify", "counts", "--p-range", "5..30")
    assert code == 0
    assert SweepReport.from_csv(out).rows


def test_cli_usage_errors(capsys):
    assert main(["verify", "euler", "--p", "7"]) == 2    # wrong class, explicit
    assert main(["classify", "--p", "9", "--family", "c9"]) == 2  # not prime
    assert main(["verify", "counts"]) == 2               # no prime given
    assert main(["hw", "--p", "7", "--family", "c6"]) == 2  # c6 without --r
    assert main(["nonsense"]) == 2
    assert main(["hw", "--p", "7", "--quartic", "x^3"]) == 2


def test_cli_capacity_exit_code(capsys):
    assert main(["count-points", "--p", "67", "--family", "c9"]) == 3
    assert main(["verify", "expectation", "--p", "503"]) == 3


def test_cli_failure_exit_code(capsys, monkeypatch):
    from hwquartic import harness

    def fake_suite(report, mod, **kw):
        report.add(p=mod.p, family="c6", status="FAIL", detail="injected")

    monkeypatch.setitem(harness._SUITE_FUNCS, "counts", fake_suite)
    assert main(["verify", "counts", "--p", "13"]) == 1


def test_cli_enumerate(capsys):
    code, out = run_cli(capsys, "enumerate", "--p", "29")
    assert code == 0
    rep = SweepReport.from_csv(out)
    summary = rep.rows[-1]
    assert summary.param == "max-a-count" and summary.status == "PASS"
    # 29 = 5 mod 6: every class has a in {1, 3}
    assert all(r.a_number in (1, 3) for r in rep.rows if r.a_number is not None)
