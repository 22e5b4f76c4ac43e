from fractions import Fraction

import pytest

from dscodes import secretshare, sets
from dscodes.code import DefiningSet, build_code_weights
from dscodes.field import get_field


def cubic_ratio(m):
    wd = build_code_weights(sets.tr_cubic_set(m))
    return secretshare.ratio_check(wd, tr_cubic=True)


def test_ratio_m6():
    r = cubic_ratio(6)
    assert (r.w_min, r.w_max) == (12, 20)
    assert r.ratio == Fraction(12, 20)
    assert r.passes
    assert r.m_congruence_case == "m = 2 mod 4"


def test_ratio_m7():
    r = cubic_ratio(7)
    assert (r.w_min, r.w_max) == (32, 40)
    assert r.passes
    assert r.m_congruence_case == "m = 1 or 7 mod 8"


def test_ratio_m8():
    r = cubic_ratio(8)
    assert (r.w_min, r.w_max) == (48, 64)
    assert r.ratio == Fraction(3, 4)
    assert r.passes
    assert r.m_congruence_case == "m = 0 mod 8"


def test_ratio_m5_sits_exactly_on_threshold():
    r = cubic_ratio(5)
    assert (r.w_min, r.w_max) == (4, 8)
    assert r.ratio == Fraction(1, 2)
    assert r.threshold == Fraction(1, 2)
    assert not r.passes  # the comparison is strict


@pytest.mark.parametrize("m", range(4, 13))
def test_closed_form_ratio_matches_enumeration(m):
    r = cubic_ratio(m)
    assert r.closed_form_ratio == r.ratio


def test_congruence_case_covers_all_residues():
    seen = {secretshare.cubic_trace_ratio_case(m)[0] for m in range(4, 20)}
    assert seen == {
        "m = 2 mod 4",
        "m = 4 mod 8",
        "m = 0 mod 8",
        "m = 1 or 7 mod 8",
        "m = 3 or 5 mod 8",
    }


def test_ratio_report_json_uses_exact_rationals():
    r = cubic_ratio(6)
    d = r.to_json_dict()
    assert d["ratio"] == [3, 5]
    assert d["raw_ratio"] == [12, 20]
    assert d["threshold"] == [1, 2]
    assert d["closed_form_ratio"] == [3, 5]


# ----------------------------------------------------------------------
# minimal codewords


def test_binary_simplex_all_minimal():
    f = get_field(2, 2)
    ds = sets.simplex_coset_reps(f)
    report, ratio = secretshare.minimal_codewords(ds)
    assert report.total_nonzero == 3
    assert report.minimal_count == 3
    assert report.all_minimal
    # one-weight code: ratio is exactly 1, strictly above the threshold
    assert ratio.passes
    assert ratio.ratio == Fraction(1, 1)


def test_full_space_code_has_covering_word():
    # D = the two trace-one elements of GF(4): the code is all of GF(2)^2,
    # where (1,1) strictly covers (1,0)
    f = get_field(2, 2)
    trace_one = tuple(x for x in range(1, f.q) if f.trace(x) == 1)
    ds = DefiningSet(f, trace_one)
    report, _ = secretshare.minimal_codewords(ds)
    assert report.total_nonzero == 3
    assert report.minimal_count == 2
    assert not report.all_minimal


@pytest.mark.parametrize("m,expected_minimal", [(6, 63), (7, 127), (8, 255)])
def test_cubic_trace_codes_all_minimal(m, expected_minimal):
    ds = sets.tr_cubic_set(m)
    report, ratio = secretshare.minimal_codewords(ds)
    assert ratio.passes
    assert report.all_minimal
    assert report.minimal_count == expected_minimal


def test_cubic_trace_m5_not_all_minimal():
    report, ratio = secretshare.minimal_codewords(sets.tr_cubic_set(5))
    assert not ratio.passes
    assert report.total_nonzero == 31
    assert report.minimal_count == 26
    assert not report.all_minimal


def test_minimal_supports_scalar_closure():
    # nonbinary: each support is shared by the p - 1 scalar multiples
    f = get_field(3, 2)
    ds = DefiningSet(f, (1, 2, 4, 5))
    report, _ = secretshare.minimal_codewords(ds)
    assert report.total_nonzero == 8
    assert report.total_nonzero % (f.p - 1) == 0


def test_fixed_threshold_for_binary():
    r = cubic_ratio(6)
    assert r.p == 2
    assert r.threshold == Fraction(1, 2)


def test_ratio_check_without_family_flag():
    wd = build_code_weights(sets.simplex_coset_reps(get_field(3, 3)))
    r = secretshare.ratio_check(wd)
    assert r.m_congruence_case == ""
    assert r.closed_form_ratio is None
    assert r.ratio == Fraction(1, 1)


def test_caps_are_exported():
    assert secretshare.ENUMERATION_CAP == 1 << 20
    assert secretshare.ELEMENT_SCAN_CAP == 1 << 22
