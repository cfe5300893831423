"""Certificate verifiers: positive runs plus tampered negative controls."""

import json

import pytest

import rankineq.certificates as certs
from rankineq.arrangements import rank_function, uniform_U
from rankineq.certificates import (basis_alpha, facet_rank,
                                   run_certificates, vanishing_condition,
                                   vanishing_family, verify_basis_F,
                                   verify_facet, verify_hierarchy,
                                   verify_line_identities, verify_vanishing,
                                   verify_witness_realizations, witness_T)
from rankineq.functionals import kinser, pair
from rankineq.maps import UnionMap
from rankineq.setfunctions import SetFunction, is_matroid, is_polymatroid
from rankineq.subsets import mobius, subset


def test_witness_values_at_4():
    T = witness_T(4)
    assert T.value(subset(4, [2])) == 2
    for i in (1, 3, 4):
        assert T.value(subset(4, [i])) == 2  # n - 2 = 2 here
    for pair_elems in ([1, 3], [1, 4], [2, 3], [2, 4], [3, 4]):
        assert T.value(subset(4, pair_elems)) == 3
    assert T.value(subset(4, [1, 2])) == 4
    for bits in range(1, 16):
        if bin(bits).count("1") >= 3:
            assert T.value_at(bits) == 4
    with pytest.raises(ValueError, match="n >= 4"):
        witness_T(3)


def test_witness_values_at_6():
    T = witness_T(6)
    assert T.value(subset(6, [2])) == 2
    assert T.value(subset(6, [5])) == 4
    assert T.value(subset(6, [2, 5])) == 5
    assert T.value(subset(6, [4, 5])) == 5
    assert T.value(subset(6, [1, 3])) == 5
    assert T.value(subset(6, [1, 6])) == 5
    assert T.value(subset(6, [1, 4])) == 6
    assert T.value(subset(6, [3, 5])) == 6
    assert T.value(subset(6, [1, 2])) == 6


@pytest.mark.parametrize("n", range(4, 11))
def test_witness_is_polymatroid_but_not_matroid(n):
    T = witness_T(n)
    assert is_polymatroid(T, "full")
    assert not is_matroid(T)  # T({2}) = 2
    assert pair(kinser(n), T) == -1


@pytest.mark.parametrize("n", [4, 5, 6])
def test_witness_realizations_pass(n):
    report = verify_witness_realizations(n)
    assert report.passed
    assert any("shifted indexing" in d for d in report.details)


@pytest.mark.parametrize("n", [7, 8])
def test_witness_realizations_upper_range(n):
    # wraparound of the w-indices mod n-1 is heaviest at the top of the range
    report = verify_witness_realizations(n)
    assert report.passed
    assert f"{3 * 2 ** n} substitution cases" in report.details[0]


def test_witness_realizations_domain():
    with pytest.raises(ValueError):
        verify_witness_realizations(3)
    with pytest.raises(ValueError):
        verify_witness_realizations(9)


def test_witness_realizations_detect_tampering():
    T = witness_T(5)
    vals = list(T.values_by_mask())
    vals[subset(5, [3, 4]).bits] += 1  # silently raise one pair value
    report = verify_witness_realizations(5, SetFunction(5, vals))
    assert not report.passed
    assert any("differs at" in d for d in report.details)


def test_hierarchy_pass_and_negative_control():
    assert verify_hierarchy(5).passed
    assert verify_hierarchy(10).passed
    # misdefine the image of n as {1, n-2}
    bad = UnionMap(6, 5, [[1], [2], [3], [4], [5], [1, 3]])
    report = verify_hierarchy(6, bad)
    assert not report.passed
    with pytest.raises(ValueError, match="n >= 5"):
        verify_hierarchy(4)


def test_vanishing_condition_spot_checks():
    # d = 2 with 2 in S and no consecutive pair inside {3..n-1}
    assert vanishing_condition(5, subset(5, [1, 2, 4]), 2)
    assert pair(kinser(5), uniform_U(5, subset(5, [1, 2, 4]), 2)) == 0
    # d = 1 with 2 not in S and S meeting {1,3,n} away from {3,n}
    assert vanishing_condition(5, subset(5, [1, 4]), 1)
    assert pair(kinser(5), uniform_U(5, subset(5, [1, 4]), 1)) == 0
    # any S at d >= 3
    for bits in range(1, 32):
        S = subset(5, [i for i in range(1, 6) if bits >> (i - 1) & 1])
        assert vanishing_condition(5, S, 3)
    # d = 1 interval and tail families
    assert vanishing_condition(6, subset(6, [2, 3, 4]), 1)
    assert vanishing_condition(6, subset(6, [2, 5, 6]), 1)
    assert vanishing_condition(6, subset(6, [1, 2, 3, 4, 5, 6]), 1)
    assert not vanishing_condition(6, subset(6, [2, 4]), 1)
    # d = 1, 2 not in S, S meets {1,3,n} in exactly {3,n}: excluded
    assert not vanishing_condition(4, subset(4, [3, 4]), 1)
    assert pair(kinser(4), uniform_U(4, subset(4, [3, 4]), 1)) == 1


def test_vanishing_condition_excludes_kernel_escapees_at_d2():
    # with 2 in S and no consecutive pair, a set containing {1,3,n} still
    # pairs to 1, so the condition must reject it
    S = subset(5, [1, 2, 3, 5])
    assert not vanishing_condition(5, S, 2)
    assert pair(kinser(5), uniform_U(5, S, 2)) == 1
    S7 = subset(7, [1, 2, 3, 7])
    assert not vanishing_condition(7, S7, 2)
    assert pair(kinser(7), uniform_U(7, S7, 2)) == 1


@pytest.mark.parametrize("n", range(4, 9))
def test_vanishing_pass(n):
    report = verify_vanishing(n)
    assert report.passed


def test_vanishing_family_members_all_vanish_by_construction():
    for n in (4, 5, 6):
        gen = kinser(n)
        fam = vanishing_family(n)
        assert fam == sorted(fam, key=lambda t: (t[0].bits, t[1]))
        for S, d in fam:
            assert pair(gen, uniform_U(n, S, d)) == 0


@pytest.mark.parametrize("n", [4, 5, 6])
def test_line_identities_pass(n):
    assert verify_line_identities(n).passed


def test_line_identities_report_deterministic():
    # the randomized four-term family is internally seeded
    assert verify_line_identities(4) == verify_line_identities(4)


def test_line_identities_detect_flipped_mobius_sign(monkeypatch):
    monkeypatch.setattr(certs, "mobius", lambda S, A: -mobius(S, A))
    report = verify_line_identities(4)
    assert not report.passed
    assert any("Mobius expansion" in d for d in report.details)


@pytest.mark.parametrize("n,expected", [(4, (14, 15)), (5, (30, 31))])
def test_facet_rank_small(n, expected):
    assert facet_rank(n) == expected
    assert verify_facet(n).passed


def test_facet_rank_top_of_range():
    assert facet_rank(8) == (254, 255)


def test_facet_rank_domain():
    with pytest.raises(ValueError):
        facet_rank(3)
    with pytest.raises(ValueError):
        facet_rank(9)


@pytest.mark.parametrize("n", [5, 6])
def test_basis_F_pass(n):
    report = verify_basis_F(n)
    assert report.passed
    assert f"{2 ** n - 2} basis vectors" in report.details[0]


def test_basis_F_alpha_matches_generator_coefficients():
    for n in (5, 6, 7):
        alpha = basis_alpha(n)
        gen = kinser(n)
        r_mask = 0b101 | 1 << (n - 1)
        for mask in range(1, 1 << n):
            if mask == r_mask:
                continue
            assert alpha.get(mask, 0) == gen.coeff_at(mask)


def test_basis_F_detects_tampered_alpha():
    alpha = basis_alpha(5)
    alpha[0b11] = 1  # flip the {1,2} correction
    report = verify_basis_F(5, alpha)
    assert not report.passed
    assert "{1,2}" in report.details[0]


def test_basis_F_domain():
    with pytest.raises(ValueError):
        verify_basis_F(4)


def test_witness_arrangement_field_independent():
    # the explicit realizations produce the same rank function over the
    # rationals, GF(2) and GF(3); spot-check one substitution directly
    from rankineq.arrangements import Arrangement
    from rankineq.certificates import _choose_w1, _witness_blocks
    n = 5
    blocks = _witness_blocks(n)
    fixed = [blocks["W"][i] for i in range(2, n)]
    for cmask in (0, 0b1, 0b10, 0b101, 0b1100):
        w1, _ = _choose_w1(n, cmask, blocks, witness_T(n), shifted=True)
        ranks = [rank_function(Arrangement(f, blocks["dim"], [w1] + fixed))
                 for f in (0, 2, 3)]
        assert ranks[0] == ranks[1] == ranks[2]


def test_report_json_shape():
    report = verify_facet(4)
    obj = report.to_json_obj()
    assert set(obj) == {"check", "n", "outcome", "details"}
    assert obj["check"] == "facet_rank"
    assert obj["outcome"] == "pass"
    parsed = json.loads(report.dumps())
    assert parsed == obj
    # determinism for fixed inputs
    assert verify_facet(4) == report


def test_run_certificates_all_and_named():
    reports = run_certificates(5, "all")
    assert {r.check for r in reports} == {
        "hierarchy", "witness_realizations", "vanishing", "line_identities",
        "facet_rank", "basis_F"}
    assert all(r.passed for r in reports)
    only = run_certificates(8, "vanishing")
    assert len(only) == 1 and only[0].check == "vanishing"
    with pytest.raises(ValueError, match="unknown certificate"):
        run_certificates(5, "bogus")
    with pytest.raises(ValueError, match="requires n"):
        run_certificates(4, "basis")


def test_run_certificates_at_4_skips_inapplicable():
    reports = run_certificates(4, "all")
    names = {r.check for r in reports}
    assert "hierarchy" not in names and "basis_F" not in names
    assert {"witness_realizations", "vanishing", "line_identities",
            "facet_rank"} <= names
    assert all(r.passed for r in reports)
