"""Subset algebra against a naive element-set model, plus Mobius properties."""

from itertools import combinations

import pytest

from rankineq.subsets import (SubsetRef, all_subsets, format_subset, mobius,
                              nonempty_subsets, parse_subset, subset)


def test_constructor_examples():
    assert subset(4, [1, 3]).elements() == (1, 3)
    assert subset(4, [3, 1, 3]) == subset(4, [1, 3])
    with pytest.raises(ValueError, match="element out of range"):
        subset(4, [5])
    with pytest.raises(ValueError):
        subset(0, [])
    with pytest.raises(ValueError):
        subset(21, [1])


def test_empty_subset_representable():
    empty = subset(3, [])
    assert empty.is_empty()
    assert len(empty) == 0
    assert empty.elements() == ()


def naive(ref: SubsetRef) -> frozenset:
    return frozenset(ref.elements())


def test_set_algebra_matches_naive_model_exhaustively():
    for n in range(1, 7):
        refs = list(all_subsets(n))
        assert len(refs) == 2 ** n
        # ascending mask order is the documented iteration order
        assert [r.bits for r in refs] == list(range(2 ** n))
        for A in refs:
            assert naive(A.complement()) == frozenset(range(1, n + 1)) - naive(A)
            assert len(A) == len(naive(A))
            for B in refs:
                assert naive(A | B) == naive(A) | naive(B)
                assert naive(A & B) == naive(A) & naive(B)
                assert naive(A - B) == naive(A) - naive(B)
                assert A.issubset(B) == (naive(A) <= naive(B))
                assert (A == B) == (naive(A) == naive(B))


def test_membership_and_equality():
    A = subset(5, [2, 4])
    assert 2 in A and 4 in A
    assert 3 not in A and 0 not in A and 6 not in A
    assert A != subset(4, [2, 4])  # different ground set
    assert hash(subset(5, [2, 4])) == hash(A)


def test_ground_set_mismatch_raises():
    with pytest.raises(ValueError, match="mismatch"):
        subset(4, [1]) | subset(5, [1])


def test_mobius_examples():
    assert mobius(subset(3, [1]), subset(3, [1, 2])) == -1
    assert mobius(subset(3, [1, 3]), subset(3, [1, 3])) == 1
    assert mobius(subset(3, [1]), subset(3, [1, 2, 3])) == 1
    with pytest.raises(ValueError, match="not a subset"):
        mobius(subset(3, [2]), subset(3, [1, 3]))


def test_mobius_against_sign_oracle():
    n = 5
    for A in all_subsets(n):
        for r in range(len(A) + 1):
            for sub_elems in combinations(A.elements(), r):
                S = subset(n, sub_elems)
                assert mobius(S, A) == (-1) ** (len(A) - len(S))


def test_mobius_inversion_sums():
    # sum over A >= S of mu(S, A) is 0 unless S is the whole ground set
    for n in range(1, 7):
        top = subset(n, range(1, n + 1))
        for S in all_subsets(n):
            total = sum(mobius(S, A) for A in all_subsets(n)
                        if S.issubset(A))
            assert total == (1 if S == top else 0)


def test_text_form_round_trip():
    for n in (1, 4, 6):
        for S in nonempty_subsets(n):
            text = format_subset(S)
            assert text == ",".join(str(i) for i in S.elements())
            assert parse_subset(n, text) == S


def test_text_form_rejects_non_canonical():
    with pytest.raises(ValueError, match="strictly increasing"):
        parse_subset(4, "3,1")
    with pytest.raises(ValueError, match="strictly increasing"):
        parse_subset(4, "1,1")
    with pytest.raises(ValueError, match="malformed"):
        parse_subset(4, "")
    with pytest.raises(ValueError, match="malformed"):
        parse_subset(4, "1,x")
    with pytest.raises(ValueError, match="out of range"):
        parse_subset(4, "1,5")
