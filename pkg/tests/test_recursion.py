import pytest
from hypothesis import given, settings, strategies as st

from radcube.errors import InputError
from radcube.recursion import classify, search_sequences, verify_prefix


def test_verify_prefix_constant():
    rep = verify_prefix(3, 2, (2, 2, 2))
    assert rep.residuals == (0,)
    assert rep.valid


def test_verify_prefix_invalid():
    rep = verify_prefix(3, 2, (2, 2, 3))
    assert rep.residuals == (2,)
    assert not rep.valid


def test_verify_prefix_e_eq_r_plus_one():
    rep = verify_prefix(4, 3, (1, 1, 1))
    assert rep.valid
    assert rep.instance.ratios == (1, 1)


def test_verify_prefix_guards():
    with pytest.raises(InputError):
        verify_prefix(3, 2, (1, 2))
    with pytest.raises(InputError):
        verify_prefix(3, 2, (1, 0, 1))


def test_classify_constant_only():
    v = classify(3, 2)
    assert v.constant_only
    assert (1, 0) in v.divisor_values


def test_classify_no_sequence_no_root():
    v = classify(4, 2)
    assert v.verdict == "NoSequence"
    assert v.divisor_values == ((1, -1), (2, -2))


def test_classify_no_sequence_values():
    v = classify(3, 3)
    assert v.verdict == "NoSequence"
    assert v.divisor_values == ((1, 1), (3, 3))


def test_classify_r_guard():
    with pytest.raises(InputError):
        classify(3, 1)


def test_classify_e_equals_r_plus_one_always_constant():
    for r in range(2, 12):
        assert classify(r + 1, r).constant_only


def test_search_constant_family():
    found = search_sequences(3, 2, 12, 40)
    assert found == [tuple([c] * 12) for c in range(1, 41)]


def test_search_empty_families():
    assert search_sequences(4, 2, 12, 40) == []
    assert search_sequences(2, 2, 12, 40) == []


def test_search_telescoping_identity():
    # a_0 a_2 - a_1^2 = 0 and a_i a_{i+2} = a_{i+1}^2 on every found prefix.
    for e, r in [(3, 2), (4, 3), (5, 4)]:
        for seq in search_sequences(e, r, 10, 25):
            assert all(
                seq[i] * seq[i + 2] == seq[i + 1] ** 2 for i in range(len(seq) - 2)
            )


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.integers(2, 6))
def test_oracle_agrees_with_classifier(e, r):
    found = search_sequences(e, r, 12, 40)
    if classify(e, r).constant_only:
        assert found and all(len(set(seq)) == 1 for seq in found)
    else:
        assert found == []
