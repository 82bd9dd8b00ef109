"""Property tests over random reduced words and random integer classes."""
import random

from hypothesis import given, strategies as st

from bottsamelson import bsdh
from bottsamelson.bsdh import PicardClass
from bottsamelson.character import anticanonical_character, character_lowest_weight_report
from bottsamelson.rootsys import root_system
from bottsamelson.verify import check_word_identities, random_reduced_word
from bottsamelson.weyl import (
    all_reduced_words,
    commutation_classes,
    element_of,
    first_cancellation,
    inverse,
    is_reduced,
    w_dot_zero,
)

TYPES = ["A3", "A4", "B3", "C3", "D4", "G2", "F4"]


@st.composite
def reduced_words(draw, types=TYPES, min_len=0):
    rs = root_system(draw(st.sampled_from(types)))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    n = draw(st.integers(min_len, len(rs.positive_roots)))
    return rs, random_reduced_word(rs, rng, n)


@st.composite
def classes(draw):
    rs, word = draw(reduced_words())
    coeffs = draw(st.lists(st.integers(-50, 50), min_size=len(word), max_size=len(word)))
    return rs, word, tuple(coeffs)


@given(reduced_words())
def test_random_words_are_reduced(case):
    rs, word = case
    assert is_reduced(rs, word)
    assert element_of(rs, word).length == len(word)


@given(classes())
def test_basis_round_trip(case):
    rs, word, v = case
    xc = PicardClass("X", v, word)
    oc = PicardClass("O", v, word)
    assert bsdh.o_to_x(rs, bsdh.x_to_o(rs, xc)) == xc
    assert bsdh.x_to_o(rs, bsdh.o_to_x(rs, oc)) == oc


@given(classes(), classes())
def test_basis_change_is_linear(a, b):
    rs, word, v = a
    _, _, u = b
    u = (u + (0,) * len(word))[: len(word)]
    s = tuple(x + y for x, y in zip(v, u))
    lhs = bsdh.o_to_x(rs, PicardClass("O", s, word)).coeffs
    va = bsdh.o_to_x(rs, PicardClass("O", v, word)).coeffs
    ub = bsdh.o_to_x(rs, PicardClass("O", u, word)).coeffs
    assert lhs == tuple(x + y for x, y in zip(va, ub))


@given(reduced_words())
def test_word_identities(case):
    rs, word = case
    assert check_word_identities(rs, word) == []


@given(reduced_words(min_len=1))
def test_last_coefficient_is_two(case):
    rs, word = case
    assert bsdh.anticanonical_o_coeffs(rs, word).coeffs[-1] == 2


@given(reduced_words(min_len=1))
def test_prefix_shift(case):
    # dropping the first letter leaves m_2..m_r unchanged when that letter does not recur
    rs, word = case
    if word[0] in word[1:]:
        return
    full = bsdh.anticanonical_o_coeffs(rs, word).coeffs
    tail = bsdh.anticanonical_o_coeffs(rs, word[1:]).coeffs
    assert full[1:] == tail


@given(reduced_words(), st.integers(0, 100))
def test_reducedness_agrees_with_cancellation(case, pick):
    rs, word = case
    i = pick % rs.rank + 1
    extended = word + (i,)
    assert is_reduced(rs, extended) == (first_cancellation(rs, extended) is None)


@given(reduced_words())
def test_inverse_word(case):
    rs, word = case
    w = element_of(rs, word)
    assert element_of(rs, tuple(reversed(word))) == inverse(rs, w)


@given(reduced_words())
def test_w_dot_zero_is_in_negative_root_cone(case):
    rs, word = case
    mu = w_dot_zero(rs, element_of(rs, word))
    coords = rs.weight_to_root(mu)
    assert all(c <= 0 for c in coords)
    assert -sum(coords) >= len(word)


@given(reduced_words(types=["A2", "A3", "B2", "B3", "G2"]))
def test_gg_implies_certified_character(case):
    rs, word = case
    if bsdh.classify(rs, word).globally_generated:
        report = character_lowest_weight_report(rs, word)
        assert report.certified and report.passed


@given(reduced_words(types=["A2", "B2", "G2", "A3"]))
def test_character_evaluation_independent_of_commuting_swaps(case):
    rs, word = case
    chi = anticanonical_character(rs, word)
    words = all_reduced_words(rs, element_of(rs, word))
    for cls in commutation_classes(rs, words):
        if word in cls:
            for other in cls:
                assert anticanonical_character(rs, other) == chi
