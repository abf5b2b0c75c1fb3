"""Lattice primitives: sequences, roots, the form, classification, reflections."""

import pytest
from fractions import Fraction

from kmpi.root_core import (
    ALPHA1,
    ALPHA2,
    RootClass,
    RootVec,
    apply_weyl_word,
    bilinear_scaled,
    classify_root,
    coefficient_sequences,
    enumerate_finite_roots,
    make_gcm,
    norm_scaled,
    pairing,
    positive_real_root,
    simple_reflection,
)

GRID = [(2, 2), (3, 2), (4, 2), (3, 3), (5, 1), (6, 1), (5, 3), (4, 3)]


def test_make_gcm_types():
    assert make_gcm(2, 2).cartan_type() == "affine"
    assert make_gcm(1, 1).cartan_type() == "finite"
    assert make_gcm(5, 1).cartan_type() == "hyperbolic"
    assert make_gcm(4, 1).cartan_type() == "affine"


def test_make_gcm_swap_normalizes():
    g = make_gcm(1, 5)
    assert (g.a, g.b, g.swapped) == (5, 1, True)
    assert not make_gcm(5, 1).swapped


@pytest.mark.parametrize("a,b", [(0, 1), (1, 0), (-1, 2), (2, -3)])
def test_make_gcm_rejects_nonpositive(a, b):
    with pytest.raises(ValueError):
        make_gcm(a, b)


def test_sequences_frozen_examples():
    t = coefficient_sequences(make_gcm(2, 2), 4)
    assert t.c == (0, 1, 2, 3, 4) and t.d == (0, 1, 2, 3, 4)
    t = coefficient_sequences(make_gcm(5, 1), 5)
    assert t.c == (0, 1, 5, 4, 15, 11) and t.d == (0, 1, 1, 4, 3, 11)
    t = coefficient_sequences(make_gcm(3, 2), 5)
    assert t.c == (0, 1, 3, 5, 12, 19) and t.d == (0, 1, 2, 5, 8, 19)


@pytest.mark.parametrize("a,b", GRID)
def test_sequences_satisfy_recurrence_and_parity_relations(a, b):
    g = make_gcm(a, b)
    n = 40
    t = coefficient_sequences(g, n)
    assert t.c[0] == t.d[0] == 0 and t.c[1] == t.d[1] == 1
    for k in range(n - 1):
        assert t.c[k + 2] + t.c[k] == a * t.d[k + 1]
        assert t.d[k + 2] + t.d[k] == b * t.c[k + 1]
    for j in range(n // 2):
        assert t.c[2 * j + 1] == t.d[2 * j + 1]
        assert b * t.c[2 * j] == a * t.d[2 * j]


def test_sequences_reject_short_bound():
    with pytest.raises(ValueError):
        coefficient_sequences(make_gcm(2, 2), 0)


def test_positive_real_root_examples():
    for a, b in GRID:
        g = make_gcm(a, b)
        assert positive_real_root(g, 1, 0) == ALPHA2
        assert positive_real_root(g, 2, 0) == ALPHA1
    assert positive_real_root(make_gcm(5, 1), 1, 2) == RootVec(5, 4)
    assert positive_real_root(make_gcm(3, 2), 2, 3) == RootVec(12, 5)


def test_positive_real_root_rejects_finite():
    with pytest.raises(ValueError):
        positive_real_root(make_gcm(1, 1), 1, 0)


def test_bilinear_scaled_examples():
    assert norm_scaled(make_gcm(2, 2), RootVec(1, 1)) == 0
    assert norm_scaled(make_gcm(5, 1), RootVec(5, 1)) == 10
    g = make_gcm(3, 2)
    assert positive_real_root(g, 1, 2) == RootVec(3, 5)
    assert norm_scaled(g, RootVec(3, 5)) == 6


@pytest.mark.parametrize("a,b", GRID)
def test_bilinear_scaled_symmetric(a, b):
    g = make_gcm(a, b)
    box = [RootVec(x, y) for x in range(-3, 4) for y in range(-3, 4)]
    for u in box:
        for v in box:
            assert bilinear_scaled(g, u, v) == bilinear_scaled(g, v, u)


def test_classify_examples():
    assert classify_root(make_gcm(2, 2), RootVec(1, 1)) == RootClass.IMAGINARY_POSITIVE
    assert classify_root(make_gcm(5, 1), RootVec(5, 1)) == RootClass.REAL_POSITIVE
    assert classify_root(make_gcm(2, 2), RootVec(-1, 1)) == RootClass.NOT_ROOT
    assert classify_root(make_gcm(2, 2), RootVec(0, 0)) == RootClass.ZERO


@pytest.mark.parametrize("a,b", GRID)
def test_classify_negation_flips_sign(a, b):
    g = make_gcm(a, b)
    for x in range(-6, 7):
        for y in range(-6, 7):
            v = RootVec(x, y)
            assert classify_root(g, -v) == classify_root(g, v).negated()


@pytest.mark.parametrize("a,b", GRID)
def test_window_roots_classify_real_positive(a, b):
    g = make_gcm(a, b)
    for family in (1, 2):
        for j in range(13):
            v = positive_real_root(g, family, j)
            assert classify_root(g, v) == RootClass.REAL_POSITIVE


@pytest.mark.parametrize("a,b", GRID)
def test_mixed_sign_vectors_have_positive_norm(a, b):
    g = make_gcm(a, b)
    for x in range(1, 8):
        for y in range(-7, 0):
            assert norm_scaled(g, RootVec(x, y)) > 0
            assert norm_scaled(g, RootVec(-x, -y)) > 0


def test_simple_reflection_examples():
    g = make_gcm(5, 1)
    assert simple_reflection(g, 1, ALPHA1) == -ALPHA1
    assert simple_reflection(g, 1, ALPHA2) == RootVec(5, 1)
    assert simple_reflection(g, 2, simple_reflection(g, 1, ALPHA2)) == RootVec(5, 4)


@pytest.mark.parametrize("a,b", GRID)
def test_simple_reflection_involutive_isometry(a, b):
    g = make_gcm(a, b)
    for x in range(-4, 5):
        for y in range(-4, 5):
            v = RootVec(x, y)
            for i in (1, 2):
                w = simple_reflection(g, i, v)
                assert simple_reflection(g, i, w) == v
                assert norm_scaled(g, w) == norm_scaled(g, v)


def test_weyl_word_empty_is_identity():
    g = make_gcm(3, 3)
    assert apply_weyl_word(g, [], RootVec(2, -5)) == RootVec(2, -5)


def test_weyl_word_examples_two_routes():
    # both routes computed independently must agree: the orbit form of the
    # second family at index 2 is (c3, d2)
    g = make_gcm(3, 2)
    t = coefficient_sequences(g, 3)
    via_word = apply_weyl_word(g, [1, 2], ALPHA1)
    via_sequences = RootVec(t.c[3], t.d[2])
    assert via_word == via_sequences == RootVec(5, 2)
    assert via_word == positive_real_root(g, 2, 2)
    g = make_gcm(5, 1)
    assert apply_weyl_word(g, [2, 1], ALPHA2) == positive_real_root(g, 1, 2) == RootVec(5, 4)


def test_pairing_examples():
    for a, b in GRID:
        g = make_gcm(a, b)
        assert pairing(g, ALPHA2, ALPHA1) == -a
        assert pairing(g, ALPHA1, ALPHA2) == -b
        for family in (1, 2):
            beta = positive_real_root(g, family, 3)
            assert pairing(g, beta, beta) == 2
    assert pairing(make_gcm(3, 2), ALPHA1, RootVec(3, 5)) == Fraction(-6)


def test_pairing_rejects_non_real():
    g = make_gcm(2, 2)
    with pytest.raises(ValueError):
        pairing(g, ALPHA1, RootVec(1, 1))  # null vector has no coroot


@pytest.mark.parametrize(
    "a,b,count", [(1, 1, 6), (2, 1, 8), (3, 1, 12)]
)
def test_finite_root_counts(a, b, count):
    g = make_gcm(a, b)
    roots = enumerate_finite_roots(g)
    assert len(roots) == count
    root_set = set(roots)
    for v in roots:
        for i in (1, 2):
            assert simple_reflection(g, i, v) in root_set
        assert -v in root_set


def test_finite_enumeration_rejects_infinite():
    with pytest.raises(ValueError):
        enumerate_finite_roots(make_gcm(2, 2))


def test_classify_delegates_to_finite_root_set():
    g = make_gcm(1, 1)
    assert classify_root(g, RootVec(1, 1)) == RootClass.REAL_POSITIVE
    assert classify_root(g, RootVec(-1, -1)) == RootClass.REAL_NEGATIVE
    assert classify_root(g, RootVec(2, 1)) == RootClass.NOT_ROOT
    g = make_gcm(3, 1)
    assert classify_root(g, RootVec(3, 2)) == RootClass.REAL_POSITIVE
    assert classify_root(g, RootVec(2, 2)) == RootClass.NOT_ROOT
