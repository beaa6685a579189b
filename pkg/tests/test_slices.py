"""Graded sl(2)-triples, slices, and the witness-based induction check."""

import random

import pytest

from gradedlie.centralizers import SparseSpan, Subalgebra, centralizer
from gradedlie.grading import el_add, el_scale, from_kac
from gradedlie.jordan import is_nilpotent, jordan_decompose
from gradedlie.slices import (
    NotNilpotentOrDegenerate,
    graded_sl2_triple,
    slice_membership,
    u_m_membership,
    verify_slice_induction,
)


def elem(ga, *pairs):
    return ga.base.element_from_pairs(pairs)


def whole(ga):
    return Subalgebra(ga, [ga.basis_element(i) for i in range(ga.dim)])


def check_sl2(ga, s):
    assert ga.bracket(s.h, s.e) == el_scale(2, s.e)
    assert ga.bracket(s.h, s.f) == el_scale(-2, s.f)
    assert ga.bracket(s.e, s.f) == s.h
    if s.e:
        assert ga.degree_of(s.e) == 1 % ga.m
        assert not s.h or ga.degree_of(s.h) == 0
        assert ga.degree_of(s.f) == (-1) % ga.m


def check_transversal(ga, s):
    m0 = s.subalgebra.graded_part(0)
    m1 = s.subalgebra.graded_part(1)
    moved = SparseSpan([ga.bracket(b, s.e) for b in m0]).dim
    assert moved + s.slice_dim == len(m1)


def test_standard_triple_ungraded_a1():
    ga = from_kac("A1", (1, 0))
    s = graded_sl2_triple(whole(ga), elem(ga, ("e[1]", 1)))
    assert s.h == elem(ga, ("h1", 1))
    assert s.f == elem(ga, ("e[-1]", 1))
    assert s.slice_dim == 1
    check_sl2(ga, s)
    check_transversal(ga, s)


def test_standard_triple_graded_a1():
    ga = from_kac("A1", (1, 1))
    s = graded_sl2_triple(whole(ga), elem(ga, ("e[1]", 1)))
    assert s.h == elem(ga, ("h1", 1))
    assert s.f == elem(ga, ("e[-1]", 1))
    assert s.slice_dim == 1
    check_sl2(ga, s)
    check_transversal(ga, s)


def test_trivial_triple_carries_whole_degree_one_piece():
    ga = from_kac("G2", (1, 1, 0))
    s = graded_sl2_triple(whole(ga), {})
    assert s.e == {} and s.h == {} and s.f == {}
    assert s.slice_dim == len(ga.blocks[1])
    assert slice_membership(s, ga.random_element(random.Random(0), degree=1))


def test_triples_through_g2_root_vectors():
    ga = from_kac("G2", (1, 1, 0))
    m = whole(ga)
    for name in ("e[1,0]", "e[1,1]", "e[1,2]", "e[1,3]", "e[-2,-3]"):
        s = graded_sl2_triple(m, elem(ga, (name, 1)))
        check_sl2(ga, s)
        check_transversal(ga, s)


def test_triples_through_sampled_nilpotents():
    ga = from_kac("G2", (1, 1, 0))
    m = whole(ga)
    rng = random.Random(21)
    seen = 0
    while seen < 5:
        xn = jordan_decompose(ga, ga.random_element(rng, degree=1, bound=4)).nilpotent
        if not xn:
            continue
        s = graded_sl2_triple(m, xn)
        check_sl2(ga, s)
        check_transversal(ga, s)
        seen += 1


def test_semisimple_input_is_rejected():
    ga = from_kac("A1", (1, 1))
    with pytest.raises(NotNilpotentOrDegenerate):
        graded_sl2_triple(whole(ga), elem(ga, ("e[1]", 1), ("e[-1]", 1)))


def test_element_outside_degree_one_is_rejected():
    ga = from_kac("G2", (1, 1, 0))
    with pytest.raises(ValueError):
        graded_sl2_triple(whole(ga), elem(ga, ("h1", 1)))


def test_slice_membership_examples():
    ga = from_kac("G2", (1, 1, 0))
    e = elem(ga, ("e[1,0]", 1))
    s = graded_sl2_triple(whole(ga), e)
    assert slice_membership(s, e)
    # adding f leaves the degree-1 piece entirely
    assert not slice_membership(s, el_add(e, s.f))


def test_u_m_membership_extremes():
    ga = from_kac("A1", (1, 1))
    g_as_m = whole(ga)
    rng = random.Random(5)
    assert u_m_membership(ga, g_as_m, ga.random_element(rng, degree=1))
    proper = centralizer(ga, elem(ga, ("e[1]", 1), ("e[-1]", 1)))
    assert not u_m_membership(ga, proper, {})
    assert u_m_membership(ga, proper, elem(ga, ("e[1]", 1), ("e[-1]", 1)))


def test_u_m_membership_is_saturated():
    # membership depends only on the semisimple part
    ga = from_kac("G2", (1, 1, 0))
    rng = random.Random(17)
    ys = jordan_decompose(ga, ga.random_element(rng, degree=1, bound=9)).semisimple
    m = centralizer(ga, ys)
    m1 = m.graded_part(1)
    for _ in range(8):
        z = {}
        for v in m1:
            z = el_add(z, el_scale(rng.randint(-3, 3), v))
        zs = jordan_decompose(ga, z).semisimple
        assert u_m_membership(ga, m, z) == u_m_membership(ga, m, zs)


def test_induction_of_class_into_itself():
    ga = from_kac("G2", (1, 1, 0))
    rng = random.Random(3)
    for bound in (2, 7):
        x = ga.random_element(rng, degree=1, bound=bound)
        report = verify_slice_induction(ga, x, x)
        assert report.witnessed and report.containment and report.slice_member
        assert report.dim_condition
        assert report.note is None


def test_induction_witness_closed_form_a1():
    # In A1 with both nodes black: e + f lies on the slice through e, so the
    # nilpotent class is witnessed inside the closure of the regular one.
    ga = from_kac("A1", (1, 1))
    x = elem(ga, ("e[1]", 1), ("e[-1]", 1))
    y = elem(ga, ("e[1]", 1))
    report = verify_slice_induction(ga, x, y)
    assert report.witnessed and report.dim_condition
    swapped = verify_slice_induction(ga, y, x)
    assert not swapped.witnessed
    assert not swapped.containment
    assert "undecided" in swapped.note


def test_induction_flags_are_independent():
    # With a random x the containment holds (m is everything) but x has no
    # reason to land on the slice: the witness fails even though the
    # closure relation itself is true.
    ga = from_kac("G2", (1, 1, 0))
    rng = random.Random(8)
    x = ga.random_element(rng, degree=1, bound=9)
    y = elem(ga, ("e[1,0]", 1))
    report = verify_slice_induction(ga, x, y)
    assert report.containment
    assert not report.slice_member and not report.witnessed
    js = report.to_json()
    assert set(js) == {"witnessed", "containment", "slice_member",
                       "dim_condition", "dims", "note"}
    ok = verify_slice_induction(ga, x, x)
    assert set(ok.to_json()) == {"witnessed", "containment",
                                 "slice_member", "dim_condition", "dims"}


def test_induction_rejects_wrong_degrees():
    ga = from_kac("G2", (1, 1, 0))
    with pytest.raises(ValueError):
        verify_slice_induction(ga, elem(ga, ("h1", 1)), {})
