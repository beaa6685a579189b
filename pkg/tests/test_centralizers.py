"""Centralizer machinery on small graded algebras."""

import random

import pytest
from gmpy2 import mpq

from gradedlie.centralizers import (
    SparseSpan,
    Subalgebra,
    center_of,
    centralizer,
    centralizer_in,
    centralizer_report,
    derived_basis,
    double_centralizer_equivalences,
    graded_centralizer_dims,
    independent_subset,
    orbit_dim_g0,
    split_graded,
)
from gradedlie.chevalley import chevalley_algebra
from gradedlie.grading import from_kac


def test_sparse_span_membership():
    s = SparseSpan([{0: mpq(1), 2: mpq(2)}, {1: mpq(3)}])
    assert s.dim == 2
    assert s.contains({0: mpq(2), 1: mpq(-1), 2: mpq(4)})
    assert not s.contains({2: mpq(1)})
    assert not s.insert({0: mpq(1), 1: mpq(1), 2: mpq(2)})
    assert s.insert({3: mpq(5)})


def test_independent_subset_filters():
    vs = [{0: mpq(1)}, {0: mpq(2)}, {1: mpq(1)}, {}, {0: mpq(1), 1: mpq(1)}]
    assert independent_subset(vs) == [{0: mpq(1)}, {1: mpq(1)}]


def test_centralizer_of_zero_is_everything():
    ga = from_kac("G2", (1, 1, 0))
    c = centralizer(ga, {})
    assert c.dim == ga.dim
    assert c.graded_dims == ga.dims()


def test_centralizer_of_nilpotent_in_a1():
    ga = from_kac("A1", (1, 0))
    e = {1: mpq(1)}
    c = centralizer(ga, e)
    assert c.dim == 1
    assert c.contains(e)


def test_centralizers_are_subalgebras():
    ga = from_kac("G2", (1, 1, 0))
    rng = random.Random(2)
    for _ in range(5):
        x = ga.random_element(rng, degree=1, bound=3)
        c = centralizer(ga, x)
        assert c.verify_closed()
        assert c.contains(x)
        assert sum(c.graded_dims) == c.dim


def test_dimension_identity_and_orbit_dims():
    # dim g_l - dim c_l must match at l and -l-1, and the degree-zero
    # orbit dimension is the complementary rank
    for name, s in (("G2", (1, 1, 0)), ("F4", (1, 0, 1, 0, 0))):
        ga = from_kac(name, s)
        rng = random.Random(7)
        for _ in range(8):
            x = ga.random_element(rng, degree=1, bound=4)
            dims = graded_centralizer_dims(ga, x)
            full = ga.dims()
            for l in range(ga.m):
                assert full[l] - dims[l] == \
                    full[(-l - 1) % ga.m] - dims[(-l - 1) % ga.m]
            assert orbit_dim_g0(ga, x) == full[0] - dims[0]


def test_kr_identity_total_orbit():
    ga = from_kac("G2", (1, 1, 0))
    rng = random.Random(13)
    for _ in range(10):
        x = ga.random_element(rng, degree=1, bound=5)
        dims = graded_centralizer_dims(ga, x)
        full = ga.dims()
        orbit_full = ga.dim - sum(dims)
        extra = sum(full[l] - dims[l] for l in range(ga.m)
                    if l not in (0, (ga.m - 1) % ga.m))
        assert orbit_full == 2 * orbit_dim_g0(ga, x) + extra


def test_kr_iii_only_zero_centralizes_everything_in_degree_zero():
    ga = from_kac("G2", (1, 1, 0))
    rng = random.Random(17)
    assert graded_centralizer_dims(ga, {})[0] == ga.dims()[0]
    for _ in range(10):
        x = ga.random_element(rng, degree=1, bound=3)
        if x:
            assert graded_centralizer_dims(ga, x)[0] < ga.dims()[0]


def test_orbit_dim_rejects_wrong_degrees():
    ga = from_kac("G2", (1, 1, 0))
    with pytest.raises(ValueError):
        orbit_dim_g0(ga, {ga.blocks[2][0]: mpq(1)})
    with pytest.raises(ValueError):
        orbit_dim_g0(ga, {ga.blocks[0][0]: mpq(1), ga.blocks[1][0]: mpq(1)})
    assert orbit_dim_g0(ga, {}) == 0


def test_center_of_semisimple_is_zero():
    ga = from_kac("A2", (1, 0, 0))
    assert center_of(ga, centralizer(ga, {})).dim == 0


def test_center_of_abelian_is_itself():
    ga = from_kac("A2", (1, 0, 0))
    cartan = [{0: mpq(1)}, {1: mpq(1)}]
    z = center_of(ga, cartan)
    assert z.dim == 2
    assert all(z.contains(h) for h in cartan)


def test_center_of_sl2_centralizer():
    # in A1 with m = 1 the centralizer of e is span{e}, already abelian
    ga = from_kac("A1", (1, 0))
    c = centralizer(ga, {1: mpq(1)})
    assert center_of(ga, c).dim == 1


def test_centralizer_in_matches_global():
    ga = from_kac("G2", (1, 1, 0))
    rng = random.Random(29)
    x = ga.random_element(rng, degree=1, bound=3)
    everything = [ga.basis_element(i) for i in range(ga.dim)]
    inside = centralizer_in(ga, everything, x)
    assert len(independent_subset(inside)) == centralizer(ga, x).dim


def test_split_graded_detects_non_graded_spans():
    ga = from_kac("G2", (1, 1, 0))
    mixed = {ga.blocks[0][0]: mpq(1), ga.blocks[1][0]: mpq(1)}
    assert split_graded(ga, [mixed]) is None
    sub = Subalgebra(ga, [mixed])
    assert sub.graded_dims is None and sub.dim == 1


def test_derived_basis_of_borel():
    # span{h, e} in sl2: derived algebra is the line through e
    ga = from_kac("A1", (1, 0))
    got = derived_basis(ga, [{0: mpq(1)}, {1: mpq(1)}])
    assert len(got) == 1 and set(got[0]) == {1}


def test_report_invariant_and_json():
    ga = from_kac("G2", (1, 1, 0))
    rng = random.Random(31)
    x = ga.random_element(rng, degree=1, bound=4)
    rep = centralizer_report(ga, x)
    assert rep.orbit_dim_g0 == ga.dims()[0] - rep.graded_dims[0]
    js = rep.to_json()
    assert js["centralizer_dim"] == rep.centralizer.dim
    assert js["center_dim"] == rep.center.dim


def test_double_centralizer_trivial_cases():
    ga = from_kac("A2", (1, 0, 0))
    rng = random.Random(37)
    x = ga.random_element(rng, degree=1, bound=3)
    rep = double_centralizer_equivalences(ga, x, x)
    assert rep.all_agree and rep.cx_inside_cy
    rep0 = double_centralizer_equivalences(ga, x, {})
    assert rep0.all_agree and rep0.y_in_center_of_cx


def test_double_centralizer_random_pairs_agree():
    ga = from_kac("A2", (1, 0, 0))
    rng = random.Random(41)
    for _ in range(20):
        x = ga.random_element(rng, bound=3)
        y = ga.random_element(rng, bound=3)
        rep = double_centralizer_equivalences(ga, x, y)
        assert rep.all_agree
