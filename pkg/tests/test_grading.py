"""Diagram gradings: periods, block dimensions, bracket compatibility."""

import random

import pytest
from gmpy2 import mpq

from gradedlie.grading import (
    GradedAlgebra,
    KacLabels,
    cartan_center_dim,
    el_add,
    el_coords,
    el_from_coords,
    el_scale,
    el_sub,
    from_kac,
    parse_grading,
)


def test_parse_and_period():
    ga = parse_grading("G2: s=[1,1,0]")
    assert ga.m == 3
    assert ga.dims() == (4, 5, 5)
    assert parse_grading("A1: s=[1,0]").m == 1
    assert parse_grading(" g2 : s=[ 1, 1, 0 ]").m == 3


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_grading("G2 s=[1,1,0]")
    with pytest.raises(ValueError):
        parse_grading("H3: s=[1]")


def test_label_validation():
    with pytest.raises(ValueError):
        KacLabels("G2", (1, 1))  # needs 3 labels
    with pytest.raises(ValueError):
        KacLabels("G2", (1, -1, 0))
    with pytest.raises(ValueError):
        KacLabels("G2", (0, 0, 0))
    with pytest.raises(NotImplementedError):
        KacLabels("E6", (1, 0, 0, 0, 0, 0, 0), twist=2)


def test_trivector_period_dimensions():
    ga = from_kac("E8", (0, 0, 1, 0, 0, 0, 0, 0, 0))
    assert ga.m == 3
    assert ga.dims() == (80, 84, 84)


def test_e6_period_four():
    ga = from_kac("E6", (0, 1, 0, 0, 1, 0, 0))
    assert ga.m == 4
    assert ga.dims()[1] == 20
    assert cartan_center_dim(ga) == 1


def test_f4_period_four():
    ga = from_kac("F4", (1, 0, 1, 0, 0))
    assert ga.m == 4
    assert ga.dims()[1] == 14


@pytest.mark.parametrize("name,s", [
    ("G2", (1, 1, 0)),
    ("G2", (0, 0, 1)),
    ("F4", (1, 0, 1, 0, 0)),
    ("A1", (1, 0)),
    ("E6", (0, 1, 0, 0, 1, 0, 0)),
])
def test_block_dimensions_are_consistent(name, s):
    ga = from_kac(name, s)
    assert sum(ga.dims()) == ga.dim
    # inner gradings pair degree l with degree -l
    for l in range(ga.m):
        assert len(ga.blocks[l]) == len(ga.blocks[(-l) % ga.m])
    assert cartan_center_dim(ga) == len(KacLabels(name, s).black_nodes) - 1


@pytest.mark.parametrize("name,s", [
    ("G2", (1, 1, 0)),
    ("F4", (0, 0, 1, 0, 0)),
    ("E6", (0, 1, 0, 0, 1, 0, 0)),
])
def test_bracket_respects_grading(name, s):
    ga = from_kac(name, s)
    rng = random.Random(101)
    for _ in range(25):
        k = rng.randrange(ga.m)
        l = rng.randrange(ga.m)
        x = ga.random_element(rng, degree=k, bound=3)
        y = ga.random_element(rng, degree=l, bound=3)
        z = ga.bracket(x, y)
        assert all(ga.degrees[i] == (k + l) % ga.m for i in z)


def test_components_partition():
    ga = from_kac("G2", (1, 1, 0))
    rng = random.Random(3)
    x = ga.random_element(rng, bound=5)
    parts = ga.components(x)
    back = {}
    for p in parts.values():
        back = el_add(back, p)
    assert back == x
    for l, p in parts.items():
        assert ga.homogeneous_component(x, l) == p
        assert ga.degree_of(p) == l


def test_degree_of_mixed_is_none():
    ga = from_kac("G2", (1, 1, 0))
    x = {ga.blocks[0][0]: mpq(1), ga.blocks[1][0]: mpq(1)}
    assert ga.degree_of(x) is None
    assert ga.degree_of({}) is None


def test_element_helpers():
    x, y = {0: mpq(1), 2: mpq(-2)}, {0: mpq(-1), 3: mpq(4)}
    assert el_add(x, y) == {2: mpq(-2), 3: mpq(4)}
    assert el_sub(x, x) == {}
    assert el_scale(0, x) == {}
    assert el_from_coords([5, 7], [mpq(0), mpq(2)]) == {7: mpq(2)}
    assert el_coords({7: mpq(2)}, [5, 7]) == [mpq(0), mpq(2)]
    with pytest.raises(KeyError):
        el_coords({9: mpq(1)}, [5, 7])


def test_ad_matrix_blocks():
    ga = from_kac("G2", (1, 1, 0))
    rng = random.Random(8)
    x = ga.random_element(rng, degree=1, bound=4)
    m = ga.ad_matrix(x, ga.blocks[0], ga.blocks[1])
    assert (m.nrows, m.ncols) == (5, 4)
    with pytest.raises(KeyError):
        ga.ad_matrix(x, ga.blocks[0], ga.blocks[2])  # wrong target block
    full = ga.ad_matrix(x, range(ga.dim))
    assert full.nrows == ga.dim and full.ncols == ga.dim
