"""Mode systems, the integrality identity and the parabolic obstruction.

solve_modes is pinned two ways: the Vandermonde inverse identity is checked
as a matrix equation for every period up to 24, and solved instances are
re-expanded through the forward matrix entry by entry.  The integrality of
m*lambda_0 must come out exactly, not as a float artifact, so everything
runs in cyclotomic arithmetic.
"""

import random

import pytest
from gmpy2 import mpq

from gradedlie.grading import from_kac
from gradedlie.jordan import cartan_subspace, verify_cartan_subspace
from gradedlie.modes import (
    ParabolicVerdict,
    adapted_cartan_from_c,
    check_obstruction,
    mode_matrix,
    solve_modes,
    theta_stability_test,
)
from gradedlie.trivector import build_e8_model, cartan_subspace_basis


@pytest.mark.parametrize("m", list(range(1, 25)))
def test_vandermonde_inverse_identity(m):
    prod = mode_matrix(m) @ mode_matrix(m, inverse=True)
    one = prod.field(1)
    for k in range(m):
        for l in range(m):
            assert prod.rows[k][l] == (m * one if k == l else 0 * one)


def test_constant_vector_solves_to_a_delta():
    inst = solve_modes([1, 1, 1, 1, 1])
    assert inst.modes[0] == inst.modes[0].field(1)
    assert not any(inst.modes[1:])
    assert inst.integrality_holds
    assert inst.lambda0() == 1


def test_delta_vector_solves_to_a_constant():
    inst = solve_modes([4, 0, 0, 0])
    one = inst.modes[0].field(1)
    assert all(lam == one for lam in inst.modes)
    assert inst.integrality_holds


def test_random_systems_satisfy_the_integrality_identity():
    rng = random.Random(15)
    for _ in range(20):
        n = [rng.randint(-9, 9) for _ in range(6)]
        inst = solve_modes(n)
        assert not any(inst.residual())
        assert inst.integrality_holds
        lam0 = inst.lambda0()
        assert lam0 == mpq(sum(n), 6)
        assert (6 * lam0).denominator == 1


def test_solve_modes_rejects_a_length_mismatch():
    with pytest.raises(ValueError, match="expected 3"):
        solve_modes([1, 2], m=3)
    with pytest.raises(ValueError, match="positive"):
        solve_modes([])


def test_mode_instance_json_shape():
    data = solve_modes([3, 0, 0]).to_json()
    assert data["m"] == 3
    assert data["n"] == [3, 0, 0]
    assert data["identity_holds"] is True
    assert len(data["lambda"]) == 3
    assert all(isinstance(s, str) for s in data["lambda"])


def test_check_obstruction_reads_the_degree_zero_dimension():
    assert check_obstruction((0, 4, 4)) is ParabolicVerdict.OBSTRUCTED
    assert check_obstruction((8, 0, 0)) is ParabolicVerdict.INCONCLUSIVE
    assert check_obstruction((2, 3, 3)) is ParabolicVerdict.INCONCLUSIVE


def test_theta_stability_single_step():
    assert theta_stability_test([(2, 2, 2), (-1, -1, -1)]) is True
    assert theta_stability_test([(1, -1, 0)]) is False
    # a shift-closed family with nonnegative entries
    assert theta_stability_test([(1, 0, 2), (0, 2, 1), (2, 1, 0)]) is True
    # negative zeroth entries put the root outside the candidate set
    assert theta_stability_test([(-2, -5, 1)]) is True
    assert theta_stability_test([]) is True
    with pytest.raises(ValueError, match="mixed lengths"):
        theta_stability_test([(1, 2), (1, 2, 3)])


def test_adapted_cartan_for_the_trivector_model():
    ga = build_e8_model()
    data = verify_cartan_subspace(ga, cartan_subspace_basis(),
                                  random.Random(16))
    h = adapted_cartan_from_c(ga, data)
    assert h is not None
    assert h.dim == 8
    assert h.graded_dims == (0, 4, 4)
    assert check_obstruction(h.graded_dims) is ParabolicVerdict.OBSTRUCTED
    # self-normalizing in degree one: the subspace sits inside
    assert all(h.contains(v) for v in data.basis)


def test_adapted_cartan_in_a_trivial_grading():
    ga = from_kac("A1", (1, 0))
    assert ga.m == 1
    data = cartan_subspace(ga, random.Random(17))
    h = adapted_cartan_from_c(ga, data)
    assert h is not None and h.dim == 1


def test_adapted_cartan_absent_when_the_centralizer_is_not_abelian():
    # all of degree one is nilpotent here, so the subspace is zero and its
    # centralizer is the whole algebra
    ga = from_kac("A1", (1, 3))
    assert ga.dims() == (1, 1, 0, 1)
    data = cartan_subspace(ga, random.Random(18))
    assert data.basis == []
    assert adapted_cartan_from_c(ga, data) is None
