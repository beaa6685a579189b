"""Mode systems over a homogeneous Cartan subalgebra.

Suppose a parabolic subalgebra has a homogeneous Levi factor.  Its grading
element Z then lies in an adapted Cartan subalgebra h and splits into
homogeneous pieces Z_l, and each root alpha acquires a vector of modes
lambda_l = alpha_l(Z_l).  Shifting by the grading automorphism shows the
modes solve a Vandermonde system M(w) lambda = n over the m-th cyclotomic
field, where n_l is the integer eigenvalue of Z twisted l times.  Summing
the rows of that system gives m*lambda_0 = sum(n), so lambda_0 is always
an m-th of an integer; when the Cartan has no degree-zero part, lambda_0
must vanish, which rules out any stable parabolic above the Levi.

The degree-zero obstruction and the linear algebra are implemented here;
producing concrete mode vectors from a root system over a non-split
Cartan would need algebraic extensions and stays out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from gmpy2 import mpq

from .centralizers import Subalgebra
from .exact import CyclotomicField, Matrix


def mode_matrix(m: int, inverse: bool = False) -> Matrix:
    """The symmetric Vandermonde matrix with entries w^(kl), w = omega_m.

    With inverse=True the root of unity is replaced by its reciprocal;
    the two matrices multiply to m times the identity.
    """
    w = CyclotomicField(m).omega()
    if inverse:
        w = w.inverse()
    pw = [w ** 0]
    for _ in range(1, m):
        pw.append(pw[-1] * w)
    return Matrix([[pw[k * l % m] for l in range(m)] for k in range(m)])


@dataclass(frozen=True)
class ModeInstance:
    """A solved mode system: integer right-hand side and cyclotomic modes.

    n lists the eigenvalues of the twisted grading element, modes the
    cyclotomic solution of the Vandermonde system, both indexed by the
    degree l = 0..m-1.
    """

    m: int
    n: tuple
    modes: tuple

    def residual(self) -> list:
        """M(w)*modes - n, entry by entry; all zero for a solved system."""
        mat = mode_matrix(self.m)
        out = []
        for k in range(self.m):
            acc = sum((a * b for a, b in zip(mat.rows[k], self.modes)),
                      start=mat.field(0))
            out.append(acc - int(self.n[k]))
        return out

    @property
    def integrality_holds(self) -> bool:
        """Whether m times the zeroth mode equals the sum of the n_l."""
        lam0 = self.modes[0] * self.m
        return lam0 == lam0.field(sum(self.n))

    def lambda0(self) -> mpq:
        """The zeroth mode as a rational; its denominator divides m."""
        return self.modes[0].rational_part()

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": [int(v) for v in self.n],
            "lambda": [repr(lam) for lam in self.modes],
            "identity_holds": self.integrality_holds,
        }


def solve_modes(n, m: int | None = None) -> ModeInstance:
    """Solve the mode system for an integer vector n of length m.

    The inverse Vandermonde identity gives the solution directly as
    modes = (1/m) M(w^-1) n; the residual is re-checked exactly before
    returning.
    """
    n = tuple(int(v) for v in n)
    m = len(n) if m is None else m
    if len(n) != m:
        raise ValueError(f"expected {m} eigenvalues, got {len(n)}")
    if m < 1:
        raise ValueError("the period must be a positive integer")
    inv = mode_matrix(m, inverse=True)
    scale = mpq(1, m)
    modes = tuple(
        sum((e * v for e, v in zip(row, n)), start=inv.field(0)) * scale
        for row in inv.rows)
    inst = ModeInstance(m, n, modes)
    assert not any(inst.residual()), "mode solution failed its residual check"
    return inst


class ParabolicVerdict(Enum):
    """Outcome of the degree-zero obstruction test."""

    OBSTRUCTED = "obstructed"
    INCONCLUSIVE = "inconclusive"


def check_obstruction(h_graded_dims) -> ParabolicVerdict:
    """Decide the parabolic obstruction from the Cartan's graded dimensions.

    A grading element is a degree-zero member of the adapted Cartan, so a
    zero-dimensional degree-zero part forces lambda_0 = 0 for every root
    and no parabolic with the prescribed homogeneous Levi survives the
    grading automorphism.  Nonzero degree-zero part decides nothing.
    """
    dims = tuple(int(d) for d in h_graded_dims)
    if dims and dims[0] == 0:
        return ParabolicVerdict.OBSTRUCTED
    return ParabolicVerdict.INCONCLUSIVE


def adapted_cartan_from_c(ga, c_data) -> Subalgebra | None:
    """The adapted Cartan subalgebra through a verified Cartan subspace.

    When the centralizer of the subspace is abelian it is itself the
    adapted Cartan (it is homogeneous, self-centralizing and contains the
    subspace in degree one) and is returned with its graded dimensions.
    The general construction inside a non-abelian centralizer needs a
    homogeneous Cartan of a reductive subalgebra and is not attempted:
    the return is None and the caller must work by other means.
    """
    basis = c_data.centralizer_basis
    for i, x in enumerate(basis):
        for y in basis[i + 1:]:
            if ga.bracket(x, y):
                return None
    return Subalgebra(ga, basis)


def theta_stability_test(orbit_data) -> bool:
    """Whether a candidate parabolic built from mode data is shift-stable.

    Each entry of orbit_data lists, for one root, the integer eigenvalues
    n_l of the l-times-twisted grading element; the translate of a root
    under the grading automorphism carries the cyclic shift of its vector.
    The candidate parabolic keeps the roots with n_0 >= 0, so it is stable
    exactly when n_0 >= 0 implies n_1 >= 0 on every supplied root.  For a
    family closed under cyclic shifts this single-step test is equivalent
    to full stability.
    """
    vectors = [tuple(int(v) for v in row) for row in orbit_data]
    if len({len(v) for v in vectors}) > 1:
        lengths = sorted({len(v) for v in vectors})
        raise ValueError(f"mode vectors of mixed lengths {lengths}")
    return all(v[1 % len(v)] >= 0 for v in vectors if v[0] >= 0)
