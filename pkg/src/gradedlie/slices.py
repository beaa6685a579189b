"""Graded sl(2)-triples, Slodowy-type slices, and slice-induction reports.

Given a graded subalgebra m and a nilpotent e of degree 1, a triple
(e, h, f) with h of degree 0 and f of degree -1 reduces questions about the
degree-1 piece of m to the affine slice e + ker(ad f).  Everything here is
linear algebra over the rationals: the neutral element h is found inside
[e, m_{-1}], f is found in m_{-1}, and membership tests reduce to exact
span computations.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .exact import Matrix
from .grading import GradedAlgebra, el_add, el_scale, el_sub
from .centralizers import SparseSpan, Subalgebra, centralizer, centralizer_in
from .jordan import is_nilpotent, jordan_decompose

__all__ = [
    "NotNilpotentOrDegenerate",
    "Sl2SliceData",
    "graded_sl2_triple",
    "slice_membership",
    "u_m_membership",
    "SliceInductionReport",
    "verify_slice_induction",
]


class NotNilpotentOrDegenerate(RuntimeError):
    """No graded sl(2)-triple through the requested element exists."""


@dataclass
class Sl2SliceData:
    """A graded triple (e, h, f) in m together with the degree-1 slice.

    slice_basis spans ker(ad f) within the degree-1 part of m; the slice
    itself is the affine space e + span(slice_basis).  The trivial triple
    (e = h = f = 0) carries the whole degree-1 part as its slice.
    """

    subalgebra: Subalgebra
    e: dict
    h: dict
    f: dict
    slice_basis: list

    @property
    def slice_dim(self) -> int:
        return len(self.slice_basis)


def _combination_solve(columns, rhs):
    """Coefficients c with sum c_i * columns[i] = rhs, or None."""
    support = set(rhs)
    for col in columns:
        support.update(col)
    support = sorted(support)
    rows = [[col.get(b, mpq(0)) for col in columns] for b in support]
    return Matrix(rows, ncols=len(columns)).solve(
        [rhs.get(b, mpq(0)) for b in support])


def _combine(coeffs, basis) -> dict:
    out: dict = {}
    for c, b in zip(coeffs, basis):
        if c:
            out = el_add(out, el_scale(c, b))
    return out


def graded_sl2_triple(m: Subalgebra, e: dict) -> Sl2SliceData:
    """Complete a nilpotent degree-1 element of m to a graded sl(2)-triple.

    h is solved for inside [e, m_{-1}] (so a neutral element is guaranteed
    to lie in the image of ad e), then f inside m_{-1} subject to [e,f] = h
    and [h,f] = -2f.  Ties are broken by basis order, which is fine: every
    valid triple produces a slice of the same dimension.
    """
    ga = m.ambient
    d1 = 1 % ga.m
    m1 = m.graded_part(d1)
    if not e:
        return Sl2SliceData(m, {}, {}, {}, list(m1))
    if ga.degree_of(e) != d1 or not m.contains(e):
        raise ValueError("element must lie in the degree-1 part of m")
    if not is_nilpotent(ga, e):
        raise NotNilpotentOrDegenerate("element is not nilpotent")

    bm1 = m.graded_part(-1)
    half = _combination_solve([ga.bracket(ga.bracket(e, b), e) for b in bm1],
                              el_scale(mpq(2), e))
    if half is None:
        raise NotNilpotentOrDegenerate(
            "no neutral element for e inside [e, m_{-1}]")
    h = ga.bracket(e, _combine(half, bm1))

    cols = []
    for b in bm1:
        lower = ga.bracket(e, b)
        eigen = el_add(ga.bracket(h, b), el_scale(mpq(2), b))
        cols.append({("h", k): v for k, v in lower.items()}
                    | {("f", k): v for k, v in eigen.items()})
    target = {("h", k): v for k, v in h.items()}
    sol = _combination_solve(cols, target)
    if sol is None:
        raise NotNilpotentOrDegenerate("no lowering element completes (e, h)")
    f = _combine(sol, bm1)

    slice_basis = centralizer_in(ga, m1, f)
    return Sl2SliceData(m, dict(e), h, f, slice_basis)


def slice_membership(s: Sl2SliceData, x: dict) -> bool:
    """Whether x lies on the affine slice e + span(slice_basis)."""
    return SparseSpan(s.slice_basis).contains(el_sub(x, s.e))


def u_m_membership(ga: GradedAlgebra, m: Subalgebra, z: dict) -> bool:
    """Whether the full centralizer of the semisimple part of z lies in m.

    This is the membership test for the set of degree-1 elements of m whose
    geometry is entirely visible inside m; it only depends on z through its
    semisimple part, which is what makes the reduction saturated.
    """
    zs = jordan_decompose(ga, z).semisimple
    return all(m.contains(v) for v in centralizer(ga, zs).basis)


@dataclass
class SliceInductionReport:
    """Outcome of a witness-based degeneration check between two classes.

    A False `witnessed` only means the supplied representatives failed to
    exhibit the degeneration; it never decides that the closure relation is
    false.  `note` spells that out when applicable.
    """

    witnessed: bool
    containment: bool
    slice_member: bool
    dim_condition: bool
    dims: dict
    note: str | None = None

    def to_json(self) -> dict:
        out = {
            "witnessed": self.witnessed,
            "containment": self.containment,
            "slice_member": self.slice_member,
            "dim_condition": self.dim_condition,
            "dims": self.dims,
        }
        if self.note:
            out["note"] = self.note
        return out


def _span_dim(vectors) -> int:
    return SparseSpan(vectors).dim


def verify_slice_induction(ga: GradedAlgebra, x: dict, y: dict) -> SliceInductionReport:
    """Check whether (x, y) witnesses that y's class degenerates from x's.

    Takes m to be the centralizer of the semisimple part of y, then tests
    (a) that the centralizer of the semisimple part of x fits inside m and
    (b) that x lies on the slice through the nilpotent part of y.  Both
    passing certifies that the class of y lies in the closure of the class
    of x.  The orbit-dimension equality dim [m_0, x] = dim [m_0, y_n] is
    reported separately; it is the extra condition singling out the
    degenerations that preserve regularity, not part of the witness itself.
    """
    d1 = 1 % ga.m
    for v in (x, y):
        if v and ga.degree_of(v) != d1:
            raise ValueError("representatives must be homogeneous of degree 1")
    py = jordan_decompose(ga, y)
    m = centralizer(ga, py.semisimple)
    px = jordan_decompose(ga, x)
    containment = all(m.contains(v) for v in centralizer(ga, px.semisimple).basis)

    triple = graded_sl2_triple(m, py.nilpotent)
    member = slice_membership(triple, x)

    m0 = m.graded_part(0)
    orbit_x = _span_dim([ga.bracket(b, x) for b in m0])
    orbit_yn = _span_dim([ga.bracket(b, py.nilpotent) for b in m0])

    witnessed = containment and member
    return SliceInductionReport(
        witnessed=witnessed,
        containment=containment,
        slice_member=member,
        dim_condition=(orbit_x == orbit_yn),
        dims={
            "subalgebra": list(m.graded_dims or []),
            "slice": triple.slice_dim,
            "orbit_x": orbit_x,
            "orbit_y_nilpotent": orbit_yn,
        },
        note=None if witnessed else (
            "witness failed; the closure relation itself is undecided"),
    )
