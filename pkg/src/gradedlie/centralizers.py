"""Centralizers, centers, orbit tangent spaces, double-centralizer tests.

Subspaces of the ambient algebra are plain basis lists of sparse
elements.  Membership goes through an incremental sparse echelon, kernels
through the exact Matrix machinery, blockwise whenever the element is
homogeneous.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from gmpy2 import mpq

from .exact import Cyclotomic, Matrix
from .grading import GradedAlgebra, el_add, el_scale


class SparseSpan:
    """Incremental echelon over sparse dict vectors; pivot = least index."""

    def __init__(self, vectors=()):
        self.rows = {}  # pivot index -> reduced row with that pivot scaled to 1
        for v in vectors:
            self.insert(v)

    def reduce(self, v: dict) -> dict:
        v = dict(v)
        while v:
            p = min(v)
            row = self.rows.get(p)
            if row is None:
                return v
            c = v[p]
            for k, w in row.items():
                u = v.get(k, 0) - c * w
                if u:
                    v[k] = u
                elif k in v:
                    del v[k]
        return v

    def insert(self, v: dict) -> bool:
        """Reduce and keep v; returns True when v enlarged the span."""
        v = self.reduce(v)
        if not v:
            return False
        p = min(v)
        c = v[p]
        inv = c.inverse() if isinstance(c, Cyclotomic) else 1 / c
        self.rows[p] = {k: w * inv for k, w in v.items()}
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    @property
    def dim(self) -> int:
        return len(self.rows)


def independent_subset(vectors):
    """The input vectors that enlarge the span, in input order."""
    span = SparseSpan()
    return [v for v in vectors if v and span.insert(dict(v))]


def subspace_leq(small, big) -> bool:
    span = SparseSpan(big)
    return all(span.contains(v) for v in small)


def split_graded(ga: GradedAlgebra, vectors):
    """Homogeneous basis of span(vectors), or None when the span is not graded."""
    vecs = independent_subset(vectors)
    comps = []
    for v in vecs:
        comps.extend(ga.components(v).values())
    comps.sort(key=lambda c: (ga.degrees[min(c)], sorted(c)))
    homog = independent_subset(comps)
    if len(homog) != len(vecs):
        return None
    homog.sort(key=lambda c: (ga.degrees[min(c)], min(c)))
    return homog


class Subalgebra:
    """A subspace of a graded algebra given by a basis of sparse elements.

    When the span is graded the basis is replaced by a homogeneous one and
    graded_dims records the per-degree dimensions; otherwise graded_dims
    is None.  Closure under the bracket is not assumed; verify_closed
    checks it on basis pairs.
    """

    def __init__(self, ga: GradedAlgebra, vectors):
        self.ambient = ga
        homog = split_graded(ga, vectors)
        if homog is None:
            self.basis = independent_subset(vectors)
            self.graded_dims = None
        else:
            self.basis = homog
            dims = [0] * ga.m
            for v in self.basis:
                dims[ga.degrees[min(v)]] += 1
            self.graded_dims = tuple(dims)
        self._span = SparseSpan(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, x: dict) -> bool:
        return self._span.contains(x)

    def graded_part(self, l: int):
        assert self.graded_dims is not None
        l %= self.ambient.m
        return [v for v in self.basis if self.ambient.degrees[min(v)] == l]

    def verify_closed(self) -> bool:
        for i, a in enumerate(self.basis):
            for b in self.basis[i + 1:]:
                if not self.contains(self.ambient.bracket(a, b)):
                    return False
        return True

    def __repr__(self):
        return f"Subalgebra(dim={self.dim}, graded_dims={self.graded_dims})"


# ---------------------------------------------------------------------------
# centralizers
# ---------------------------------------------------------------------------

def _kernel_elements(ga, domain_basis, matrix_columns_of):
    """Kernel of a linear map given by its value on each domain basis element.

    domain_basis: list of sparse elements spanning the domain.
    matrix_columns_of: function element -> sparse value in the ambient algebra.
    Returns kernel vectors as elements (combinations of the domain basis).
    """
    cols = [matrix_columns_of(b) for b in domain_basis]
    support = sorted(set().union(*[set(c) for c in cols])) if cols else []
    rows = [[c.get(i, mpq(0)) for c in cols] for i in support]
    mat = Matrix(rows) if support else Matrix.zeros(1, len(cols))
    out = []
    for coeffs in mat.kernel_basis():
        v = {}
        for c, b in zip(coeffs, domain_basis):
            if c:
                v = el_add(v, el_scale(c, b))
        out.append(v)
    return out


def centralizer_in(ga: GradedAlgebra, domain_basis, x: dict):
    """Basis of {z in span(domain_basis) : [z, x] = 0}."""
    return _kernel_elements(ga, list(domain_basis), lambda b: ga.bracket(b, x))


def centralizer(ga: GradedAlgebra, x: dict) -> Subalgebra:
    """The kernel of ad x, blockwise when x is homogeneous."""
    d = ga.degree_of(x)
    if x and d is not None:
        vecs = []
        for l in range(ga.m):
            src = ga.blocks[l]
            if not src:
                continue
            mat = ga.ad_matrix(x, src, ga.blocks[(l + d) % ga.m])
            for coeffs in mat.kernel_basis():
                vecs.append({b: c for b, c in zip(src, coeffs) if c})
        return Subalgebra(ga, vecs)
    basis = [ga.basis_element(i) for i in range(ga.dim)]
    return Subalgebra(ga, centralizer_in(ga, basis, x))


def center_of(ga: GradedAlgebra, sub) -> Subalgebra:
    """The center of a subalgebra: everything in it killing all its basis."""
    gens = sub.basis if isinstance(sub, Subalgebra) else list(sub)
    current = list(gens)
    for s in gens:
        if not current:
            break
        current = centralizer_in(ga, current, s)
    return Subalgebra(ga, current)


def derived_basis(ga: GradedAlgebra, basis):
    """Basis of [S, S] for S = span(basis)."""
    span = SparseSpan()
    out = []
    for i, a in enumerate(basis):
        for b in basis[i + 1:]:
            w = ga.bracket(a, b)
            if w and span.insert(dict(w)):
                out.append(w)
    return out


def graded_centralizer_dims(ga: GradedAlgebra, x: dict):
    """(dim of the degree-l part of the centralizer)_l; needs a graded kernel."""
    c = centralizer(ga, x)
    assert c.graded_dims is not None, "centralizer is not graded"
    return c.graded_dims


def orbit_dim_g0(ga: GradedAlgebra, x: dict) -> int:
    """dim [g_0, x], the tangent dimension of the degree-zero orbit."""
    if not x:
        return 0
    if ga.degree_of(x) != 1 % ga.m:
        raise ValueError("element must be homogeneous of degree 1")
    return ga.ad_matrix(x, ga.blocks[0], ga.blocks[1 % ga.m]).rank()


@dataclass
class CentralizerReport:
    x: dict
    centralizer: Subalgebra
    center: Subalgebra
    graded_dims: tuple
    orbit_dim_g0: int | None

    def to_json(self, with_bases: bool = False) -> dict:
        out = {
            "centralizer_dim": self.centralizer.dim,
            "centralizer_graded_dims": list(self.graded_dims)
            if self.graded_dims else None,
            "center_dim": self.center.dim,
            "center_graded_dims": list(self.center.graded_dims)
            if self.center.graded_dims else None,
            "orbit_dim_g0": self.orbit_dim_g0,
        }
        if with_bases:
            out["centralizer_basis"] = [sorted(v) for v in self.centralizer.basis]
        return out


def centralizer_report(ga: GradedAlgebra, x: dict) -> CentralizerReport:
    c = centralizer(ga, x)
    z = center_of(ga, c)
    odim = None
    if not x or ga.degree_of(x) == 1 % ga.m:
        odim = orbit_dim_g0(ga, x)
    return CentralizerReport(x, c, z, c.graded_dims, odim)


# ---------------------------------------------------------------------------
# the double-centralizer equivalence
# ---------------------------------------------------------------------------

@dataclass
class DoubleCentralizerReport:
    y_in_center_of_cx: bool
    cx_inside_cy: bool
    image_y_inside_image_x: bool
    center_cy_inside_center_cx: bool

    @property
    def all_agree(self) -> bool:
        vals = (self.y_in_center_of_cx, self.cx_inside_cy,
                self.image_y_inside_image_x, self.center_cy_inside_center_cx)
        return len(set(vals)) == 1


def double_centralizer_equivalences(ga: GradedAlgebra, x: dict, y: dict):
    """Evaluates the four equivalent containments independently."""
    cx = centralizer(ga, x)
    cy = centralizer(ga, y)
    zx = center_of(ga, cx)
    zy = center_of(ga, cy)
    cond_i = zx.contains(y)
    cond_ii = all(not ga.bracket(b, y) for b in cx.basis)
    # image containment via ranks of stacked column sets
    everything = range(ga.dim)
    adx = ga.ad_matrix(x, everything)
    ady = ga.ad_matrix(y, everything)
    both = Matrix([rx + ry for rx, ry in zip(adx.rows, ady.rows)])
    cond_iii = adx.rank() == both.rank()
    cond_iv = subspace_leq(zy.basis, zx.basis)
    return DoubleCentralizerReport(cond_i, cond_ii, cond_iii, cond_iv)
