"""Jordan decompositions, Cartan subspaces and ranks of graded algebras.

Everything runs in exact rational arithmetic.  The decomposition of a
homogeneous element is organised blockwise: ad(x) shifts degrees by deg(x),
so a suitable power of it preserves each graded piece and all polynomial
data can be read off small per-block matrices instead of the full adjoint
matrix.  The semisimple part is then recovered inside the algebra, not just
as a matrix, by solving a linear system over the center of the centralizer.

A cyclic-symmetry fact keeps this efficient: conjugating ad(x) by the
grading automorphism scales it by a root of unity, and the uniqueness of
the semisimple part forces the interpolating polynomial to be supported on
exponents that are 1 modulo m/gcd(deg x, m).  The construction below checks
that support instead of assuming it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import reduce
from math import gcd, isqrt
from weakref import WeakKeyDictionary

from .exact import (
    Matrix,
    as_mpq,
    minimal_polynomial,
    poly_lcm,
    poly_monic,
    semisimple_projection_inflated,
    semisimple_projection_poly,
    squarefree_part,
)
from .grading import GradedAlgebra, el_add, el_scale, el_sub
from .centralizers import (
    SparseSpan,
    Subalgebra,
    center_of,
    centralizer,
    centralizer_in,
    derived_basis,
    graded_centralizer_dims,
    orbit_dim_g0,
)

__all__ = [
    "UnluckySampling",
    "JordanPair",
    "jordan_decompose",
    "verify_jordan_pair",
    "is_semisimple",
    "is_nilpotent",
    "CartanSubspaceData",
    "verify_cartan_subspace",
    "cartan_subspace",
    "rank_of_grading",
    "nilcone_dim",
    "RegularityEntry",
    "classify_regularity",
    "JordanClassData",
    "jordan_class_data",
    "jordan_equiv_witness",
]


class UnluckySampling(RuntimeError):
    """Random sampling failed to produce a verifiable answer.

    Retrying with a different seed or a larger coefficient bound is the
    intended response; the verification itself is deterministic.
    """


# ---------------------------------------------------------------------------
# annihilating polynomials, blockwise


def _ad_block(ga: GradedAlgebra, x: dict, l: int, d: int) -> Matrix:
    return ga.ad_matrix(x, ga.blocks[l], ga.blocks[(l + d) % ga.m])


def _block_data(ga: GradedAlgebra, x: dict, d: int):
    """Per-block data for ad(x), x homogeneous of degree d.

    Returns (q, k, ablocks, bblocks, ker_a, ker_b) where k = m/gcd(d, m),
    bblocks[l] is the restriction of ad(x)^k to the degree-l piece, q is the
    minimal polynomial of ad(x)^k (the lcm over blocks), and ker_a/ker_b are
    the kernel dimensions of ad(x) and ad(x)^k.
    """
    m = ga.m
    k = m // gcd(d % m, m)
    ablocks = {l: _ad_block(ga, x, l, d) for l in range(m)}
    bblocks = {}
    ker_a = sum(a.ncols - a.rank() for a in ablocks.values())
    for l in range(m):
        if not ga.blocks[l]:
            continue
        cur = None
        for step in range(k):
            a = ablocks[(l + step * d) % m]
            cur = a if cur is None else a @ cur
        bblocks[l] = cur
    q = reduce(poly_lcm, (minimal_polynomial(b) for b in bblocks.values()))
    ker_b = sum(b.ncols - b.rank() for b in bblocks.values())
    return q, k, ablocks, bblocks, ker_a, ker_b


def _is_power_of_t(q) -> bool:
    return all(not c for c in q[:-1])


def _poly_chunk_matrix(chunk, powers, n: int) -> Matrix:
    """sum chunk[i] * powers[i] without forming intermediate matrices."""
    rows = [[as_mpq(0)] * n for _ in range(n)]
    for i, c in enumerate(chunk):
        if not c:
            continue
        if i == 0:
            for r in range(n):
                rows[r][r] = rows[r][r] + c
            continue
        prows = powers[i].rows
        for r in range(n):
            out, pr = rows[r], prows[r]
            for j in range(n):
                v = pr[j]
                if v:
                    out[j] = out[j] + c * v
    return Matrix(rows, ncols=n)


def _mat_poly(p, b: Matrix) -> Matrix:
    """p(b) with about 2*sqrt(deg p) matrix products (Paterson-Stockmeyer).

    Dense products dominate the cost of locating semisimple parts, so the
    polynomial is split into sqrt-sized chunks evaluated against a table
    of small powers, with an outer Horner loop in b**s.
    """
    n = b.nrows
    d = len(p) - 1
    if d < 0:
        return Matrix.zeros(n, n)
    if d <= 3:
        acc = Matrix.zeros(n, n)
        for c in reversed(p):
            acc = acc @ b
            if c:
                acc = acc + _poly_chunk_matrix([c], (), n)
        return acc
    s = isqrt(d) + 1
    powers = [Matrix.identity(n), b]
    while len(powers) < s:
        powers.append(powers[-1] @ b)
    bs = powers[-1] @ b
    acc = None
    for j in reversed(range((d + s) // s)):
        cmat = _poly_chunk_matrix(p[j * s:(j + 1) * s], powers, n)
        acc = cmat if acc is None else acc @ bs + cmat
    return acc


def _vec_poly(p, a: Matrix, v):
    """p(a) applied to the vector v, again by Horner."""
    acc = [as_mpq(0)] * len(v)
    for c in reversed(p):
        acc = a.matvec(acc)
        if c:
            acc = [u + c * w for u, w in zip(acc, v)]
    return acc


def is_semisimple(ga: GradedAlgebra, x: dict) -> bool:
    """Whether ad(x) is diagonalizable, certified by exact polynomial data.

    For homogeneous x the criterion is blockwise: ad(x)^k must have a
    squarefree minimal polynomial and the same kernel as ad(x).  (Away from
    the eigenvalue zero, taking k-th powers cannot merge eigenvalues, so no
    information is lost in passing to the block-diagonal power.)
    """
    if not x:
        return True
    d = ga.degree_of(x)
    if d is None:
        mu = minimal_polynomial(ga.ad_matrix(x, range(ga.dim)))
        return squarefree_part(mu) == poly_monic(mu)
    q, _, _, _, ker_a, ker_b = _block_data(ga, x, d)
    return squarefree_part(q) == poly_monic(q) and ker_a == ker_b


def is_nilpotent(ga: GradedAlgebra, x: dict) -> bool:
    """Whether ad(x) is nilpotent (for x in a semisimple algebra: x lies in
    the nilpotent cone)."""
    if not x:
        return True
    d = ga.degree_of(x)
    if d is None:
        mu = minimal_polynomial(ga.ad_matrix(x, range(ga.dim)))
        return _is_power_of_t(mu)
    q = _block_data(ga, x, d)[0]
    return _is_power_of_t(q)


# ---------------------------------------------------------------------------
# Jordan decomposition


@dataclass(frozen=True)
class JordanPair:
    """The commuting pair x = semisimple + nilpotent."""

    semisimple: dict
    nilpotent: dict

    def total(self) -> dict:
        return el_add(self.semisimple, self.nilpotent)


def _recover_in_algebra(ga, candidates, constraints):
    """Solve sum_i c_i ad(z_i) = S over span(candidates).

    `constraints` is a list of (z -> matrix of ad(z) on a block, target
    matrix) pairs; the flattened system stacks every entry of every block.
    Returns the combination, or None if the system is inconsistent.
    """
    rows, rhs = [], []
    for to_matrix, target in constraints:
        mats = [to_matrix(z) for z in candidates]
        for r in range(target.nrows):
            for c in range(target.ncols):
                row = [mt.rows[r][c] for mt in mats]
                t = target.rows[r][c]
                if t or any(row):
                    rows.append(row)
                    rhs.append(t)
    if not rows:
        return {}
    sol = Matrix(rows, ncols=len(candidates)).solve(rhs)
    if sol is None:
        return None
    y: dict = {}
    for c, z in zip(sol, candidates):
        if c:
            y = el_add(y, el_scale(c, z))
    return y


def _center_basis(ga: GradedAlgebra, x: dict):
    return center_of(ga, centralizer(ga, x)).basis


_decompose_memo: "WeakKeyDictionary[GradedAlgebra, dict]" = WeakKeyDictionary()


def jordan_decompose(ga: GradedAlgebra, x: dict) -> JordanPair:
    """Split x into commuting semisimple and nilpotent parts, exactly.

    The interpolating polynomial comes from a Newton iteration against the
    squarefree part of an annihilator of ad(x); the semisimple part is then
    located inside the algebra (it always lies in the center of the
    centralizer of x) by solving a small linear system.  Both certificates
    are polynomial identities, so the result is exact, not numerical.

    Decomposition is pure and slice verification asks for the same base
    point repeatedly, so results are kept in a small per-algebra memo;
    callers receive fresh element dicts either way.
    """
    if not x:
        return JordanPair({}, {})
    key = tuple(sorted(x.items()))
    cache = _decompose_memo.setdefault(ga, {})
    pair = cache.get(key)
    if pair is None:
        pair = _decompose_homogeneous(ga, x)
        if len(cache) >= 64:
            cache.clear()
        cache[key] = pair
    return JordanPair(dict(pair.semisimple), dict(pair.nilpotent))


def _decompose_homogeneous(ga: GradedAlgebra, x: dict) -> JordanPair:
    d = ga.degree_of(x)
    if d is None:
        return _decompose_full(ga, x)

    q, k, ablocks, bblocks, ker_a, ker_b = _block_data(ga, x, d)
    if squarefree_part(q) == poly_monic(q) and ker_a == ker_b:
        return JordanPair(dict(x), {})
    if _is_power_of_t(q):
        return JordanPair({}, dict(x))

    sblocks = {}
    if k == 1:
        # ad(x) preserves every block; evaluate the projection directly.
        p = semisimple_projection_poly(q)
        for l, b in bblocks.items():
            sblocks[l] = _mat_poly(p, b)
    else:
        # p(t) = t * inner(t^k), with inner found modulo q alone
        inner = semisimple_projection_inflated(q, k)
        for l, b in bblocks.items():
            sblocks[l] = ablocks[l] @ _mat_poly(inner, b)

    zx = Subalgebra(ga, _center_basis(ga, x)).graded_part(d)
    constraints = [(lambda z, l=l: _ad_block(ga, z, l, d), s)
                   for l, s in sblocks.items()]
    y = _recover_in_algebra(ga, zx, constraints)
    if y is None:
        raise RuntimeError(
            "semisimple part escaped the center of the centralizer; "
            "this indicates a bug, not bad luck")
    return JordanPair(y, el_sub(x, y))


def _decompose_full(ga: GradedAlgebra, x: dict) -> JordanPair:
    """Fallback for non-homogeneous x: one dense adjoint matrix."""
    a = ga.ad_matrix(x, range(ga.dim))
    mu = minimal_polynomial(a)
    if squarefree_part(mu) == poly_monic(mu):
        return JordanPair(dict(x), {})
    if _is_power_of_t(mu):
        return JordanPair({}, dict(x))
    p = semisimple_projection_poly(mu)
    cols = []
    for j in range(ga.dim):
        e = [as_mpq(0)] * ga.dim
        e[j] = as_mpq(1)
        cols.append(_vec_poly(p, a, e))
    s = Matrix(list(zip(*cols)), ncols=ga.dim)
    zx = _center_basis(ga, x)
    y = _recover_in_algebra(
        ga, zx, [(lambda z: ga.ad_matrix(z, range(ga.dim)), s)])
    if y is None:
        raise RuntimeError(
            "semisimple part escaped the center of the centralizer; "
            "this indicates a bug, not bad luck")
    return JordanPair(y, el_sub(x, y))


def verify_jordan_pair(ga: GradedAlgebra, x: dict, pair: JordanPair) -> bool:
    """Re-check a decomposition from scratch: sum, commutation, both types."""
    if el_sub(pair.total(), x):
        return False
    if ga.bracket(pair.semisimple, pair.nilpotent):
        return False
    return is_semisimple(ga, pair.semisimple) and is_nilpotent(ga, pair.nilpotent)


# ---------------------------------------------------------------------------
# Cartan subspaces and the rank


@dataclass
class CartanSubspaceData:
    """A verified Cartan subspace of the degree-1 piece.

    `basis` spans the subspace; `centralizer_basis` spans its centralizer in
    the whole algebra.  `checks` records the four deterministic
    verifications; `sample_orbit_dim` is the largest dim [g_0, x] seen while
    sampling (None when the basis was supplied rather than sampled).
    """

    basis: list
    centralizer_basis: list
    checks: dict = field(default_factory=dict)
    sample_orbit_dim: int | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def all_checks_pass(self) -> bool:
        return all(self.checks.values())


def _graded_basis(ga, vectors):
    sub = Subalgebra(ga, vectors)
    if sub.graded_dims is None:
        raise ValueError("expected a graded subspace")
    return sub.basis


def verify_cartan_subspace(ga: GradedAlgebra, basis,
                           rng: random.Random | None = None) -> CartanSubspaceData:
    """Deterministically certify a candidate Cartan subspace.

    Checks, in order: the span is abelian; every basis vector and one random
    combination is semisimple; the degree-1 part of the center of the
    centralizer of the span equals the span; and the derived algebra of that
    centralizer has nilpotent degree-1 part (each basis vector plus one
    random combination).  The rng only picks the random combinations; every
    individual check is exact.
    """
    rng = rng or random.Random(0)
    d1 = 1 % ga.m
    for v in basis:
        if v and ga.degree_of(v) != d1:
            raise ValueError("candidate basis must be homogeneous of degree 1")
    checks = {}

    checks["abelian"] = all(
        not ga.bracket(a, b) for i, a in enumerate(basis) for b in basis[i + 1:])

    def random_combo(vectors):
        out: dict = {}
        for v in vectors:
            out = el_add(out, el_scale(rng.randint(1, 9), v))
        return out

    checks["semisimple"] = (
        all(is_semisimple(ga, v) for v in basis)
        and (not basis or is_semisimple(ga, random_combo(basis))))

    cg = [ga.basis_element(i) for i in range(ga.dim)]
    for v in basis:
        cg = centralizer_in(ga, cg, v)
    cg = _graded_basis(ga, cg)

    z1 = Subalgebra(ga, center_of(ga, cg).basis).graded_part(d1)
    span = SparseSpan(basis)
    back = SparseSpan(z1)
    checks["center_of_centralizer"] = (
        all(span.contains(v) for v in z1) and all(back.contains(v) for v in basis))

    der1 = []
    der = derived_basis(ga, cg)
    if der:
        der1 = Subalgebra(ga, der).graded_part(d1)
    checks["nilpotent_complement"] = (
        all(is_nilpotent(ga, v) for v in der1)
        and (not der1 or is_nilpotent(ga, random_combo(der1))))

    return CartanSubspaceData(basis=list(basis), centralizer_basis=cg,
                              checks=checks)


def _sparse_degree1(ga: GradedAlgebra, rng: random.Random, bound: int) -> dict:
    """A sparse degree-1 element with small entries.

    Sparse draws are generic enough to be regular most of the time, and the
    small support keeps every coordinate downstream (centralizer kernels,
    annihilator coefficients) exact-arithmetic friendly.
    """
    block = ga.blocks[1 % ga.m]
    want = min(len(block), max(12, 2 * len(block) // 7))
    cap = min(bound, 5)
    out: dict = {}
    for i in rng.sample(block, want):
        c = rng.randint(-cap, cap)
        if c:
            out[i] = as_mpq(c)
    return out


def cartan_subspace(ga: GradedAlgebra, rng: random.Random | None = None,
                    trials: int = 5, bound: int = 1000) -> CartanSubspaceData:
    """Find a Cartan subspace of the degree-1 piece by random sampling.

    Each trial draws one dense degree-1 element, whose dim [g_0, x] scores
    the generic orbit dimension, and one sparse small-entry element, which
    is cheap to decompose exactly.  Candidates are processed by decreasing
    orbit dimension (sparse first among equals): take the degree-1 part of
    the center of the centralizer of the semisimple part, stop at the first
    candidate that passes verification.  Raises UnluckySampling if none
    does; a retry with a different seed or larger bound is then appropriate.
    """
    rng = rng or random.Random(0)
    samples = []
    for _ in range(trials):
        samples.append((1, ga.random_element(rng, degree=1, bound=bound)))
        samples.append((0, _sparse_degree1(ga, rng, bound)))
    scored = sorted(((orbit_dim_g0(ga, v), dense, v) for dense, v in samples),
                    key=lambda t: (-t[0], t[1]))
    best_orbit = max(t[0] for t in scored) if scored else 0
    for _, _, x in scored:
        xs = jordan_decompose(ga, x).semisimple
        c = Subalgebra(ga, _center_basis(ga, xs)).graded_part(1 % ga.m)
        data = verify_cartan_subspace(ga, c, rng)
        if data.all_checks_pass():
            data.sample_orbit_dim = best_orbit
            return data
    raise UnluckySampling(
        f"no sample out of {trials} trials produced a verifiable Cartan "
        f"subspace (coefficient bound {bound})")


def rank_of_grading(ga: GradedAlgebra, rng: random.Random | None = None,
                    trials: int = 5, bound: int = 1000) -> int:
    """dim of a Cartan subspace, computed twice and cross-checked.

    Route one: the dimension of a verified Cartan subspace.  Route two: the
    codimension of the largest sampled orbit in the degree-1 piece.  The two
    must agree; disagreement means the sampling was unlucky, never that one
    route silently wins.
    """
    data = cartan_subspace(ga, rng, trials=trials, bound=bound)
    direct = data.dim
    via_orbit = len(ga.blocks[1 % ga.m]) - data.sample_orbit_dim
    if direct != via_orbit:
        raise UnluckySampling(
            f"rank routes disagree: subspace dimension {direct}, orbit "
            f"codimension {via_orbit}; retry with a larger bound")
    return direct


def nilcone_dim(ga: GradedAlgebra, rng: random.Random | None = None,
                trials: int = 5, bound: int = 1000) -> int:
    """dim of the nilpotent cone in the degree-1 piece."""
    return len(ga.blocks[1 % ga.m]) - rank_of_grading(ga, rng, trials, bound)


# ---------------------------------------------------------------------------
# regularity and Jordan classes


@dataclass(frozen=True)
class RegularityEntry:
    """Centralizer dimensions of one element, with relative-minimality flags."""

    element: dict
    centralizer_dim: int
    centralizer_dim_0: int
    minimizes_centralizer: bool
    minimizes_centralizer_0: bool


def classify_regularity(ga: GradedAlgebra, elements) -> list:
    """Flag, within the given finite family, the elements whose centralizer
    (resp. its degree-0 part) has minimal dimension.

    Minimality is relative to the family, not to the whole degree-1 piece;
    with generic sampling the two notions coincide.
    """
    elements = list(elements)
    if not elements:
        return []
    dims = [graded_centralizer_dims(ga, x) for x in elements]
    totals = [sum(t) for t in dims]
    zeros = [t[0] for t in dims]
    mt, mz = min(totals), min(zeros)
    return [RegularityEntry(element=x, centralizer_dim=t,
                            centralizer_dim_0=z,
                            minimizes_centralizer=(t == mt),
                            minimizes_centralizer_0=(z == mz))
            for x, t, z in zip(elements, totals, zeros)]


@dataclass
class JordanClassData:
    """Invariants of the decomposition class of a degree-1 element.

    The class of x consists of the degree-1 elements whose semisimple part
    has the same centralizer as that of x (up to the degree-0 group) and
    whose nilpotent part is conjugate inside it; its dimension is
    dim g_0 - dim (g^x)_0 + dim z(g^{x_s})_1.
    """

    pair: JordanPair
    centralizer_dims: tuple
    semisimple_centralizer_dims: tuple
    center_slice_dim: int
    class_dim: int

    def to_json(self) -> dict:
        return {
            "centralizer_dims": list(self.centralizer_dims),
            "semisimple_centralizer_dims": list(self.semisimple_centralizer_dims),
            "center_slice_dim": self.center_slice_dim,
            "class_dim": self.class_dim,
        }


def jordan_class_data(ga: GradedAlgebra, x: dict) -> JordanClassData:
    """Decompose x and assemble the dimension data of its class."""
    if x and ga.degree_of(x) != 1 % ga.m:
        raise ValueError("element must be homogeneous of degree 1")
    pair = jordan_decompose(ga, x)
    cdims = graded_centralizer_dims(ga, x)
    sdims = graded_centralizer_dims(ga, pair.semisimple)
    zs = Subalgebra(ga, _center_basis(ga, pair.semisimple)).graded_part(1 % ga.m)
    class_dim = len(ga.blocks[0]) - cdims[0] + len(zs)
    return JordanClassData(pair=pair, centralizer_dims=cdims,
                           semisimple_centralizer_dims=sdims,
                           center_slice_dim=len(zs), class_dim=class_dim)


# ---------------------------------------------------------------------------
# equivalence witnesses


def _matrix_columns(ga: GradedAlgebra, w: Matrix):
    cols = []
    for j in range(w.ncols):
        cols.append({i: w.rows[i][j] for i in range(w.nrows) if w.rows[i][j]})
    return cols


def _apply_columns(cols, v: dict) -> dict:
    out: dict = {}
    for b, c in v.items():
        out = el_add(out, el_scale(c, cols[b]))
    return out


def jordan_equiv_witness(ga: GradedAlgebra, x: dict, y: dict, w: Matrix) -> bool:
    """Decide whether the automorphism w carries the class of x onto that of y.

    w must be an invertible, bracket-compatible, grading-preserving matrix in
    the chosen basis; anything else raises ValueError.  The test itself:
    w maps the centralizer of the semisimple part of x onto that of y, and
    maps the nilpotent part of x exactly to that of y.
    """
    n = ga.dim
    if w.nrows != n or w.ncols != n:
        raise ValueError("witness matrix has the wrong shape")
    if w.rank() != n:
        raise ValueError("witness matrix is singular")
    cols = _matrix_columns(ga, w)
    for j, col in enumerate(cols):
        dj = ga.degrees[j]
        if any(ga.degrees[i] != dj for i in col):
            raise ValueError("witness does not preserve the grading")
    for i in range(n):
        bi = ga.basis_element(i)
        for j in range(i + 1, n):
            lhs = _apply_columns(cols, ga.bracket(bi, ga.basis_element(j)))
            rhs = ga.bracket(cols[i], cols[j])
            if el_sub(lhs, rhs):
                raise ValueError("witness is not an algebra automorphism")

    px, py = jordan_decompose(ga, x), jordan_decompose(ga, y)
    if el_sub(_apply_columns(cols, px.nilpotent), py.nilpotent):
        return False
    cx = centralizer(ga, px.semisimple).basis
    cy = centralizer(ga, py.semisimple).basis
    if len(cx) != len(cy):
        return False
    target = SparseSpan(cy)
    return all(target.contains(_apply_columns(cols, v)) for v in cx)
