"""The order-three model of E8 built from trivectors on a 9-dim space.

The 248-dimensional algebra is realized as sl(9) + L + L*, where L is the
third exterior power of C^9, graded by Z/3 with sl(9) in degree zero, L in
degree one and L* in degree two.  Five bracket pieces glue it together:
the commutator on sl(9), the derivation action on L and its dual on L*,
the wedge maps L x L -> L* and L* x L* -> L through the volume form
e_1 ^ ... ^ e_9, and the traceless contraction L x L* -> sl(9).

The contraction is normalized so that d_ijk := [e_ijk, e*_ijk] is the
diagonal matrix with 2/3 at positions i, j, k and -1/3 elsewhere; the two
wedge scalars are then forced by the Jacobi identity (one is a free global
rescaling and is set to 1).  Every dimension reported here is independent
of that residual choice.

Class representatives used by the report functions live in
data/e8_classes.json, serialized as lists [i, j, k, "num/den"] of wedge
terms with 1-indexed entries; elements with a complex coefficient are
stored as a real/imaginary pair and materialized over Q(i).
"""

from __future__ import annotations

import json
import random
from functools import lru_cache
from importlib import resources
from itertools import combinations

from gmpy2 import mpq

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
from .exact import CyclotomicField, Matrix, as_mpq
from .grading import GradedAlgebra, el_add, el_scale
from .slices import verify_slice_induction

# basis layout: 72 off-diagonal matrix units, 8 diagonal differences,
# 84 wedges, 84 dual wedges
_OFFDIAG = [(r, c) for r in range(9) for c in range(9) if r != c]
_PAIR_POS = {rc: k for k, rc in enumerate(_OFFDIAG)}
_TRIPLES = list(combinations(range(9), 3))
_TRIPLE_POS = {t: k for k, t in enumerate(_TRIPLES)}
_WEDGE0 = 80
_DUAL0 = 164

_WEDGE_SCALAR = mpq(1)  # L x L -> L*
_DUAL_SCALAR = mpq(-1)  # L* x L* -> L, pinned by Jacobi once the other is 1


def _sort3(v):
    """Sorted triple and the sign of the sorting permutation."""
    a, b, c = v
    sign = 1
    if a > b:
        a, b, sign = b, a, -sign
    if b > c:
        b, c, sign = c, b, -sign
    if a > b:
        a, b, sign = b, a, -sign
    return (a, b, c), sign


def _perm_sign(seq) -> int:
    n = len(seq)
    sign = 1
    for i in range(n):
        for j in range(i + 1, n):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def _diag_coords(diag, out):
    """Write a traceless diagonal into coordinates on the E_aa - E_{a+1,a+1}."""
    run = 0
    for a in range(8):
        run = run + diag[a]
        if run:
            out[72 + a] = run
    assert not (run + diag[8]), "diagonal part is not traceless"


class TrivectorBasis:
    """Structure constants of sl(9) + L + L* in the fixed basis.

    Bracket values of basis pairs are computed on first use and memoized,
    so the table only ever holds the pairs a computation actually touches.
    """

    def __init__(self):
        self.dim = 248
        names = [f"E[{r + 1},{c + 1}]" for r, c in _OFFDIAG]
        names += [f"H[{a + 1}]" for a in range(8)]
        names += ["e[" + ",".join(str(i + 1) for i in t) + "]" for t in _TRIPLES]
        names += ["e*[" + ",".join(str(i + 1) for i in t) + "]" for t in _TRIPLES]
        self.basis_names = names
        self._table = {}

    def bracket(self, x: dict, y: dict) -> dict:
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                if i == j:
                    continue
                if i < j:
                    lo, hi, c = i, j, a * b
                else:
                    lo, hi, c = j, i, -a * b
                for k, v in self._pair(lo, hi).items():
                    w = out.get(k, 0) + c * v
                    if w:
                        out[k] = w
                    elif k in out:
                        del out[k]
        return out

    # -- structure constants ------------------------------------------------

    def _pair(self, i: int, j: int) -> dict:
        key = (i, j)
        if key not in self._table:
            self._table[key] = self._compute_pair(i, j)
        return self._table[key]

    def _compute_pair(self, i: int, j: int) -> dict:
        if j < _WEDGE0:
            return self._sl9_sl9(i, j)
        if i < _WEDGE0:
            if j < _DUAL0:
                return self._act_wedge(_mat_of(i), _TRIPLES[j - _WEDGE0])
            return self._act_dual(_mat_of(i), _TRIPLES[j - _DUAL0])
        if j < _DUAL0:
            return self._wedge_pair(i - _WEDGE0, j - _WEDGE0, _WEDGE_SCALAR, _DUAL0)
        if i < _DUAL0:
            return self._contraction(_TRIPLES[i - _WEDGE0], _TRIPLES[j - _DUAL0])
        return self._wedge_pair(i - _DUAL0, j - _DUAL0, _DUAL_SCALAR, _WEDGE0)

    def _sl9_sl9(self, i: int, j: int) -> dict:
        A, B = _mat_of(i), _mat_of(j)
        prod = {}
        for (r, c), u in A.items():
            for (r2, c2), v in B.items():
                if c == r2:
                    prod[r, c2] = prod.get((r, c2), 0) + u * v
                if c2 == r:
                    prod[r2, c] = prod.get((r2, c), 0) - u * v
        out = {}
        _diag_coords([prod.get((a, a), 0) for a in range(9)], out)
        for (r, c), v in prod.items():
            if r != c and v:
                out[_PAIR_POS[r, c]] = v
        return out

    def _act_wedge(self, A: dict, t: tuple) -> dict:
        out = {}
        for (r, c), v in A.items():
            for pos in range(3):
                if t[pos] != c:
                    continue
                if r == c:
                    k = _WEDGE0 + _TRIPLE_POS[t]
                    out[k] = out.get(k, 0) + v
                elif r not in t:
                    new = list(t)
                    new[pos] = r
                    u, s = _sort3(new)
                    k = _WEDGE0 + _TRIPLE_POS[u]
                    out[k] = out.get(k, 0) + s * v
        return {k: v for k, v in out.items() if v}

    def _act_dual(self, A: dict, t: tuple) -> dict:
        out = {}
        for (r, c), v in A.items():
            for pos in range(3):
                if t[pos] != r:
                    continue
                if r == c:
                    k = _DUAL0 + _TRIPLE_POS[t]
                    out[k] = out.get(k, 0) - v
                elif c not in t:
                    new = list(t)
                    new[pos] = c
                    u, s = _sort3(new)
                    k = _DUAL0 + _TRIPLE_POS[u]
                    out[k] = out.get(k, 0) - s * v
        return {k: v for k, v in out.items() if v}

    def _wedge_pair(self, pi: int, pj: int, scalar, base: int) -> dict:
        s, t = _TRIPLES[pi], _TRIPLES[pj]
        if set(s) & set(t):
            return {}
        comp = tuple(sorted(set(range(9)) - set(s) - set(t)))
        sign = _perm_sign(s + t + comp)
        return {base + _TRIPLE_POS[comp]: sign * scalar}

    def _contraction(self, s: tuple, t: tuple) -> dict:
        common = set(s) & set(t)
        if len(common) == 3:
            out = {}
            _diag_coords(
                [mpq(2, 3) if a in s else mpq(-1, 3) for a in range(9)], out)
            return out
        if len(common) != 2:
            return {}
        a = next(v for v in s if v not in common)
        b = next(v for v in t if v not in common)
        sign = (-1 if s.index(a) == 1 else 1) * (-1 if t.index(b) == 1 else 1)
        return {_PAIR_POS[a, b]: mpq(sign)}


def _mat_of(idx: int) -> dict:
    """The 9x9 sparse matrix of a degree-zero basis element."""
    if idx < 72:
        return {_OFFDIAG[idx]: mpq(1)}
    a = idx - 72
    return {(a, a): mpq(1), (a + 1, a + 1): mpq(-1)}


@lru_cache(maxsize=1)
def build_e8_model() -> GradedAlgebra:
    """The graded 248-dim model; repeated calls share one instance.

    The instance is immutable apart from its internal memo table, so
    sharing it keeps the lazily built structure constants warm.
    """
    degrees = [0] * 80 + [1] * 84 + [2] * 84
    return GradedAlgebra(TrivectorBasis(), 3, degrees, "E8: sl(9) + L + L*")


# ---------------------------------------------------------------------------
# element constructors and serialization
# ---------------------------------------------------------------------------

def _triple_key(i: int, j: int, k: int):
    """Sorted 0-indexed triple and sign from 1-indexed wedge labels."""
    if not all(1 <= v <= 9 for v in (i, j, k)):
        raise ValueError(f"wedge labels must lie in 1..9, got {(i, j, k)}")
    if len({i, j, k}) != 3:
        raise ValueError(f"degenerate wedge {(i, j, k)}")
    return _sort3((i - 1, j - 1, k - 1))


def trivector(terms, dual: bool = False) -> dict:
    """Element of L (or L* with dual=True) from 1-indexed wedge terms.

    Each term is (i, j, k) or (i, j, k, coeff); unsorted labels contribute
    with the sign of the sorting permutation, repeated terms accumulate.
    """
    base = _DUAL0 if dual else _WEDGE0
    out = {}
    for term in terms:
        i, j, k = term[:3]
        coeff = as_mpq(term[3]) if len(term) > 3 else mpq(1)
        t, sign = _triple_key(i, j, k)
        idx = base + _TRIPLE_POS[t]
        w = out.get(idx, 0) + sign * coeff
        if w:
            out[idx] = w
        elif idx in out:
            del out[idx]
    return out


def sl9_element(mat) -> dict:
    """Degree-zero element from a traceless 9x9 matrix (nested lists)."""
    rows = [[as_mpq(v) for v in row] for row in mat]
    if len(rows) != 9 or any(len(r) != 9 for r in rows):
        raise ValueError("expected a 9x9 matrix")
    if sum(rows[a][a] for a in range(9)):
        raise ValueError("matrix has nonzero trace")
    out = {}
    _diag_coords([rows[a][a] for a in range(9)], out)
    for r in range(9):
        for c in range(9):
            if r != c and rows[r][c]:
                out[_PAIR_POS[r, c]] = rows[r][c]
    return out


def sl9_matrix(x: dict):
    """The 9x9 matrix of a degree-zero element, as nested lists."""
    rows = [[mpq(0)] * 9 for _ in range(9)]
    for idx, v in x.items():
        if idx >= _WEDGE0:
            raise ValueError("element has terms outside the matrix part")
        for (r, c), u in _mat_of(idx).items():
            rows[r][c] += u * v
    return rows


def trivector_to_json(x: dict):
    """Serialize a pure trivector: [[i, j, k, "num/den"], ...].

    Dual-side elements come wrapped as {"dual": true, "terms": [...]}.
    Only rational coefficients are representable.
    """
    if not x:
        return []
    dual = min(x) >= _DUAL0
    base = _DUAL0 if dual else _WEDGE0
    terms = []
    for idx in sorted(x):
        if not _WEDGE0 <= idx < _DUAL0 and not (dual and idx >= _DUAL0):
            raise ValueError("not a pure trivector")
        t = _TRIPLES[idx - base]
        terms.append([t[0] + 1, t[1] + 1, t[2] + 1, str(mpq(x[idx]))])
    return {"dual": True, "terms": terms} if dual else terms


def trivector_from_json(data) -> dict:
    dual = False
    if isinstance(data, dict):
        dual = bool(data.get("dual"))
        data = data["terms"]
    return trivector([(i, j, k, c) for i, j, k, c in data], dual=dual)


@lru_cache(maxsize=1)
def _fixtures() -> dict:
    text = resources.files("gradedlie").joinpath("data/e8_classes.json").read_text()
    return json.loads(text)


def _complex_trivector(spec: dict) -> dict:
    real = trivector_from_json(spec.get("real", []))
    imag = trivector_from_json(spec.get("imag", []))
    if not imag:
        return real
    i = CyclotomicField(4).omega()
    return el_add(real, el_scale(i, imag))


def class_representative(family: str, cls: str):
    """(semisimple part, nilpotent part) of an encoded class, as elements."""
    fams = _fixtures()["families"]
    if family not in fams or cls not in fams[family]["nilpotent"]:
        known = [f"{f}.{c}" for f in sorted(fams) for c in sorted(fams[f]["nilpotent"])]
        raise ValueError(f"no encoded class {family}.{cls}; have {', '.join(known)}")
    fam = fams[family]
    return _complex_trivector(fam["semisimple"]), \
        trivector_from_json(fam["nilpotent"][cls])


def cartan_subspace_basis():
    """The classical 4-dim Cartan subspace of the degree-one block."""
    return [trivector_from_json(t) for t in _fixtures()["cartan_subspace"]]


# ---------------------------------------------------------------------------
# support rank
# ---------------------------------------------------------------------------

def support_rank(t: dict) -> int:
    """Dimension of the smallest subspace E of C^9 with t in wedge^3 E.

    Computed as the rank of the contraction map sending a covector to the
    2-form obtained by plugging it into the first slot of t.
    """
    if not t:
        return 0
    base = _DUAL0 if min(t) >= _DUAL0 else _WEDGE0
    if any(not base <= idx < base + 84 for idx in t):
        raise ValueError("support rank is defined for pure trivectors only")
    pairs = {p: k for k, p in enumerate(combinations(range(9), 2))}
    rows = [[mpq(0)] * len(pairs) for _ in range(9)]
    for idx, coeff in t.items():
        a, b, c = _TRIPLES[idx - base]
        rows[a][pairs[b, c]] += coeff
        rows[b][pairs[a, c]] -= coeff
        rows[c][pairs[a, b]] += coeff
    return Matrix(rows).rank()


# ---------------------------------------------------------------------------
# pushforward of GL(9)
# ---------------------------------------------------------------------------

class Gl9Map:
    """The action of an invertible 9x9 matrix on the whole model.

    Matrices act by conjugation in degree zero and by the third exterior
    power of g (resp. of the inverse transpose) on L (resp. L*).  For
    det g = 1 this is an algebra automorphism preserving the grading.
    """

    def __init__(self, g: Matrix):
        assert g.nrows == g.ncols == 9
        self.g = g
        self.ginv = _inverse9(g)
        self._wedge_memo = {}
        self._dual_memo = {}

    def __call__(self, x: dict) -> dict:
        out = {}
        for idx, c in x.items():
            if idx < _WEDGE0:
                img = self._push_sl9(idx)
            elif idx < _DUAL0:
                img = self._push_exterior(idx - _WEDGE0, self.g.rows,
                                          self._wedge_memo, _WEDGE0)
            else:
                img = self._push_exterior(idx - _DUAL0,
                                          list(zip(*self.ginv.rows)),
                                          self._dual_memo, _DUAL0)
            for k, v in img.items():
                w = out.get(k, 0) + c * v
                if w:
                    out[k] = w
                elif k in out:
                    del out[k]
        return out

    def _push_sl9(self, idx: int) -> dict:
        prod = [[mpq(0)] * 9 for _ in range(9)]
        for (r, c), v in _mat_of(idx).items():
            for a in range(9):
                ga = self.g.rows[a][r] * v
                if ga:
                    for b in range(9):
                        prod[a][b] += ga * self.ginv.rows[c][b]
        return sl9_element(prod)

    def _push_exterior(self, pos: int, cols, memo: dict, base: int) -> dict:
        if pos not in memo:
            t = _TRIPLES[pos]
            out = {}
            for u in _TRIPLES:
                d = _det3(cols, u, t)
                if d:
                    out[base + _TRIPLE_POS[u]] = d
            memo[pos] = out
        return memo[pos]


def _det3(rows, ridx, cidx):
    a, b, c = ridx
    d, e, f = cidx
    return (rows[a][d] * (rows[b][e] * rows[c][f] - rows[b][f] * rows[c][e])
            - rows[a][e] * (rows[b][d] * rows[c][f] - rows[b][f] * rows[c][d])
            + rows[a][f] * (rows[b][d] * rows[c][e] - rows[b][e] * rows[c][d]))


def _inverse9(g: Matrix) -> Matrix:
    aug = Matrix([list(r) + list(e)
                  for r, e in zip(g.rows, Matrix.identity(9).rows)])
    red, pivots = aug.rref()
    if pivots != list(range(9)):
        raise ValueError("matrix is singular")
    return Matrix([row[9:] for row in red.rows])


# ---------------------------------------------------------------------------
# report operations
# ---------------------------------------------------------------------------

def _wedge6(y: dict, xn: dict) -> dict:
    """The wedge y ^ xn in the sixth exterior power, keyed by 6-subsets."""
    out = {}
    for iy, cy in y.items():
        for ix, cx in xn.items():
            s, t = _TRIPLES[iy - _WEDGE0], _TRIPLES[ix - _WEDGE0]
            if set(s) & set(t):
                continue
            key = tuple(sorted(s + t))
            w = out.get(key, 0) + _perm_sign(s + t) * cy * cx
            if w:
                out[key] = w
            elif key in out:
                del out[key]
    return out


def example_class_dims() -> dict:
    """Centralizer data for the three 76-dim nilpotent classes over one
    semisimple trivector, with the degree-one part computed two ways."""
    ga = build_e8_model()
    xs, _ = class_representative("VI", "7")
    zs = centralizer(ga, xs)
    z1 = center_of(ga, zs).graded_part(1)
    m1 = zs.graded_part(1)
    out = {
        "semisimple_centralizer_dims": zs.graded_dims,
        "semisimple_center_degree1_dim": len(z1),
        "center_spanned_by_the_element": len(z1) == 1
        and SparseSpan(z1).contains(xs),
        "classes": {},
    }
    for cls in ("7", "8", "9"):
        _, xn = class_representative("VI", cls)
        dims = graded_centralizer_dims(ga, el_add(xs, xn))
        # second route: the wedge with xn must vanish, inside the degree-one
        # part of the semisimple centralizer
        cols = [_wedge6(b, xn) for b in m1]
        support = sorted(set().union(*[set(c) for c in cols]))
        mat = Matrix([[c.get(s, mpq(0)) for c in cols] for s in support])
        wedge_dim = len(m1) - mat.rank()
        out["classes"][cls] = {
            "dims": dims,
            "wedge_criterion_dim": wedge_dim,
            "routes_agree": wedge_dim == dims[1],
            "orbit_dim": orbit_dim_g0(ga, el_add(xs, xn)),
        }
    return out


def family_III_centralizer() -> dict:
    """Structure of the 20-dim centralizer of the complex semisimple
    trivector: graded dims, center, and the split semisimple part."""
    ga = build_e8_model()
    ys, _ = class_representative("III", "7")
    m = centralizer(ga, ys)
    z = center_of(ga, m)
    der = Subalgebra(ga, derived_basis(ga, m.basis))

    first = [(1, 5, 9), (2, 6, 7), (3, 4, 8)]
    second = [(1, 6, 8), (2, 4, 9), (3, 5, 7)]
    listed_deg1 = [trivector([t]) for t in first + second]
    deg1_matches = len(listed_deg1) == len(der.graded_part(1)) and all(
        der.contains(v) for v in listed_deg1)

    summands = []
    for triples in (first, second):
        vecs = [trivector([t]) for t in triples]
        vecs += [trivector([t], dual=True) for t in triples]
        vecs += [ga.bracket(trivector([t]), trivector([t], dual=True))
                 for t in triples]
        sub = Subalgebra(ga, vecs)
        summands.append(sub)
    cross = all(not ga.bracket(a, b)
                for a in summands[0].basis for b in summands[1].basis)

    def d_sum(triples):
        total = {}
        for t in triples:
            total = el_add(total, ga.bracket(trivector([t]),
                                             trivector([t], dual=True)))
        return total

    return {
        "dim": m.dim,
        "graded_dims": m.graded_dims,
        "center_dims": z.graded_dims,
        "semisimple_part_dims": der.graded_dims,
        "degree1_span_matches_listed": deg1_matches,
        "summand_dims": tuple(s.dim for s in summands),
        "summands_closed": tuple(s.verify_closed() for s in summands),
        "summands_commute": cross,
        "summand_centers_trivial": tuple(
            center_of(ga, s).dim == 0 for s in summands),
        "diagonal_relations": {
            "first_partition_sums_to_zero": not d_sum(first),
            "second_partition_sums_to_zero": not d_sum(second),
            "second_with_repeated_348_sums_to_zero": not d_sum(
                [(1, 6, 8), (2, 4, 9), (3, 4, 8)]),
            "note": "the second relation holds for the partition-completing "
                    "triple (3,5,7); repeating (3,4,8) in its place leaves a "
                    "nonzero sum",
        },
    }


_VARIANTS = ("II.1", "II.2", "II.3")


def e8_slice_example(variant: str) -> dict:
    """Slice-induction witness from one of the three encoded mixed classes
    down to the complex class with nilpotent part e[1,5,9]."""
    if variant not in _VARIANTS:
        raise ValueError(f"variant must be one of {', '.join(_VARIANTS)}")
    ga = build_e8_model()
    ys, yn = class_representative("III", "7")
    xs, xn = class_representative("II", variant.split(".")[1])
    report = verify_slice_induction(ga, el_add(xs, xn), el_add(ys, yn))

    e = trivector([(1, 5, 9)])
    f = trivector([(1, 5, 9)], dual=True)
    h = ga.bracket(e, f)
    triple_exact = (ga.bracket(h, e) == el_scale(2, e)
                    and ga.bracket(h, f) == el_scale(-2, f))
    m = centralizer(ga, ys)
    fixed = centralizer_in(ga, m.graded_part(1), f)
    return {
        "variant": variant,
        "witnessed": report.witnessed,
        "explicit_triple_is_sl2": triple_exact,
        "slice_model_dim": len(fixed),
        "induction": report.to_json(),
    }


def glueing_invariants() -> dict:
    """Support ranks of the encoded nilpotent parts, the rank separation
    verdict for the one encoded candidate pair, and the checks on the
    signed block-swap matrix that relates two further classes."""
    ga = build_e8_model()
    ranks = {}
    for family, cls in (("VI", "7"), ("VI", "8"), ("VI", "9"),
                        ("II", "1"), ("II", "2"), ("II", "3"), ("III", "7")):
        _, xn = class_representative(family, cls)
        ranks[f"{family}.{cls}"] = support_rank(xn)

    pairs = [{
        "classes": ["VI.8", "VI.9"],
        "ranks": [ranks["VI.8"], ranks["VI.9"]],
        "separated_by_rank": ranks["VI.8"] != ranks["VI.9"],
        "verdict": ("distinct classes: the support ranks differ"
                    if ranks["VI.8"] != ranks["VI.9"]
                    else "rank invariant is inconclusive"),
    }]
    not_checked = [
        {"pair": p, "reason": "no encoded representatives"}
        for p in ("III.2-3", "III.4-6", "V.7-8", "V.10-11",
                  "VI.5-6", "VI.11-12", "VI.17-18")
    ]

    g = Matrix([[mpq(v) for v in row] for row in _fixtures()["glueing_matrix"]])
    ys, _ = class_representative("III", "7")
    out = {
        "support_ranks": ranks,
        "pairs": pairs,
        "not_checked": not_checked,
        "block_swap_matrix": _normalizer_checks(ga, g, ys),
        "identity_baseline": _normalizer_checks(ga, Matrix.identity(9), ys),
    }
    return out


def _normalizer_checks(ga: GradedAlgebra, g: Matrix, ys: dict) -> dict:
    w = Gl9Map(g)
    det = g.det()
    cartan = cartan_subspace_basis()
    cspan = SparseSpan(cartan)
    m = centralizer(ga, ys)

    rng = random.Random(20260814)
    auto = True
    for _ in range(40):
        u = _sparse_random(ga, rng)
        v = _sparse_random(ga, rng)
        if w(ga.bracket(u, v)) != ga.bracket(w(u), w(v)):
            auto = False
            break

    a3 = trivector([(1, 5, 9), (2, 6, 7), (3, 4, 8)])
    a4 = trivector([(1, 6, 8), (2, 4, 9), (3, 5, 7)])
    return {
        "determinant": str(det),
        "special_linear": det == 1,
        "automorphism_on_sample": auto,
        "normalizes_cartan_subspace": all(cspan.contains(w(c)) for c in cartan),
        "normalizes_semisimple_centralizer": all(m.contains(w(b))
                                                 for b in m.basis),
        "exchanges_summand_directions": w(a3) == a4 and w(a4) == a3,
    }


def _sparse_random(ga: GradedAlgebra, rng) -> dict:
    out = {}
    for _ in range(4):
        out[rng.randrange(ga.dim)] = mpq(rng.randint(-3, 3))
    return {k: v for k, v in out.items() if v}
