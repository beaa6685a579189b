"""Periodic gradings of the simple algebras from labeled affine diagrams.

A grading is specified by nonnegative integer labels s_0..s_n on the
affine diagram nodes; the period is m = sum a_i s_i with a_i the marks of
the highest root (a_0 = 1).  Root vectors sit in degree sum_i s_i c_i(a)
mod m, the Cartan in degree zero.  Only labelings of the untwisted
diagram are accepted: these are exactly the gradings by inner
automorphisms.

GradedAlgebra is also the uniform wrapper used by the hand-built models:
anything with a sparse bracket, basis names, and a degree list fits.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from gmpy2 import mpq

from .chevalley import chevalley_algebra
from .exact import Matrix

# ---------------------------------------------------------------------------
# sparse element helpers (dicts: basis index -> scalar, zeros omitted)
# ---------------------------------------------------------------------------

def el_add(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, v in y.items():
        w = out.get(k, 0) + v
        if w:
            out[k] = w
        elif k in out:
            del out[k]
    return out


def el_scale(c, x: dict) -> dict:
    return {k: c * v for k, v in x.items()} if c else {}


def el_sub(x: dict, y: dict) -> dict:
    return el_add(x, el_scale(-1, y))


def el_from_coords(indices, coords) -> dict:
    return {i: c for i, c in zip(indices, coords) if c}


def el_coords(x: dict, indices) -> list:
    pos = {b: k for k, b in enumerate(indices)}
    out = [mpq(0)] * len(indices)
    for b, c in x.items():
        out[pos[b]] = c  # KeyError here means x leaves the span
    return out


# ---------------------------------------------------------------------------
# Kac labels
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KacLabels:
    """Labels s_0..s_n on the untwisted affine diagram of a simple type."""

    algebra: str
    s: tuple
    twist: int = 1

    def __post_init__(self):
        if self.twist != 1:
            raise NotImplementedError(
                "twisted diagrams (outer automorphisms) are not supported")
        marks = self.marks
        if len(self.s) != len(marks):
            raise ValueError(
                f"{self.algebra} needs {len(marks)} labels, got {len(self.s)}")
        if any((not isinstance(x, int)) or x < 0 for x in self.s):
            raise ValueError("labels must be nonnegative integers")
        if not any(self.s):
            raise ValueError("at least one label must be positive")

    @property
    def marks(self):
        return chevalley_algebra(self.algebra).rs.marks()

    @property
    def m(self) -> int:
        return sum(a * s for a, s in zip(self.marks, self.s))

    @property
    def black_nodes(self):
        return tuple(i for i, x in enumerate(self.s) if x)

    def __str__(self):
        return f"{self.algebra}: s=[{','.join(str(x) for x in self.s)}]"


_GRADING_RE = re.compile(
    r"^\s*([A-Ga-g]\s*\d+)\s*:\s*s\s*=\s*\[([-\d,\s]*)\]\s*$")


def parse_grading(text: str) -> "GradedAlgebra":
    """Parse a description like 'G2: s=[1,1,0]'."""
    mo = _GRADING_RE.match(text)
    if not mo:
        raise ValueError(f"cannot parse grading {text!r}; expected 'G2: s=[1,1,0]'")
    name = mo.group(1).replace(" ", "").upper()
    s = tuple(int(x) for x in mo.group(2).split(",")) if mo.group(2).strip() else ()
    return from_kac(name, s)


# ---------------------------------------------------------------------------
# the graded wrapper
# ---------------------------------------------------------------------------

class GradedAlgebra:
    """A Lie algebra with a Z/m grading, in a fixed homogeneous basis.

    The base object supplies dim, basis_names, and a sparse bracket;
    degrees is one residue per basis index.
    """

    def __init__(self, base, m: int, degrees, label: str):
        self.base = base
        self.m = m
        self.dim = base.dim
        self.basis_names = base.basis_names
        self.degrees = [d % m for d in degrees]
        self.label = label
        self.blocks = {l: [] for l in range(m)}
        for i, d in enumerate(self.degrees):
            self.blocks[d].append(i)

    def __repr__(self):
        return f"GradedAlgebra({self.label!r})"

    def dims(self):
        return tuple(len(self.blocks[l]) for l in range(self.m))

    def bracket(self, x: dict, y: dict) -> dict:
        return self.base.bracket(x, y)

    def basis_element(self, i: int) -> dict:
        return {i: mpq(1)}

    def degree_of(self, x: dict):
        """The common degree of the terms of x, or None if mixed or zero."""
        seen = {self.degrees[i] for i in x}
        return seen.pop() if len(seen) == 1 else None

    def homogeneous_component(self, x: dict, l: int) -> dict:
        l %= self.m
        return {i: c for i, c in x.items() if self.degrees[i] == l}

    def components(self, x: dict):
        """The nonzero homogeneous pieces of x, as a dict degree -> element."""
        out = {}
        for i, c in x.items():
            out.setdefault(self.degrees[i], {})[i] = c
        return out

    def ad_matrix(self, x: dict, src, dst=None) -> Matrix:
        """Matrix of ad(x) from span(src) into span(dst), one column per src index.

        With dst=None the full basis is the target.  A bracket landing
        outside the target raises KeyError: that means the caller's degree
        bookkeeping is wrong.
        """
        if dst is None:
            dst = range(self.dim)
        pos = {b: k for k, b in enumerate(dst)}
        nrows = len(pos)
        cols = []
        for j in src:
            w = self.bracket(x, {j: mpq(1)})
            col = [mpq(0)] * nrows
            for b, c in w.items():
                col[pos[b]] = c
            cols.append(col)
        if not cols:
            return Matrix([[] for _ in range(nrows)])
        return Matrix(list(zip(*cols)), ncols=len(cols))

    def random_element(self, rng, degree=None, bound: int = 10) -> dict:
        """Dense random element, uniform integer coefficients in [-bound, bound]."""
        idx = range(self.dim) if degree is None else self.blocks[degree % self.m]
        out = {}
        for i in idx:
            c = rng.randint(-bound, bound)
            if c:
                out[i] = mpq(c)
        return out


def from_kac(name: str, s) -> GradedAlgebra:
    """The graded algebra of a labeled untwisted affine diagram."""
    labels = KacLabels(name, tuple(s))
    alg = chevalley_algebra(name)
    m = labels.m
    degrees = [0] * alg.rank
    for a in alg.root_list:
        degrees.append(sum(si * ci for si, ci in zip(labels.s[1:], a)) % m)
    ga = GradedAlgebra(alg, m, degrees, str(labels))
    ga.kac = labels
    return ga


def cartan_center_dim(ga: GradedAlgebra) -> int:
    """dim of the center of g_0 for a diagram grading.

    g_0 is reductive with the full Cartan inside, so its center is the
    annihilator of the degree-zero roots in the Cartan.
    """
    alg = ga.base
    n = alg.rank
    zero_roots = [a for k, a in enumerate(alg.root_list)
                  if ga.degrees[n + k] == 0]
    if not zero_roots:
        return n
    return n - Matrix([[mpq(c) for c in a] for a in zero_roots]).rank()
