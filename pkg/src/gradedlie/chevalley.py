"""Root systems and Chevalley bases of the simple complex Lie algebras.

Roots are integer coordinate tuples over the simple roots.  Structure
constants come from the extraspecial pair recursion: the constant of each
extraspecial pair is +(p+1), everything else follows from antisymmetry,
negation, the cyclic identity for triples summing to zero, and the
four-root identity.  The simple-root numbering is Bourbaki's, except G2,
where node 1 is the long root (so the affine marks read (1; 2, 3)).
"""

from __future__ import annotations

from functools import lru_cache

from gmpy2 import mpq

# edges as (i, j, a_ij, a_ji) with zero-based nodes, a_ij = <alpha_i, alpha_j^vee>


def _edges(typ: str, n: int):
    if typ == "A":
        return [(i, i + 1, -1, -1) for i in range(n - 1)]
    if typ == "B":
        assert n >= 2
        return [(i, i + 1, -1, -1) for i in range(n - 2)] + [(n - 2, n - 1, -2, -1)]
    if typ == "C":
        assert n >= 2
        return [(i, i + 1, -1, -1) for i in range(n - 2)] + [(n - 2, n - 1, -1, -2)]
    if typ == "D":
        assert n >= 3
        chain = [(i, i + 1, -1, -1) for i in range(n - 3)]
        return chain + [(n - 3, n - 2, -1, -1), (n - 3, n - 1, -1, -1)]
    if typ == "E":
        assert n in (6, 7, 8)
        chain = [(0, 2), (2, 3), (3, 4), (4, 5)] + \
            ([(5, 6)] if n >= 7 else []) + ([(6, 7)] if n == 8 else [])
        return [(i, j, -1, -1) for i, j in chain] + [(1, 3, -1, -1)]
    if typ == "F":
        assert n == 4
        return [(0, 1, -1, -1), (1, 2, -2, -1), (2, 3, -1, -1)]
    if typ == "G":
        assert n == 2
        return [(0, 1, -3, -1)]
    raise ValueError(f"unknown type {typ!r}")


def _symmetrizer(cartan):
    """Positive integers d with d_j * a_ij = d_i * a_ji."""
    from math import gcd, lcm

    n = len(cartan)
    d = [None] * n
    d[0] = mpq(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if i != j and cartan[i][j] and d[j] is None:
                d[j] = d[i] * cartan[j][i] / cartan[i][j]
                todo.append(j)
    assert all(x is not None for x in d), "diagram not connected"
    den = lcm(*(int(x.denominator) for x in d))
    scaled = [int(x * den) for x in d]
    g = gcd(*scaled)
    return [x // g for x in scaled]


class RootSystem:
    """The root system of one simple type, with exact integer data."""

    def __init__(self, typ: str, rank: int):
        typ = typ.upper()
        self.type = typ
        self.rank = rank
        cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        for i, j, aij, aji in _edges(typ, rank):
            cartan[i][j] = aij
            cartan[j][i] = aji
        self.cartan = cartan
        self.d = _symmetrizer(cartan)
        # (alpha_i, alpha_j) = d_j a_ij; must come out symmetric
        self.gram = [[self.d[j] * cartan[i][j] for j in range(rank)]
                     for i in range(rank)]
        assert all(self.gram[i][j] == self.gram[j][i]
                   for i in range(rank) for j in range(rank))
        self.positive_roots = self._generate()
        self._pos_set = set(self.positive_roots)
        self.roots = self._pos_set | {self._neg(a) for a in self.positive_roots}

    @staticmethod
    def _neg(a):
        return tuple(-c for c in a)

    def pairing(self, a, i: int) -> int:
        """<a, alpha_i^vee> for a root (or weight) in simple coordinates."""
        return sum(c * self.cartan[j][i] for j, c in enumerate(a) if c)

    def inner(self, a, b) -> mpq:
        return mpq(sum(ca * cb * self.gram[i][j]
                       for i, ca in enumerate(a) if ca
                       for j, cb in enumerate(b) if cb))

    @staticmethod
    def height(a) -> int:
        return sum(a)

    def _generate(self):
        n = self.rank
        simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        pos = set(simples)
        current = list(simples)
        while current:
            nxt = []
            for a in current:
                for i in range(n):
                    down = list(a)
                    down[i] -= 1
                    p = 0
                    while tuple(down) in pos:
                        p += 1
                        down[i] -= 1
                    if p - self.pairing(a, i) > 0:
                        up = list(a)
                        up[i] += 1
                        b = tuple(up)
                        if b not in pos:
                            pos.add(b)
                            nxt.append(b)
            current = nxt
        return sorted(pos, key=lambda a: (self.height(a), a))

    def is_root(self, a) -> bool:
        return a in self.roots

    def is_positive(self, a) -> bool:
        return a in self._pos_set

    def highest_root(self):
        return self.positive_roots[-1]

    def marks(self):
        """Coefficients of the highest root, with the affine mark 1 prepended."""
        return (1,) + self.highest_root()

    def string_down(self, b, a) -> int:
        """Largest p with b - p*a still a root."""
        p = 0
        cur = tuple(x - y for x, y in zip(b, a))
        while cur in self.roots:
            p += 1
            cur = tuple(x - y for x, y in zip(cur, a))
        return p

    def coroot_coords(self, a):
        """a^vee in the basis of simple coroots; integral for any root."""
        na = self.inner(a, a)
        out = []
        for i, c in enumerate(a):
            x = mpq(2 * c * self.d[i]) / na
            assert x.denominator == 1
            out.append(int(x))
        return tuple(out)


class ChevalleyAlgebra:
    """A simple Lie algebra over Q in a Chevalley basis.

    Basis order: the simple coroots h_1..h_n, then root vectors for the
    positive roots by (height, lex), then the negative ones in the same
    order of their absolute value.  Elements are sparse dicts mapping
    basis index to coefficient.
    """

    def __init__(self, typ: str, rank: int):
        self.rs = RootSystem(typ, rank)
        n = rank
        self.rank = n
        order = list(self.rs.positive_roots) + \
            [self.rs._neg(a) for a in self.rs.positive_roots]
        self.root_list = order
        self.dim = n + len(order)
        self.root_index = {a: n + k for k, a in enumerate(order)}
        self.basis_names = [f"h{i+1}" for i in range(n)] + \
            ["e[" + ",".join(str(c) for c in a) + "]" for a in order]
        self._name_index = {nm: i for i, nm in enumerate(self.basis_names)}
        self._pos_order = {a: k for k, a in enumerate(self.rs.positive_roots)}
        self._extraspecial = self._extraspecial_pairs()
        self._nmemo = {}
        self._table = self._build_table()

    def __repr__(self):
        return f"ChevalleyAlgebra({self.rs.type}{self.rank})"

    @property
    def name(self) -> str:
        return f"{self.rs.type}{self.rank}"

    def _extraspecial_pairs(self):
        out = {}
        for g in self.rs.positive_roots:
            if self.rs.height(g) == 1:
                continue
            for a in self.rs.positive_roots:
                b = tuple(x - y for x, y in zip(g, a))
                if b in self.rs._pos_set:
                    out[g] = (a, b)  # first a in root order wins
                    break
        return out

    def nconst(self, a, b) -> mpq:
        """The constant N with [e_a, e_b] = N e_{a+b}; zero if a+b is not a root."""
        s = tuple(x + y for x, y in zip(a, b))
        if s not in self.rs.roots:
            return mpq(0)
        key = (a, b)
        got = self._nmemo.get(key)
        if got is not None:
            return got
        rs = self.rs
        pa, pb = rs.is_positive(a), rs.is_positive(b)
        if pa and pb:
            if self._pos_order[a] > self._pos_order[b]:
                res = -self.nconst(b, a)
            elif (a, b) == self._extraspecial[s]:
                res = mpq(rs.string_down(b, a) + 1)
            else:
                a1, b1 = self._extraspecial[s]
                na, nb = rs._neg(a), rs._neg(b)
                term = mpq(0)
                d1 = tuple(x - y for x, y in zip(b1, a))
                if d1 in rs.roots:
                    term += self.nconst(b1, na) * self.nconst(a1, nb) / rs.inner(d1, d1)
                d2 = tuple(x - y for x, y in zip(a1, a))
                if d2 in rs.roots:
                    term += self.nconst(na, a1) * self.nconst(b1, nb) / rs.inner(d2, d2)
                res = rs.inner(s, s) * term / self.nconst(a1, b1)
        elif not pa and not pb:
            res = -self.nconst(rs._neg(a), rs._neg(b))
        elif not pa:
            res = -self.nconst(b, a)
        elif rs.is_positive(s):
            res = -rs.inner(s, s) / rs.inner(a, a) * self.nconst(rs._neg(b), s)
        else:
            res = -self.nconst(rs._neg(a), rs._neg(b))
        assert res != 0 and res.denominator == 1
        self._nmemo[key] = res
        return res

    def _build_table(self):
        """Brackets of basis pairs i < j, as sparse coefficient dicts."""
        rs, n = self.rs, self.rank
        table = {}
        for j, b in enumerate(self.root_list):
            jj = n + j
            for i in range(n):
                c = rs.pairing(b, i)
                if c:
                    table[(i, jj)] = {jj: mpq(c)}
            for k in range(j + 1, len(self.root_list)):
                a = self.root_list[k]  # note: (jj, n+k) with jj < n+k
                s = tuple(x + y for x, y in zip(b, a))
                if not any(s):
                    h = rs.coroot_coords(b)
                    table[(jj, n + k)] = {i: mpq(c) for i, c in enumerate(h) if c}
                elif s in rs.roots:
                    table[(jj, n + k)] = {self.root_index[s]: self.nconst(b, a)}
        return table

    def bracket_basis(self, i: int, j: int):
        """[b_i, b_j] as a sparse dict."""
        if i == j:
            return {}
        if i < j:
            return self._table.get((i, j), {})
        flip = self._table.get((j, i), {})
        return {k: -v for k, v in flip.items()}

    def bracket(self, x: dict, y: dict) -> dict:
        out = {}
        for i, ci in x.items():
            for j, cj in y.items():
                t = self._table.get((i, j)) if i < j else None
                if i > j:
                    t = self._table.get((j, i))
                if not t:
                    continue
                c = ci * cj if i < j else -ci * cj
                for k, v in t.items():
                    w = out.get(k, 0) + c * v
                    if w:
                        out[k] = w
                    elif k in out:
                        del out[k]
        return out

    def killing_form(self, x: dict, y: dict):
        total = 0
        for j in range(self.dim):
            w = self.bracket(y, {j: mpq(1)})
            if not w:
                continue
            v = self.bracket(x, w)
            if j in v:
                total += v[j]
        return total

    # -- element serialization ------------------------------------------------

    def element_from_pairs(self, pairs) -> dict:
        """Build an element from (basis name, coefficient string) pairs."""
        out = {}
        for name, coeff in pairs:
            idx = self._name_index.get(name)
            if idx is None:
                raise ValueError(f"unknown basis element {name!r}")
            c = mpq(coeff)
            if c:
                out[idx] = out.get(idx, mpq(0)) + c
                if not out[idx]:
                    del out[idx]
        return out

    def element_to_pairs(self, x: dict):
        return [[self.basis_names[i], str(x[i])] for i in sorted(x)]


@lru_cache(maxsize=None)
def chevalley_algebra(name: str) -> ChevalleyAlgebra:
    """Cached algebra for a type string like 'E8' or 'A1'."""
    typ, rank = name[0].upper(), int(name[1:])
    return ChevalleyAlgebra(typ, rank)
