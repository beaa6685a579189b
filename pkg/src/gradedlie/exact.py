"""Exact linear and polynomial algebra over Q and over cyclotomic fields.

All arithmetic is integer or rational via gmpy2; floats never appear.
Rational matrices are reduced by fraction-free Bareiss elimination on a
denominator-cleared integer copy, cyclotomic matrices by ordinary
division-based elimination.  Polynomials are plain coefficient lists,
lowest degree first, with no trailing zeros.
"""

from __future__ import annotations

from functools import lru_cache

from gmpy2 import gcd as _gcd
from gmpy2 import mpq, mpz, next_prime


def as_mpq(x) -> mpq:
    """Coerce an int, string like '3/4', or mpq to mpq."""
    if isinstance(x, mpq):
        return x
    return mpq(x)


# ---------------------------------------------------------------------------
# polynomials over Q (or any field with /), as coefficient lists
# ---------------------------------------------------------------------------

def poly_trim(p):
    """Drop trailing zero coefficients in place and return p."""
    while p and not p[-1]:
        p.pop()
    return p


def poly_is_zero(p) -> bool:
    return not p


def poly_deg(p) -> int:
    """Degree, with deg 0 = -1 by convention."""
    return len(p) - 1


def poly_add(a, b):
    n = max(len(a), len(b))
    out = [mpq(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_neg(a):
    return [-c for c in a]


def poly_sub(a, b):
    return poly_add(a, poly_neg(b))


def poly_scale(a, c):
    if not c:
        return []
    return [c * x for x in a]


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] += ca * cb
    return poly_trim(out)


def poly_divmod(a, b):
    """Quotient and remainder of a by b over the coefficient field."""
    b = poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = poly_trim(list(a))
    q = [mpq(0)] * max(len(a) - len(b) + 1, 0)
    db, lead = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1] / lead
        k = len(r) - 1 - db
        q[k] = c
        for i, cb in enumerate(b):
            r[i + k] -= c * cb
        poly_trim(r)
    return poly_trim(q), r


def poly_mod(a, b):
    return poly_divmod(a, b)[1]


def poly_deriv(a):
    return poly_trim([i * c for i, c in enumerate(a)][1:])


def poly_monic(a):
    if not a:
        raise ValueError("zero polynomial has no monic form")
    lead = a[-1]
    return [c / lead for c in a]


def _int_primitive_poly(a):
    """Clear denominators and strip integer content; returns mpz list."""
    den = mpz(1)
    for c in a:
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [mpz(c.numerator * (den // c.denominator)) for c in a]
    g = mpz(0)
    for c in ints:
        g = _gcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    return ints


def poly_gcd(a, b):
    """Monic gcd, by primitive pseudo-remainders over Q and Euclid elsewhere."""
    if not a:
        return poly_monic(b) if b else []
    if not b:
        return poly_monic(a)
    if any(isinstance(c, Cyclotomic) for c in a) or any(
        isinstance(c, Cyclotomic) for c in b
    ):
        A, B = list(a), list(b)
        while B:
            A, B = B, poly_mod(A, B)
        return poly_monic(A)
    A, B = _int_primitive_poly(a), _int_primitive_poly(b)
    if len(A) < len(B):
        A, B = B, A
    while B:
        # pseudo-remainder of A by B, then strip content
        R = list(A)
        lead = B[-1]
        while len(R) >= len(B) and R:
            c, k = R[-1], len(R) - len(B)
            R = [x * lead for x in R]
            for i, cb in enumerate(B):
                R[i + k] -= c * cb
            while R and not R[-1]:
                R.pop()
        g = mpz(0)
        for c in R:
            g = _gcd(g, c)
        if g > 1:
            R = [c // g for c in R]
        A, B = B, R
    return poly_monic([mpq(c) for c in A])


# A fixed large prime used for one-sided certificates: a conclusion drawn
# from a nonzero value mod p (a nonzero resultant, a nonzero remainder)
# holds over Q, while a zero value mod p proves nothing and sends the
# caller to the exact fallback.
_WITNESS_PRIME = (1 << 61) - 1


def _modp_poly(a, p):
    """Image of a rational coefficient list mod p.

    Returns None when p divides a denominator or kills the leading
    coefficient, since either would break degree bookkeeping.
    """
    out = []
    for c in a:
        den = int(c.denominator) % p
        if not den:
            return None
        out.append(int(c.numerator) * pow(den, -1, p) % p)
    if out and not out[-1]:
        return None
    return out


def _modp_polymod(a, b, p):
    """Remainder of a by b with coefficients mod the prime p."""
    r = [c % p for c in a]
    while r and not r[-1]:
        r.pop()
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    while r and len(r) - 1 >= db:
        c = r[-1] * inv % p
        k = len(r) - 1 - db
        for i, cb in enumerate(b):
            if cb:
                r[i + k] = (r[i + k] - c * cb) % p
        while r and not r[-1]:
            r.pop()
    return r


def _coprime_witness(a, b, p=_WITNESS_PRIME):
    """True certifies gcd(a, b) = 1 over Q; False is merely inconclusive.

    A common rational factor would survive reduction mod p (the leading
    coefficients are checked not to vanish), so a trivial gcd mod p is a
    proof, while a nontrivial one may be an accident of the prime.
    """
    A, B = _modp_poly(a, p), _modp_poly(b, p)
    if not A or not B:
        return False
    while B:
        A, B = B, _modp_polymod(A, B, p)
    return len(A) == 1


def _modp_divisible(a, b, p=_WITNESS_PRIME):
    """Whether b | a mod p; False certifies b does not divide a over Q."""
    A, B = _modp_poly(a, p), _modp_poly(b, p)
    if A is None or not B:
        return False
    return not _modp_polymod(A, B, p)


def _trailing_zero_coeffs(a) -> int:
    n = 0
    while n < len(a) and not a[n]:
        n += 1
    return n


def poly_lcm(a, b):
    """Monic lcm, with certified shortcuts before the pseudo-remainder gcd.

    Divisibility either way is screened mod a witness prime and then checked
    by one exact division; failing that, a coprimality certificate (after
    splitting off powers of t, which the inputs often share) reduces the lcm
    to a plain product.  Only genuinely overlapping factors reach poly_gcd.
    """
    if not a or not b:
        return []
    rational = not (any(isinstance(c, Cyclotomic) for c in a)
                    or any(isinstance(c, Cyclotomic) for c in b))
    if rational:
        if len(b) <= len(a) and _modp_divisible(a, b) and not poly_mod(a, b):
            return poly_monic(a)
        if len(a) < len(b) and _modp_divisible(b, a) and not poly_mod(b, a):
            return poly_monic(b)
        i, j = _trailing_zero_coeffs(a), _trailing_zero_coeffs(b)
        if _coprime_witness(a[i:], b[j:]):
            body = poly_mul(list(a[i:]), list(b[j:]))
            return poly_monic([mpq(0)] * max(i, j) + body)
    g = poly_gcd(a, b)
    q, _ = poly_divmod(poly_mul(a, b), g)
    return poly_monic(q)


def squarefree_part(p):
    """Monic p / gcd(p, p'); raises on the zero polynomial.

    When a witness prime certifies gcd(p, p') = 1 the answer is p itself
    (normalized); the exact subresultant gcd only runs for polynomials
    that really do carry repeated factors, or on cyclotomic input.
    """
    if not p:
        raise ValueError("squarefree part of the zero polynomial")
    if len(p) == 1:
        return [mpq(1)]
    if not any(isinstance(c, Cyclotomic) for c in p):
        i = _trailing_zero_coeffs(p)
        body = list(p[i:])
        if len(body) > 1 and _coprime_witness(body, poly_deriv(body)):
            return poly_monic(([mpq(0)] if i else []) + body)
        if len(body) == 1 and i:
            return [mpq(0), mpq(1)]
    g = poly_gcd(p, poly_deriv(p))
    q, r = poly_divmod(p, g)
    assert not r
    return poly_monic(q)


def poly_eval(p, x):
    """Horner evaluation at a scalar."""
    acc = x - x if p else 0  # zero of the right type
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_inflate(p, k):
    """Substitute t -> t^k."""
    if k == 1 or not p:
        return list(p)
    out = [mpq(0)] * ((len(p) - 1) * k + 1)
    for i, c in enumerate(p):
        out[i * k] = c
    return poly_trim(out)


def poly_compose_mod(g, p, q):
    """g(p) reduced mod q, by Horner over the coefficients of g."""
    acc = []
    for c in reversed(g):
        acc = poly_mod(poly_add(poly_mul(acc, p), [c]), q)
    return acc


def poly_invmod(a, q):
    """Inverse of a modulo q; raises ValueError when gcd(a, q) != 1."""
    r0, r1 = list(q), poly_mod(a, q)
    s0, s1 = [], [mpq(1)]
    while r1:
        quo, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, poly_sub(s0, poly_mul(quo, s1))
    if poly_deg(r0) != 0:
        raise ValueError("element not invertible modulo the given polynomial")
    return poly_mod(poly_scale(s0, 1 / r0[0]), q)


def poly_str(p, var: str = "t") -> str:
    """Readable form, highest degree first."""
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        if i == 0:
            term = str(c)
        else:
            tv = var if i == 1 else f"{var}^{i}"
            term = tv if c == 1 else ("-" + tv if c == -1 else f"{c}*{tv}")
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += " - " + term[1:] if term.startswith("-") else " + " + term
    return out


# ---------------------------------------------------------------------------
# cyclotomic fields Q(w), w a primitive m-th root of unity
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Coefficients of the m-th cyclotomic polynomial, as a tuple."""
    if m < 1:
        raise ValueError("order must be a positive integer")
    num = [mpq(-1)] + [mpq(0)] * (m - 1) + [mpq(1)]
    for d in range(1, m):
        if m % d == 0:
            num, rem = poly_divmod(num, list(cyclotomic_polynomial(d)))
            assert not rem
    return tuple(num)


@lru_cache(maxsize=None)
def CyclotomicField(m: int) -> "_CyclotomicField":
    return _CyclotomicField(m)


class _CyclotomicField:
    """Q[w] / Phi_m(w).  Instances are cached, so identity comparison works."""

    def __init__(self, m: int):
        self.order = m
        self.modulus = list(cyclotomic_polynomial(m))
        self.degree = len(self.modulus) - 1

    def __repr__(self):
        return f"CyclotomicField({self.order})"

    def __call__(self, value) -> "Cyclotomic":
        if isinstance(value, Cyclotomic):
            if value.field is self:
                return value
            raise ValueError("cannot mix cyclotomic fields of different order")
        if isinstance(value, (int, mpq, mpz, str)):
            coeffs = [as_mpq(value)]
        else:
            coeffs = poly_mod([as_mpq(c) for c in value], self.modulus)
        coeffs = list(coeffs) + [mpq(0)] * (self.degree - len(coeffs))
        return Cyclotomic(self, tuple(coeffs[: self.degree]))

    def omega(self) -> "Cyclotomic":
        """The distinguished primitive m-th root of unity."""
        return self([mpq(0), mpq(1)])


class Cyclotomic:
    """An element of a fixed cyclotomic field, as residue coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.field is not self.field:
                raise ValueError("cyclotomic orders differ")
            return other
        if isinstance(other, (int, mpq, mpz)):
            return self.field(other)
        return None

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field.order, self.coeffs))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) == 2:
            # quadratic fields (orders 3, 4, 6): reduce t^2 by hand
            q0, q1 = self.field.modulus[0], self.field.modulus[1]
            hi = a[1] * b[1]
            return Cyclotomic(
                self.field,
                (a[0] * b[0] - q0 * hi, a[0] * b[1] + a[1] * b[0] - q1 * hi),
            )
        prod = poly_mul(list(a), list(b))
        return self.field(poly_mod(prod, self.field.modulus))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise ZeroDivisionError("cyclotomic division by zero")
        inv = poly_invmod(list(self.coeffs), self.field.modulus)
        return self.field(inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def rational_part(self) -> mpq:
        """The element as a rational, if it is one; raises otherwise."""
        if any(self.coeffs[1:]):
            raise ValueError("not a rational element")
        return self.coeffs[0]

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                w = "w" if i == 1 else f"w^{i}"
                terms.append(w if c == 1 else f"{c}*{w}")
        return " + ".join(terms) if terms else "0"


def omega(m: int) -> Cyclotomic:
    return CyclotomicField(m).omega()


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

def _row_cleared(row):
    """Common-denominator copy of an mpq row as mpz, primitive."""
    den = mpz(1)
    for c in row:
        den = den * c.denominator // _gcd(den, c.denominator)
    out = [mpz(c.numerator * (den // c.denominator)) for c in row]
    g = mpz(0)
    for c in out:
        g = _gcd(g, c)
    if g > 1:
        out = [c // g for c in out]
    return out


def _int_echelon(rows):
    """Fraction-free Bareiss echelon on mpz rows, in place.

    Returns (rows, pivots) with pivots a list of (row index, column index)
    in elimination order.  Column order is fixed; among candidate pivot
    rows the smallest nonzero magnitude wins, to limit entry growth.
    """
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    pivots = []
    prev = mpz(1)
    r = 0
    for c in range(nc):
        if r == nr:
            break
        best = None
        for i in range(r, nr):
            v = rows[i][c]
            if v and (best is None or abs(v) < abs(rows[best][c])):
                best = i
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nr):
            v = rows[i][c]
            ri, rr = rows[i], rows[r]
            if v:
                rows[i] = [(piv * ri[j] - v * rr[j]) // prev for j in range(nc)]
            elif prev != 1:
                rows[i] = [(piv * ri[j]) // prev for j in range(nc)]
            else:
                rows[i] = [piv * x for x in ri]
        prev = piv
        pivots.append((r, c))
        r += 1
    return rows, pivots


def _generic_echelon(rows):
    """Division-based echelon for rows over any field; pivots normalized to 1."""
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        best = next((i for i in range(r, nr) if rows[i][c]), None)
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        inv = 1 / rows[r][c] if isinstance(rows[r][c], mpq) else rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(r + 1, nr):
            v = rows[i][c]
            if v:
                rr = rows[r]
                rows[i] = [rows[i][j] - v * rr[j] for j in range(nc)]
        pivots.append((r, c))
        r += 1
    return rows, pivots


def _kernel_from_echelon(rows, pivots, nc, rational: bool):
    """Right-kernel basis from an echelon form, one vector per free column."""
    pivot_cols = [c for _, c in pivots]
    pivot_set = set(pivot_cols)
    basis = []
    for f in range(nc):
        if f in pivot_set:
            continue
        v = [mpq(0)] * nc
        v[f] = mpq(1)
        for k in range(len(pivots) - 1, -1, -1):
            r, c = pivots[k]
            if c > f:
                continue
            s = sum((rows[r][j] * v[j] for j in range(c + 1, nc) if v[j]), mpq(0))
            v[c] = -s / rows[r][c]
        if rational:
            v = [mpq(x) for x in _row_cleared(v)]
        basis.append(v)
    return basis


class Matrix:
    """A dense matrix over Q or over one cyclotomic field.

    Entries are mpq unless any input entry is Cyclotomic, in which case
    every entry is coerced into that field.
    """

    __slots__ = ("rows", "nrows", "ncols", "field")

    def __init__(self, rows, ncols: int = None):
        rows = [list(r) for r in rows]
        field = None
        for r in rows:
            for x in r:
                if isinstance(x, Cyclotomic):
                    field = x.field
                    break
            if field:
                break
        if field is None:
            self.rows = [[as_mpq(x) for x in r] for r in rows]
        else:
            self.rows = [[field(x) if not isinstance(x, Cyclotomic) else x for x in r]
                         for r in rows]
        self.field = field
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        assert all(len(r) == self.ncols for r in self.rows)

    @classmethod
    def zeros(cls, nr, nc):
        return cls([[mpq(0)] * nc for _ in range(nr)], ncols=nc)

    @classmethod
    def identity(cls, n):
        return cls([[mpq(1 if i == j else 0) for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols})"

    def __add__(self, other: "Matrix") -> "Matrix":
        assert self.nrows == other.nrows and self.ncols == other.ncols
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)], ncols=self.ncols)

    def transpose(self) -> "Matrix":
        if not self.rows:
            return Matrix([[] for _ in range(self.ncols)])
        return Matrix([list(col) for col in zip(*self.rows)], ncols=self.nrows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        assert self.ncols == other.nrows
        if self.nrows == 0 or other.ncols == 0:
            return Matrix([[] for _ in range(self.nrows)], ncols=other.ncols)
        if self.ncols == 0:
            return Matrix.zeros(self.nrows, other.ncols)
        ot = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out.append([sum((a * b for a, b in zip(row, col) if a and b), mpq(0))
                        for col in ot])
        return Matrix(out)

    def matvec(self, v):
        assert len(v) == self.ncols
        return [sum((a * b for a, b in zip(row, v) if a and b), mpq(0))
                for row in self.rows]

    def _echelon(self):
        if self.nrows == 0 or self.ncols == 0:
            return [], []
        if self.field is None:
            rows = [_row_cleared(r) for r in self.rows]
            return _int_echelon(rows)
        return _generic_echelon([list(r) for r in self.rows])

    def rank(self) -> int:
        return len(self._echelon()[1])

    def det(self):
        """Determinant of a square matrix, by exact Gaussian elimination."""
        assert self.nrows == self.ncols
        one = mpq(1) if self.field is None else self.field(1)
        a = [list(row) for row in self.rows]
        acc = one
        for k in range(self.nrows):
            p = next((i for i in range(k, self.nrows) if a[i][k]), None)
            if p is None:
                return one - one
            if p != k:
                a[k], a[p] = a[p], a[k]
                acc = -acc
            piv = a[k][k]
            acc = acc * piv
            inv = piv.inverse() if isinstance(piv, Cyclotomic) else 1 / piv
            for i in range(k + 1, self.nrows):
                if a[i][k]:
                    c = a[i][k] * inv
                    a[i] = [x - c * y for x, y in zip(a[i], a[k])]
        return acc

    def kernel_basis(self):
        """Basis of the right kernel, deterministic, one vector per free column."""
        if self.ncols == 0:
            return []
        if self.nrows == 0:
            eye = Matrix.identity(self.ncols)
            return [list(r) for r in eye.rows]
        rows, pivots = self._echelon()
        return _kernel_from_echelon(rows, pivots, self.ncols, self.field is None)

    def solve(self, rhs):
        """One solution x of self @ x = rhs, or None if inconsistent.

        Free variables are set to zero, so the answer is deterministic.
        """
        assert len(rhs) == self.nrows
        aug = Matrix([list(row) + [b] for row, b in zip(self.rows, rhs)]) \
            if self.nrows else Matrix([])
        if self.nrows == 0:
            return [mpq(0)] * self.ncols
        rows, pivots = aug._echelon()
        n = self.ncols
        if any(c == n for _, c in pivots):
            return None
        zero = mpq(0) if self.field is None else self.field(0)
        x = [zero] * n
        for k in range(len(pivots) - 1, -1, -1):
            r, c = pivots[k]
            s = sum((rows[r][j] * x[j] for j in range(c + 1, n) if x[j]), zero)
            x[c] = (rows[r][n] - s) / rows[r][c] if self.field is None \
                else (rows[r][n] - s) * (rows[r][c].inverse()
                                         if isinstance(rows[r][c], Cyclotomic)
                                         else 1 / rows[r][c])
        return x

    def rref(self):
        """Reduced row echelon form (new Matrix) and its pivot columns."""
        rows, pivots = self._echelon()
        if self.field is None:
            qrows = [[mpq(x) for x in r] for r in rows]
        else:
            qrows = rows
        for k in range(len(pivots) - 1, -1, -1):
            r, c = pivots[k]
            piv = qrows[r][c]
            inv = 1 / piv if not isinstance(piv, Cyclotomic) else piv.inverse()
            qrows[r] = [x * inv for x in qrows[r]]
            for i in range(r):
                v = qrows[i][c]
                if v:
                    qrows[i] = [a - v * b for a, b in zip(qrows[i], qrows[r])]
        # pad with zero rows dropped by echelon bookkeeping, keep shape
        return Matrix(qrows), [c for _, c in pivots]


def _sparse_int_rows(mat: Matrix):
    """Denominator-cleared sparse rows [(col, int)] and the clearing factor."""
    den = mpz(1)
    for row in mat.rows:
        for x in row:
            den = den * x.denominator // _gcd(den, x.denominator)
    spar = [[(j, int(x * den)) for j, x in enumerate(row) if x]
            for row in mat.rows]
    return spar, den


def _modp_chain_lengths(spar, n, p):
    """Krylov deflation of the standard basis mod the prime p.

    Returns a list of (start index, chain length).  Reduction mod p can only
    shorten a chain, so each length is a lower bound for the exact one, and
    the chain vectors of the returned starts span GF(p)^n by construction,
    hence span Q^n as integer vectors.
    """
    def matvec(v):
        return [sum(c * v[t] for t, c in row) % p for row in spar]

    def insert(rows, pivots, v):
        v = list(v)
        for row, q in zip(rows, pivots):
            if v[q]:
                c = v[q]
                v = [(x - c * y) % p for x, y in zip(v, row)]
        q = next((t for t, x in enumerate(v) if x), None)
        if q is None:
            return None
        inv = pow(v[q], -1, p)
        rows.append([x * inv % p for x in v])
        pivots.append(q)
        return q

    union_rows, union_pivots = [], []
    chains = []
    for j in range(n):
        if len(union_rows) == n:
            break
        e = [0] * n
        e[j] = 1
        if insert(union_rows, union_pivots, e) is None:
            continue
        crows, cpivots = [], []
        insert(crows, cpivots, e)
        k, v = 1, e
        while True:
            v = matvec(v)
            if insert(crows, cpivots, v) is None:
                break
            insert(union_rows, union_pivots, v)
            k += 1
        chains.append((j, k))
    return chains


def _modp_inverse(rows, p):
    """Inverse of a square matrix mod the prime p, by Gauss-Jordan."""
    k = len(rows)
    aug = [list(r) + [1 if i == t else 0 for t in range(k)]
           for i, r in enumerate(rows)]
    for c in range(k):
        i = next((t for t in range(c, k) if aug[t][c]), None)
        if i is None:
            raise ValueError("matrix is singular modulo the prime")
        aug[c], aug[i] = aug[i], aug[c]
        inv = pow(aug[c][c], -1, p)
        aug[c] = [x * inv % p for x in aug[c]]
        for t in range(k):
            if t != c and aug[t][c]:
                f = aug[t][c]
                aug[t] = [(a - f * b) % p for a, b in zip(aug[t], aug[c])]
    return [row[k:] for row in aug]


def _chain_relation_dixon(spar, n, j, k, p, maxbits):
    """Monic integer relation of length k on the exact Krylov chain of e_j.

    The relation coefficients are integers (the matrix is integral and the
    relation is monic), so they can be recovered by p-adic lifting with
    balanced digits on a square subsystem whose rows are independent mod p:
    the residual vanishes exactly when the integer solution is complete.
    Raises ValueError when the lift exhausts `maxbits`, which is what
    happens when no relation of this length exists over Q and the mod-p
    chain length was an accident of the prime.
    """
    v = [0] * n
    v[j] = 1
    cols = [v]
    for _ in range(k):
        v = [sum(c * v[t] for t, c in row) for row in spar]
        cols.append(v)
    # pick k rows independent mod p
    sel, erows, epivs = [], [], []
    for r in range(n):
        if len(sel) == k:
            break
        w = [cols[i][r] % p for i in range(k)]
        for er, q in zip(erows, epivs):
            if w[q]:
                f = w[q]
                w = [(a - f * b) % p for a, b in zip(w, er)]
        q = next((t for t, x in enumerate(w) if x), None)
        if q is None:
            continue
        inv = pow(w[q], -1, p)
        erows.append([x * inv % p for x in w])
        epivs.append(q)
        sel.append(r)
    if len(sel) < k:
        raise ValueError("chain lost rank at the structural prime")
    W = [[cols[i][r] for i in range(k)] for r in sel]
    winv = _modp_inverse([[x % p for x in row] for row in W], p)
    x = [0] * k
    res = [cols[k][r] for r in sel]
    pk = 1
    bits = 0
    half = p // 2
    while any(res):
        if bits > maxbits:
            raise ValueError("p-adic lift exhausted its precision budget")
        rp = [ri % p for ri in res]
        d = [sum(a * b for a, b in zip(row, rp)) % p for row in winv]
        d = [di - p if di > half else di for di in d]
        x = [xi + pk * di for xi, di in zip(x, d)]
        wd = [sum(a * b for a, b in zip(row, d) if b) for row in W]
        res = [(ri - wdi) // p for ri, wdi in zip(res, wd)]
        pk *= p
        bits += 61
    return [-xi for xi in x] + [1]


def _poly_annihilates_exact(spar, n, coeffs, j) -> bool:
    """Exact integer Horner check that the monic polynomial kills e_j."""
    k = len(coeffs) - 1
    w = [0] * n
    w[j] = 1
    for i in range(k - 1, -1, -1):
        w = [sum(c * w[t] for t, c in row) for row in spar]
        if coeffs[i]:
            w[j] += coeffs[i]
    return not any(w)


def _minimal_polynomial_rational(mat: Matrix):
    """Minimal polynomial over Q via one structural prime and p-adic lifting.

    A pass mod a fixed prime finds the deflation starts and their chain
    lengths, which are lower bounds for the exact lengths.  Starts already
    annihilated by the lcm so far are settled by one exact evaluation;
    each remaining start gets a monic integer relation recovered by Dixon
    lifting and then certified by an exact integer evaluation, so no
    modular luck is ever trusted.  The lcm of the certified per-start
    polynomials kills a spanning set, hence is the minimal polynomial.
    Raises ValueError when a modular accident blocks the route.
    """
    n = mat.nrows
    spar, den = _sparse_int_rows(mat)
    chains = _modp_chain_lengths(spar, n, _WITNESS_PRIME)
    rowsum = max((sum(abs(c) for _, c in row) for row in spar), default=0)
    maxbits = n * (1 + max(int(rowsum), 1).bit_length()) + 64
    mu = [mpq(1)]
    mu_int = [1]
    for j, k in sorted(chains, key=lambda jk: -jk[1]):
        if len(mu_int) > 1 and _poly_annihilates_exact(spar, n, mu_int, j):
            continue
        rel = _chain_relation_dixon(spar, n, j, k, _WITNESS_PRIME, maxbits)
        if not _poly_annihilates_exact(spar, n, rel, j):
            raise ValueError("lifted chain relation failed its exact check")
        mu = poly_lcm(mu, [mpq(c) for c in rel])
        if any(c.denominator != 1 for c in mu):
            raise ValueError("lcm of integer relations left the integers")
        mu_int = [int(c) for c in mu]
    if den != 1:
        dgr = poly_deg(mu)
        mu = [c / mpq(den) ** (dgr - i) for i, c in enumerate(mu)]
    return mu


def minimal_polynomial(mat: Matrix):
    """Certified minimal polynomial of a square rational or cyclotomic matrix.

    Small and cyclotomic matrices grow exact Krylov chains directly; larger
    rational ones take the modular route, whose exact certificates keep the
    result unconditional.  Both paths return the same monic coefficient list.
    """
    n = mat.nrows
    assert n == mat.ncols
    if n == 0:
        return [mpq(1)]
    if mat.field is None and n > 12:
        try:
            return _minimal_polynomial_rational(mat)
        except ValueError:
            pass
    return _minimal_polynomial_generic(mat)


def _minimal_polynomial_generic(mat: Matrix):
    """Exact Krylov fallback, one chain per basis vector outside the union.

    The lcm of the per-vector minimal polynomials annihilates a spanning
    set, hence equals the minimal polynomial.
    """
    n = mat.nrows
    rational = mat.field is None
    zero = mpq(0) if rational else mat.field(0)
    one = mpq(1) if rational else mat.field(1)

    union_rows = []  # echelon rows for the union of all chains
    union_pivots = []  # column index per union row

    def reduce_against(rows, pivots, v):
        v = list(v)
        for row, p in zip(rows, pivots):
            if v[p]:
                c = v[p] / row[p] if rational else v[p] * row[p].inverse()
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def insert(rows, pivots, v):
        """Reduce v and insert if independent; returns pivot col or None."""
        v = reduce_against(rows, pivots, v)
        p = next((i for i, x in enumerate(v) if x), None)
        if p is None:
            return None
        rows.append(v)
        pivots.append(p)
        return p

    mu = [one]
    for j in range(n):
        e = [zero] * n
        e[j] = one
        if not any(reduce_against(union_rows, union_pivots, e)):
            continue
        # grow the Krylov chain of e until dependence
        chain = [e]
        chain_rows, chain_pivots = [], []
        insert(chain_rows, chain_pivots, e)
        v = e
        while True:
            v = mat.matvec(v)
            if insert(chain_rows, chain_pivots, v) is None:
                break
            chain.append(v)
        # dependence: v = sum c_i A^i e, solve on the chain
        coeffs = Matrix(list(zip(*chain))).solve(v)
        assert coeffs is not None
        mu_v = poly_trim([-c for c in coeffs] + [one])
        mu = poly_lcm(mu, mu_v)
        for w in chain:
            insert(union_rows, union_pivots, w)
        if len(union_rows) == n:
            break
    return mu


def semisimple_projection_poly(ann):
    """Newton lift p with p = t mod rad(ann) and rad(ann)(p) = 0 mod ann.

    For a matrix A annihilated by ann, p(A) is the semisimple part of A:
    rad(ann) is squarefree and kills p(A), and (t - p)(A) is nilpotent
    because t - p is divisible by rad(ann).
    """
    g = squarefree_part(ann)
    t = [mpq(0), mpq(1)]
    if poly_deg(g) == poly_deg(ann):
        return t  # already squarefree, A is semisimple
    dg = poly_deriv(g)
    p = t
    while True:
        gp = poly_compose_mod(g, p, ann)
        if not gp:
            return p
        dgp = poly_compose_mod(dg, p, ann)
        inv = poly_invmod(dgp, ann)
        p = poly_mod(poly_sub(p, poly_mul(gp, inv)), ann)


def _poly_powmod(a, e: int, q):
    out = [mpq(1)]
    base = poly_mod(a, q)
    while e:
        if e & 1:
            out = poly_mod(poly_mul(out, base), q)
        e >>= 1
        if e:
            base = poly_mod(poly_mul(base, base), q)
    return out


def semisimple_projection_inflated(q, k: int):
    """The projection polynomial for q(t**k), computed modulo q itself.

    When a matrix a maps each graded piece to the next and b = a**k is
    annihilated by q, the annihilator of a is q(t**k) and the projection
    lift p happens to be t times a polynomial in t**k.  This runs the
    Newton iteration of semisimple_projection_poly directly on that inner
    polynomial: writing p = t*v(t**k) and w = t**k * v**k, the residues
    that the iteration touches are

        g(p)  = v**d * sigma(w),   with  rad(q) = s**d * sigma(s),
        g'(p) = sigma(w) + k*w*sigma'(w)          for d = 1,
        g'(p) = t**(k-1) * k*v**(k-1)*sigma'(w)   for d = 0,

    so every product and inverse lives in F[s]/(q), one k-th of the
    degree the direct lift would carry.  Returns v with deg v < deg q;
    p(b) applied blockwise is then a @ v(b).
    """
    assert k >= 2
    g = squarefree_part(q)
    d = 0 if g[0] else 1
    sigma = g[1:] if d else g
    dsigma = poly_deriv(sigma)
    s = [mpq(0), mpq(1)]
    v = [mpq(1)]
    while True:
        vk1 = _poly_powmod(v, k - 1, q)
        w = poly_mod(poly_mul(s, poly_mod(poly_mul(vk1, v), q)), q)
        sw = poly_compose_mod(sigma, w, q)
        gp = poly_mod(poly_mul(v, sw), q) if d else sw
        if not gp:
            return v
        dsw = poly_compose_mod(dsigma, w, q)
        if d:
            dgp = poly_mod(poly_add(sw, poly_scale(poly_mul(w, dsw), k)), q)
        else:
            dgp = poly_mod(poly_scale(poly_mul(poly_mul(s, vk1), dsw), k), q)
        upd = poly_mul(gp, poly_invmod(dgp, q))
        v = poly_mod(poly_sub(v, upd), q)
