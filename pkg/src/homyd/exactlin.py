"""Exact rational scalars and small dense linear/tensor algebra.

Every structure map in this library (multiplication, comultiplication,
antipode, twists, actions, coactions, braidings) is ultimately a LinearMap
over the rationals, acting on column coordinate vectors.  Tensor legs are
flattened with the fixed convention (i, j) -> i * dim_right + j; Kronecker
products and slot permutations below follow the same convention.

All values are immutable after construction and all operations are pure,
so everything here is safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction

#: Ground-field scalar.  Exact rational in canonical form: positive
#: denominator, gcd(|num|, den) = 1.  Equality is structural.
Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(num, den=1):
    """Exact rational; accepts ints or strings like '-2/3'."""
    return Fraction(num, den)


class DimensionMismatch(ValueError):
    """Shapes do not compose; this is always a hard error, never silent."""


class SingularMap(ArithmeticError):
    """Inversion of a map with zero determinant (e.g. a non-bijective
    antipode candidate)."""


class LinearMap:
    """Dense rows x cols matrix of exact rationals.

    Maps act on column coordinate vectors, so ``(f @ g)`` means "apply g
    first, then f".  This convention is fixed across the library.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(
            e if type(e) is Fraction else Fraction(e) for e in entries
        )
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                "expected %d entries for %dx%d, got %d"
                % (rows * cols, rows, cols, len(entries))
            )
        self.rows = rows
        self.cols = cols
        self.entries = entries

    # -- constructors ------------------------------------------------

    @classmethod
    def identity(cls, n):
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def diagonal(cls, values):
        values = [Fraction(v) for v in values]
        n = len(values)
        return cls(n, n, [values[i] if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def from_rows(cls, rows):
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != nc:
                raise DimensionMismatch("ragged rows")
            flat.extend(r)
        return cls(nr, nc, flat)

    @classmethod
    def from_cols(cls, cols):
        return cls.from_rows(cols).transpose()

    # -- access ------------------------------------------------------

    def entry(self, i, j):
        return self.entries[i * self.cols + j]

    def column(self, j):
        c = self.cols
        return tuple(self.entries[i * c + j] for i in range(self.rows))

    def row(self, i):
        c = self.cols
        return self.entries[i * c : (i + 1) * c]

    def apply(self, vec):
        """Image of a column coordinate vector."""
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length %d, map has %d columns" % (len(vec), self.cols))
        out = [ZERO] * self.rows
        e = self.entries
        c = self.cols
        for j, vj in enumerate(vec):
            if vj:
                for i in range(self.rows):
                    eij = e[i * c + j]
                    if eij:
                        out[i] += eij * vj
        return tuple(out)

    def transpose(self):
        return LinearMap(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    @property
    def is_square(self):
        return self.rows == self.cols

    def is_identity(self):
        if not self.is_square:
            return False
        return self == LinearMap.identity(self.rows)

    # -- algebra -----------------------------------------------------

    def __matmul__(self, other):
        return compose(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, LinearMap)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "LinearMap(%d, %d, %r)" % (self.rows, self.cols, list(self.entries))

    def __str__(self):
        width = max((len(str(e)) for e in self.entries), default=1)
        lines = []
        for i in range(self.rows):
            lines.append("  ".join(str(e).rjust(width) for e in self.row(i)))
        return "\n".join(lines)


def compose(f, g):
    """Matrix product f . g (apply g first)."""
    if f.cols != g.rows:
        raise DimensionMismatch(
            "cannot compose %dx%d with %dx%d" % (f.rows, f.cols, g.rows, g.cols)
        )
    out = [ZERO] * (f.rows * g.cols)
    fe, ge = f.entries, g.entries
    fc, gc = f.cols, g.cols
    for i in range(f.rows):
        frow = i * fc
        orow = i * gc
        for k in range(fc):
            fik = fe[frow + k]
            if fik:
                grow = k * gc
                for j in range(gc):
                    gkj = ge[grow + j]
                    if gkj:
                        out[orow + j] += fik * gkj
    return LinearMap(f.rows, g.cols, out)


def kron(f, g):
    """Kronecker product realising f (x) g on flattened tensor coordinates.

    Index convention: basis vector (i, j) of the domain sits at i*g.cols + j,
    matching the global flattening.
    """
    rows = f.rows * g.rows
    cols = f.cols * g.cols
    out = [ZERO] * (rows * cols)
    for i1 in range(f.rows):
        for j1 in range(f.cols):
            a = f.entries[i1 * f.cols + j1]
            if not a:
                continue
            for i2 in range(g.rows):
                base = (i1 * g.rows + i2) * cols + j1 * g.cols
                grow = i2 * g.cols
                for j2 in range(g.cols):
                    b = g.entries[grow + j2]
                    if b:
                        out[base + j2] = a * b
    return LinearMap(rows, cols, out)


def kron_all(*maps):
    acc = maps[0]
    for m in maps[1:]:
        acc = kron(acc, m)
    return acc


def flip(d1, d2):
    """Permutation map X (x) Y -> Y (x) X for dim(X)=d1, dim(Y)=d2."""
    n = d1 * d2
    out = [ZERO] * (n * n)
    for i in range(d1):
        for j in range(d2):
            out[(j * d1 + i) * n + (i * d2 + j)] = ONE
    return LinearMap(n, n, out)


def invert(f):
    """Exact inverse by Gauss-Jordan elimination over the rationals.

    Raises SingularMap when the determinant vanishes.
    """
    if not f.is_square:
        raise DimensionMismatch("only square maps can be inverted")
    n = f.rows
    a = [list(f.row(i)) for i in range(n)]
    b = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if a[r][col]:
                pivot = r
                break
        if pivot is None:
            raise SingularMap("matrix is singular at column %d" % col)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            b[col], b[pivot] = b[pivot], b[col]
        p = a[col][col]
        if p != ONE:
            a[col] = [x / p for x in a[col]]
            b[col] = [x / p for x in b[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
                b[r] = [x - factor * y for x, y in zip(b[r], b[col])]
    return LinearMap(n, n, [x for row_ in b for x in row_])


class Tensor3:
    """Rank-3 array of exact rationals in lexicographic index order.

    Houses structure constants, e.g. a multiplication table
    m(e_i (x) e_j) = sum_k t[i, j, k] e_k.
    """

    __slots__ = ("dims", "entries")

    def __init__(self, dims, entries):
        d0, d1, d2 = dims
        entries = tuple(
            e if type(e) is Fraction else Fraction(e) for e in entries
        )
        if len(entries) != d0 * d1 * d2:
            raise DimensionMismatch(
                "expected %d entries for dims %r, got %d" % (d0 * d1 * d2, dims, len(entries))
            )
        self.dims = (d0, d1, d2)
        self.entries = entries

    @classmethod
    def zeros(cls, dims):
        d0, d1, d2 = dims
        return cls(dims, [ZERO] * (d0 * d1 * d2))

    @classmethod
    def from_dict(cls, dims, data):
        """Sparse constructor: data maps (i, j, k) -> scalar."""
        d0, d1, d2 = dims
        entries = [ZERO] * (d0 * d1 * d2)
        for (i, j, k), v in data.items():
            if not (0 <= i < d0 and 0 <= j < d1 and 0 <= k < d2):
                raise DimensionMismatch("index %r out of range for dims %r" % ((i, j, k), dims))
            entries[(i * d1 + j) * d2 + k] = Fraction(v)
        return cls(dims, entries)

    def at(self, i, j, k):
        d0, d1, d2 = self.dims
        return self.entries[(i * d1 + j) * d2 + k]

    def fiber(self, i, j):
        """Dense vector t[i, j, :]."""
        d0, d1, d2 = self.dims
        base = (i * d1 + j) * d2
        return self.entries[base : base + d2]

    def sparse_pairs(self, i):
        """Nonzero terms of slice i as a list of (j, k, coefficient)."""
        d0, d1, d2 = self.dims
        out = []
        base = i * d1 * d2
        for j in range(d1):
            for k in range(d2):
                v = self.entries[base + j * d2 + k]
                if v:
                    out.append((j, k, v))
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Tensor3)
            and self.dims == other.dims
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.dims, self.entries))

    def __repr__(self):
        return "Tensor3(%r, <%d entries>)" % (self.dims, len(self.entries))


# -- coordinate vector helpers --------------------------------------


def tensor_vec(u, v):
    """Flattened u (x) v."""
    out = [ZERO] * (len(u) * len(v))
    nv = len(v)
    for i, ui in enumerate(u):
        if ui:
            base = i * nv
            for j, vj in enumerate(v):
                if vj:
                    out[base + j] = ui * vj
    return out


def add_scaled(acc, vec, coef):
    """acc += coef * vec, in place."""
    if not coef:
        return
    for i, x in enumerate(vec):
        if x:
            acc[i] += coef * x


def basis_vec(dim, k):
    v = [ZERO] * dim
    v[k] = ONE
    return tuple(v)
