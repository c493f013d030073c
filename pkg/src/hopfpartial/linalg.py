"""Deterministic exact linear algebra over a ground field.

Vectors are plain lists of scalars and are treated as rows: a linear map is
a matrix whose i-th row is the image of the i-th basis vector, applied as
``v @ M``.  Subspaces always carry their reduced row echelon basis, so two
subspaces are equal exactly when their basis grids are equal.
"""

from __future__ import annotations

from .errors import DimensionMismatch, SingularMatrixError


def zero_vec(field, n):
    return [field.zero] * n


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]

def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v):
    return [c * a for a in v]


def vec_is_zero(v):
    return not any(v)


def unit_vec(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return v


class Matrix:
    """Dense matrix over an exact field."""

    __slots__ = ("field", "rows", "ncols")

    def __init__(self, field, rows, ncols=None):
        rows = [list(r) for r in rows]
        if rows:
            w = len(rows[0])
            for r in rows:
                if len(r) != w:
                    raise DimensionMismatch("ragged rows")
            if ncols is not None and ncols != w:
                raise DimensionMismatch("ncols disagrees with row width")
            ncols = w
        elif ncols is None:
            ncols = 0
        self.field = field
        self.rows = rows
        self.ncols = ncols

    @property
    def nrows(self):
        return len(self.rows)

    @classmethod
    def identity(cls, field, n):
        return cls(field, [unit_vec(field, n, i) for i in range(n)])

    @classmethod
    def zeros(cls, field, r, c):
        return cls(field, [zero_vec(field, c) for _ in range(r)], ncols=c)

    def copy(self):
        return Matrix(self.field, [list(r) for r in self.rows], ncols=self.ncols)

    def transpose(self):
        return Matrix(
            self.field,
            [[self.rows[r][c] for r in range(self.nrows)] for c in range(self.ncols)],
            ncols=self.nrows,
        )

    def mul(self, other):
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.nrows}x{self.ncols} times {other.nrows}x{other.ncols}")
        zero = self.field.zero
        out = []
        for row in self.rows:
            acc = [zero] * other.ncols
            for k, a in enumerate(row):
                if not a:
                    continue
                orow = other.rows[k]
                for j, b in enumerate(orow):
                    if b:
                        acc[j] = acc[j] + a * b
            out.append(acc)
        return Matrix(self.field, out, ncols=other.ncols)

    def apply_row(self, v):
        """Row vector times matrix: the map sending basis i to row i."""
        if len(v) != self.nrows:
            raise DimensionMismatch(f"vector of length {len(v)} into {self.nrows} rows")
        acc = [self.field.zero] * self.ncols
        for i, c in enumerate(v):
            if not c:
                continue
            row = self.rows[i]
            for j, b in enumerate(row):
                if b:
                    acc[j] = acc[j] + c * b
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def rref(self):
        """Reduced row echelon form.  Returns (matrix, rank, pivot columns)."""
        rows = [list(r) for r in self.rows]
        nr, nc = len(rows), self.ncols
        pivots = []
        r = 0
        for c in range(nc):
            if r == nr:
                break
            src = None
            for i in range(r, nr):
                if rows[i][c]:
                    src = i
                    break
            if src is None:
                continue
            rows[r], rows[src] = rows[src], rows[r]
            inv = self.field.one / rows[r][c]
            if inv != self.field.one:
                rows[r] = [inv * a for a in rows[r]]
            for i in range(nr):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return Matrix(self.field, rows, ncols=nc), r, tuple(pivots)

    def rank(self):
        return self.rref()[1]

    def inverse(self):
        if self.nrows != self.ncols:
            raise SingularMatrixError("only square matrices invert")
        n = self.nrows
        aug = Matrix(
            self.field,
            [self.rows[i] + unit_vec(self.field, n, i) for i in range(n)],
            ncols=2 * n,
        )
        red, rank, pivots = aug.rref()
        if pivots[:n] != tuple(range(n)):
            raise SingularMatrixError("matrix is singular")
        return Matrix(self.field, [r[n:] for r in red.rows], ncols=n)

    def left_kernel(self):
        """Matrix whose rows span {x : x @ self == 0}."""
        return Matrix(self.field, _nullspace(self.transpose()), ncols=self.nrows)


def _nullspace(m):
    """Vectors y with m @ y^T == 0, read off the rref free columns."""
    red, rank, pivots = m.rref()
    field = m.field
    n = m.ncols
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = zero_vec(field, n)
        v[free] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -red.rows[r][free]
        basis.append(v)
    return basis


def solve_left(m, b):
    """One solution x of x @ m == b, or None if inconsistent."""
    if len(b) != m.ncols:
        raise DimensionMismatch("rhs length disagrees with column count")
    mt = m.transpose()
    aug = Matrix(m.field, [mt.rows[i] + [b[i]] for i in range(mt.nrows)], ncols=m.nrows + 1)
    red, rank, pivots = aug.rref()
    if m.nrows in pivots:
        return None
    x = zero_vec(m.field, m.nrows)
    for r, pc in enumerate(pivots):
        x[pc] = red.rows[r][m.nrows]
    return x


class Subspace:
    """A subspace of k^n held by its canonical (rref) basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim, basis, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def span(cls, field, ambient_dim, vectors):
        vectors = list(vectors)
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch("spanning vector of wrong length")
        red, rank, pivots = Matrix(field, vectors, ncols=ambient_dim).rref()
        return cls(field, ambient_dim, [red.rows[i] for i in range(rank)], pivots)

    @classmethod
    def full(cls, field, n):
        return cls.span(field, n, Matrix.identity(field, n).rows)

    @property
    def dim(self):
        return len(self.basis)

    def is_zero(self):
        return not self.basis

    def coordinates(self, v):
        """Coordinates of v in the canonical basis, or None if v is outside."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector of wrong length")
        coords = [v[pc] for pc in self.pivots]
        residual = list(v)
        for c, row in zip(coords, self.basis):
            if c:
                residual = [a - c * b for a, b in zip(residual, row)]
        if any(residual):
            return None
        return coords

    def contains(self, v):
        return self.coordinates(v) is not None

    def contains_space(self, other):
        return all(self.contains(v) for v in other.basis)

    def lift(self, coords):
        """Ambient vector with the given coordinates in the canonical basis."""
        if len(coords) != self.dim:
            raise DimensionMismatch("coordinate vector of wrong length")
        acc = zero_vec(self.field, self.ambient_dim)
        for c, row in zip(coords, self.basis):
            if c:
                acc = [a + c * b for a, b in zip(acc, row)]
        return acc

    def add(self, other):
        self._check_compatible(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def intersect(self, other):
        self._check_compatible(other)
        if self.is_zero() or other.is_zero():
            return Subspace.span(self.field, self.ambient_dim, [])
        stacked = Matrix(self.field, self.basis + other.basis, ncols=self.ambient_dim)
        k = self.dim
        vectors = []
        for combo in stacked.left_kernel().rows:
            v = zero_vec(self.field, self.ambient_dim)
            for c, row in zip(combo[:k], self.basis):
                if c:
                    v = [a + c * b for a, b in zip(v, row)]
            vectors.append(v)
        return Subspace.span(self.field, self.ambient_dim, vectors)

    def _check_compatible(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspaces of different ambient spaces")

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def closure_bilinear(field, ambient_dim, seed, product, unit=None):
    """Smallest product-closed subspace containing seed (and unit if given).

    ``product`` maps two ambient vectors to an ambient vector.  Iteration is
    a deterministic fixed point: at most ambient_dim rounds since dimension
    strictly grows until stable.
    """
    start = list(seed)
    if unit is not None:
        start = start + [unit]
    space = Subspace.span(field, ambient_dim, start)
    while True:
        products = []
        for u in space.basis:
            for v in space.basis:
                products.append(product(u, v))
        grown = space.add(Subspace.span(field, ambient_dim, products))
        if grown.dim == space.dim:
            return space
        space = grown
