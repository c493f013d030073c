"""Finite-dimensional (co)algebras and Hopf algebras as exact structure constants.

Multiplication is stored sparsely: ``mult[(i, j)]`` is the list of
``(k, coeff)`` pairs of the product of basis elements i and j.  Comultiplication
is ``comult[i]`` as ``(j, k, coeff)`` triples meaning a summand b_j (x) b_k.
Tensor legs are indexed row-major: the pair (i, j) in V (x) W sits at
``i * dim(W) + j``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, ShapeError, VerificationError
from .linalg import Matrix, closure_bilinear, solve_left, unit_vec
from .reporting import VerificationReport


def kron_index(i, j, dim_j):
    return i * dim_j + j


def tensor_vec(field, u, v):
    """Coordinates of u (x) v in the row-major tensor basis."""
    n = len(v)
    out = [field.zero] * (len(u) * n)
    for i, a in enumerate(u):
        if not a:
            continue
        base = i * n
        for j, b in enumerate(v):
            if b:
                out[base + j] = a * b
    return out


def sparsify(vec):
    return [(k, c) for k, c in enumerate(vec) if c]


def densify(field, dim, entries):
    out = [field.zero] * dim
    for k, c in entries:
        out[k] = out[k] + c
    return out


@dataclass
class AlgebraData:
    """An algebra by structure constants; unit is None for non-unital algebras."""

    field: object
    labels: list
    mult: dict
    unit: object = None

    @property
    def dim(self):
        return len(self.labels)

    @classmethod
    def from_dense(cls, field, labels, tensor, unit=None):
        mult = {}
        for i, row in enumerate(tensor):
            for j, vec in enumerate(row):
                ent = sparsify(vec)
                if ent:
                    mult[(i, j)] = ent
        return cls(field, list(labels), mult, unit)

    @classmethod
    def from_entries(cls, field, labels, entries, unit=None):
        """entries: iterable of (i, j, k, coeff) quadruples."""
        mult = {}
        for i, j, k, c in entries:
            if c:
                mult.setdefault((i, j), []).append((k, c))
        for key in mult:
            mult[key] = _merge_sparse(mult[key])
        return cls(field, list(labels), mult, unit)

    def basis_vec(self, i):
        return unit_vec(self.field, self.dim, i)

    def mul_basis(self, i, j):
        return self.mult.get((i, j), [])

    def mul(self, u, v):
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatch("vector of wrong length for this algebra")
        out = [self.field.zero] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                c = a * b
                for k, m in self.mul_basis(i, j):
                    out[k] = out[k] + c * m
        return out

    def left_mult_matrix(self, u):
        """Matrix of v -> u * v in the row convention."""
        return Matrix(self.field, [self.mul(u, self.basis_vec(j)) for j in range(self.dim)])

    def right_mult_matrix(self, u):
        return Matrix(self.field, [self.mul(self.basis_vec(j), u) for j in range(self.dim)])

    def entries(self):
        for (i, j) in sorted(self.mult):
            for k, c in self.mult[(i, j)]:
                yield i, j, k, c

    def structure_equal(self, other):
        return (
            self.dim == other.dim
            and self.mult == other.mult
            and self.unit == other.unit
        )

    def relabeled(self, labels):
        return AlgebraData(self.field, list(labels), self.mult, self.unit)


def _merge_sparse(entries):
    acc = {}
    for k, c in entries:
        acc[k] = acc.get(k, None)
        acc[k] = c if acc[k] is None else acc[k] + c
    return [(k, acc[k]) for k in sorted(acc) if acc[k]]


@dataclass
class CoalgebraData:
    """A coalgebra by structure constants."""

    field: object
    dim: int
    comult: dict
    counit: list

    @classmethod
    def from_entries(cls, field, dim, entries, counit):
        comult = {}
        for i, j, k, c in entries:
            if c:
                comult.setdefault(i, []).append((j, k, c))
        for key in comult:
            comult[key] = _merge_triples(comult[key])
        return cls(field, dim, comult, list(counit))

    def comult_basis(self, i):
        return self.comult.get(i, [])

    def comult_vec(self, v):
        """Comultiplication of a vector, as merged (j, k, coeff) triples."""
        acc = {}
        for i, a in enumerate(v):
            if not a:
                continue
            for j, k, c in self.comult_basis(i):
                key = (j, k)
                acc[key] = acc.get(key, self.field.zero) + a * c
        return [(j, k, c) for (j, k), c in sorted(acc.items()) if c]

    def comult_dense(self, v):
        out = [self.field.zero] * (self.dim * self.dim)
        for j, k, c in self.comult_vec(v):
            out[kron_index(j, k, self.dim)] = c
        return out

    def counit_apply(self, v):
        return sum((a * e for a, e in zip(v, self.counit) if a and e), self.field.zero)

    def entries(self):
        for i in sorted(self.comult):
            for j, k, c in self.comult[i]:
                yield i, j, k, c

    def structure_equal(self, other):
        return self.dim == other.dim and self.comult == other.comult and self.counit == other.counit


def _merge_triples(entries):
    acc = {}
    for j, k, c in entries:
        key = (j, k)
        acc[key] = acc.get(key, None)
        acc[key] = c if acc[key] is None else acc[key] + c
    return [(j, k, acc[(j, k)]) for (j, k) in sorted(acc) if acc[(j, k)]]


@dataclass
class HopfAlgebraData:
    """Hopf algebra: compatible algebra and coalgebra plus an invertible antipode."""

    algebra: AlgebraData
    coalgebra: CoalgebraData
    antipode: Matrix
    antipode_inv: Matrix = None

    def __post_init__(self):
        if self.algebra.unit is None:
            raise ShapeError("a Hopf algebra needs a unital underlying algebra")
        if self.coalgebra.dim != self.algebra.dim:
            raise DimensionMismatch("algebra and coalgebra of different dimension")
        if self.antipode.nrows != self.algebra.dim or self.antipode.ncols != self.algebra.dim:
            raise DimensionMismatch("antipode matrix of wrong shape")
        if self.antipode_inv is None:
            self.antipode_inv = self.antipode.inverse()

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def field(self):
        return self.algebra.field

    @property
    def labels(self):
        return self.algebra.labels

    @property
    def unit(self):
        return self.algebra.unit

    @property
    def counit(self):
        return self.coalgebra.counit

    def basis_vec(self, i):
        return self.algebra.basis_vec(i)

    def mul(self, u, v):
        return self.algebra.mul(u, v)

    def comult_basis(self, i):
        return self.coalgebra.comult_basis(i)

    def comult_vec(self, v):
        return self.coalgebra.comult_vec(v)

    def antipode_apply(self, v):
        return self.antipode.apply_row(v)

    def antipode_inv_apply(self, v):
        return self.antipode_inv.apply_row(v)

    def structure_equal(self, other):
        return (
            self.algebra.structure_equal(other.algebra)
            and self.coalgebra.structure_equal(other.coalgebra)
            and self.antipode == other.antipode
        )


def verify_algebra(a):
    """Associativity on all basis triples plus unit laws when a unit is present."""
    rep = VerificationReport()
    d = a.dim
    bad = ""
    for i in range(d):
        for j in range(d):
            ij = densify(a.field, d, a.mul_basis(i, j))
            for k in range(d):
                left = a.mul(ij, a.basis_vec(k))
                right = a.mul(a.basis_vec(i), densify(a.field, d, a.mul_basis(j, k)))
                if left != right:
                    bad = bad or f"(i={i}, j={j}, k={k})"
    rep.add("algebra.associativity", not bad, bad)
    if a.unit is not None:
        bad = ""
        for i in range(d):
            e = a.basis_vec(i)
            if a.mul(a.unit, e) != e or a.mul(e, a.unit) != e:
                bad = bad or f"(i={i})"
        rep.add("algebra.unit", not bad, bad)
    return rep


def verify_coalgebra(c):
    """Coassociativity and counit laws on every basis element."""
    rep = VerificationReport()
    d = c.dim
    bad = ""
    for i in range(d):
        left = {}
        right = {}
        for j, k, u in c.comult_basis(i):
            for p, q, v in c.comult_basis(j):
                key = (p, q, k)
                left[key] = left.get(key, c.field.zero) + u * v
            for p, q, v in c.comult_basis(k):
                key = (j, p, q)
                right[key] = right.get(key, c.field.zero) + u * v
        left = {k: v for k, v in left.items() if v}
        right = {k: v for k, v in right.items() if v}
        if left != right:
            bad = bad or f"(i={i})"
    rep.add("coalgebra.coassociativity", not bad, bad)
    bad = ""
    for i in range(d):
        lhs = [c.field.zero] * d
        rhs = [c.field.zero] * d
        for j, k, u in c.comult_basis(i):
            lhs[k] = lhs[k] + u * c.counit[j]
            rhs[j] = rhs[j] + u * c.counit[k]
        e = unit_vec(c.field, d, i)
        if lhs != e or rhs != e:
            bad = bad or f"(i={i})"
    rep.add("coalgebra.counit", not bad, bad)
    return rep


def _comult_of_product(h, i, j):
    """Delta(b_i) * Delta(b_j) in the tensor square, as a (u, v) -> coeff dict."""
    acc = {}
    for p, q, c in h.comult_basis(i):
        for r, s, d in h.comult_basis(j):
            cd = c * d
            for u, m in h.algebra.mul_basis(p, r):
                for v, n in h.algebra.mul_basis(q, s):
                    key = (u, v)
                    acc[key] = acc.get(key, h.field.zero) + cd * m * n
    return {k: v for k, v in acc.items() if v}


def verify_structure(h):
    """Full Hopf verification: (co)algebra, bialgebra compatibility, antipode."""
    rep = VerificationReport()
    rep.extend(verify_algebra(h.algebra))
    rep.extend(verify_coalgebra(h.coalgebra))
    d = h.dim
    f = h.field

    bad = ""
    for i in range(d):
        for j in range(d):
            lhs = {}
            for k, m in h.algebra.mul_basis(i, j):
                for p, q, c in h.comult_basis(k):
                    key = (p, q)
                    lhs[key] = lhs.get(key, f.zero) + m * c
            lhs = {k: v for k, v in lhs.items() if v}
            if lhs != _comult_of_product(h, i, j):
                bad = bad or f"(i={i}, j={j})"
    rep.add("bialgebra.comult_multiplicative", not bad, bad)

    unit_cm = h.comult_vec(h.unit)
    want = {}
    for i, a in enumerate(h.unit):
        for j, b in enumerate(h.unit):
            if a and b and a * b:
                want[(i, j)] = a * b
    got = {(j, k): c for j, k, c in unit_cm}
    rep.add("bialgebra.comult_unit", got == want)

    bad = ""
    for i in range(d):
        for j in range(d):
            lhs = sum((m * h.counit[k] for k, m in h.algebra.mul_basis(i, j)), f.zero)
            if lhs != h.counit[i] * h.counit[j]:
                bad = bad or f"(i={i}, j={j})"
    rep.add("bialgebra.counit_multiplicative", not bad, bad)
    rep.add("bialgebra.counit_unit", h.coalgebra.counit_apply(h.unit) == f.one)

    bad_l = ""
    bad_r = ""
    for i in range(d):
        left = [f.zero] * d
        right = [f.zero] * d
        for j, k, c in h.comult_basis(i):
            sj = h.antipode.rows[j]
            sk = h.antipode.rows[k]
            t = h.mul(sj, h.algebra.basis_vec(k))
            left = [a + c * b for a, b in zip(left, t)]
            t = h.mul(h.algebra.basis_vec(j), sk)
            right = [a + c * b for a, b in zip(right, t)]
        want = [h.counit[i] * u for u in h.unit]
        if left != want:
            bad_l = bad_l or f"(i={i})"
        if right != want:
            bad_r = bad_r or f"(i={i})"
    rep.add("antipode.left", not bad_l, bad_l)
    rep.add("antipode.right", not bad_r, bad_r)
    ident = Matrix.identity(f, d)
    rep.add("antipode.inverse", h.antipode.mul(h.antipode_inv) == ident
            and h.antipode_inv.mul(h.antipode) == ident)
    return rep


def dual_hopf(h):
    """The dual Hopf algebra on the dual basis.

    Multiplication is the transpose of the comultiplication, comultiplication
    the transpose of the multiplication, the unit is the counit and vice
    versa, and the antipode is the transpose of the antipode.
    """
    verify_structure(h).require("dual_hopf input")
    d = h.dim
    mult_entries = []
    for i in sorted(h.coalgebra.comult):
        for j, k, c in h.coalgebra.comult[i]:
            mult_entries.append((j, k, i, c))
    comult_entries = []
    for (i, j) in sorted(h.algebra.mult):
        for k, c in h.algebra.mult[(i, j)]:
            comult_entries.append((k, i, j, c))
    labels = [f"{l}*" for l in h.labels]
    alg = AlgebraData.from_entries(h.field, labels, mult_entries, unit=list(h.counit))
    coa = CoalgebraData.from_entries(h.field, d, comult_entries, counit=list(h.unit))
    out = HopfAlgebraData(alg, coa, h.antipode.transpose())
    verify_structure(out).require("dual_hopf output")
    return out


def tensor_product_algebra(a, b, label_sep="(x)"):
    """Componentwise product on the row-major tensor basis."""
    labels = [f"{la}{label_sep}{lb}" for la in a.labels for lb in b.labels]
    mult = {}
    for (i, k) in sorted(a.mult):
        av = a.mult[(i, k)]
        for (j, l) in sorted(b.mult):
            bv = b.mult[(j, l)]
            ent = []
            for p, c in av:
                for q, e in bv:
                    ent.append((kron_index(p, q, b.dim), c * e))
            mult[(kron_index(i, j, b.dim), kron_index(k, l, b.dim))] = _merge_sparse(ent)
    unit = None
    if a.unit is not None and b.unit is not None:
        unit = tensor_vec(a.field, a.unit, b.unit)
    return AlgebraData(a.field, labels, mult, unit)


def end_algebra(field, n):
    """Matrix units E[i,j] composing by E[i,j] E[k,l] = delta_{jk} E[i,l]."""
    labels = [f"E[{i},{j}]" for i in range(n) for j in range(n)]
    mult = {}
    for i in range(n):
        for j in range(n):
            for l in range(n):
                mult[(kron_index(i, j, n), kron_index(j, l, n))] = [(kron_index(i, l, n), field.one)]
    unit = [field.zero] * (n * n)
    for i in range(n):
        unit[kron_index(i, i, n)] = field.one
    return AlgebraData(field, labels, mult, unit)


def operator_to_end(m):
    """Coordinates in the E[i,j] basis of the operator given as a row matrix.

    Row convention: m.rows[j] is the image of basis j, so the coefficient of
    E[i,j] (the operator sending basis j to basis i) is m.rows[j][i].
    """
    n = m.nrows
    out = [m.field.zero] * (n * n)
    for j in range(n):
        for i in range(n):
            out[kron_index(i, j, n)] = m.rows[j][i]
    return out


def end_to_operator(field, vec, n):
    rows = [[vec[kron_index(i, j, n)] for i in range(n)] for j in range(n)]
    return Matrix(field, rows, ncols=n)


def matrix_algebra(b, n):
    """n x n matrices over the algebra b, on the basis b_s E[i,j]."""
    out = tensor_product_algebra(b, end_algebra(b.field, n), label_sep="")
    labels = [f"{lb}E[{i},{j}]" for lb in b.labels for i in range(n) for j in range(n)]
    return out.relabeled(labels)


@dataclass(frozen=True)
class LinearMapData:
    """A linear map as a row-convention matrix: row i is the image of basis i."""

    matrix: Matrix

    @property
    def domain_dim(self):
        return self.matrix.nrows

    @property
    def codomain_dim(self):
        return self.matrix.ncols

    def apply(self, v):
        return self.matrix.apply_row(v)

    def then(self, other):
        return LinearMapData(self.matrix.mul(other.matrix))

    def rank(self):
        return self.matrix.rank()

    def is_injective(self):
        return self.rank() == self.domain_dim


def check_algebra_morphism(f, a, b, check_unit=True):
    """f : a -> b multiplicative, and unit-preserving when both units exist."""
    rep = VerificationReport()
    bad = ""
    for i in range(a.dim):
        fi = f.apply(a.basis_vec(i))
        for j in range(a.dim):
            lhs = f.apply(densify(a.field, a.dim, a.mul_basis(i, j)))
            rhs = b.mul(fi, f.apply(a.basis_vec(j)))
            if lhs != rhs:
                bad = bad or f"(i={i}, j={j})"
    rep.add("morphism.multiplicative", not bad, bad)
    if check_unit and a.unit is not None and b.unit is not None:
        rep.add("morphism.unit", f.apply(a.unit) == b.unit)
    return rep


def check_isomorphism(f, a, b):
    rep = check_algebra_morphism(f, a, b)
    rep.add("morphism.square", a.dim == b.dim and f.domain_dim == a.dim and f.codomain_dim == b.dim)
    rep.add("morphism.bijective", f.rank() == a.dim)
    return rep


def subalgebra_generated(a, seeds, include_unit=False):
    unit = a.unit if include_unit else None
    return closure_bilinear(a.field, a.dim, seeds, a.mul, unit=unit)


def find_unit(a):
    """Two-sided unit of the algebra, or None.  Solves the linear unit laws."""
    d = a.dim
    if d == 0:
        return None
    cols = []
    rhs = []
    # u * b_i = b_i and b_i * u = b_i, one column per (side, i, t)
    for i in range(d):
        for t in range(d):
            cols.append([densify(a.field, d, a.mul_basis(s, i))[t] for s in range(d)])
            rhs.append(a.field.one if t == i else a.field.zero)
    for i in range(d):
        for t in range(d):
            cols.append([densify(a.field, d, a.mul_basis(i, s))[t] for s in range(d)])
            rhs.append(a.field.one if t == i else a.field.zero)
    m = Matrix(a.field, cols, ncols=d).transpose()
    return solve_left(m, rhs)


def restrict_algebra(ambient, sub, labels=None, unit=None):
    """Structure constants of a product-closed subspace, on its canonical basis.

    Raises VerificationError if the subspace is not closed under the product.
    If ``unit`` is not given, a two-sided unit is searched for; None means the
    restricted algebra is non-unital.
    """
    m = sub.dim
    if labels is None:
        labels = [f"v{r}" for r in range(m)]
    mult = {}
    for r in range(m):
        for s in range(m):
            p = ambient.mul(sub.basis[r], sub.basis[s])
            coords = sub.coordinates(p)
            if coords is None:
                raise VerificationError(f"subspace not closed under product at pair ({r}, {s})")
            ent = sparsify(coords)
            if ent:
                mult[(r, s)] = ent
    out = AlgebraData(ambient.field, labels, mult, None)
    if unit is not None:
        ucoords = sub.coordinates(unit)
        if ucoords is None:
            raise VerificationError("designated unit lies outside the subspace")
        out.unit = ucoords
    else:
        out.unit = find_unit(out)
    return out


def unitize_algebra(b, unit_label="u"):
    """Adjoin a unit: k x B with (s, a)(t, b) = (st, sb + ta + ab).

    Returns the enlarged algebra and the embedding of B at indices 1..dim.
    """
    labels = [unit_label] + list(b.labels)
    mult = {(0, 0): [(0, b.field.one)]}
    for j in range(b.dim):
        mult[(0, j + 1)] = [(j + 1, b.field.one)]
        mult[(j + 1, 0)] = [(j + 1, b.field.one)]
    for (i, j), ent in b.mult.items():
        mult[(i + 1, j + 1)] = [(k + 1, c) for k, c in ent]
    unit = unit_vec(b.field, b.dim + 1, 0)
    big = AlgebraData(b.field, labels, mult, unit)
    rows = [unit_vec(b.field, b.dim + 1, i + 1) for i in range(b.dim)]
    return big, LinearMapData(Matrix(b.field, rows, ncols=b.dim + 1))


def is_idempotent(a, v):
    return a.mul(v, v) == list(v)


def is_central(a, v):
    return all(
        a.mul(v, a.basis_vec(i)) == a.mul(a.basis_vec(i), v) for i in range(a.dim)
    )


def algebra_morphism_from_images(field, images, codomain_dim):
    return LinearMapData(Matrix(field, [list(v) for v in images], ncols=codomain_dim))
