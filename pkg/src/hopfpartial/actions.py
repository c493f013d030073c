"""Partial and global (co)actions of a Hopf algebra on a unital algebra.

An action is stored as ``action[(i, j)]``: the sparse expansion of h_i acting
on a_j.  A coaction is ``coaction[i]``: triples (j, k, c) meaning the image of
a_i contains c * a_j (x) h_k, with the tensor leg order carrier-then-Hopf.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    HopfAlgebraData,
    densify,
    dual_hopf,
    kron_index,
    restrict_algebra,
    sparsify,
    tensor_product_algebra,
    tensor_vec,
)
from .errors import DimensionMismatch, NotRightIdeal, NotUnitOnA
from .linalg import Matrix
from .reporting import VerificationReport


@dataclass
class ActionData:
    """Linear action of a Hopf algebra on an algebra, by structure constants."""

    hopf: HopfAlgebraData
    algebra: AlgebraData
    action: dict

    def act_basis(self, i, j):
        return self.action.get((i, j), [])

    def act(self, hvec, avec):
        if len(hvec) != self.hopf.dim or len(avec) != self.algebra.dim:
            raise DimensionMismatch("action applied to vectors of wrong length")
        out = [self.algebra.field.zero] * self.algebra.dim
        for i, c in enumerate(hvec):
            if not c:
                continue
            for j, d in enumerate(avec):
                if not d:
                    continue
                cd = c * d
                for k, m in self.act_basis(i, j):
                    out[k] = out[k] + cd * m
        return out

    def act_matrix(self, hvec):
        """Matrix (row convention) of a -> hvec . a."""
        return Matrix(
            self.algebra.field,
            [self.act(hvec, self.algebra.basis_vec(j)) for j in range(self.algebra.dim)],
            ncols=self.algebra.dim,
        )

    def action_equal(self, other):
        return self.action == other.action

    @classmethod
    def from_matrices(cls, hopf, algebra, matrices):
        """One row-convention matrix per Hopf basis element."""
        action = {}
        for i, m in enumerate(matrices):
            for j in range(algebra.dim):
                ent = sparsify(m.rows[j])
                if ent:
                    action[(i, j)] = ent
        return cls(hopf, algebra, action)


class PartialActionData(ActionData):
    pass


class GlobalActionData(ActionData):
    pass


def _unit_action_check(data, rep):
    bad = ""
    for j in range(data.algebra.dim):
        e = data.algebra.basis_vec(j)
        if data.act(data.hopf.unit, e) != e:
            bad = bad or f"(a_{j})"
    rep.add("action.unit_of_hopf", not bad, bad)


def _distributes_check(data, rep):
    a = data.algebra
    bad = ""
    for i in range(data.hopf.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                lhs = data.act(data.hopf.basis_vec(i), densify(a.field, a.dim, a.mul_basis(j, k)))
                rhs = [a.field.zero] * a.dim
                for p, q, c in data.hopf.comult_basis(i):
                    t = a.mul(
                        densify(a.field, a.dim, data.act_basis(p, j)),
                        densify(a.field, a.dim, data.act_basis(q, k)),
                    )
                    rhs = [u + c * v for u, v in zip(rhs, t)]
                if lhs != rhs:
                    bad = bad or f"(h_{i}, a_{j}, a_{k})"
    rep.add("action.product_rule", not bad, bad)


def verify_partial_action(data):
    """The three partial action laws, on all basis tuples."""
    rep = VerificationReport()
    a = data.algebra
    _unit_action_check(data, rep)
    _distributes_check(data, rep)
    bad = ""
    for i in range(data.hopf.dim):
        for g in range(data.hopf.dim):
            hg = data.hopf.basis_vec(g)
            for j in range(a.dim):
                inner = densify(a.field, a.dim, data.act_basis(g, j))
                lhs = data.act(data.hopf.basis_vec(i), inner)
                rhs = [a.field.zero] * a.dim
                for p, q, c in data.hopf.comult_basis(i):
                    head = data.act(data.hopf.basis_vec(p), a.unit)
                    tail = data.act(data.hopf.mul(data.hopf.basis_vec(q), hg), a.basis_vec(j))
                    t = a.mul(head, tail)
                    rhs = [u + c * v for u, v in zip(rhs, t)]
                if lhs != rhs:
                    bad = bad or f"(h_{i}, h_{g}, a_{j})"
    rep.add("action.composition_rule", not bad, bad)
    return rep


def verify_global_action(data):
    """Module algebra laws: module axiom, measuring, unit preserved."""
    rep = VerificationReport()
    a = data.algebra
    _unit_action_check(data, rep)
    _distributes_check(data, rep)
    bad = ""
    for i in range(data.hopf.dim):
        for g in range(data.hopf.dim):
            prod = densify(data.hopf.field, data.hopf.dim, data.hopf.algebra.mul_basis(i, g))
            for j in range(a.dim):
                inner = densify(a.field, a.dim, data.act_basis(g, j))
                lhs = data.act(data.hopf.basis_vec(i), inner)
                rhs = data.act(prod, a.basis_vec(j))
                if lhs != rhs:
                    bad = bad or f"(h_{i}, h_{g}, a_{j})"
    rep.add("action.module_rule", not bad, bad)
    if a.unit is not None:
        bad = ""
        for i in range(data.hopf.dim):
            got = data.act(data.hopf.basis_vec(i), a.unit)
            want = [data.hopf.counit[i] * u for u in a.unit]
            if got != want:
                bad = bad or f"(h_{i})"
        rep.add("action.unit_of_carrier", not bad, bad)
    return rep


def is_global(data):
    """A partial action is global exactly when every h . 1_A = counit(h) 1_A."""
    a = data.algebra
    return all(
        data.act(data.hopf.basis_vec(i), a.unit) == [data.hopf.counit[i] * u for u in a.unit]
        for i in range(data.hopf.dim)
    )


def induced_partial_action(global_action, sub, one_a, labels=None):
    """Restrict a global action to a unital ideal: h . a = 1_A (h > a).

    ``sub`` is the carrier subspace inside the global carrier B and ``one_a``
    its unit vector in B coordinates.  Raises NotUnitOnA if one_a is not a
    two-sided unit of sub, NotRightIdeal if 1_A B leaves sub.
    """
    b = global_action.algebra
    if not sub.contains(one_a):
        raise NotUnitOnA("designated unit lies outside the subspace")
    for r, v in enumerate(sub.basis):
        if b.mul(one_a, v) != v or b.mul(v, one_a) != v:
            raise NotUnitOnA(f"unit fails on subspace basis vector {r}")
    a = restrict_algebra(b, sub, labels=labels, unit=one_a)
    action = {}
    for i in range(global_action.hopf.dim):
        for j in range(sub.dim):
            moved = global_action.act(global_action.hopf.basis_vec(i), sub.basis[j])
            cut = b.mul(one_a, moved)
            coords = sub.coordinates(cut)
            if coords is None:
                raise NotRightIdeal(
                    f"1_A (h_{i} > a_{j}) leaves the subspace; it is not an ideal of the right shape"
                )
            ent = sparsify(coords)
            if ent:
                action[(i, j)] = ent
    return PartialActionData(global_action.hopf, a, action)


def unitize_global_action(data):
    """Extend a global action on a possibly non-unital B to k x B, the Hopf
    algebra acting on the adjoined unit through its counit."""
    from .algebra import unitize_algebra

    big, embed = unitize_algebra(data.algebra)
    action = {}
    for i in range(data.hopf.dim):
        e = data.hopf.counit[i]
        if e:
            action[(i, 0)] = [(0, e)]
    for (i, j), ent in data.action.items():
        action[(i, j + 1)] = [(k + 1, c) for k, c in ent]
    return GlobalActionData(data.hopf, big, action), embed


@dataclass
class CoactionData:
    """Linear coaction of a Hopf algebra on an algebra, carrier leg first."""

    hopf: HopfAlgebraData
    algebra: AlgebraData
    coaction: dict

    def coact_basis(self, i):
        return self.coaction.get(i, [])

    def coact_dense(self, avec):
        """Image in the row-major basis of carrier (x) Hopf."""
        dh = self.hopf.dim
        out = [self.algebra.field.zero] * (self.algebra.dim * dh)
        for i, c in enumerate(avec):
            if not c:
                continue
            for j, k, d in self.coact_basis(i):
                idx = kron_index(j, k, dh)
                out[idx] = out[idx] + c * d
        return out

    def coaction_equal(self, other):
        return self.coaction == other.coaction

    @classmethod
    def from_dense_images(cls, hopf, algebra, images):
        """images[i] is the dense carrier (x) Hopf vector for basis element i."""
        dh = hopf.dim
        coaction = {}
        for i, vec in enumerate(images):
            ent = []
            for j in range(algebra.dim):
                for k in range(dh):
                    c = vec[kron_index(j, k, dh)]
                    if c:
                        ent.append((j, k, c))
            if ent:
                coaction[i] = ent
        return cls(hopf, algebra, coaction)


class PartialCoactionData(CoactionData):
    pass


class GlobalCoactionData(CoactionData):
    pass


def _coaction_tensor_algebra(data):
    return tensor_product_algebra(data.algebra, data.hopf.algebra)


def _multiplicative_check(data, rep, tensor_alg):
    a = data.algebra
    bad = ""
    for i in range(a.dim):
        rho_i = data.coact_dense(a.basis_vec(i))
        for j in range(a.dim):
            lhs = data.coact_dense(densify(a.field, a.dim, a.mul_basis(i, j)))
            rhs = tensor_alg.mul(rho_i, data.coact_dense(a.basis_vec(j)))
            if lhs != rhs:
                bad = bad or f"(a_{i}, a_{j})"
    rep.add("coaction.multiplicative", not bad, bad)


def _counit_check(data, rep):
    a = data.algebra
    bad = ""
    for i in range(a.dim):
        got = [a.field.zero] * a.dim
        for j, k, c in data.coact_basis(i):
            got[j] = got[j] + c * data.hopf.counit[k]
        if got != a.basis_vec(i):
            bad = bad or f"(a_{i})"
    rep.add("coaction.counit", not bad, bad)


def _triple_dicts(data, i):
    """Both sides of the coassociativity-type law for basis element i,
    as (carrier, hopf, hopf) -> coeff dicts."""
    f = data.algebra.field
    left = {}
    for j, k, c in data.coact_basis(i):
        for l, m, d in data.coact_basis(j):
            key = (l, m, k)
            left[key] = left.get(key, f.zero) + c * d
    right = {}
    for j, k, c in data.coact_basis(i):
        for p, q, d in data.hopf.comult_basis(k):
            key = (j, p, q)
            right[key] = right.get(key, f.zero) + c * d
    return (
        {k: v for k, v in left.items() if v},
        {k: v for k, v in right.items() if v},
    )


def verify_partial_coaction(data):
    """Multiplicativity, the counit law, and the weakened coassociativity law
    with the image of 1_A as the left correction factor."""
    rep = VerificationReport()
    a = data.algebra
    f = a.field
    tensor_alg = _coaction_tensor_algebra(data)
    _multiplicative_check(data, rep, tensor_alg)
    _counit_check(data, rep)
    rho_one = data.coact_dense(a.unit)
    bad = ""
    for i in range(a.dim):
        left, right = _triple_dicts(data, i)
        # multiply the right side by rho(1_A) (x) 1_H on the left, leg by leg
        corrected = {}
        for (j, p, q), c in right.items():
            for r in range(a.dim):
                for s in range(data.hopf.dim):
                    u = rho_one[kron_index(r, s, data.hopf.dim)]
                    if not u:
                        continue
                    uc = u * c
                    for l, m1 in a.mul_basis(r, j):
                        for m, m2 in data.hopf.algebra.mul_basis(s, p):
                            key = (l, m, q)
                            corrected[key] = corrected.get(key, f.zero) + uc * m1 * m2
        corrected = {k: v for k, v in corrected.items() if v}
        if left != corrected:
            bad = bad or f"(a_{i})"
    rep.add("coaction.weak_coassociativity", not bad, bad)
    return rep


def verify_global_coaction(data):
    """Comodule algebra laws: coassociativity, counit, multiplicative, unit."""
    rep = VerificationReport()
    a = data.algebra
    tensor_alg = _coaction_tensor_algebra(data)
    _multiplicative_check(data, rep, tensor_alg)
    _counit_check(data, rep)
    bad = ""
    for i in range(a.dim):
        left, right = _triple_dicts(data, i)
        if left != right:
            bad = bad or f"(a_{i})"
    rep.add("coaction.coassociativity", not bad, bad)
    rep.add("coaction.unit", is_global_coaction(data))
    return rep


def is_global_coaction(data):
    """A partial coaction is global exactly when 1_A maps to 1_A (x) 1_H."""
    want = tensor_vec(data.algebra.field, data.algebra.unit, data.hopf.unit)
    return data.coact_dense(data.algebra.unit) == want


def induced_partial_coaction(global_coaction, sub, one_a, labels=None):
    """Restrict a global coaction to a unital ideal: the image of a is
    (1_A (x) 1_H) rho(a), read in subspace coordinates on the carrier leg."""
    b = global_coaction.algebra
    h = global_coaction.hopf
    if not sub.contains(one_a):
        raise NotUnitOnA("designated unit lies outside the subspace")
    for r, v in enumerate(sub.basis):
        if b.mul(one_a, v) != v or b.mul(v, one_a) != v:
            raise NotUnitOnA(f"unit fails on subspace basis vector {r}")
    a = restrict_algebra(b, sub, labels=labels, unit=one_a)
    tensor_alg = tensor_product_algebra(b, h.algebra)
    one_tensor = [b.field.zero] * (b.dim * h.dim)
    for i, c in enumerate(one_a):
        if not c:
            continue
        for k, d in enumerate(h.unit):
            if d:
                one_tensor[kron_index(i, k, h.dim)] = c * d
    coaction = {}
    for j in range(sub.dim):
        cut = tensor_alg.mul(one_tensor, global_coaction.coact_dense(sub.basis[j]))
        ent = []
        for k in range(h.dim):
            slice_b = [cut[kron_index(i, k, h.dim)] for i in range(b.dim)]
            coords = sub.coordinates(slice_b)
            if coords is None:
                raise NotRightIdeal(
                    f"(1_A (x) 1_H) rho(a_{j}) leaves the subspace on the carrier leg"
                )
            for l, c in enumerate(coords):
                if c:
                    ent.append((l, k, c))
        if ent:
            coaction[j] = sorted(ent, key=lambda t: (t[0], t[1]))
    return PartialCoactionData(h, a, coaction)


def coaction_to_action(data):
    """The action of the dual Hopf algebra extracted from a coaction.

    If the image of a_j is sum c * a_l (x) h_k, then the dual basis element
    h*_i acts by h*_i . a_j = sum over entries with k == i of c * a_l.
    The result is partial precisely when the input was.
    """
    dual = dual_hopf(data.hopf)
    action = {}
    for j in range(data.algebra.dim):
        for l, k, c in data.coact_basis(j):
            action.setdefault((k, j), []).append((l, c))
    for key in action:
        action[key] = _merge(action[key], data.algebra.field)
    cls = GlobalActionData if isinstance(data, GlobalCoactionData) else PartialActionData
    return cls(dual, data.algebra, action)


def action_to_coaction(data):
    """The coaction on the carrier by the dual of the acting Hopf algebra:
    the image of a is the sum over the acting basis of (k_i . a) (x) k*_i."""
    dual = dual_hopf(data.hopf)
    coaction = {}
    for j in range(data.algebra.dim):
        ent = []
        for i in range(data.hopf.dim):
            for l, c in data.act_basis(i, j):
                ent.append((l, i, c))
        if ent:
            coaction[j] = sorted(ent, key=lambda t: (t[0], t[1]))
    cls = GlobalCoactionData if isinstance(data, GlobalActionData) else PartialCoactionData
    return cls(dual, data.algebra, coaction)


def _merge(entries, field):
    acc = {}
    for k, c in entries:
        acc[k] = acc.get(k, field.zero) + c
    return [(k, acc[k]) for k in sorted(acc) if acc[k]]


@dataclass(frozen=True)
class PairingData:
    """A bilinear pairing of two Hopf algebras as the matrix <b_i, d_j>."""

    matrix: Matrix


def canonical_pairing(h, hdual):
    if h.dim != hdual.dim:
        raise DimensionMismatch("paired Hopf algebras must have equal dimension")
    return PairingData(Matrix.identity(h.field, h.dim))


def verify_pairing(h, k, pairing):
    """Hopf pairing laws for <h, k> plus nondegeneracy."""
    rep = VerificationReport()
    p = pairing.matrix
    f = h.field
    bad = ""
    for i in range(h.dim):
        for j in range(h.dim):
            for t in range(k.dim):
                lhs = sum(
                    (c * p.rows[m][t] for m, c in h.algebra.mul_basis(i, j)), f.zero
                )
                rhs = sum(
                    (c * p.rows[i][u] * p.rows[j][v] for u, v, c in k.comult_basis(t)),
                    f.zero,
                )
                if lhs != rhs:
                    bad = bad or f"(h_{i}, h_{j}, k_{t})"
    rep.add("pairing.product_vs_coproduct", not bad, bad)
    bad = ""
    for i in range(h.dim):
        for t in range(k.dim):
            for s in range(k.dim):
                lhs = sum(
                    (c * p.rows[i][m] for m, c in k.algebra.mul_basis(t, s)), f.zero
                )
                rhs = sum(
                    (c * p.rows[u][t] * p.rows[v][s] for u, v, c in h.comult_basis(i)),
                    f.zero,
                )
                if lhs != rhs:
                    bad = bad or f"(h_{i}, k_{t}, k_{s})"
    rep.add("pairing.coproduct_vs_product", not bad, bad)
    unit_ok = all(
        sum((c * p.rows[i][t] for i, c in enumerate(h.unit) if c), f.zero) == k.counit[t]
        for t in range(k.dim)
    )
    rep.add("pairing.unit_left", unit_ok)
    counit_ok = all(
        sum((c * p.rows[i][t] for t, c in enumerate(k.unit) if c), f.zero) == h.counit[i]
        for i in range(h.dim)
    )
    rep.add("pairing.unit_right", counit_ok)
    rep.add("pairing.nondegenerate", p.rank() == h.dim)
    return rep
