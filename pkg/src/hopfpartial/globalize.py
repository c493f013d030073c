"""Globalization: enlarge a partial (co)action to a global one it restricts from.

For a partial action of H on A the ambient space is A (x) H^*, identified
with the maps H -> A by convolution; the embedding sends a to the map
h -> h . a.  For a partial coaction the ambient is A (x) H carrying
id (x) comult, and the embedding is the coaction itself.  In both directions
the constructed carrier comes with a certificate: every property that makes
it a globalization is checked and recorded, nothing is assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import (
    GlobalActionData,
    GlobalCoactionData,
    PartialActionData,
    PartialCoactionData,
    verify_global_action,
    verify_global_coaction,
)
from .algebra import (
    LinearMapData,
    check_algebra_morphism,
    densify,
    dual_hopf,
    kron_index,
    restrict_algebra,
    sparsify,
    tensor_product_algebra,
    tensor_vec,
)
from .errors import SeedNotSubalgebra, VerificationError
from .linalg import Matrix, Subspace, closure_bilinear
from .reporting import VerificationReport


def phi_embed(partial):
    """The map a -> sum over the Hopf basis of (h_i . a) (x) h_i^*, as dense
    vectors in carrier (x) dual."""
    a = partial.algebra
    dh = partial.hopf.dim
    images = []
    for j in range(a.dim):
        vec = [a.field.zero] * (a.dim * dh)
        for i in range(dh):
            for l, c in partial.act_basis(i, j):
                vec[kron_index(l, i, dh)] = vec[kron_index(l, i, dh)] + c
        images.append(vec)
    return images


def _translation_action_on_dual(hopf, carrier_dim):
    """h acting on carrier (x) dual by right translation on the function leg:
    (h > f)(k) = f(k h).  Returns the sparse action dict."""
    dh = hopf.dim
    action = {}
    for m in range(dh):
        for u in range(carrier_dim):
            for i in range(dh):
                ent = []
                for k in range(dh):
                    for t, c in hopf.algebra.mul_basis(k, m):
                        if t == i and c:
                            ent.append((kron_index(u, k, dh), c))
                if ent:
                    action[(m, kron_index(u, i, dh))] = sorted(ent)
    return action


@dataclass
class EnvelopingActionResult:
    """A global action enveloping a partial one, with its certificate."""

    partial: PartialActionData
    ambient: object
    span: Subspace
    globalized: GlobalActionData
    embedding: LinearMapData
    report: VerificationReport


def enveloping_action(partial):
    """Close the embedded carrier under the translation action of H inside
    carrier (x) dual and restrict; certifies the result."""
    a = partial.algebra
    hopf = partial.hopf
    dual = dual_hopf(hopf)
    ambient = tensor_product_algebra(a, dual.algebra)
    ambient_action = GlobalActionData(
        hopf, ambient, _translation_action_on_dual(hopf, a.dim)
    )
    images = phi_embed(partial)
    moved = []
    for m in range(hopf.dim):
        hm = hopf.basis_vec(m)
        for img in images:
            moved.append(ambient_action.act(hm, img))
    span = Subspace.span(a.field, ambient.dim, moved)
    span = closure_bilinear(a.field, ambient.dim, span.basis, ambient.mul)
    labels = [f"b{r}" for r in range(span.dim)]
    algebra = restrict_algebra(ambient, span, labels=labels)
    action = {}
    for i in range(hopf.dim):
        hi = hopf.basis_vec(i)
        for j in range(span.dim):
            out = ambient_action.act(hi, span.basis[j])
            coords = span.coordinates(out)
            if coords is None:
                raise VerificationError(
                    f"translation action leaves the closed span at (h_{i}, b_{j})"
                )
            ent = sparsify(coords)
            if ent:
                action[(i, j)] = ent
    globalized = GlobalActionData(hopf, algebra, action)
    emb_rows = []
    for img in images:
        coords = span.coordinates(img)
        if coords is None:
            raise VerificationError("embedded carrier escapes its own closure")
        emb_rows.append(coords)
    embedding = LinearMapData(Matrix(a.field, emb_rows, ncols=span.dim))
    result = EnvelopingActionResult(
        partial=partial,
        ambient=ambient,
        span=span,
        globalized=globalized,
        embedding=embedding,
        report=VerificationReport(),
    )
    result.report = verify_globalization(partial, globalized, embedding)
    return result


def _action_orbit_span(partial, global_action, embedding):
    """Algebra closure of { h > theta(a) } inside the global carrier."""
    b = global_action.algebra
    seeds = []
    for j in range(partial.algebra.dim):
        img = embedding.apply(partial.algebra.basis_vec(j))
        for i in range(global_action.hopf.dim):
            seeds.append(global_action.act(global_action.hopf.basis_vec(i), img))
    span = Subspace.span(b.field, b.dim, seeds)
    return closure_bilinear(b.field, b.dim, span.basis, b.mul)


def _verify_action_globalization(partial, global_action, embedding):
    rep = VerificationReport()
    rep.extend(verify_global_action(global_action), prefix="global.")
    a = partial.algebra
    b = global_action.algebra
    hopf = partial.hopf
    rep.add("embedding.injective", embedding.rank() == a.dim)
    rep.extend(
        check_algebra_morphism(embedding, a, b, check_unit=False), prefix="embedding."
    )
    theta_one = embedding.apply(a.unit)
    image = Subspace.span(b.field, b.dim,
                          [embedding.apply(a.basis_vec(j)) for j in range(a.dim)])
    bad = ""
    for i in range(hopf.dim):
        for j in range(a.dim):
            lhs = embedding.apply(densify(a.field, a.dim, partial.act_basis(i, j)))
            moved = global_action.act(hopf.basis_vec(i), embedding.apply(a.basis_vec(j)))
            rhs = b.mul(theta_one, moved)
            if lhs != rhs:
                bad = bad or f"(h_{i}, a_{j})"
    rep.add("restriction.partial_action_recovered", not bad, bad)
    bad = ""
    for j in range(a.dim):
        img = embedding.apply(a.basis_vec(j))
        for k in range(b.dim):
            prod = b.mul(img, b.basis_vec(k))
            if not image.contains(prod):
                bad = bad or f"(a_{j}, b_{k})"
    rep.add("image.right_ideal", not bad, bad)
    orbit = _action_orbit_span(partial, global_action, embedding)
    rep.add("generation.orbit_spans_carrier", orbit.dim == b.dim,
            f"orbit dim {orbit.dim} vs carrier dim {b.dim}")
    return rep


def ambient_coaction(hopf, carrier_dim):
    """id (x) comult on carrier (x) Hopf, as a global coaction on the tensor
    product algebra."""
    dh = hopf.dim
    coaction = {}
    for i in range(carrier_dim):
        for j in range(dh):
            ent = [(kron_index(i, p, dh), q, c) for p, q, c in hopf.comult_basis(j)]
            if ent:
                coaction[kron_index(i, j, dh)] = ent
    return coaction


def comodule_generated(field, ambient_dim, coaction_data, seed_vectors, product=None):
    """Smallest subspace containing the seed that is stable under contracting
    the coaction with every dual basis element, and (when ``product`` is
    given) closed under the product.

    The seed must already be closed under the product; the point of this
    helper is growing a sub-comodule algebra, not a general closure.
    """
    span = Subspace.span(field, ambient_dim, list(seed_vectors))
    if product is not None:
        for u in span.basis:
            for v in span.basis:
                if not span.contains(product(u, v)):
                    raise SeedNotSubalgebra(
                        "seed span is not closed under the ambient product"
                    )
    dh = coaction_data.hopf.dim
    while True:
        grown = span
        contracted = []
        for s in span.basis:
            image = coaction_data.coact_dense(s)
            for k in range(dh):
                vec = [image[kron_index(t, k, dh)] for t in range(ambient_dim)]
                contracted.append(vec)
        grown = grown.add(Subspace.span(field, ambient_dim, contracted))
        if product is not None:
            grown = closure_bilinear(field, ambient_dim, grown.basis, product)
        if grown.dim == span.dim:
            return span
        span = grown


@dataclass
class EnvelopingCoactionResult:
    """A global coaction enveloping a partial one, with its certificate."""

    partial: PartialCoactionData
    ambient: object
    span: Subspace
    globalized: GlobalCoactionData
    embedding: LinearMapData
    report: VerificationReport


def enveloping_coaction(partial):
    """Grow the image of the coaction inside carrier (x) Hopf under
    contraction and multiplication, restrict id (x) comult, and certify."""
    a = partial.algebra
    hopf = partial.hopf
    ambient = tensor_product_algebra(a, hopf.algebra)
    delta = GlobalCoactionData(hopf, ambient, ambient_coaction(hopf, a.dim))
    seeds = [partial.coact_dense(a.basis_vec(j)) for j in range(a.dim)]
    span = comodule_generated(a.field, ambient.dim, delta, seeds, product=ambient.mul)
    labels = [f"b{r}" for r in range(span.dim)]
    algebra = restrict_algebra(ambient, span, labels=labels)
    coaction = {}
    for j in range(span.dim):
        image = delta.coact_dense(span.basis[j])
        ent = []
        for k in range(hopf.dim):
            vec = [image[kron_index(t, k, hopf.dim)] for t in range(ambient.dim)]
            coords = span.coordinates(vec)
            if coords is None:
                raise VerificationError(
                    f"restricted coaction leaves the closed span at (b_{j}, leg {k})"
                )
            for l, c in enumerate(coords):
                if c:
                    ent.append((l, k, c))
        if ent:
            coaction[j] = sorted(ent, key=lambda t: (t[0], t[1]))
    globalized = GlobalCoactionData(hopf, algebra, coaction)
    emb_rows = []
    for s in seeds:
        coords = span.coordinates(s)
        if coords is None:
            raise VerificationError("coaction image escapes its own closure")
        emb_rows.append(coords)
    embedding = LinearMapData(Matrix(a.field, emb_rows, ncols=span.dim))
    result = EnvelopingCoactionResult(
        partial=partial,
        ambient=ambient,
        span=span,
        globalized=globalized,
        embedding=embedding,
        report=VerificationReport(),
    )
    result.report = verify_globalization(partial, globalized, embedding)
    return result


def _verify_coaction_globalization(partial, global_coaction, embedding):
    rep = VerificationReport()
    rep.extend(verify_global_coaction(global_coaction), prefix="global.")
    a = partial.algebra
    b = global_coaction.algebra
    hopf = partial.hopf
    rep.add("embedding.injective", embedding.rank() == a.dim)
    rep.extend(
        check_algebra_morphism(embedding, a, b, check_unit=False), prefix="embedding."
    )
    image = Subspace.span(b.field, b.dim,
                          [embedding.apply(a.basis_vec(j)) for j in range(a.dim)])
    bad = ""
    for j in range(a.dim):
        img = embedding.apply(a.basis_vec(j))
        for k in range(b.dim):
            if not image.contains(b.mul(img, b.basis_vec(k))):
                bad = bad or f"(a_{j}, b_{k})"
    rep.add("image.right_ideal", not bad, bad)

    # restriction: the partial coaction is the compression of the global one
    # by the embedded unit, checked inside carrier (x) Hopf of the global side
    tensor_bh = tensor_product_algebra(b, hopf.algebra)
    theta_one_tensor = tensor_vec(b.field, embedding.apply(a.unit), hopf.unit)
    bad = ""
    for j in range(a.dim):
        lhs = [b.field.zero] * (b.dim * hopf.dim)
        for l, k, c in partial.coact_basis(j):
            img = embedding.apply(a.basis_vec(l))
            for t, u in enumerate(img):
                if u:
                    idx = kron_index(t, k, hopf.dim)
                    lhs[idx] = lhs[idx] + c * u
        rhs = tensor_bh.mul(
            theta_one_tensor,
            global_coaction.coact_dense(embedding.apply(a.basis_vec(j))),
        )
        if lhs != rhs:
            bad = bad or f"(a_{j})"
    rep.add("restriction.partial_coaction_recovered", not bad, bad)

    grown = comodule_generated(
        b.field,
        b.dim,
        global_coaction,
        [embedding.apply(a.basis_vec(j)) for j in range(a.dim)],
        product=b.mul,
    )
    rep.add("generation.comodule_algebra_spans_carrier", grown.dim == b.dim,
            f"closure dim {grown.dim} vs carrier dim {b.dim}")
    return rep


def verify_globalization(partial, global_data, embedding):
    """Certificate that (global_data, embedding) globalizes the partial
    (co)action: global axioms, injective multiplicative embedding onto a right
    ideal, recovery of the partial structure by compression, and generation."""
    if isinstance(partial, PartialActionData):
        if not isinstance(global_data, GlobalActionData):
            raise VerificationError("expected a global action as candidate")
        return _verify_action_globalization(partial, global_data, embedding)
    if isinstance(partial, PartialCoactionData):
        if not isinstance(global_data, GlobalCoactionData):
            raise VerificationError("expected a global coaction as candidate")
        return _verify_coaction_globalization(partial, global_data, embedding)
    raise VerificationError("first argument must be a partial action or coaction")


def coaction_compatibility(partial_coaction):
    """Compare the coaction globalization grid with the action globalization
    grid of the converted action, under the identification of the double dual
    with the original Hopf algebra.

    Both carriers live in carrier (x) (something of the Hopf algebra's
    dimension): the coaction side inside carrier (x) H, the action side inside
    carrier (x) dual-of-dual.  Structure constants of the double dual equal
    the original ones, so coordinates can be compared entry by entry.
    """
    from .actions import coaction_to_action

    rep = VerificationReport()
    res_c = enveloping_coaction(partial_coaction)
    res_a = enveloping_action(coaction_to_action(partial_coaction))
    rep.add("coaction_side.certificate", res_c.report.ok)
    rep.add("action_side.certificate", res_a.report.ok)
    rep.add(
        "carrier.same_dimension",
        res_c.span.dim == res_a.span.dim,
        f"{res_c.span.dim} vs {res_a.span.dim}",
    )
    rep.add("carrier.same_subspace", res_c.span == res_a.span)
    same_grid = res_c.span == res_a.span
    if same_grid:
        bad = ""
        for j in range(partial_coaction.algebra.dim):
            v = partial_coaction.algebra.basis_vec(j)
            left = res_c.span.lift(res_c.embedding.apply(v))
            right = res_a.span.lift(res_a.embedding.apply(v))
            if left != right:
                bad = bad or f"(a_{j})"
        rep.add("embeddings.agree", not bad, bad)
    return rep, res_c, res_a
