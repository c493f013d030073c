"""Smash products, the End(H) realizations, and the duality isomorphisms."""

from fractions import Fraction

import pytest

from hopfpartial.actions import (
    GlobalActionData,
    PartialActionData,
    coaction_to_action,
    induced_partial_action,
    verify_global_action,
)
from hopfpartial.algebra import (
    AlgebraData,
    end_algebra,
    kron_index,
    tensor_product_algebra,
    tensor_vec,
)
from hopfpartial.catalog import (
    fixture_by_id,
    group_algebra,
    regular_permutation_action,
    scalar_partial_action,
    sweedler_h4,
)
from hopfpartial.duality import (
    blattner_montgomery,
    cohen_montgomery,
    comodule_from_action,
    corner_operator_matrix,
    double_smash,
    ensure_unital_action,
    heisenberg_isomorphisms,
    module_endomorphisms,
    module_hom_space,
    module_operator,
    partial_smash,
    restricted_duality,
    smash_product,
)
from hopfpartial.errors import (
    AssociativityFailure,
    NonCentralIdempotent,
    ShapeError,
    VerificationError,
)
from hopfpartial.fields import QQ, PrimeField
from hopfpartial.globalize import enveloping_action, enveloping_coaction
from hopfpartial.groups import cyclic, symmetric
from hopfpartial.linalg import Matrix, Subspace, unit_vec


def q(x):
    return Fraction(x)


def qvec(*xs):
    return [Fraction(x) for x in xs]


def induced_on_corner(action, one_a):
    b = action.algebra
    sub = Subspace.span(
        b.field, b.dim, [b.mul(one_a, b.basis_vec(i)) for i in range(b.dim)]
    )
    return induced_partial_action(action, sub, one_a)


@pytest.fixture(scope="module")
def swap_action():
    return regular_permutation_action(QQ, cyclic(2))


@pytest.fixture(scope="module")
def swap_duality(swap_action):
    return blattner_montgomery(swap_action, qvec(1, 0))


@pytest.fixture(scope="module")
def swap_restricted(swap_action, swap_duality):
    return restricted_duality(swap_duality, induced_on_corner(swap_action, qvec(1, 0)))


@pytest.fixture(scope="module")
def full_restricted(swap_action):
    dual = blattner_montgomery(swap_action)
    return restricted_duality(dual, induced_on_corner(swap_action, swap_action.algebra.unit))


@pytest.fixture(scope="module")
def sweedler_side_duality():
    # globalized Sweedler coaction, then the converted action of the dual
    res = enveloping_coaction(fixture_by_id(QQ, "example3").payload)
    conv = coaction_to_action(res.globalized)
    one_a = res.embedding.apply(fixture_by_id(QQ, "example3").payload.algebra.unit)
    dual = blattner_montgomery(conv, one_a)
    rest = restricted_duality(dual, induced_on_corner(conv, one_a))
    return dual, rest


class TestSmashProduct:
    def test_trivial_action_is_tensor_product(self):
        h = group_algebra(QQ, cyclic(2))
        b = end_algebra(QQ, 2)
        action = {
            (i, j): [(j, h.counit[i])]
            for i in range(2)
            for j in range(b.dim)
            if h.counit[i]
        }
        sm = smash_product(GlobalActionData(h, b, action))
        assert sm.algebra.structure_equal(tensor_product_algebra(b, h.algebra))

    def test_swap_products(self, swap_action):
        sm = smash_product(swap_action).algebra
        # (1_B # g)(e0 # 1) = e1 # g, while (e0 # 1)(1_B # g) = e0 # g
        left = sm.mul(qvec(0, 1, 0, 1), qvec(1, 0, 0, 0))
        assert left == qvec(0, 0, 0, 1)
        right = sm.mul(qvec(1, 0, 0, 0), qvec(0, 1, 0, 1))
        assert right == qvec(0, 1, 0, 0)

    def test_unit(self, swap_action):
        sm = smash_product(swap_action).algebra
        assert sm.unit == qvec(1, 0, 1, 0)
        assert sm.mul(sm.unit, qvec(0, 0, 1, 0)) == qvec(0, 0, 1, 0)

    def test_needs_unital_carrier(self):
        h = group_algebra(QQ, cyclic(2))
        nilpotent = AlgebraData(QQ, ["x"], {(0, 0): []}, unit=None)
        action = {(0, 0): [(0, q(1))], (1, 0): [(0, q(1))]}
        with pytest.raises(ShapeError):
            smash_product(GlobalActionData(h, nilpotent, action))


class TestPartialSmash:
    def test_scalar_corner(self):
        ps = partial_smash(scalar_partial_action(QQ, cyclic(2), [0]))
        assert ps.ambient.dim == 2
        assert ps.carrier.dim == 1
        assert ps.carrier.basis[0] == qvec(1, 0)
        assert ps.algebra.unit == qvec(1)

    def test_converted_coset_corner(self):
        pact = coaction_to_action(fixture_by_id(QQ, "example1:z4:0,2").payload)
        ps = partial_smash(pact)
        assert ps.ambient.dim == 8
        assert ps.carrier.dim == 4
        assert ps.algebra.unit is not None

    def test_corrupted_action_fails(self):
        bad = scalar_partial_action(QQ, cyclic(2), [0, 1], weight=q(1) / 2)
        with pytest.raises(AssociativityFailure):
            partial_smash(bad)

    def test_needs_unital_carrier(self):
        h = group_algebra(QQ, cyclic(2))
        nilpotent = AlgebraData(QQ, ["x"], {(0, 0): []}, unit=None)
        pa = PartialActionData(h, nilpotent, {(0, 0): [(0, q(1))]})
        with pytest.raises(ShapeError):
            partial_smash(pa)


class TestHeisenberg:
    @pytest.mark.parametrize(
        "hopf",
        [
            group_algebra(QQ, cyclic(2)),
            group_algebra(QQ, cyclic(3)),
            group_algebra(QQ, cyclic(4)),
            group_algebra(QQ, symmetric(3)),
            sweedler_h4(QQ),
        ],
        ids=["z2", "z3", "z4", "s3", "sweedler"],
    )
    def test_both_realizations(self, hopf):
        hei = heisenberg_isomorphisms(hopf)
        d = hopf.dim
        assert hei.report.ok, str(hei.report)
        assert hei.left_iso.rank() == d * d
        assert hei.right_iso.rank() == d * d
        ident = Matrix.identity(hopf.field, d * d)
        assert hei.left_iso.then(hei.left_inv).matrix == ident
        assert hei.right_iso.then(hei.right_inv).matrix == ident

    def test_left_values_z2(self):
        hei = heisenberg_isomorphisms(group_algebra(QQ, cyclic(2)))
        # 1 # p_1 is the projection onto the span of 1
        assert hei.left_iso.matrix.rows[kron_index(0, 0, 2)] == qvec(1, 0, 0, 0)
        # g # p_g sends g to 1 and kills 1
        assert hei.left_iso.matrix.rows[kron_index(1, 1, 2)] == qvec(0, 1, 0, 0)

    def test_right_values_z2(self):
        hei = heisenberg_isomorphisms(group_algebra(QQ, cyclic(2)))
        # p_1 # g sends 1 to g and kills g
        assert hei.right_iso.matrix.rows[kron_index(0, 1, 2)] == qvec(0, 0, 1, 0)
        # p_g # 1 is the projection onto the span of g
        assert hei.right_iso.matrix.rows[kron_index(1, 0, 2)] == qvec(0, 0, 0, 1)

    def test_prime_field(self):
        hei = heisenberg_isomorphisms(group_algebra(PrimeField(5), cyclic(4)))
        assert hei.report.ok
        assert hei.left_iso.rank() == 16

    def test_smash_carriers(self):
        hei = heisenberg_isomorphisms(group_algebra(QQ, cyclic(2)))
        assert hei.left_smash.dim == 4
        assert hei.right_smash.dim == 4
        assert hei.left_smash.unit is not None
        assert hei.right_smash.unit is not None


class TestComoduleFromAction:
    def test_swap_values(self, swap_action):
        gc = comodule_from_action(swap_action)
        one = q(1)
        assert gc.coact_basis(0) == [(0, 0, one), (1, 1, one)]
        assert gc.coact_basis(1) == [(1, 0, one), (0, 1, one)]

    def test_round_trip(self, swap_action):
        back = coaction_to_action(comodule_from_action(swap_action))
        for t in range(2):
            hv = unit_vec(QQ, 2, t)
            assert back.act_matrix(hv) == swap_action.act_matrix(hv)


class TestDoubleSmash:
    def test_dual_action_values(self, swap_action):
        dbl = double_smash(swap_action)
        assert dbl.algebra.dim == 8
        # p_g picks the g-translates out of the Hopf leg
        assert dbl.dual_action.act_basis(1, kron_index(0, 1, 2)) == [(kron_index(0, 1, 2), q(1))]
        assert dbl.dual_action.act_basis(1, kron_index(0, 0, 2)) == []


class TestBlattnerMontgomery:
    def test_report_and_dims(self, swap_duality):
        assert swap_duality.report.ok, str(swap_duality.report)
        assert swap_duality.double.algebra.dim == 8
        assert swap_duality.target.dim == 8

    def test_round_trip_identities(self, swap_duality):
        ident = Matrix.identity(QQ, 8)
        assert swap_duality.to_end.then(swap_duality.from_end).matrix == ident
        assert swap_duality.from_end.then(swap_duality.to_end).matrix == ident

    def test_unit_to_unit(self, swap_duality):
        x = swap_duality.double.algebra
        assert swap_duality.to_end.apply(x.unit) == swap_duality.target.unit

    def test_forward_value(self, swap_duality):
        # e0 # g # p_1 lands on (g . e0) E[g, 1] = e1 (x) E[1, 0]
        row = swap_duality.to_end.matrix.rows[kron_index(kron_index(0, 1, 2), 0, 2)]
        expected = tensor_vec(QQ, qvec(0, 1), unit_vec(QQ, 4, kron_index(1, 0, 2)))
        assert row == expected

    def test_multiplicative_on_all_pairs(self, swap_duality):
        x = swap_duality.double.algebra
        t = swap_duality.target
        f = swap_duality.to_end
        for i in range(x.dim):
            fi = f.apply(x.basis_vec(i))
            for j in range(x.dim):
                prod = x.mul(x.basis_vec(i), x.basis_vec(j))
                assert f.apply(prod) == t.mul(fi, f.apply(x.basis_vec(j)))

    def test_translate_sum_matches_for_group_case(self, swap_duality):
        assert swap_duality.notes["carrier_part_equals_translate_sum"] is True

    def test_corner_closed_form(self, swap_action, swap_duality):
        assert swap_duality.report.by_name("corner.operator_closed_form").passed
        closed = corner_operator_matrix(swap_action, qvec(1, 0))
        expected = Matrix(
            QQ,
            [qvec(1, 0, 0, 0), qvec(0, 0, 0, 0), qvec(0, 0, 0, 0), qvec(0, 0, 0, 1)],
            ncols=4,
        )
        assert closed == expected
        b = swap_action.algebra
        assert module_operator(b, 2, swap_duality.to_end.apply(swap_duality.corner)) == expected

    def test_rejects_non_idempotent(self, swap_action):
        with pytest.raises(NonCentralIdempotent):
            blattner_montgomery(swap_action, qvec(1, 2))

    def test_rejects_non_central(self):
        h = group_algebra(QQ, cyclic(2))
        b = end_algebra(QQ, 2)
        action = {
            (i, j): [(j, h.counit[i])]
            for i in range(2)
            for j in range(b.dim)
            if h.counit[i]
        }
        act = GlobalActionData(h, b, action)
        corner_candidate = unit_vec(QQ, 4, 0)
        with pytest.raises(NonCentralIdempotent):
            blattner_montgomery(act, corner_candidate)

    def test_sweedler_side(self, sweedler_side_duality):
        dual, _ = sweedler_side_duality
        assert dual.report.ok, str(dual.report)
        assert dual.double.algebra.dim == 64
        assert dual.report.by_name("corner.operator_closed_form").passed
        # the translate-sum shortcut needs a grouplike basis and fails here
        assert dual.notes["carrier_part_equals_translate_sum"] is False


class TestRestrictedDuality:
    def test_partial_corner_split(self, swap_restricted):
        assert swap_restricted.report.ok, str(swap_restricted.report)
        assert swap_restricted.corner_span.dim == 2
        assert swap_restricted.inner_ideal.dim == 1
        assert swap_restricted.outer_ideal.dim == 1
        assert swap_restricted.kernel == swap_restricted.outer_ideal
        assert swap_restricted.kernel.dim == 1
        assert swap_restricted.image.dim == 1
        assert swap_restricted.notes["partial_translate_sum_equals_corner_times_carrier"] is True

    def test_global_corner_is_everything(self, full_restricted):
        assert full_restricted.report.ok
        assert full_restricted.corner_span.dim == 8
        assert full_restricted.kernel.dim == 0
        assert full_restricted.inner_ideal.dim == 8
        assert full_restricted.outer_ideal.dim == 0

    def test_rejects_wrong_partial_action(self, swap_duality):
        wrong = scalar_partial_action(QQ, cyclic(2), [0, 1])
        with pytest.raises(VerificationError):
            restricted_duality(swap_duality, wrong)

    def test_rejects_wrong_hopf(self, swap_duality):
        other = scalar_partial_action(QQ, cyclic(3), [0])
        with pytest.raises(VerificationError):
            restricted_duality(swap_duality, other)

    def test_sweedler_side(self, sweedler_side_duality):
        _, rest = sweedler_side_duality
        assert rest.report.ok, str(rest.report)
        assert rest.corner_span.dim == 16
        assert rest.inner_ideal.dim == 8
        assert rest.outer_ideal.dim == 8
        assert rest.kernel == rest.outer_ideal
        assert rest.notes["partial_translate_sum_equals_corner_times_carrier"] is False


class TestModuleEndomorphisms:
    def test_partial_corner(self, swap_restricted):
        endo = module_endomorphisms(swap_restricted)
        assert endo.report.ok, str(endo.report)
        assert endo.module.dim == 2
        assert endo.algebra.dim == 2
        assert endo.iso.apply(swap_restricted.algebra.unit) == endo.algebra.unit

    def test_global_corner(self, full_restricted):
        endo = module_endomorphisms(full_restricted)
        assert endo.module.dim == 4
        assert endo.algebra.dim == 8

    def test_sweedler_side(self, sweedler_side_duality):
        _, rest = sweedler_side_duality
        endo = module_endomorphisms(rest)
        assert endo.report.ok, str(endo.report)
        assert endo.module.dim == 8
        assert endo.algebra.dim == 16


class TestModuleHomSpace:
    def test_orthogonal_ideals_have_no_maps(self):
        b = regular_permutation_action(QQ, cyclic(2)).algebra
        dom = Subspace.span(QQ, 2, [qvec(1, 0)])
        cod = Subspace.span(QQ, 2, [qvec(0, 1)])
        assert module_hom_space(b, dom, cod) == []

    def test_ideal_endomorphisms_are_scalars(self):
        b = regular_permutation_action(QQ, cyclic(2)).algebra
        dom = Subspace.span(QQ, 2, [qvec(1, 0)])
        homs = module_hom_space(b, dom, dom)
        assert len(homs) == 1
        assert homs[0].rank() == 1


class TestCohenMontgomery:
    def test_swap_matrix_form(self, swap_restricted):
        cm = cohen_montgomery(swap_restricted, cyclic(2))
        assert cm.report.ok, str(cm.report)
        assert cm.target.dim == 8
        assert cm.block_span.dim == 2
        assert cm.blocks.unit is not None
        assert cm.hom_dims == {
            (0, 0): (1, 1),
            (0, 1): (0, 0),
            (1, 0): (0, 0),
            (1, 1): (1, 1),
        }
        for name in (
            "matrix_form.matches_closed_formula",
            "blocks.match_corner_image",
            "corner_module.block_decomposition",
            "corner_chain.matches",
            "bridge.hom_dims_match_products",
            "bridge.composition_is_multiplication",
        ):
            assert cm.report.by_name(name).passed, name

    def test_cyclic_three_orbit(self):
        part = scalar_partial_action(QQ, cyclic(3), [0])
        res = enveloping_action(part)
        one_a = res.embedding.apply(part.algebra.unit)
        dual = blattner_montgomery(res.globalized, one_a)
        rest = restricted_duality(dual, induced_on_corner(res.globalized, one_a))
        assert rest.corner_span.dim == 3
        assert rest.kernel.dim == 2
        cm = cohen_montgomery(rest, cyclic(3))
        assert cm.report.ok, str(cm.report)
        assert cm.block_span.dim == 3
        for g in range(3):
            for h in range(3):
                assert cm.hom_dims[(g, h)] == ((1, 1) if g == h else (0, 0))

    def test_symmetric_group(self):
        g = symmetric(3)
        part = scalar_partial_action(QQ, g, [0, 3, 4])
        res = enveloping_action(part)
        one_a = res.embedding.apply(part.algebra.unit)
        dual = blattner_montgomery(res.globalized, one_a)
        rest = restricted_duality(dual, induced_on_corner(res.globalized, one_a))
        cm = cohen_montgomery(rest, g)
        assert cm.report.ok, str(cm.report)
        assert rest.corner_span.dim == 18
        assert rest.kernel.dim == 9
        assert cm.block_span.dim == 18

    def test_rejects_wrong_group_size(self, swap_restricted):
        with pytest.raises(ShapeError):
            cohen_montgomery(swap_restricted, cyclic(3))

    def test_rejects_non_group_hopf(self, sweedler_side_duality):
        _, rest = sweedler_side_duality
        with pytest.raises(ShapeError):
            cohen_montgomery(rest, cyclic(4))


class TestEnsureUnitalAction:
    def test_unital_passthrough(self, swap_action):
        same, embed = ensure_unital_action(swap_action)
        assert same is swap_action
        assert embed is None

    def test_adjoins_unit_for_sign_action(self):
        h = group_algebra(QQ, cyclic(2))
        nil = AlgebraData.from_entries(QQ, ["x", "x2"], [(0, 0, 1, q(1))], unit=None)
        action = {
            (0, 0): [(0, q(1))],
            (0, 1): [(1, q(1))],
            (1, 0): [(0, q(-1))],
            (1, 1): [(1, q(1))],
        }
        act = GlobalActionData(h, nil, action)
        assert verify_global_action(act).ok
        big, embed = ensure_unital_action(act)
        assert big.algebra.dim == 3
        assert big.algebra.unit == qvec(1, 0, 0)
        assert verify_global_action(big).ok
        assert embed.apply(qvec(1, 0)) == qvec(0, 1, 0)
        sm = smash_product(big)
        assert sm.algebra.dim == 6
        # g # x squares to -x2 # 1
        gx = [QQ.zero] * 6
        gx[kron_index(1, 1, 2)] = q(1)
        sq = sm.algebra.mul(gx, gx)
        expected = [QQ.zero] * 6
        expected[kron_index(2, 0, 2)] = q(-1)
        assert sq == expected
