"""Groups, the catalog of Hopf algebras, and partial (co)action fixtures."""

from fractions import Fraction

import pytest

from hopfpartial.actions import (
    GlobalActionData,
    PartialActionData,
    action_to_coaction,
    canonical_pairing,
    coaction_to_action,
    induced_partial_action,
    induced_partial_coaction,
    is_global,
    is_global_coaction,
    unitize_global_action,
    verify_global_action,
    verify_global_coaction,
    verify_pairing,
    verify_partial_action,
    verify_partial_coaction,
)
from hopfpartial.algebra import (
    dual_hopf,
    restrict_algebra,
    unitize_algebra,
    verify_algebra,
    verify_structure,
)
from hopfpartial.catalog import (
    coset_coaction_fixture,
    fixture_by_id,
    function_algebra,
    group_algebra,
    known_fixture_ids,
    line_coaction_fixture,
    plane_coaction_fixture,
    product_field_algebra,
    regular_permutation_action,
    scalar_partial_action,
    self_coaction,
    sweedler_h4,
    truncated_polynomial_algebra,
)
from hopfpartial.errors import (
    BadCharacteristic,
    InvalidGroup,
    NotRightIdeal,
    NotUnitOnA,
    ParseError,
)
from hopfpartial.fields import QQ, PrimeField
from hopfpartial.groups import cyclic, from_cayley, group_by_name, symmetric
from hopfpartial.linalg import Subspace


def q(x):
    return Fraction(x)


def qvec(*xs):
    return [Fraction(x) for x in xs]


class TestGroups:
    def test_cyclic(self):
        g = cyclic(4)
        assert g.order == 4
        assert g.identity == 0
        assert g.inv == [0, 3, 2, 1]

    def test_symmetric_lex_order(self):
        s3 = symmetric(3)
        assert s3.order == 6
        assert s3.names == ["012", "021", "102", "120", "201", "210"]
        assert s3.identity == 0
        # (120) sends 0->1, 1->2, 2->0; composed with itself gives (201)
        assert s3.mul(3, 3) == 4

    def test_composition_convention(self):
        s3 = symmetric(3)
        # s = 021 swaps 1,2; t = 102 swaps 0,1; (s t)(x) = s(t(x)) maps 0->2
        assert s3.names[s3.mul(1, 2)] == "201"

    def test_subgroup_checks(self):
        s3 = symmetric(3)
        assert s3.is_subgroup([0, 3, 4])
        assert s3.is_normal([0, 3, 4])
        assert s3.is_subgroup([0, 1])
        assert not s3.is_normal([0, 1])
        assert not s3.is_subgroup([0, 3])
        z4 = cyclic(4)
        assert z4.is_normal([0, 2])

    def test_left_cosets(self):
        z4 = cyclic(4)
        assert z4.left_cosets([0, 2]) == [[0, 2], [1, 3]]

    def test_bad_tables_rejected(self):
        with pytest.raises(InvalidGroup):
            from_cayley([[0, 1], [1, 1]])  # 1 has no inverse
        with pytest.raises(InvalidGroup):
            from_cayley([[0, 1, 2], [1, 0, 0], [2, 0, 1]])  # not associative

    def test_group_by_name(self):
        assert group_by_name("z6").order == 6
        assert group_by_name("s3").order == 6
        with pytest.raises(InvalidGroup):
            group_by_name("q8")


class TestCatalogHopf:
    @pytest.mark.parametrize("gname", ["z2", "z3", "z4", "s3"])
    def test_group_algebras_verify(self, gname):
        h = group_algebra(QQ, group_by_name(gname))
        assert verify_structure(h).ok

    @pytest.mark.parametrize("gname", ["z2", "z3", "s3"])
    def test_function_algebras_verify(self, gname):
        h = function_algebra(QQ, group_by_name(gname))
        assert verify_structure(h).ok
        assert h.labels[0].startswith("p_")

    def test_function_algebra_pointwise(self):
        h = function_algebra(QQ, cyclic(3))
        assert h.algebra.mul(h.algebra.basis_vec(1), h.algebra.basis_vec(1)) == qvec(0, 1, 0)
        assert h.algebra.mul(h.algebra.basis_vec(1), h.algebra.basis_vec(2)) == qvec(0, 0, 0)
        assert h.unit == qvec(1, 1, 1)

    def test_group_algebra_over_prime_field(self):
        f = PrimeField(5)
        h = group_algebra(f, cyclic(4))
        assert verify_structure(h).ok

    def test_sweedler_verifies(self):
        h = sweedler_h4(QQ)
        assert verify_structure(h).ok

    def test_sweedler_relations(self):
        h = sweedler_h4(QQ)
        c, x, cx = h.algebra.basis_vec(1), h.algebra.basis_vec(2), h.algebra.basis_vec(3)
        assert h.mul(c, c) == h.unit
        assert h.mul(x, x) == qvec(0, 0, 0, 0)
        assert h.mul(x, c) == qvec(0, 0, 0, -1)
        assert h.mul(c, x) == cx

    def test_sweedler_antipode_order_four(self):
        h = sweedler_h4(QQ)
        s2 = h.antipode.mul(h.antipode)
        assert s2 != h.antipode.mul(h.antipode_inv)  # S^2 is not the identity
        assert s2.mul(s2) == h.antipode.mul(h.antipode_inv)  # but S^4 is
        x = h.algebra.basis_vec(2)
        assert h.antipode_apply(x) == qvec(0, 0, 0, -1)
        assert h.antipode_apply(h.algebra.basis_vec(3)) == x

    def test_sweedler_char_two_rejected(self):
        with pytest.raises(BadCharacteristic):
            sweedler_h4(PrimeField(2))

    def test_sweedler_over_f3(self):
        assert verify_structure(sweedler_h4(PrimeField(3))).ok

    def test_sweedler_dual_verifies(self):
        assert verify_structure(dual_hopf(sweedler_h4(QQ))).ok

    def test_canonical_pairing(self):
        for h in (group_algebra(QQ, cyclic(3)), sweedler_h4(QQ)):
            d = dual_hopf(h)
            rep = verify_pairing(h, d, canonical_pairing(h, d))
            assert rep.ok, str(rep)


class TestCarriers:
    def test_truncated_polynomials(self):
        a = truncated_polynomial_algebra(QQ, 3)
        assert verify_algebra(a).ok
        assert a.labels == ["1", "x", "x^2"]

    def test_product_field(self):
        a = product_field_algebra(QQ, 3)
        assert verify_algebra(a).ok
        assert a.unit == qvec(1, 1, 1)

    def test_unitize(self):
        amb = truncated_polynomial_algebra(QQ, 3)
        sub = Subspace.span(QQ, 3, [qvec(0, 1, 0), qvec(0, 0, 1)])
        nil = restrict_algebra(amb, sub)
        assert nil.unit is None
        big, embed = unitize_algebra(nil)
        assert verify_algebra(big).ok
        assert big.unit == qvec(1, 0, 0)
        assert embed.apply(qvec(1, 0)) == qvec(0, 1, 0)
        # embedded product matches: x * x = x^2
        lhs = big.mul(embed.apply(qvec(1, 0)), embed.apply(qvec(1, 0)))
        assert lhs == embed.apply(qvec(0, 1))


class TestGlobalActions:
    @pytest.mark.parametrize("gname", ["z2", "z3", "s3"])
    def test_regular_action_is_module_algebra(self, gname):
        ga = regular_permutation_action(QQ, group_by_name(gname))
        assert verify_global_action(ga).ok
        assert is_global(ga)

    def test_regular_action_moves_points(self):
        ga = regular_permutation_action(QQ, cyclic(3))
        g = ga.hopf.algebra.basis_vec(1)
        assert ga.act(g, ga.algebra.basis_vec(0)) == qvec(0, 1, 0)
        assert ga.act(g, ga.algebra.basis_vec(2)) == qvec(1, 0, 0)

    def test_self_coaction_global(self):
        gc = self_coaction(group_algebra(QQ, cyclic(3)))
        assert verify_global_coaction(gc).ok
        assert is_global_coaction(gc)

    def test_sweedler_self_coaction(self):
        gc = self_coaction(sweedler_h4(QQ))
        assert verify_global_coaction(gc).ok

    def test_unitize_global_action(self):
        amb = truncated_polynomial_algebra(QQ, 3)
        sub = Subspace.span(QQ, 3, [qvec(0, 1, 0), qvec(0, 0, 1)])
        nil = restrict_algebra(amb, sub)
        h = group_algebra(QQ, cyclic(2))
        # sign action: the order-two element negates x, fixes x^2
        ga = GlobalActionData(h, nil, {
            (0, 0): [(0, q(1))], (0, 1): [(1, q(1))],
            (1, 0): [(0, q(-1))], (1, 1): [(1, q(1))],
        })
        assert verify_global_action(ga).ok
        big, embed = unitize_global_action(ga)
        assert verify_global_action(big).ok
        assert big.algebra.unit == qvec(1, 0, 0)
        assert big.act(h.algebra.basis_vec(1), qvec(0, 1, 0)) == qvec(0, -1, 0)
        assert embed.apply(qvec(1, 0)) == qvec(0, 1, 0)


class TestScalarPartialActions:
    def test_subgroup_support_is_partial(self):
        pa = scalar_partial_action(QQ, cyclic(2), [0])
        rep = verify_partial_action(pa)
        assert rep.ok, str(rep)
        assert not is_global(pa)

    def test_full_support_is_global(self):
        pa = scalar_partial_action(QQ, cyclic(2), [0, 1])
        assert verify_partial_action(pa).ok
        assert is_global(pa)

    def test_non_subgroup_support_fails(self):
        pa = scalar_partial_action(QQ, cyclic(4), [0, 1])
        rep = verify_partial_action(pa)
        assert not rep.ok
        assert not rep.by_name("action.composition_rule").passed

    def test_missing_identity_fails(self):
        pa = scalar_partial_action(QQ, cyclic(2), [1])
        rep = verify_partial_action(pa)
        assert not rep.by_name("action.unit_of_hopf").passed

    def test_corrupted_weight_fails_composition(self):
        pa = scalar_partial_action(QQ, cyclic(2), [0, 1], weight=q(1) / 2)
        rep = verify_partial_action(pa)
        assert not rep.by_name("action.composition_rule").passed
        assert rep.by_name("action.unit_of_hopf").passed


class TestInduced:
    def test_induced_from_regular_is_scalar(self):
        ga = regular_permutation_action(QQ, cyclic(2))
        sub = Subspace.span(QQ, 2, [qvec(1, 0)])
        pa = induced_partial_action(ga, sub, qvec(1, 0))
        assert verify_partial_action(pa).ok
        want = scalar_partial_action(QQ, cyclic(2), [0])
        assert pa.action == want.action

    def test_induced_two_block(self):
        ga = regular_permutation_action(QQ, cyclic(4))
        sub = Subspace.span(QQ, 4, [qvec(1, 0, 1, 0)])
        pa = induced_partial_action(ga, sub, qvec(1, 0, 1, 0))
        assert verify_partial_action(pa).ok
        # support is the subgroup of even rotations
        assert pa.act_basis(0, 0) == [(0, q(1))]
        assert pa.act_basis(2, 0) == [(0, q(1))]
        assert pa.act_basis(1, 0) == []

    def test_not_unit_on_a(self):
        ga = regular_permutation_action(QQ, cyclic(2))
        sub = Subspace.span(QQ, 2, [qvec(1, 0), qvec(0, 1)])
        with pytest.raises(NotUnitOnA):
            induced_partial_action(ga, sub, qvec(1, 0))
        with pytest.raises(NotUnitOnA):
            induced_partial_action(ga, Subspace.span(QQ, 2, [qvec(1, 1)]), qvec(1, 0))

    def test_not_right_ideal(self):
        ga = regular_permutation_action(QQ, cyclic(3))
        sub = Subspace.span(QQ, 3, [qvec(1, 1, 0)])
        with pytest.raises(NotRightIdeal):
            induced_partial_action(ga, sub, qvec(1, 1, 0))

    def test_induced_coaction_counterpart(self):
        gc = self_coaction(group_algebra(QQ, cyclic(2)))
        sub = Subspace.span(QQ, 2, [qvec(1, 0), qvec(0, 1)])
        pc = induced_partial_coaction(gc, sub, qvec(1, 0))
        assert verify_global_coaction(pc).ok  # whole space: still global


class TestConversion:
    def test_coaction_to_action_example2(self):
        fx = line_coaction_fixture(QQ, q(1))
        pa = coaction_to_action(fx.payload)
        assert isinstance(pa, PartialActionData)
        rep = verify_partial_action(pa)
        assert rep.ok, str(rep)

    def test_round_trip_coaction(self):
        for fx in (line_coaction_fixture(QQ, q(2)), plane_coaction_fixture(QQ)):
            back = action_to_coaction(coaction_to_action(fx.payload))
            assert back.coaction == fx.payload.coaction
            assert back.hopf.structure_equal(fx.payload.hopf)

    def test_round_trip_action(self):
        pa = scalar_partial_action(QQ, cyclic(2), [0])
        back = coaction_to_action(action_to_coaction(pa))
        assert back.action == pa.action
        assert back.hopf.structure_equal(pa.hopf)

    def test_global_stays_global(self):
        ga = regular_permutation_action(QQ, cyclic(2))
        gc = action_to_coaction(ga)
        assert is_global_coaction(gc)
        assert verify_global_coaction(gc).ok


class TestFixtures:
    def test_example2_all_alphas(self):
        for alpha in (q(0), q(1), q(2)):
            fx = line_coaction_fixture(QQ, alpha)
            rep = verify_partial_coaction(fx.payload)
            assert rep.ok, f"alpha={alpha}: {rep}"
            assert not is_global_coaction(fx.payload)

    def test_example2_image_idempotent(self):
        # the image of 1 must be an idempotent of carrier (x) Hopf
        from hopfpartial.algebra import tensor_product_algebra

        for alpha in (q(0), q(1), q(5)):
            fx = line_coaction_fixture(QQ, alpha)
            t = tensor_product_algebra(fx.carrier, fx.hopf.algebra)
            f = fx.payload.coact_dense(fx.carrier.unit)
            assert t.mul(f, f) == f

    def test_example3(self):
        fx = plane_coaction_fixture(QQ)
        rep = verify_partial_coaction(fx.payload)
        assert rep.ok, str(rep)
        assert not is_global_coaction(fx.payload)
        assert fx.carrier.dim == 2

    def test_example1_z4(self):
        fx = coset_coaction_fixture(QQ, "z4", [0, 2])
        assert fx.carrier.dim == 2
        rep = verify_partial_coaction(fx.payload)
        assert rep.ok, str(rep)
        assert not is_global_coaction(fx.payload)

    def test_example1_s3(self):
        fx = coset_coaction_fixture(QQ, "s3", [0, 3, 4])
        assert fx.carrier.dim == 2
        assert verify_partial_coaction(fx.payload).ok

    def test_example1_rejects_non_normal(self):
        with pytest.raises(InvalidGroup):
            coset_coaction_fixture(QQ, "s3", [0, 1])
        with pytest.raises(InvalidGroup):
            coset_coaction_fixture(QQ, "z4", [0, 1])

    def test_example1_rejects_bad_characteristic(self):
        with pytest.raises(BadCharacteristic):
            coset_coaction_fixture(PrimeField(2), "z4", [0, 2])

    def test_example1_full_subgroup_is_global(self):
        fx = coset_coaction_fixture(QQ, "z4", [0])
        assert fx.carrier.dim == 4
        assert is_global_coaction(fx.payload)

    def test_fixture_ids(self):
        for fid in known_fixture_ids():
            fx = fixture_by_id(QQ, fid)
            assert fx.fixture_id == fid

    def test_fixture_id_errors(self):
        for bad in ("example1:z4", "example2", "example3:1", "nope", "scalar:z2:x"):
            with pytest.raises(ParseError):
                fixture_by_id(QQ, bad)
