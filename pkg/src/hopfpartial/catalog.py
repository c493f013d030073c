"""A catalog of small Hopf algebras, carriers, and worked partial (co)actions.

Every fixture built here is desk-checkable: the structure constants are short
enough to verify by hand, and the test suite does verify all of them.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .actions import (
    GlobalActionData,
    GlobalCoactionData,
    PartialActionData,
    PartialCoactionData,
    induced_partial_coaction,
)
from .algebra import AlgebraData, CoalgebraData, HopfAlgebraData, dual_hopf
from .errors import BadCharacteristic, InvalidGroup, ParseError, ShapeError
from .groups import GroupTable, group_by_name
from .linalg import Matrix, Subspace, unit_vec, zero_vec


def group_algebra(field, group):
    """kG: basis the group elements, grouplike coproduct, antipode by inverse."""
    n = group.order
    mult = {
        (i, j): [(group.table[i][j], field.one)] for i in range(n) for j in range(n)
    }
    alg = AlgebraData(field, list(group.names), mult, unit_vec(field, n, group.identity))
    comult = {i: [(i, i, field.one)] for i in range(n)}
    coa = CoalgebraData(field, n, comult, [field.one] * n)
    antipode = Matrix(field, [unit_vec(field, n, group.inv[i]) for i in range(n)])
    return HopfAlgebraData(alg, coa, antipode)


def function_algebra(field, group):
    """Functions on G: the dual of kG on the basis of point evaluations."""
    d = dual_hopf(group_algebra(field, group))
    labels = [f"p_{nm}" for nm in group.names]
    return HopfAlgebraData(
        d.algebra.relabeled(labels), d.coalgebra, d.antipode, d.antipode_inv
    )


def group_from_hopf(hopf):
    """Recover the group from a group algebra presented by structure constants.

    Every product of basis elements must be a single basis element with
    coefficient one, every basis element grouplike, and the antipode the
    inversion permutation; the recovered table is reverified on construction.
    """
    one = hopf.field.one
    n = hopf.dim
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            ent = hopf.algebra.mul_basis(i, j)
            if len(ent) != 1 or ent[0][1] != one:
                raise ShapeError(
                    f"not a group algebra: product of basis elements {i} and {j}"
                    " is not a single basis element"
                )
            row.append(ent[0][0])
        table.append(row)
    for i in range(n):
        if hopf.comult_basis(i) != [(i, i, one)] or hopf.counit[i] != one:
            raise ShapeError(f"not a group algebra: basis element {i} is not grouplike")
    group = GroupTable(table, names=list(hopf.labels))
    if hopf.unit != unit_vec(hopf.field, n, group.identity):
        raise ShapeError("not a group algebra: unit is not the identity basis vector")
    for i in range(n):
        if hopf.antipode.rows[i] != unit_vec(hopf.field, n, group.inv[i]):
            raise ShapeError("not a group algebra: antipode is not inversion")
    return group


def sweedler_h4(field):
    """The four-dimensional Hopf algebra on 1, c, x, cx with c^2 = 1, x^2 = 0,
    xc = -cx.  Needs characteristic different from 2."""
    if field.char == 2:
        raise BadCharacteristic("this Hopf algebra degenerates in characteristic 2")
    one = field.one
    # indices: 0 = 1, 1 = c, 2 = x, 3 = cx
    entries = [
        (0, 0, 0, one), (0, 1, 1, one), (0, 2, 2, one), (0, 3, 3, one),
        (1, 0, 1, one), (2, 0, 2, one), (3, 0, 3, one),
        (1, 1, 0, one),
        (1, 2, 3, one),
        (1, 3, 2, one),
        (2, 1, 3, -one),
        (3, 1, 2, -one),
    ]
    alg = AlgebraData.from_entries(field, ["1", "c", "x", "cx"], entries,
                                   unit=unit_vec(field, 4, 0))
    com = [
        (0, 0, 0, one),
        (1, 1, 1, one),
        (2, 2, 0, one), (2, 1, 2, one),
        (3, 3, 1, one), (3, 0, 3, one),
    ]
    coa = CoalgebraData.from_entries(field, 4, com, [one, one, field.zero, field.zero])
    antipode = Matrix(field, [
        unit_vec(field, 4, 0),
        unit_vec(field, 4, 1),
        [field.zero, field.zero, field.zero, -one],
        unit_vec(field, 4, 2),
    ])
    return HopfAlgebraData(alg, coa, antipode)


def truncated_polynomial_algebra(field, n, var="x"):
    """k[x]/(x^n) on the basis of monomials."""
    labels = ["1"] + [var if i == 1 else f"{var}^{i}" for i in range(1, n)]
    entries = [
        (i, j, i + j, field.one) for i in range(n) for j in range(n) if i + j < n
    ]
    return AlgebraData.from_entries(field, labels, entries, unit=unit_vec(field, n, 0))


def product_field_algebra(field, n):
    """k^n with componentwise product."""
    entries = [(i, i, i, field.one) for i in range(n)]
    return AlgebraData.from_entries(
        field, [f"e{i}" for i in range(n)], entries, unit=[field.one] * n
    )


def regular_permutation_action(field, group):
    """kG acting globally on k^G by permuting coordinates: g moves e_h to e_{gh}."""
    hopf = group_algebra(field, group)
    carrier = product_field_algebra(field, group.order).relabeled(
        [f"e_{nm}" for nm in group.names]
    )
    action = {
        (g, h): [(group.table[g][h], field.one)]
        for g in range(group.order)
        for h in range(group.order)
    }
    return GlobalActionData(hopf, carrier, action)


def self_coaction(hopf):
    """A Hopf algebra coacting on itself by its comultiplication."""
    coaction = {i: list(hopf.comult_basis(i)) for i in range(hopf.dim)}
    return GlobalCoactionData(hopf, hopf.algebra, coaction)


def scalar_partial_action(field, group, subset, weight=None):
    """The base field as carrier: group elements act by 1 on the subset and 0 off
    it.  ``weight`` replaces the value 1 off the identity (used to build broken
    inputs on purpose).  Valid as a partial action exactly when the subset is a
    subgroup and the weight is the default."""
    hopf = group_algebra(field, group)
    carrier = AlgebraData.from_entries(field, ["1"], [(0, 0, 0, field.one)],
                                       unit=[field.one])
    action = {}
    for g in subset:
        if not (0 <= g < group.order):
            raise InvalidGroup(f"subset index {g} out of range")
        c = field.one if (weight is None or g == group.identity) else weight
        if c:
            action[(g, 0)] = [(0, c)]
    return PartialActionData(hopf, carrier, action)


@dataclass
class ExampleFixture:
    """A worked example: a Hopf algebra with a partial (co)action plus the
    dimensions and relations its write-up promises, for the test suite and the
    command line runner to check."""

    fixture_id: str
    kind: str  # "partial_action" or "partial_coaction"
    title: str
    payload: object
    expected: dict = dc_field(default_factory=dict)
    group: GroupTable = None
    candidate: object = None  # optional candidate globalization (global (co)action, embedding)

    @property
    def hopf(self):
        return self.payload.hopf

    @property
    def carrier(self):
        return self.payload.algebra


def coset_coaction_fixture(field, group_name, indices):
    """A group algebra coacting partially on the coset space cut out by the
    averaging idempotent of a normal subgroup.

    Inside kG the carrier is e_N kG with e_N the average of the subgroup N;
    the coaction is the comultiplication compressed by e_N on the left leg.
    The comultiplication itself, on all of kG, is the obvious candidate
    globalization and is packaged with the fixture.
    """
    group = group_by_name(group_name)
    subgroup = sorted(set(indices))
    if not group.is_subgroup(subgroup):
        raise InvalidGroup(f"indices {subgroup} are not a subgroup")
    if not group.is_normal(subgroup):
        raise InvalidGroup(f"subgroup {subgroup} is not normal")
    if field.char and len(subgroup) % field.char == 0:
        raise BadCharacteristic("subgroup order vanishes in this characteristic")
    hopf = group_algebra(field, group)
    n_inv = field.one / field.from_int(len(subgroup))
    e_n = zero_vec(field, group.order)
    for n in subgroup:
        e_n[n] = n_inv
    span_vecs = []
    for g in range(group.order):
        v = zero_vec(field, group.order)
        for n in subgroup:
            v[group.table[n][g]] = n_inv
        span_vecs.append(v)
    sub = Subspace.span(field, group.order, span_vecs)
    cosets = group.left_cosets(subgroup)
    # left cosets of a normal subgroup; each basis vector averages one coset
    labels = [f"eN{group.names[c[0]]}" if c[0] != group.identity else "eN"
              for c in cosets]
    payload = induced_partial_coaction(self_coaction(hopf), sub, e_n, labels=labels)
    fid = f"example1:{group_name}:{','.join(str(i) for i in sorted(set(indices)))}"
    expected = {
        "carrier_dim": len(cosets),
        "globalization_dim": group.order,
        "embedded_carrier_dim": len(cosets),
    }
    return ExampleFixture(
        fixture_id=fid,
        kind="partial_coaction",
        title="group algebra coacting on a normal coset space",
        payload=payload,
        expected=expected,
        group=group,
        candidate=(self_coaction(hopf), _embedding_of(sub)),
    )


def _embedding_of(sub):
    from .algebra import LinearMapData

    return LinearMapData(Matrix(sub.field, [list(v) for v in sub.basis],
                                ncols=sub.ambient_dim))


def line_coaction_fixture(field, alpha):
    """The base field coacting partially under the four-dimensional Hopf
    algebra: 1 maps to 1 (x) f with f = (1 + c + alpha cx) / 2, an idempotent."""
    hopf = sweedler_h4(field)
    carrier = AlgebraData.from_entries(field, ["1"], [(0, 0, 0, field.one)],
                                       unit=[field.one])
    half = field.one / field.from_int(2)
    ent = [(0, 0, half), (0, 1, half)]
    ha = half * alpha
    if ha:
        ent.append((0, 3, ha))
    payload = PartialCoactionData(hopf, carrier, {0: ent})
    return ExampleFixture(
        fixture_id=f"example2:{field.fmt(alpha)}",
        kind="partial_coaction",
        title="one-dimensional partial coaction under the four-dimensional Hopf algebra",
        payload=payload,
        expected={"carrier_dim": 1, "globalization_dim": 2},
    )


def plane_coaction_fixture(field):
    """The two-dimensional carrier with a nilpotent generator coacting
    partially under the four-dimensional Hopf algebra."""
    hopf = sweedler_h4(field)
    carrier = truncated_polynomial_algebra(field, 2)
    half = field.one / field.from_int(2)
    payload = PartialCoactionData(
        hopf,
        carrier,
        {
            0: [(0, 0, half), (0, 1, half), (0, 3, half)],
            1: [(1, 0, half), (1, 1, half), (1, 3, half)],
        },
    )
    return ExampleFixture(
        fixture_id="example3",
        kind="partial_coaction",
        title="nilpotent plane coacting partially under the four-dimensional Hopf algebra",
        payload=payload,
        expected={
            "carrier_dim": 2,
            "globalization_dim": 4,
            "unital_part_dim": 2,
        },
    )


def scalar_fixture(field, group_name, indices):
    group = group_by_name(group_name)
    payload = scalar_partial_action(field, group, sorted(set(indices)))
    fid = f"scalar:{group_name}:{','.join(str(i) for i in sorted(set(indices)))}"
    return ExampleFixture(
        fixture_id=fid,
        kind="partial_action",
        title="scalar partial action supported on a subgroup",
        payload=payload,
        expected={"carrier_dim": 1},
        group=group,
    )


def fixture_by_id(field, fixture_id):
    """Fixture lookup by id, e.g. example1:z4:0,2 or example2:1 or example3."""
    parts = fixture_id.strip().split(":")
    head = parts[0]
    try:
        if head == "example1":
            if len(parts) != 3:
                raise ParseError("expected example1:<group>:<indices>")
            indices = [int(s) for s in parts[2].split(",") if s != ""]
            return coset_coaction_fixture(field, parts[1], indices)
        if head == "example2":
            if len(parts) != 2:
                raise ParseError("expected example2:<alpha>")
            return line_coaction_fixture(field, field.parse(parts[1]))
        if head == "example3":
            if len(parts) != 1:
                raise ParseError("example3 takes no parameters")
            return plane_coaction_fixture(field)
        if head == "scalar":
            if len(parts) != 3:
                raise ParseError("expected scalar:<group>:<indices>")
            indices = [int(s) for s in parts[2].split(",") if s != ""]
            return scalar_fixture(field, parts[1], indices)
    except ValueError:
        raise ParseError(f"bad integer in fixture id {fixture_id!r}")
    raise ParseError(f"unknown fixture id {fixture_id!r}")


def known_fixture_ids():
    """Representative ids the command line lists and the tests exercise."""
    return [
        "example1:z4:0,2",
        "example1:s3:0,3,4",
        "example2:0",
        "example2:1",
        "example2:2",
        "example3",
        "scalar:z2:0",
        "scalar:z3:0",
    ]
