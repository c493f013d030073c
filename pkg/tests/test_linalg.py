"""Exact linear algebra: RREF, inverses, subspace lattice, bilinear closure."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfpartial.errors import ParseError, SingularMatrixError
from hopfpartial.fields import QQ, FpElement, PrimeField, field_from_spec
from hopfpartial.linalg import Matrix, Subspace, closure_bilinear, solve_left

F5 = PrimeField(5)


def q(x):
    return Fraction(x)


def qvec(*xs):
    return [Fraction(x) for x in xs]


class TestFields:
    def test_rational_parse(self):
        assert QQ.parse("-3/4") == Fraction(-3, 4)
        with pytest.raises(ParseError):
            QQ.parse("1/0")
        with pytest.raises(ParseError):
            QQ.parse("x")

    def test_prime_field_arithmetic(self):
        a = F5.from_int(3)
        b = F5.from_int(4)
        assert a + b == F5.from_int(2)
        assert a * b == F5.from_int(2)
        assert (a / b).val == 2  # 3 * 4^{-1} = 3 * 4 = 12 = 2
        assert -a == F5.from_int(2)
        assert a - a == F5.zero
        assert bool(F5.zero) is False

    def test_prime_field_rejects_composite(self):
        with pytest.raises(ParseError):
            PrimeField(6)

    def test_field_from_spec(self):
        assert field_from_spec("q") is QQ
        assert field_from_spec("fp:7").char == 7
        with pytest.raises(ParseError):
            field_from_spec("fp:8")
        with pytest.raises(ParseError):
            field_from_spec("r")

    def test_fp_div_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            F5.one / F5.zero


class TestMatrix:
    def test_rref_known(self):
        m = Matrix(QQ, [qvec(1, 2, 3), qvec(2, 4, 6), qvec(1, 1, 1)])
        r, rank, pivots = m.rref()
        assert rank == 2
        assert pivots == (0, 1)
        assert r.rows[0] == qvec(1, 0, -1)
        assert r.rows[1] == qvec(0, 1, 2)
        assert r.rows[2] == qvec(0, 0, 0)

    def test_inverse_known(self):
        m = Matrix(QQ, [qvec(2, 1), qvec(1, 1)])
        inv = m.inverse()
        assert inv.rows == [qvec(1, -1), qvec(-1, 2)]
        assert m.mul(inv) == Matrix.identity(QQ, 2)

    def test_inverse_singular(self):
        m = Matrix(QQ, [qvec(1, 2), qvec(2, 4)])
        with pytest.raises(SingularMatrixError):
            m.inverse()

    def test_apply_row_convention(self):
        # row i of the matrix is the image of basis vector i
        m = Matrix(QQ, [qvec(0, 1), qvec(2, 0)])
        assert m.apply_row(qvec(1, 0)) == qvec(0, 1)
        assert m.apply_row(qvec(3, 5)) == qvec(10, 3)

    def test_solve_left(self):
        m = Matrix(QQ, [qvec(1, 1), qvec(0, 1)])
        x = solve_left(m, qvec(2, 5))
        assert x == qvec(2, 3)
        assert m.apply_row(x) == qvec(2, 5)
        assert solve_left(Matrix(QQ, [qvec(1, 0)], ncols=2), qvec(0, 1)) is None

    def test_left_kernel(self):
        m = Matrix(QQ, [qvec(1, 2), qvec(2, 4), qvec(0, 1)])
        ker = m.left_kernel()
        assert ker.nrows == 1
        for row in ker.rows:
            assert Matrix(QQ, [row], ncols=3).mul(m).rows[0] == qvec(0, 0)

    def test_fp_rref(self):
        m = Matrix(F5, [[F5.from_int(2), F5.from_int(1)], [F5.from_int(1), F5.from_int(1)]])
        assert m.rank() == 2
        inv = m.inverse()
        assert m.mul(inv) == Matrix.identity(F5, 2)


class TestSubspace:
    def test_span_canonical(self):
        s1 = Subspace.span(QQ, 3, [qvec(1, 1, 0), qvec(0, 0, 1)])
        s2 = Subspace.span(QQ, 3, [qvec(2, 2, 2), qvec(0, 0, 5), qvec(1, 1, 3)])
        assert s1 == s2
        assert s1.dim == 2

    def test_coordinates_and_lift(self):
        s = Subspace.span(QQ, 3, [qvec(1, 0, 1), qvec(0, 1, 1)])
        v = qvec(2, 3, 5)
        coords = s.coordinates(v)
        assert coords == qvec(2, 3)
        assert s.lift(coords) == v
        assert s.coordinates(qvec(1, 0, 0)) is None

    def test_contains_space(self):
        big = Subspace.full(QQ, 3)
        small = Subspace.span(QQ, 3, [qvec(1, 2, 3)])
        assert big.contains_space(small)
        assert not small.contains_space(big)

    def test_add_intersect(self):
        a = Subspace.span(QQ, 3, [qvec(1, 0, 0), qvec(0, 1, 0)])
        b = Subspace.span(QQ, 3, [qvec(0, 1, 0), qvec(0, 0, 1)])
        assert a.add(b).dim == 3
        meet = a.intersect(b)
        assert meet.dim == 1
        assert meet.contains(qvec(0, 1, 0))

    def test_intersection_dimension_formula(self):
        a = Subspace.span(QQ, 4, [qvec(1, 0, 0, 0), qvec(0, 1, 0, 0), qvec(0, 0, 1, 0)])
        b = Subspace.span(QQ, 4, [qvec(0, 0, 1, 0), qvec(0, 0, 0, 1)])
        assert a.add(b).dim + a.intersect(b).dim == a.dim + b.dim


class TestClosure:
    def test_truncated_polynomial_cube(self):
        # k[x]/(x^3) on basis (1, x, x^2); the seed {x} closes to span{x, x^2}
        def mul(u, v):
            out = [Fraction(0)] * 3
            for i in range(3):
                for j in range(3):
                    if u[i] and v[j] and i + j < 3:
                        out[i + j] += u[i] * v[j]
            return out

        got = closure_bilinear(QQ, 3, [qvec(0, 1, 0)], mul)
        assert got == Subspace.span(QQ, 3, [qvec(0, 1, 0), qvec(0, 0, 1)])

    def test_unit_adjoined(self):
        def mul(u, v):
            return [u[0] * v[0], u[0] * v[1] + u[1] * v[0]]

        got = closure_bilinear(QQ, 2, [qvec(0, 1)], mul, unit=qvec(1, 0))
        assert got.dim == 2


small_q = st.integers(-6, 6).map(Fraction)


def qmatrix(nrows, ncols):
    return st.lists(st.lists(small_q, min_size=ncols, max_size=ncols),
                    min_size=nrows, max_size=nrows).map(lambda rows: Matrix(QQ, rows, ncols=ncols))


class TestHypothesis:
    @settings(max_examples=60, deadline=None)
    @given(qmatrix(3, 4))
    def test_rref_idempotent(self, m):
        r1, rank1, piv1 = m.rref()
        r2, rank2, piv2 = r1.rref()
        assert r1 == r2
        assert (rank1, piv1) == (rank2, piv2)

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.lists(small_q, min_size=3, max_size=3), min_size=1, max_size=4),
           st.randoms(use_true_random=False))
    def test_span_order_independent(self, vecs, rng):
        shuffled = list(vecs)
        rng.shuffle(shuffled)
        assert Subspace.span(QQ, 3, vecs) == Subspace.span(QQ, 3, shuffled)

    @settings(max_examples=60, deadline=None)
    @given(qmatrix(3, 3))
    def test_inverse_round_trip(self, m):
        try:
            inv = m.inverse()
        except SingularMatrixError:
            assert m.rank() < 3
            return
        assert m.mul(inv) == Matrix.identity(QQ, 3)
        assert inv.mul(m) == Matrix.identity(QQ, 3)

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.lists(st.integers(0, 6).map(lambda v: FpElement(v, 7)),
                             min_size=3, max_size=3), min_size=1, max_size=4))
    def test_fp_span_subspace_of_self(self, vecs):
        f = PrimeField(7)
        s = Subspace.span(f, 3, vecs)
        for v in vecs:
            assert s.contains(v)
