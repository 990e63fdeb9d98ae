from itertools import product

import numpy as np
import sympy
from hypothesis import given, settings, strategies as st
from pytest import mark, raises

from sympiso.algebra import Cyclotomic, RingSpec
from sympiso.exceptions import EnumerationCapError, MalformedInputError, NonInvertibleError
from sympiso.matrix import (CyclotomicMatrix, GroupShape, Matrix, _howell_rows, _rref_gf2, canonicalize,
                            enumerate_group, group_order, inverse, kernel, rank_exact, solve_left)

moduli = st.sampled_from([2, 3, 4, 6, 8, 9])


@st.composite
def matrices(draw, modulus=None, max_rows=3, max_cols=4):
    d = modulus if modulus is not None else draw(moduli)
    rows = draw(st.integers(min_value=1, max_value=max_rows))
    cols = draw(st.integers(min_value=1, max_value=max_cols))
    entries = draw(st.lists(st.lists(st.integers(min_value=0, max_value=d - 1), min_size=cols, max_size=cols),
                            min_size=rows, max_size=rows))
    return Matrix(entries, RingSpec.modular(d), cols=cols)


def brute_span(matrix: Matrix) -> set:
    d = matrix.spec.modulus
    return {tuple(int(x) for x in np.mod(np.array(c) @ matrix.array, d))
            for c in product(range(d), repeat=matrix.rows)}


class TestMatrix:

    def test_reduces_entries(self, z4):
        assert Matrix([[5, -1]], z4).to_rows() == [(1, 3)]

    def test_empty(self, f2):
        empty = Matrix([], f2, cols=4)
        assert empty.shape == (0, 4)
        assert canonicalize(empty).rank == 0
        assert canonicalize(empty).span_size == 1

    def test_needs_two_dimensions(self, f2):
        with raises(MalformedInputError):
            Matrix([1, 0, 1], f2)

    def test_shape_mismatch(self, f2):
        with raises(MalformedInputError):
            Matrix.identity(2, f2) @ Matrix.identity(3, f2)

    def test_ring_mismatch(self, f2, f3):
        with raises(MalformedInputError):
            Matrix.identity(2, f2) + Matrix.identity(2, f3)

    def test_immutable(self, f2):
        with raises(ValueError):
            Matrix.identity(2, f2).array[0, 0] = 0

    def test_apply(self, f3):
        assert Matrix([[1, 2], [0, 1]], f3).apply((1, 1)) == (1, 0)


class TestCanonicalForm:

    def test_howell_adds_annihilator(self, z4):
        canonical = canonicalize(Matrix([[2, 1]], z4))
        assert canonical.form.to_rows() == [(2, 1), (0, 2)]
        assert canonical.span_size == 4
        assert canonical.contains((0, 2))
        assert not canonical.contains((0, 1))

    def test_same_span_same_form(self, z4):
        assert canonicalize(Matrix([[1, 2], [0, 2]], z4)) == canonicalize(Matrix([[1, 0], [0, 2]], z4))

    def test_pivot_values_divide_modulus(self):
        canonical = canonicalize(Matrix([[4, 2, 6], [0, 3, 3]], RingSpec.modular(12)))
        assert all(12 % value == 0 for value in canonical.pivot_values)

    @settings(max_examples=200, deadline=None)
    @given(matrices())
    def test_span_size_matches_enumeration(self, matrix):
        canonical = canonicalize(matrix)
        span = brute_span(matrix)
        assert canonical.span_size == len(span)
        assert set(canonical.span()) == span

    @settings(max_examples=200, deadline=None)
    @given(matrices(), st.data())
    def test_row_operations_keep_form(self, matrix, data):
        order = data.draw(st.permutations(range(matrix.rows)))
        extra = matrix.take_rows([0]) + matrix.take_rows([matrix.rows - 1])
        shuffled = matrix.take_rows(list(order)).vstack(extra)
        assert canonicalize(shuffled) == canonicalize(matrix)

    @settings(max_examples=200, deadline=None)
    @given(matrices(modulus=2, max_rows=5, max_cols=6))
    def test_gf2_packing_agrees_with_elimination(self, matrix):
        rows = matrix.to_rows()
        assert _rref_gf2(rows, matrix.cols) == _howell_rows(rows, matrix.cols, 2)


class TestSolving:

    @settings(max_examples=200, deadline=None)
    @given(matrices())
    def test_kernel(self, matrix):
        null = kernel(matrix)
        assert not np.any((null @ matrix).array)
        expected = {c for c in product(range(matrix.spec.modulus), repeat=matrix.rows)
                    if not any(np.mod(np.array(c) @ matrix.array, matrix.spec.modulus))}
        assert canonicalize(null).span_size == len(expected)

    @settings(max_examples=200, deadline=None)
    @given(matrices(), st.data())
    def test_solve_left(self, matrix, data):
        d = matrix.spec.modulus
        y = data.draw(st.lists(st.integers(min_value=0, max_value=d - 1), min_size=matrix.rows,
                               max_size=matrix.rows))
        target = matrix.apply(y)
        x = solve_left(matrix, target)
        assert x is not None
        assert matrix.apply(x) == target

    def test_solve_left_outside_span(self, z4):
        assert solve_left(Matrix([[2, 0]], z4), (1, 0)) is None

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_inverse(self, data):
        d = data.draw(moduli)
        size = data.draw(st.integers(min_value=1, max_value=3))
        matrix = data.draw(matrices(modulus=d, max_rows=size, max_cols=size))
        if matrix.rows != matrix.cols:
            with raises(MalformedInputError):
                inverse(matrix)
        elif matrix.is_invertible():
            assert matrix @ inverse(matrix) == Matrix.identity(matrix.rows, matrix.spec)
        else:
            with raises(NonInvertibleError):
                inverse(matrix)

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_det_matches_sympy(self, data):
        d = data.draw(moduli)
        size = data.draw(st.integers(min_value=1, max_value=4))
        entries = data.draw(st.lists(st.lists(st.integers(min_value=0, max_value=d - 1), min_size=size,
                                              max_size=size), min_size=size, max_size=size))
        assert Matrix(entries, RingSpec.modular(d)).det_mod() == int(sympy.Matrix(entries).det()) % d


class TestGroups:

    @mark.parametrize('spec, shape, k, order', [
        (RingSpec.prime_field(2), GroupShape.GL, 2, 6),
        (RingSpec.prime_field(2), GroupShape.GL, 3, 168),
        (RingSpec.prime_field(3), GroupShape.SL, 2, 24),
        (RingSpec.prime_field(3), GroupShape.GL, 2, 48),
        (RingSpec.modular(4), GroupShape.SL, 2, 48),
        (RingSpec.modular(4), GroupShape.GL, 2, 96),
        (RingSpec.modular(6), GroupShape.GL, 2, 288),
        (RingSpec.modular(6), GroupShape.SL, 2, 144),
        (RingSpec.modular(12), GroupShape.GL, 1, 4),
        (RingSpec.prime_field(2), GroupShape.SYMMETRIC, 3, 6),
    ])
    def test_enumerate_matches_order(self, spec, shape, k, order):
        assert group_order(spec, shape, k) == order
        elements = list(enumerate_group(spec, shape, k))
        keys = {e if shape is GroupShape.SYMMETRIC else e.key() for e in elements}
        assert len(elements) == len(keys) == order

    def test_enumeration_cap(self, f2):
        with raises(EnumerationCapError):
            list(enumerate_group(f2, GroupShape.GL, 3, max_enum=100))


class TestCyclotomicMatrix:

    def test_identity_product(self):
        i = Cyclotomic.root(4)
        matrix = CyclotomicMatrix([[1, i], [0, -1]], 4)
        assert CyclotomicMatrix.identity(2, 4) @ matrix == matrix
        assert matrix.dagger().dagger() == matrix

    def test_rank(self):
        i = Cyclotomic.root(4)
        assert rank_exact(CyclotomicMatrix([[1, i], [i, -1]], 4)) == 1
        assert rank_exact(CyclotomicMatrix.identity(3, 3)) == 3
        assert rank_exact(CyclotomicMatrix.zeros(2, 2, 5)) == 0

    def test_kron(self):
        x = CyclotomicMatrix([[0, 1], [1, 0]], 4)
        assert (x.kron(CyclotomicMatrix.identity(2, 4))).shape == (4, 4)
        assert x.kron(x) @ x.kron(x) == CyclotomicMatrix.identity(4, 4)

    def test_mixed_conductors(self):
        product_ = CyclotomicMatrix([[Cyclotomic.root(3)]], 3) @ CyclotomicMatrix([[Cyclotomic.root(4)]], 4)
        assert product_.conductor == 12
        assert product_[0, 0] == Cyclotomic.root(12, 7)

    def test_ragged(self):
        with raises(MalformedInputError):
            CyclotomicMatrix([[1, 0], [1]], 4)
