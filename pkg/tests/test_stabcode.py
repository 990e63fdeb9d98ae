import numpy as np
from hypothesis import given, settings, strategies as st
from pytest import mark, raises

from sympiso.algebra import RingSpec
from sympiso.exceptions import (CodeMembershipError, EnumerationCapError, MalformedInputError, NotSelfOrthogonalError,
                                UnsupportedRingError)
from sympiso.isometry import rmon_group, symp_group
from sympiso.matrix import Matrix
from sympiso.problems import fixtures
from sympiso.stabcode import (StabilizerCode, coset_representatives, coset_weight_table, concat_p_fold, dual,
                              extension_weight_tables, gamma, gamma_inv, is_self_dual, is_self_orthogonal,
                              is_socle_code, min_distance, self_dual_extensions, socle_lift, socle_reduce,
                              symp_inner, symp_weight, symplectic_gram)


@st.composite
def codes(draw):
    d = draw(st.sampled_from([2, 3, 4, 6]))
    n = draw(st.integers(min_value=1, max_value=2))
    rows = draw(st.integers(min_value=1, max_value=3))
    entries = draw(st.lists(st.lists(st.integers(min_value=0, max_value=d - 1), min_size=2 * n, max_size=2 * n),
                            min_size=rows, max_size=rows))
    return StabilizerCode.from_rows(entries, RingSpec.modular(d), n=n)


@st.composite
def vector_pairs(draw):
    d = draw(st.sampled_from([2, 3, 4, 5]))
    n = draw(st.integers(min_value=1, max_value=4))
    vector = st.lists(st.integers(min_value=0, max_value=d - 1), min_size=2 * n, max_size=2 * n)
    return RingSpec.modular(d), draw(vector), draw(vector)


class TestSymplecticForm:

    def test_x_and_z_anticommute(self, f2, f3):
        assert symp_inner((1, 0), (0, 1), f2) == 1
        assert symp_inner((1, 0), (0, 1), f3) == 2
        assert symp_inner((0, 1), (1, 0), f3) == 1

    def test_weight(self):
        assert symp_weight((1, 0, 0, 0, 1, 0)) == 2
        assert symp_weight((0, 0, 0, 0)) == 0

    def test_odd_length(self, f2):
        with raises(MalformedInputError):
            symp_inner((1, 0, 1), (0, 1, 1), f2)

    def test_gamma(self):
        assert gamma((1, 2, 3, 4)) == (1, 3, 2, 4)
        assert gamma_inv((1, 3, 2, 4)) == (1, 2, 3, 4)

    @settings(max_examples=200)
    @given(vector_pairs())
    def test_gram_matches_inner_product(self, data):
        spec, u, v = data
        gram = symplectic_gram(len(u) // 2, spec)
        assert Matrix([u], spec) @ gram @ Matrix([v], spec).T == Matrix([[symp_inner(u, v, spec)]], spec)

    @settings(max_examples=200)
    @given(vector_pairs())
    def test_alternating(self, data):
        spec, u, v = data
        assert symp_inner(u, u, spec) == 0
        assert (symp_inner(u, v, spec) + symp_inner(v, u, spec)) % spec.modulus == 0

    @settings(max_examples=200)
    @given(vector_pairs())
    def test_weight_is_interleaved_hamming_weight(self, data):
        _, u, _ = data
        pairs = gamma(u)
        assert symp_weight(u) == sum(1 for i in range(0, len(pairs), 2) if pairs[i] or pairs[i + 1])


class TestStabilizerCode:

    def test_minimal_generators_are_kept(self, f2):
        rows = [[1, 1, 0, 0], [0, 0, 1, 1]]
        assert StabilizerCode.from_rows(rows, f2).generators == Matrix(rows, f2)

    def test_redundant_generators_are_replaced(self, f2):
        code = StabilizerCode.from_rows([[1, 1, 0, 0], [1, 1, 0, 0]], f2)
        assert code.k == 1
        assert code.generators.rows == 1

    def test_equality_ignores_generators(self, f2, bell_code):
        assert StabilizerCode.from_rows([[1, 1, 0, 0], [1, 1, 1, 1]], f2) == bell_code
        assert hash(StabilizerCode.from_rows([[1, 1, 1, 1], [0, 0, 1, 1]], f2)) == hash(bell_code)

    def test_interleaved(self, f2, bell_code):
        assert StabilizerCode.from_interleaved([[1, 0, 1, 0], [0, 1, 0, 1]], f2) == bell_code
        assert bell_code.interleaved().to_rows() == [(1, 0, 1, 0), (0, 1, 0, 1)]

    def test_odd_columns(self, f2):
        with raises(MalformedInputError):
            StabilizerCode(Matrix([[1, 0, 1]], f2))

    def test_size_and_codewords(self, symp_vs_mon_code):
        assert symp_vs_mon_code.k == 3
        assert symp_vs_mon_code.size == 8
        assert len(set(symp_vs_mon_code.codewords())) == 8

    def test_trivial_codes(self, f2):
        assert StabilizerCode.zero(2, f2).size == 1
        assert StabilizerCode.full(2, f2).size == 16
        assert dual(StabilizerCode.zero(2, f2)) == StabilizerCode.full(2, f2)


class TestDuality:

    def test_self_dual(self, bell_code, not_lu_code, not_lu_image):
        assert is_self_dual(bell_code)
        assert is_self_dual(not_lu_code)
        assert is_self_dual(not_lu_image)

    def test_self_orthogonal_not_self_dual(self, repetition_code):
        assert is_self_orthogonal(repetition_code)
        assert not is_self_dual(repetition_code)
        assert dual(repetition_code).k == 4

    def test_not_self_orthogonal(self, f2):
        code = StabilizerCode.full(1, f2)
        assert not is_self_orthogonal(code)

    def test_reference_dual(self, extension_code, extension_dual):
        assert dual(extension_code) == extension_dual

    @settings(max_examples=200, deadline=None)
    @given(codes())
    def test_dual_properties(self, code):
        perp = dual(code)
        assert code.size * perp.size == code.spec.modulus ** (2 * code.n)
        assert dual(perp) == code
        for row in perp.generators.to_rows():
            for generator in code.generators.to_rows():
                assert symp_inner(row, generator, code.spec) == 0


class TestDistance:

    def test_self_dual(self, bell_code):
        assert min_distance(bell_code) == 2

    def test_not_self_dual(self, repetition_code):
        assert min_distance(repetition_code) == 1

    def test_cap(self, repetition_code):
        with raises(EnumerationCapError):
            min_distance(repetition_code, max_enum=4)


class TestConstructions:

    def test_concatenation_is_self_orthogonal(self, symp_vs_mon_code):
        doubled = concat_p_fold(symp_vs_mon_code)
        assert doubled.n == 10
        assert doubled.k == 3
        assert is_self_orthogonal(doubled)

    def test_concatenation_keeps_isometry_groups(self, lcp_code):
        doubled = concat_p_fold(lcp_code)
        symp = symp_group(lcp_code)
        rmon = rmon_group(lcp_code)
        assert symp.order == rmon.order == 24
        assert symp_group(doubled) == symp
        assert rmon_group(doubled) == rmon

    def test_self_dual_distance(self, lcp_code):
        assert is_self_dual(lcp_code)
        assert min_distance(lcp_code) == 2

    def test_concatenation_repeats_pair_blocks(self, f2):
        code = StabilizerCode.from_rows([[1, 0, 0, 1]], f2)
        assert concat_p_fold(code, times=3).interleaved().to_rows() == [(1, 0, 0, 1) * 3]

    def test_concatenation_needs_a_field(self, z4):
        with raises(UnsupportedRingError):
            concat_p_fold(StabilizerCode.from_rows([[1, 0]], z4))

    def test_socle_lift_round_trip(self, symp_vs_mon_code, z4):
        lifted = socle_lift(symp_vs_mon_code, z4)
        assert lifted.spec == z4
        assert is_socle_code(lifted)
        assert lifted.size == symp_vs_mon_code.size
        assert is_self_orthogonal(lifted)
        assert socle_reduce(lifted) == symp_vs_mon_code

    @mark.parametrize('target', [RingSpec.modular(9), RingSpec.modular(6)])
    def test_socle_lift_needs_matching_prime(self, symp_vs_mon_code, target):
        with raises(UnsupportedRingError):
            socle_lift(symp_vs_mon_code, target)

    def test_socle_reduce_rejects_non_socle(self, z4):
        with raises(UnsupportedRingError):
            socle_reduce(StabilizerCode.from_rows([[1, 0]], z4))


class TestExtensions:

    def test_three_self_dual_extensions(self, extension_code, extension_dual):
        h4, h5 = extension_dual.generators.row(3), extension_dual.generators.row(4)
        found = self_dual_extensions(extension_code)
        assert len(found) == 3
        assert extension_code.extend(h4) in found
        assert extension_code.extend(h5) in found
        assert all(is_self_dual(code) for code in found)

    def test_needs_self_orthogonal(self, f2):
        with raises(NotSelfOrthogonalError):
            self_dual_extensions(StabilizerCode.full(1, f2))

    def test_weight_tables(self, extension_code, extension_dual):
        h4 = extension_dual.generators.row(3)
        tables = extension_weight_tables(extension_code, extension_code.extend(h4))
        assert len(tables) == 1
        assert tables[0].distribution == fixtures.EXTENSION_LOW
        assert sum(tables[0].counts().values()) == extension_code.size

    def test_coset_of_a_codeword(self, extension_code):
        with raises(CodeMembershipError):
            coset_weight_table(extension_code, extension_code.generators.row(0))

    def test_coset_representatives(self, bell_code, f2):
        rows = coset_representatives(StabilizerCode.zero(2, f2), bell_code)
        assert len(rows) == 3
        assert rows == sorted(rows)
        assert np.all([bell_code.contains(row) for row in rows])
