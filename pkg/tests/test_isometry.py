from hypothesis import given, settings, strategies as st
from pytest import mark, raises

from sympiso.algebra import RingSpec
from sympiso.exceptions import EnumerationCapError, MalformedInputError
from sympiso.isometry import (Action, Flavor, IsometrySubgroup, MonomialMap, closure, is_closed, is_isometry_matrix,
                              iso_group, monomial_between, monomial_counts, monomial_group, phi, rmon_group,
                              rmon_sl_between, rmon_sl_group, symp_between, symp_group, verify_structure_theorem)
from sympiso.matrix import GroupShape, Matrix, enumerate_group
from sympiso.problems import fixtures
from sympiso.stabcode import StabilizerCode, socle_lift, symp_weight, symplectic_gram


@st.composite
def monomial_maps(draw):
    spec = draw(st.sampled_from([RingSpec.prime_field(2), RingSpec.prime_field(3), RingSpec.modular(4)]))
    n = draw(st.integers(min_value=1, max_value=3))
    blocks = [tuple(map(tuple, b.key())) for b in enumerate_group(spec, GroupShape.SL, 2)]
    chosen = tuple(draw(st.sampled_from(blocks)) for _ in range(n))
    perm = tuple(draw(st.permutations(range(n))))
    return MonomialMap(chosen, perm, spec)


class TestMonomialMap:

    def test_identity(self, f2):
        identity = MonomialMap.identity(2, f2)
        assert identity.matrix() == Matrix.identity(4, f2)
        assert str(identity) == '[1,0,0,1] [1,0,0,1] perm=()'

    def test_permutation_moves_slots(self, f2):
        swap = MonomialMap.permutation((1, 0), f2)
        assert swap.apply((1, 0, 0, 0)) == (0, 1, 0, 0)

    def test_tau_swaps_x_and_z(self, f2, f3):
        assert MonomialMap.tau(0, 1, f2).apply((1, 0)) == (0, 1)
        assert MonomialMap.tau(0, 1, f3).apply((0, 1)) == (1, 0)
        assert MonomialMap.tau(0, 1, f3).apply((1, 0)) == (0, 2)

    def test_sl_needs_unit_determinant(self, f3):
        with raises(MalformedInputError):
            MonomialMap((((1, 0), (0, 2)),), (0,), f3)
        assert MonomialMap((((1, 0), (0, 2)),), (0,), f3, Flavor.GL).n == 1

    def test_singular_block(self, f2):
        with raises(MalformedInputError):
            MonomialMap((((1, 1), (1, 1)),), (0,), f2, Flavor.GL)

    def test_bad_permutation(self, f2):
        with raises(MalformedInputError):
            MonomialMap(((((1, 0), (0, 1)),) * 2), (0, 0), f2)

    def test_reference_map(self, lcp_code, lcp_image):
        monomial = fixtures.lcp_map()
        assert all(lcp_image.contains(monomial.apply(row)) for row in lcp_code.generators)

    @settings(max_examples=200, deadline=None)
    @given(monomial_maps())
    def test_preserves_form(self, monomial):
        F = monomial.matrix()
        gram = symplectic_gram(monomial.n, monomial.spec)
        assert F @ gram @ F.T == gram

    @settings(max_examples=200, deadline=None)
    @given(monomial_maps(), st.data())
    def test_preserves_weight(self, monomial, data):
        d = monomial.spec.modulus
        vector = data.draw(st.lists(st.integers(min_value=0, max_value=d - 1), min_size=2 * monomial.n,
                                    max_size=2 * monomial.n))
        assert symp_weight(monomial.apply(vector)) == symp_weight(vector)
        assert monomial.apply(vector) == monomial.matrix().apply(vector)


class TestIsometrySubgroup:

    def test_trivial_and_full(self, f2):
        assert IsometrySubgroup.trivial(3, f2).order == 1
        assert IsometrySubgroup.full(2, f2).order == 6

    def test_not_closed(self, f2):
        with raises(MalformedInputError):
            IsometrySubgroup([Matrix.identity(2, f2), Matrix([[1, 1], [1, 0]], f2)], 2, f2)

    def test_missing_identity(self, f2):
        with raises(MalformedInputError):
            IsometrySubgroup([Matrix([[0, 1], [1, 0]], f2)], 2, f2)

    def test_wrong_shape(self, f2):
        with raises(MalformedInputError):
            IsometrySubgroup([Matrix.identity(3, f2)], 2, f2)

    def test_generators_generate(self, f2):
        group = IsometrySubgroup.full(3, f2)
        assert group.verify() is group

    def test_json(self, f2):
        payload = IsometrySubgroup.full(2, f2).to_json(include_elements=True)
        assert payload['order'] == 6
        assert len(payload['elements']) == 6
        assert payload['field'] == 'F2'


class TestSymplecticGroups:

    def test_symp_is_gl3(self, symp_vs_mon_code, f2):
        symp = symp_group(symp_vs_mon_code)
        assert symp.order == fixtures.SYMP_VS_MON_SYMP_ORDER
        assert symp == IsometrySubgroup.full(3, f2)

    def test_empty_code(self, f2):
        symp = symp_group(StabilizerCode.zero(2, f2))
        assert symp.order == 1
        assert symp.generators == []

    def test_rmon_sl(self, symp_vs_mon_code):
        rmon_sl = rmon_sl_group(symp_vs_mon_code)
        assert rmon_sl.order == fixtures.SYMP_VS_MON_RMON_SL_ORDER
        assert rmon_sl.issubset(symp_group(symp_vs_mon_code))

    def test_gl_flavor_over_f2_matches_sl(self, symp_vs_mon_code):
        assert rmon_group(symp_vs_mon_code) == rmon_sl_group(symp_vs_mon_code)

    def test_monomial_group_keeps_search_result(self, symp_vs_mon_code):
        group, result = monomial_group(symp_vs_mon_code)
        assert group.name == 'rMon_SL'
        assert result.matrix_count == group.order
        assert result.map_count >= result.matrix_count
        assert monomial_counts(symp_vs_mon_code) == (result.map_count, result.matrix_count)

    def test_socle_lift_keeps_symp(self, symp_vs_mon_code, z4):
        assert symp_group(socle_lift(symp_vs_mon_code, z4)).order == fixtures.SYMP_VS_MON_SYMP_ORDER

    def test_weight_only_group_is_larger(self, f3):
        full = StabilizerCode.full(1, f3)
        assert iso_group(full).order == 48
        assert symp_group(full).order == 24

    def test_pooled_search_agrees(self, symp_vs_mon_code, pooled_search):
        assert symp_group(symp_vs_mon_code, search=pooled_search) == symp_group(symp_vs_mon_code)
        assert rmon_sl_group(symp_vs_mon_code, search=pooled_search) == rmon_sl_group(symp_vs_mon_code)

    def test_caps(self, symp_vs_mon_code):
        with raises(EnumerationCapError):
            symp_group(symp_vs_mon_code, max_enum=100)
        with raises(EnumerationCapError):
            rmon_sl_group(symp_vs_mon_code, max_enum=5)


class TestCodeMaps:

    def test_non_monomial_isometry(self):
        first = fixtures.code(fixtures.NON_MONOMIAL_N1, 'N1', interleaved=True)
        second = fixtures.code(fixtures.NON_MONOMIAL_N2, 'N2', interleaved=True)
        identity = Matrix.identity(first.k, first.spec)
        assert first == second
        assert is_isometry_matrix(first, second, identity)
        assert all(w.B != identity for w in rmon_sl_between(first, second))

    def test_symplectic_but_not_monomial(self, not_lu_code, not_lu_image):
        identity = Matrix.identity(not_lu_code.k, not_lu_code.spec)
        assert any(w.B == identity for w in symp_between(not_lu_code, not_lu_image))
        assert rmon_sl_between(not_lu_code, not_lu_image) == []

    def test_reference_map_is_found(self, lcp_code, lcp_image):
        result = monomial_between(lcp_code, lcp_image)
        assert fixtures.lcp_map() in result.maps
        assert all(w.monomial is not None for w in result.witnesses)

    def test_different_sizes(self, bell_code, f2):
        smaller = StabilizerCode.from_rows([[1, 1, 0, 0]], f2)
        assert symp_between(bell_code, smaller) == []
        assert monomial_between(bell_code, smaller).maps == []

    def test_different_lengths(self, bell_code, lcp_code):
        with raises(MalformedInputError):
            symp_between(bell_code, lcp_code)

    def test_phi_identity(self, lcp_code):
        assert phi(lcp_code, lcp_code, lcp_code.generators) == Matrix.identity(3, lcp_code.spec)

    def test_phi_outside_target(self, bell_code, f2):
        assert phi(bell_code, bell_code, Matrix([[1, 0, 0, 0], [0, 0, 1, 1]], f2)) is None

    def test_witness_json(self, lcp_code, lcp_image):
        witness = rmon_sl_between(lcp_code, lcp_image)[0]
        payload = witness.to_json()
        assert len(payload['B']) == 3
        assert sorted(payload['perm']) == [1, 2, 3]


class TestClosure:

    def test_parse_action(self):
        assert Action.parse('O#') is Action.PAIRS
        assert Action.parse('points') is Action.POINTS
        with raises(MalformedInputError):
            Action.parse('P')

    def test_full_group_is_closed(self, symp_vs_mon_code):
        assert is_closed(symp_group(symp_vs_mon_code), Action.POINTS)

    def test_trivial_group_over_f2(self, f2):
        trivial = IsometrySubgroup.trivial(3, f2)
        assert closure(trivial, Action.POINTS) == trivial

    @mark.parametrize('action', [Action.POINTS, Action.PAIRS])
    def test_trivial_group_closes_to_scalars(self, f3, action):
        closed = closure(IsometrySubgroup.trivial(2, f3), action)
        assert closed.order == 2
        assert Matrix([[2, 0], [0, 2]], f3) in closed

    def test_rmon_is_closed_under_pairs(self, symp_vs_mon_code):
        rmon = rmon_group(symp_vs_mon_code)
        assert closure(rmon, Action.PAIRS) == rmon
        assert is_closed(rmon, Action.PAIRS)

    def test_symp_is_closed_under_points(self, lcp_code):
        symp = symp_group(lcp_code)
        assert closure(symp, Action.POINTS) == symp


class TestStructure:

    @mark.parametrize('n, spec, count', [(1, RingSpec.prime_field(2), 6), (1, RingSpec.prime_field(3), 24),
                                         (2, RingSpec.prime_field(2), 72)])
    def test_isometries_are_monomial(self, n, spec, count):
        report = verify_structure_theorem(n, spec)
        assert report.equal
        assert report.isometries == report.monomials == count
        assert report.to_json()['ring'] == str(spec)
