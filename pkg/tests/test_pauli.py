from hypothesis import given, settings, strategies as st
from pytest import mark, raises

from sympiso.algebra import RingSpec
from sympiso.exceptions import MalformedInputError, NotAStabilizerError, NotSelfOrthogonalError
from sympiso.pauli import (PauliOperator, StabilizerGroup, code_to_stabilizer, conjugate_local, parse_pauli,
                           pauli_commutes, pauli_mul, pauli_string, pauli_weight, permute_pauli, psi,
                           stabilizer_phase)
from sympiso.problems import fixtures
from sympiso.stabcode import StabilizerCode, socle_lift


@st.composite
def paulis(draw, spec=None, n=None):
    spec = spec if spec is not None else RingSpec.modular(draw(st.sampled_from([2, 3, 4, 5, 6])))
    n = n if n is not None else draw(st.integers(min_value=1, max_value=4))
    part = st.lists(st.integers(min_value=0, max_value=spec.modulus - 1), min_size=n, max_size=n)
    phase = draw(st.integers(min_value=0, max_value=spec.phase_order - 1))
    return PauliOperator(phase, tuple(draw(part)), tuple(draw(part)), spec)


@st.composite
def pauli_triples(draw):
    spec = RingSpec.modular(draw(st.sampled_from([2, 3, 4, 6])))
    n = draw(st.integers(min_value=1, max_value=3))
    return tuple(draw(paulis(spec, n)) for _ in range(3))


class TestPauliStrings:

    @mark.parametrize('text, phase, a, b', [
        ('XZ', 0, (1, 0), (0, 1)),
        ('Y', 1, (1,), (1,)),
        ('-iX', 3, (1,), (0,)),
        ('-YY', 0, (1, 1), (1, 1)),
        ('+iIZ', 1, (0, 0), (0, 1)),
    ])
    def test_parse_qubit(self, f2, text, phase, a, b):
        assert parse_pauli(text, f2) == PauliOperator(phase, a, b, f2)

    @mark.parametrize('text', ['', 'XQ', '2X', 'x'])
    def test_parse_rejects(self, f2, text):
        with raises(MalformedInputError):
            parse_pauli(text, f2)

    def test_qudit_tokens(self, f3):
        p = parse_pauli('w^2 X^1Z^1 X^0Z^2', f3)
        assert p == PauliOperator(2, (1, 0), (1, 2), f3)
        assert pauli_string(p) == 'w^2 X^1Z^1 X^0Z^2'
        with raises(MalformedInputError):
            parse_pauli('X^1Z', f3)

    @settings(max_examples=200)
    @given(paulis())
    def test_string_parses_back(self, p):
        assert parse_pauli(pauli_string(p), p.spec) == p


class TestPauliArithmetic:

    def test_qubit_products(self, f2):
        x, z, y = (parse_pauli(t, f2) for t in 'XZY')
        assert pauli_string(x * z) == '-iY'
        assert pauli_string(z * x) == '+iY'
        assert (y * y).is_identity()

    def test_commutation(self, f2):
        assert pauli_commutes(parse_pauli('XX', f2), parse_pauli('ZZ', f2))
        assert not pauli_commutes(parse_pauli('XI', f2), parse_pauli('ZI', f2))

    def test_mismatch(self, f2, f3):
        with raises(MalformedInputError):
            pauli_mul(parse_pauli('X', f2), parse_pauli('XX', f2))
        with raises(MalformedInputError):
            pauli_mul(parse_pauli('X', f2), PauliOperator(0, (1,), (0,), f3))

    def test_weight_and_psi(self, f2):
        p = parse_pauli('XIY', f2)
        assert pauli_weight(p) == 2
        assert psi(p) == (1, 0, 1, 0, 0, 1)

    def test_permute(self, f2):
        assert pauli_string(permute_pauli((1, 2, 0), parse_pauli('XZY', f2))) == 'ZYX'
        with raises(MalformedInputError):
            permute_pauli((0, 0, 1), parse_pauli('XZY', f2))

    def test_conjugate_local_identity(self, f2):
        p = parse_pauli('-XYZ', f2)
        images = [(parse_pauli('X', f2), parse_pauli('Z', f2))] * 3
        assert conjugate_local(p, images) == p

    def test_conjugate_local_hadamard(self, f2):
        images = [(parse_pauli('Z', f2), parse_pauli('X', f2))]
        assert pauli_string(conjugate_local(parse_pauli('Y', f2), images)) == '-1Y'

    @settings(max_examples=200)
    @given(pauli_triples())
    def test_associative(self, triple):
        p, q, r = triple
        assert (p * q) * r == p * (q * r)

    @settings(max_examples=200)
    @given(pauli_triples())
    def test_commutes_iff_products_agree(self, triple):
        p, q, _ = triple
        assert pauli_commutes(p, q) == (p * q == q * p)

    @settings(max_examples=200)
    @given(paulis())
    def test_stabilizer_phase_gives_order_d(self, p):
        vector = psi(p)
        candidate = PauliOperator.from_vector(vector, p.spec, stabilizer_phase(vector, p.spec))
        assert (candidate ** p.spec.modulus).is_identity()


class TestStabilizerGroup:

    def test_from_code(self, lcp_code, lcp_image):
        assert code_to_stabilizer(lcp_code).strings() == fixtures.LCP_STABILIZER
        assert code_to_stabilizer(lcp_image).strings() == fixtures.LCP_STABILIZER_IMAGE

    def test_four_qubit_reference(self, not_lu_code, not_lu_image):
        assert code_to_stabilizer(not_lu_code).strings() == fixtures.NOT_LU_STABILIZER
        assert code_to_stabilizer(not_lu_image).strings() == fixtures.NOT_LU_STABILIZER_IMAGE

    def test_validate_and_order(self, lcp_code):
        group = code_to_stabilizer(lcp_code).validate()
        assert group.order == 8
        assert group.code() == lcp_code

    def test_anticommuting(self, f2):
        with raises(NotAStabilizerError):
            StabilizerGroup([parse_pauli('X', f2), parse_pauli('Z', f2)]).validate()

    def test_contains_a_phase(self, f2):
        with raises(NotAStabilizerError):
            StabilizerGroup([parse_pauli('-II', f2)]).validate()

    def test_wrong_order(self, z4):
        with raises(NotAStabilizerError):
            StabilizerGroup([PauliOperator(1, (1,), (0,), z4)]).validate()

    def test_not_self_orthogonal(self, f2):
        with raises(NotSelfOrthogonalError):
            code_to_stabilizer(StabilizerCode.full(1, f2))

    def test_empty(self, f2):
        with raises(MalformedInputError):
            StabilizerGroup([])
        assert StabilizerGroup([], n=2, spec=f2).order == 1

    def test_socle_lift_is_a_stabilizer(self, lcp_code, z4):
        group = code_to_stabilizer(socle_lift(lcp_code, z4)).validate()
        assert group.order == 8

    def test_mixed_generators(self, f2):
        with raises(MalformedInputError):
            StabilizerGroup([parse_pauli('X', f2), parse_pauli('XX', f2)])
