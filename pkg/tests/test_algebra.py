from fractions import Fraction

from hypothesis import assume, given, settings, strategies as st
from pytest import mark, raises

from sympiso.algebra import Character, Cyclotomic, LocalData, RingSpec, char_eval, is_generating, omega
from sympiso.exceptions import MalformedInputError, NonInvertibleError

conductors = st.sampled_from([3, 4, 5, 8, 12])


@st.composite
def cyclotomics(draw, conductor=None):
    m = conductor if conductor is not None else draw(conductors)
    coeffs = draw(st.lists(st.integers(min_value=-3, max_value=3), min_size=0, max_size=m))
    return Cyclotomic(m, coeffs)


class TestRingSpec:

    @mark.parametrize('label, kind, modulus', [('F2', 'field', 2), ('F_3', 'field', 3),
                                               ('Z/4', 'modular', 4), ('Z/6Z', 'modular', 6)])
    def test_parse(self, label, kind, modulus):
        spec = RingSpec.parse(label)
        assert spec.kind == kind
        assert spec.modulus == modulus

    @mark.parametrize('label', ['Q', 'F', 'Z/', 'F4', 'Z/1'])
    def test_parse_rejects(self, label):
        with raises(MalformedInputError):
            RingSpec.parse(label)

    def test_str(self):
        assert str(RingSpec.prime_field(3)) == 'F3'
        assert str(RingSpec.modular(4)) == 'Z/4'

    @mark.parametrize('spec, order', [(RingSpec.prime_field(2), 4), (RingSpec.prime_field(3), 3),
                                      (RingSpec.modular(4), 8), (RingSpec.modular(6), 12)])
    def test_phase_order(self, spec, order):
        assert spec.phase_order == order

    def test_local_data(self, z4, f3):
        assert z4.local_data == LocalData(2, 2)
        assert z4.local_data.socle == 2
        assert f3.local_data.socle == 1
        assert RingSpec.modular(6).local_data is None

    @mark.parametrize('modulus, prime, exponent', [(7, 7, 1), (8, 2, 3), (9, 3, 2), (125, 5, 3)])
    def test_prime_power_local_data(self, modulus, prime, exponent):
        assert RingSpec.modular(modulus).local_data == LocalData(prime, exponent)

    @mark.parametrize('modulus', [12, 36, 100])
    def test_composite_has_no_local_data(self, modulus):
        assert RingSpec.modular(modulus).local_data is None

    @mark.parametrize('label', ['F4', 'F_9', 'F15'])
    def test_field_needs_prime_modulus(self, label):
        with raises(MalformedInputError):
            RingSpec.parse(label)

    def test_units(self, z4):
        assert z4.units() == (1, 3)
        assert z4.inverse(3) == 3
        with raises(NonInvertibleError):
            z4.inverse(2)

    def test_modular_prime_is_a_field(self):
        assert RingSpec.modular(5).is_field
        assert not RingSpec.modular(9).is_field


class TestRingElement:

    def test_arithmetic(self):
        f5 = RingSpec.prime_field(5)
        assert int(f5(3) + f5(4)) == 2
        assert int(f5(3) * 4) == 2
        assert int(2 - f5(3)) == 4
        assert int(-f5(1)) == 4
        assert int(f5(3).inverse()) == 2

    def test_mixed_rings(self, f2, f3):
        with raises(MalformedInputError):
            f2(1) + f3(1)

    def test_non_canonical(self, f3):
        from sympiso.algebra import RingElement
        with raises(MalformedInputError):
            RingElement(3, f3)


class TestCyclotomic:

    def test_i_squared(self):
        i = Cyclotomic.root(4)
        assert i * i == -1
        assert i * i * i * i == 1

    def test_cube_roots_sum(self):
        assert Cyclotomic.root(3, 1) + Cyclotomic.root(3, 2) == -1

    def test_inverse(self):
        assert Cyclotomic(4, [1, 1]).inverse() == Cyclotomic(4, [Fraction(1, 2), Fraction(-1, 2)])
        with raises(NonInvertibleError):
            Cyclotomic.zero(4).inverse()

    def test_embed_and_mixed_conductors(self):
        assert Cyclotomic.root(4).embed(8) == Cyclotomic.root(8, 2)
        assert Cyclotomic.root(4) * Cyclotomic.root(3) == Cyclotomic.root(12, 7)
        with raises(MalformedInputError):
            Cyclotomic.root(4).embed(6)

    def test_conj(self):
        assert Cyclotomic.root(8, 1).conj() == Cyclotomic.root(8, 7)
        assert Cyclotomic(4, [2, 3]).conj() == Cyclotomic(4, [2, -3])

    def test_rational_comparison(self):
        assert Cyclotomic.rational(5, Fraction(1, 2)) == Fraction(1, 2)
        assert Cyclotomic.root(5) != 1

    def test_division(self):
        half = Cyclotomic(4, [1, 1]) / 2
        assert half == Cyclotomic(4, [Fraction(1, 2), Fraction(1, 2)])
        with raises(NonInvertibleError):
            half / 0

    def test_json(self):
        value = Cyclotomic(8, [Fraction(1, 3), 0, -2])
        assert Cyclotomic.from_json(value.to_json()) == value
        with raises(MalformedInputError):
            Cyclotomic.from_json({'coeffs': []})

    @settings(max_examples=200, deadline=None)
    @given(cyclotomics())
    def test_inverse_property(self, x):
        assume(not x.is_zero())
        assert x * x.inverse() == 1

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_conj_is_a_ring_automorphism(self, data):
        m = data.draw(conductors)
        x, y = data.draw(cyclotomics(m)), data.draw(cyclotomics(m))
        assert (x * y).conj() == x.conj() * y.conj()
        assert (x + y).conj() == x.conj() + y.conj()
        assert x.conj().conj() == x

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_distributive(self, data):
        m = data.draw(conductors)
        x, y, z = (data.draw(cyclotomics(m)) for _ in range(3))
        assert x * (y + z) == x * y + x * z


class TestCharacter:

    def test_standard_qubit(self, f2):
        chi = Character.standard(f2)
        assert chi(1) == -1
        assert chi(0) == 1
        assert chi.phase_exponent(1) == 2

    def test_evaluate_element(self, f3):
        chi = Character.standard(f3)
        assert char_eval(chi, f3(2)) == Cyclotomic.root(3, 2)
        with raises(MalformedInputError):
            char_eval(chi, RingSpec.prime_field(5)(1))

    def test_generating(self, z4):
        assert is_generating(Character.standard(z4))
        assert is_generating(Character(3, z4))
        assert not is_generating(Character(2, z4))

    def test_omega(self, f2, f3):
        assert omega(f2) == Cyclotomic.root(4)
        assert omega(f3, 2) == Cyclotomic.root(3, 2)
