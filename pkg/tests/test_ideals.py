"""
Tests for ideals, multiplicative sets and saturation.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laskerlab.core.ideals import (
    complement_of_prime,
    disjoint_from,
    enumerate_ideals,
    ideal_colon,
    ideal_contains,
    ideal_generate,
    ideal_intersect,
    ideal_members,
    ideal_product,
    ideal_sum,
    is_divided,
    mset_closure,
    mset_from_elements,
    parse_ideal,
    parse_mset,
    prime_set_mset,
    radical,
    saturating_element,
    saturation,
    unit_group,
    whole_ring,
    zero_ideal,
)
from laskerlab.utils.errors import (
    CrossRingError,
    InfiniteRingError,
    MultiplicativeSetError,
    UnsupportedShapeError,
    ValidationError,
)
from tests.conftest import boolean_ring, zmod


def members(I):
    return [x.payload for x in ideal_members(I)]


class TestFiniteIdeals:
    """Lattice operations in Z/12."""

    def test_enumeration_in_canonical_order(self, z12):
        ideals = enumerate_ideals(z12)
        assert [members(I) for I in ideals[:4]] == [[0], [0, 6], [0, 4, 8], [0, 3, 6, 9]]
        assert len(ideals) == 6
        assert ideals[-1] == whole_ring(z12)

    def test_boolean_ring_ideals(self):
        assert len(enumerate_ideals(boolean_ring(2))) == 4

    def test_sum_intersection_product(self, z12):
        four, six, two = (ideal_generate(z12, [g]) for g in (4, 6, 2))
        assert ideal_sum(four, six) == two
        assert ideal_intersect(four, six) == zero_ideal(z12)
        assert ideal_product(two, two) == four

    def test_containment(self, z12):
        assert ideal_contains(ideal_generate(z12, [2]), ideal_generate(z12, [4]))
        assert not ideal_contains(ideal_generate(z12, [4]), ideal_generate(z12, [2]))

    def test_colon(self, z12):
        assert ideal_colon(zero_ideal(z12), z12.element(4)) == ideal_generate(z12, [3])
        assert ideal_colon(zero_ideal(z12), zero_ideal(z12)) == whole_ring(z12)

    def test_radical(self, z12):
        assert radical(ideal_generate(z12, [4])) == ideal_generate(z12, [2])
        assert radical(zero_ideal(z12)) == ideal_generate(z12, [6])

    def test_divided(self, z12):
        assert not is_divided(ideal_generate(z12, [2]))
        z4 = zmod(4)
        assert is_divided(ideal_generate(z4, [2]))

    def test_generators_regenerate(self, z12):
        for I in enumerate_ideals(z12):
            assert parse_ideal(z12, I.to_document()) == I

    def test_cross_ring(self):
        with pytest.raises(CrossRingError):
            ideal_sum(zero_ideal(zmod(4)), zero_ideal(zmod(6)))

    def test_integer_form_rejected_for_finite_rings(self, z12):
        with pytest.raises(ValidationError):
            parse_ideal(z12, {"n": 4})

    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=2, max_value=36))
    def test_lattice_laws(self, n):
        ideals = enumerate_ideals(zmod(n))
        for I in ideals:
            for J in ideals:
                meet = ideal_intersect(I, J)
                assert radical(meet) == ideal_intersect(radical(I), radical(J))
                assert ideal_intersect(I, ideal_sum(I, J)) == I
                assert ideal_contains(meet, ideal_product(I, J))


class TestIntegerIdeals:
    def test_lattice(self, integers):
        assert ideal_intersect(ideal_generate(integers, [4]), ideal_generate(integers, [6])).generator == 12
        assert ideal_sum(ideal_generate(integers, [4]), ideal_generate(integers, [6])).generator == 2
        assert ideal_product(ideal_generate(integers, [2]), ideal_generate(integers, [3])).generator == 6

    def test_generated(self, integers):
        assert ideal_generate(integers, [6, 10]).generator == 2
        assert str(ideal_generate(integers, [-6])) == "6Z"

    def test_colon(self, integers):
        assert ideal_colon(ideal_generate(integers, [6]), integers.element(2)).generator == 3

    def test_radical(self, integers):
        assert radical(parse_ideal(integers, {"n": 36})).generator == 6

    def test_members_need_finite_ring(self, integers):
        with pytest.raises(InfiniteRingError):
            ideal_members(parse_ideal(integers, {"n": 2}))


class TestMultiplicativeSets:
    def test_closure(self, z12):
        S = mset_closure(z12, [2])
        assert [x.payload for x in S.elements()] == [1, 2, 4, 8]

    def test_closure_reaching_zero_reports_chain(self):
        with pytest.raises(MultiplicativeSetError) as excinfo:
            mset_closure(zmod(8), [2])
        assert excinfo.value.chain == ["1·2 = 2", "2·2 = 4", "4·2 = 0"]

    def test_zero_generator(self, z12):
        with pytest.raises(MultiplicativeSetError):
            mset_closure(z12, [0])

    def test_explicit_sets(self, z12):
        assert mset_from_elements(z12, [1, 5, 7, 11]) == unit_group(z12)
        with pytest.raises(MultiplicativeSetError):
            mset_from_elements(z12, [1, 2])
        with pytest.raises(MultiplicativeSetError):
            mset_from_elements(z12, [0, 1])

    def test_integer_shapes(self, integers, not_three):
        assert not_three.contains(integers.element(4))
        assert not not_three.contains(integers.element(6))
        assert not not_three.contains(integers.element(0))
        twos = prime_set_mset(integers, [2], units=False)
        assert twos.contains(integers.element(8))
        assert not twos.contains(integers.element(-8))
        assert not twos.contains(integers.element(6))

    def test_generated_sets_unsupported_for_integers(self, integers):
        with pytest.raises(UnsupportedShapeError):
            parse_mset(integers, {"gens": [2]})

    def test_non_prime_rejected(self, integers):
        with pytest.raises(ValidationError):
            complement_of_prime(integers, 4)

    def test_prime_set_residues(self, integers):
        S = prime_set_mset(integers, [2], units=True)
        residues = S.residues(5)
        assert sorted(residues) == [1, 2, 3, 4]
        for r, witness in residues.items():
            assert witness % 5 == r
            assert S.contains(integers.element(witness))

    def test_complement_residues(self, not_three):
        assert sorted(not_three.residues(6)) == [1, 2, 4, 5]


class TestSaturation:
    def test_finite(self, z12):
        S = mset_closure(z12, [3])
        assert saturation(zero_ideal(z12), S) == ideal_generate(z12, [4])
        assert disjoint_from(ideal_generate(z12, [2]), S)
        assert not disjoint_from(ideal_generate(z12, [3]), S)

    def test_integers(self, integers, not_three):
        assert saturation(ideal_generate(integers, [6]), not_three).generator == 3
        assert disjoint_from(ideal_generate(integers, [6]), not_three)
        assert not disjoint_from(ideal_generate(integers, [4]), not_three)

    def test_saturating_element_finite(self, z12):
        S = mset_closure(z12, [3])
        ideals = [ideal_generate(z12, [4]), ideal_generate(z12, [3])]
        assert saturating_element(ideals, S).payload == 3

    def test_saturating_element_integers(self, integers, not_three):
        ideals = [ideal_generate(integers, [6]), ideal_generate(integers, [10])]
        assert saturating_element(ideals, not_three).payload == 10
