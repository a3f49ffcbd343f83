"""
Tests for ring construction, arithmetic and the derived rings.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laskerlab.core.constructions import (
    construct_ring,
    enumerate_elements,
    fraction,
    image_ideal,
    is_reduced,
    localize,
    nilradical,
    preimage_ideal,
    quotient_ring,
    ring_arithmetic,
)
from laskerlab.core.ideals import ideal_generate, mset_closure, trivial_mset, whole_ring, zero_ideal
from laskerlab.core.specs import IdealizationSpec, PolyQuotientSpec, ZModSpec
from laskerlab.utils.errors import (
    ImproperIdealError,
    InfiniteRingError,
    ParseError,
    RingConstructionError,
    ValidationError,
)
from tests.conftest import boolean_ring, zmod


class TestConstruction:
    """Ring specifications become validated rings."""

    def test_zmod_size(self):
        assert zmod(12).size == 12

    def test_boolean_product_size(self):
        assert boolean_ring(2).size == 4

    def test_idealization_size(self):
        ring = construct_ring(IdealizationSpec(base=ZModSpec(n=4), m=2))
        assert ring.size == 8
        assert not is_reduced(ring)

    def test_poly_quotient_field(self):
        ring = construct_ring(PolyQuotientSpec(p=2, f=[1, 1, 1], require_irreducible=True))
        assert ring.size == 4
        assert is_reduced(ring)

    def test_modulus_below_two_rejected(self):
        with pytest.raises(RingConstructionError):
            construct_ring({"kind": "zmod", "n": 1})

    def test_size_cap(self):
        with pytest.raises(RingConstructionError):
            construct_ring({"kind": "zmod", "n": 100}, size_cap=50)

    def test_size_cap_from_environment(self, monkeypatch):
        monkeypatch.setenv("LASKERLAB_SIZE_CAP", "8")
        with pytest.raises(RingConstructionError):
            construct_ring({"kind": "zmod", "n": 12})
        assert construct_ring({"kind": "zmod", "n": 12}, size_cap=16).size == 12
        monkeypatch.delenv("LASKERLAB_SIZE_CAP")
        assert construct_ring({"kind": "zmod", "n": 12}).size == 12

    def test_malformed_json(self):
        with pytest.raises(ParseError):
            construct_ring('{"kind": "zmod", ')

    def test_unknown_kind(self):
        with pytest.raises(ValidationError):
            construct_ring({"kind": "banana"})

    def test_same_spec_same_ring(self):
        assert zmod(9) == zmod(9)
        assert zmod(9) != zmod(10)


class TestArithmetic:
    def test_zmod_mul(self):
        assert ring_arithmetic(zmod(12), "mul", [5, 5]).payload == 1

    def test_integer_pow(self, integers):
        assert ring_arithmetic(integers, "pow", [6, 2]).payload == 36

    def test_enumerate_elements(self):
        assert [x.payload for x in enumerate_elements(zmod(4))] == [0, 1, 2, 3]
        assert len(enumerate_elements(boolean_ring(2))) == 4

    def test_integers_not_enumerable(self, integers):
        with pytest.raises(InfiniteRingError):
            enumerate_elements(integers)

    def test_cross_ring_elements_rejected(self):
        with pytest.raises(ValidationError):
            zmod(4).mul(zmod(4).one, zmod(6).one)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=2, max_value=30), st.data())
    def test_zmod_axioms(self, n, data):
        ring = zmod(n)
        a, b, c = (ring.element(data.draw(st.integers(0, n - 1))) for _ in range(3))
        assert ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c))
        assert ring.mul(a, ring.one) == a
        assert ring.add(a, ring.neg(a)) == ring.zero


class TestNilradical:
    def test_zmod12(self, z12):
        nil = nilradical(z12)
        assert [x.payload for x in z12.elements() if nil.contains(x)] == [0, 6]

    def test_zmod6_reduced(self):
        assert nilradical(zmod(6)) == zero_ideal(zmod(6))

    def test_integers(self, integers):
        assert nilradical(integers).generator == 0


class TestQuotient:
    def test_zmod12_mod_4_has_four_elements(self, z12):
        bar, projection = quotient_ring(z12, ideal_generate(z12, [4]))
        assert bar.size == 4
        assert projection.is_homomorphism()
        # same tables as zmod(4) on canonical representatives 0..3
        assert [x.payload for x in bar.elements()] == [0, 1, 2, 3]
        assert np.array_equal(bar.mul_table, zmod(4).mul_table)

    def test_by_zero_ideal(self, z12):
        bar, _ = quotient_ring(z12, zero_ideal(z12))
        assert bar.size == 12

    def test_improper(self, z12):
        with pytest.raises(ImproperIdealError):
            quotient_ring(z12, whole_ring(z12))

    def test_image_and_preimage(self, z12):
        bar, projection = quotient_ring(z12, ideal_generate(z12, [4]))
        image = image_ideal(projection, ideal_generate(z12, [2]))
        assert image.size == 2
        assert preimage_ideal(projection, image) == ideal_generate(z12, [2])


class TestLocalization:
    def test_zmod6_at_three(self):
        ring = zmod(6)
        local, canonical = localize(ring, mset_closure(ring, [3]))
        assert local.size == 2
        assert canonical.is_homomorphism()

    def test_unit_localization_is_isomorphic(self, z12):
        local, canonical = localize(z12, mset_closure(z12, [5]))
        assert local.size == 12
        assert canonical.is_bijective()

    def test_trivial_set(self, z12):
        local, canonical = localize(z12, trivial_mset(z12))
        assert canonical.is_bijective()

    def test_fraction(self):
        ring = zmod(6)
        S = mset_closure(ring, [3])
        local, canonical = localize(ring, S)
        # 3/3 is the identity of S^-1 R
        assert fraction(canonical, S, ring.element(3), ring.element(3)) == local.one

    def test_integers_out_of_scope(self, integers):
        with pytest.raises(InfiniteRingError):
            localize(integers, trivial_mset(integers))
