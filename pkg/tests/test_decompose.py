"""
Tests for S-primary decompositions, minimalisation and the colon split.
"""

import pytest

from laskerlab.components.decompose import (
    colon_split_identity,
    decompose,
    decompose_finite,
    decompose_integers,
    find_s_maximal,
    is_nonnil_s_laskerian,
    is_s_laskerian,
    minimalize,
    parse_decomposition,
    validate_decomposition,
    verify_minimality,
)
from laskerlab.core.ideals import (
    ideal_generate,
    mset_closure,
    parse_ideal,
    prime_set_mset,
    trivial_mset,
    zero_ideal,
)
from laskerlab.utils.errors import (
    ColonSplitPreconditionError,
    DecompositionValidationError,
    MeetsMultiplicativeSetError,
    ValidationError,
)


def redundant_decomposition(ring):
    return parse_decomposition(
        ring,
        {
            "target": {"gens": [0]},
            "components": [{"Q": {"gens": [4]}}, {"Q": {"gens": [3]}}, {"Q": {"gens": [2]}}],
        },
    )


class TestFiniteDecomposition:
    """Decompositions in Z/12."""

    def test_zero_ideal(self, z12, trivial):
        d = decompose_finite(zero_ideal(z12), trivial)
        assert str(d) == "(4) ∩ (3)"
        assert [c.witness.payload for c in d.components] == [1, 1]
        validate_decomposition(d, trivial)

    def test_primary_ideal_is_its_own_decomposition(self, z12, trivial):
        d = decompose(ideal_generate(z12, [4]), trivial)
        assert str(d) == "(4)"

    def test_meets_set(self, z12):
        with pytest.raises(MeetsMultiplicativeSetError):
            decompose_finite(ideal_generate(z12, [3]), mset_closure(z12, [3]))

    def test_wrong_intersection_rejected(self, z12, trivial):
        d = parse_decomposition(z12, {"target": {"gens": [0]}, "components": [{"Q": {"gens": [4]}}]})
        with pytest.raises(DecompositionValidationError):
            validate_decomposition(d, trivial)

    def test_malformed_document(self, z12):
        with pytest.raises(ValidationError):
            parse_decomposition(z12, {"components": []})

    def test_document_shape(self, z12, trivial):
        document = decompose_finite(zero_ideal(z12), trivial).to_document()
        assert document["target"] == {"gens": []}
        assert document["components"][0] == {"Q": {"gens": [4]}, "P": {"gens": [2]}, "s": 1}


class TestIntegerDecomposition:
    def test_trivial_set(self, integers):
        d = decompose_integers(parse_ideal(integers, {"n": 12}), trivial_mset(integers))
        assert str(d) == "4Z ∩ 3Z"

    def test_complement_of_prime(self, integers, not_three):
        d = decompose_integers(parse_ideal(integers, {"n": 6}), not_three)
        assert str(d) == "6Z"
        assert d.components[0].witness.payload == 2

    def test_prime_set(self, integers):
        d = decompose_integers(parse_ideal(integers, {"n": 36}), prime_set_mset(integers, [2]))
        assert str(d) == "36Z"

    def test_meets_set(self, integers, not_three):
        with pytest.raises(MeetsMultiplicativeSetError):
            decompose_integers(parse_ideal(integers, {"n": 4}), not_three)


class TestMinimality:
    def test_report_on_redundant_input(self, z12, trivial):
        report = verify_minimality(redundant_decomposition(z12), trivial)
        assert not report.minimal
        assert report.equal_radical_pairs == [(0, 2)]
        assert report.redundant_components == [2]
        assert report.forms_agree

    def test_minimalize(self, z12, trivial):
        d = minimalize(zero_ideal(z12), trivial, redundant_decomposition(z12))
        assert str(d) == "(4) ∩ (3)"
        assert d.minimal

    def test_minimalize_needs_matching_target(self, z12, trivial):
        with pytest.raises(DecompositionValidationError):
            minimalize(ideal_generate(z12, [6]), trivial, redundant_decomposition(z12))


class TestColonSplit:
    def test_identity(self, z12):
        left, right, holds = colon_split_identity(zero_ideal(z12), z12.element(4))
        assert left == ideal_generate(z12, [3])
        assert right == ideal_generate(z12, [4])
        assert holds

    def test_precondition(self, z12):
        with pytest.raises(ColonSplitPreconditionError):
            colon_split_identity(zero_ideal(z12), z12.element(2))

    def test_element_outside_set(self, z12, trivial):
        with pytest.raises(ValidationError):
            colon_split_identity(zero_ideal(z12), z12.element(4), trivial)

    def test_s_maximal(self, z12, trivial):
        found = find_s_maximal([ideal_generate(z12, [2]), ideal_generate(z12, [3])], trivial)
        assert found == (ideal_generate(z12, [3]), z12.one)

    def test_s_maximal_empty_family(self, trivial):
        with pytest.raises(ValidationError):
            find_s_maximal([], trivial)


class TestLaskerian:
    def test_finite_rings_are_laskerian(self, z12, trivial):
        assert is_s_laskerian(z12, trivial).verdict
        report = is_nonnil_s_laskerian(z12, trivial)
        assert report.verdict
        # nonnil ideals of Z/12 are (4), (3), (2)
        assert len(report.decompositions) == 3

    def test_certificate(self, z12, trivial):
        certificate = is_nonnil_s_laskerian(z12, trivial).to_certificate("nonnil-s-laskerian")
        assert certificate.verdict
        assert certificate.counterexample is None
