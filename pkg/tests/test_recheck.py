"""
Tests for the independent certificate re-checks.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laskerlab.components.certificates import Certificate
from laskerlab.components.predicates import (
    is_radically_s_finite,
    is_s_finite,
    is_s_primary,
    is_s_prime,
    is_sft,
)
from laskerlab.components.recheck import (
    direct_integer_spot_check,
    recheck_radically_s_finite,
    recheck_s_finite,
    recheck_s_primary,
    recheck_sft,
)
from laskerlab.core.ideals import (
    complement_of_prime,
    disjoint_from,
    ideal_generate,
    mset_closure,
    parse_ideal,
    prime_set_mset,
    trivial_mset,
    zero_ideal,
)
from laskerlab.core.constructions import construct_ring
from laskerlab.core.specs import IntegersSpec
from tests.conftest import zmod


def forged(witness):
    return Certificate(predicate="s-primary", verdict=True, witness=witness)


class TestFiniteRechecks:
    def test_true_verdict(self, z12):
        S = mset_closure(z12, [3])
        Q = zero_ideal(z12)
        assert recheck_s_primary(Q, S, is_s_primary(Q, S))

    def test_false_verdict(self, z12, trivial):
        Q = zero_ideal(z12)
        assert recheck_s_primary(Q, trivial, is_s_primary(Q, trivial))

    def test_forged_witness(self, z12):
        S = mset_closure(z12, [3])
        assert not recheck_s_primary(zero_ideal(z12), S, forged(1))

    def test_witness_outside_set(self, z12, trivial):
        assert not recheck_s_primary(ideal_generate(z12, [4]), trivial, forged(5))

    def test_s_finite_and_sft(self, z12, trivial):
        I = ideal_generate(z12, [2])
        assert recheck_s_finite(I, is_s_finite(I, trivial))
        z8 = zmod(8)
        J = ideal_generate(z8, [2])
        assert recheck_sft(J, is_sft(J, sub_ideal=ideal_generate(z8, [4])))

    def test_boolean_witness(self, klein):
        ring, S = klein
        Q = zero_ideal(ring)
        assert recheck_s_primary(Q, S, is_s_primary(Q, S))


class TestIntegerRechecks:
    def test_s_primary(self, integers, not_three):
        Q = parse_ideal(integers, {"n": 6})
        assert recheck_s_primary(Q, not_three, is_s_primary(Q, not_three))
        assert recheck_s_primary(Q, not_three, is_s_prime(Q, not_three))

    def test_refutations(self, integers):
        Q = parse_ideal(integers, {"n": 12})
        S = trivial_mset(integers)
        assert recheck_s_primary(Q, S, is_s_primary(Q, S))

    def test_forged_witness(self, integers, not_three):
        Q = parse_ideal(integers, {"n": 6})
        assert not recheck_s_primary(Q, not_three, forged(1))

    @pytest.mark.parametrize("n, primary", [(8, True), (49, True), (72, False), (4 * 97, False)])
    def test_radical_of_repeated_factors(self, integers, n, primary):
        Q = parse_ideal(integers, {"n": n})
        S = trivial_mset(integers)
        certificate = is_s_primary(Q, S)
        assert certificate.verdict is primary
        assert recheck_s_primary(Q, S, certificate)

    def test_radically_s_finite(self, integers):
        I = parse_ideal(integers, {"n": 5})
        assert recheck_radically_s_finite(I, is_radically_s_finite(I, trivial_mset(integers)))


class TestDirectSpotCheck:
    def test_agrees_with_residues(self, integers, not_three):
        Q = parse_ideal(integers, {"n": 6})
        assert direct_integer_spot_check(Q, not_three, is_s_primary(Q, not_three), seed=7) is None

    def test_false_verdict_agrees(self, integers):
        Q = parse_ideal(integers, {"n": 12})
        S = trivial_mset(integers)
        assert direct_integer_spot_check(Q, S, is_s_primary(Q, S)) is None

    def test_finds_forged_witness(self, integers, not_three):
        contradiction = direct_integer_spot_check(parse_ideal(integers, {"n": 6}), not_three, forged(1))
        assert contradiction is not None
        assert contradiction["s"] == 1

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=2, max_value=60), st.sampled_from(["trivial", "not-2", "not-3", "primes-2", "primes-5"]))
    def test_residue_verdicts_survive_direct_evaluation(self, n, shape):
        integers = construct_ring(IntegersSpec())
        S = {
            "trivial": lambda: trivial_mset(integers),
            "not-2": lambda: complement_of_prime(integers, 2),
            "not-3": lambda: complement_of_prime(integers, 3),
            "primes-2": lambda: prime_set_mset(integers, [2]),
            "primes-5": lambda: prime_set_mset(integers, [5]),
        }[shape]()
        Q = parse_ideal(integers, {"n": n})
        if not disjoint_from(Q, S):
            return
        assert direct_integer_spot_check(Q, S, is_s_primary(Q, S), seed=n) is None
