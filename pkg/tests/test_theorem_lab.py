"""
Tests for the theorem suites, mutation detection and counterexample replay.
"""

import pytest

from laskerlab.components.certificates import SPrimaryCertificate
from laskerlab.components.corpus import CorpusEntry
from laskerlab.components.predicates import is_s_primary
from laskerlab.components.theorem_lab import (
    SUITE_NAMES,
    Counterexample,
    Predicates,
    SuiteReport,
    replay_counterexample,
    run_suite,
    suite_boolean,
    suite_colon_split,
    suite_degeneration,
    suite_integers,
    suite_intersection,
    suite_localization,
    suite_main_theorem,
    suite_monotonicity,
    suite_nil_primary,
    suite_quotient_transfer,
    suite_spectrum,
)
from laskerlab.core.constructions import construct_ring, localize
from laskerlab.core.ideals import mset_closure, parse_ideal, trivial_mset, unit_group
from laskerlab.utils.error_display import render_report
from laskerlab.utils.errors import ValidationError
from tests.conftest import flipped_s_primary, zmod


MUTATED = Predicates(is_s_primary=flipped_s_primary)


@pytest.fixture
def z4_corpus():
    ring = zmod(4)
    return [CorpusEntry(ring, trivial_mset(ring))]


@pytest.fixture
def z12_corpus():
    ring = zmod(12)
    return [CorpusEntry(ring, trivial_mset(ring))]


class TestSuites:
    """Suites over hand-picked corpora."""

    def test_degeneration(self, z12_corpus):
        report = suite_degeneration(z12_corpus)
        assert report.status == "pass"
        # five proper ideals, two properties each
        assert report.instances == 10

    def test_colon_split(self, z12_corpus):
        report = suite_colon_split(z12_corpus)
        assert report.status == "pass"
        assert report.not_applicable > 0

    def test_main_theorem(self, z12_corpus):
        assert suite_main_theorem(z12_corpus).status == "pass"

    def test_boolean(self):
        report = suite_boolean(ranks=(2, 3))
        assert report.status == "pass"
        assert report.instances == 2

    def test_integers(self):
        report = suite_integers(bound=30)
        assert report.status == "pass"
        assert report.counterexamples == []

    def test_parallel_matches_serial(self, z12_corpus):
        serial = suite_colon_split(z12_corpus)
        parallel = suite_colon_split(z12_corpus, workers=2)
        assert (serial.instances, serial.not_applicable) == (parallel.instances, parallel.not_applicable)


class TestVacuity:
    def test_empty_corpus(self):
        report = suite_intersection([])
        assert report.vacuous
        assert report.status == "vacuous"
        assert report.instances == 0

    def test_unknown_suite(self):
        with pytest.raises(ValidationError):
            run_suite("no-such-suite", [])

    def test_names(self):
        assert "integers" in SUITE_NAMES
        assert "boolean" in SUITE_NAMES


class TestMutation:
    def test_flipped_predicate_is_caught(self, z4_corpus):
        report = suite_intersection(z4_corpus, MUTATED)
        assert report.status == "fail"
        assert report.counterexample_count > 0
        assert report.counterexamples[0].property == "intersection.primary-meet"

    def test_replay(self, z4_corpus):
        counterexample = suite_intersection(z4_corpus, MUTATED).counterexamples[0]
        assert replay_counterexample(counterexample, MUTATED)
        assert not replay_counterexample(counterexample)

    def test_replay_from_document(self, z4_corpus):
        document = suite_intersection(z4_corpus, MUTATED).counterexamples[0].model_dump(mode="json")
        assert replay_counterexample(document, MUTATED)

    def test_replay_unknown_property(self):
        counterexample = Counterexample(property="nope", ring={"kind": "zmod", "n": 4}, message="")
        with pytest.raises(ValidationError):
            replay_counterexample(counterexample)


class TestTransferSuites:
    """Suites that move decompositions across quotients, localizations and larger S."""

    def test_quotient_transfer(self, z4_corpus):
        report = suite_quotient_transfer(z4_corpus)
        assert report.status == "pass"
        assert report.instances > 0

    def test_quotient_transfer_idealization(self):
        ring = construct_ring({"kind": "idealization", "base": {"kind": "zmod", "n": 4}, "m": 2})
        report = suite_quotient_transfer([CorpusEntry(ring, trivial_mset(ring))])
        assert report.status == "pass"
        assert report.instances > 0

    def test_nil_primary(self):
        ring = zmod(8)
        report = suite_nil_primary([CorpusEntry(ring, trivial_mset(ring))])
        assert report.status == "pass"
        # nil ideals (0), (4), (2) plus the ring-level clause
        assert report.instances == 4

    def test_spectrum(self, z12_corpus):
        report = suite_spectrum(z12_corpus)
        assert report.status == "pass"
        assert report.instances > 0

    def test_spectrum_empty_corpus_skips_integers(self):
        assert suite_spectrum([]).vacuous

    def test_localization(self):
        ring = zmod(6)
        S = mset_closure(ring, [3])
        local, _ = localize(ring, S)
        assert local.size == 2
        report = suite_localization([CorpusEntry(ring, S), CorpusEntry(ring, trivial_mset(ring))])
        assert report.status == "pass"
        assert report.instances > 0

    def test_monotonicity(self):
        z12, z6 = zmod(12), zmod(6)
        corpus = [
            CorpusEntry(z12, trivial_mset(z12)),
            CorpusEntry(z12, unit_group(z12)),
            CorpusEntry(z6, trivial_mset(z6)),
            CorpusEntry(z6, mset_closure(z6, [3])),
        ]
        report = suite_monotonicity(corpus)
        assert report.status == "pass"
        assert report.instances > 0
        assert report.counterexamples == []


class TestRendering:
    def test_certificate_json(self, integers, not_three):
        certificate = is_s_primary(parse_ideal(integers, {"n": 6}), not_three)
        restored = SPrimaryCertificate.model_validate_json(render_report(certificate, "json"))
        assert restored.model_dump(mode="json") == certificate.model_dump(mode="json")

    def test_suite_report_json(self, z4_corpus):
        report = suite_quotient_transfer(z4_corpus)
        assert SuiteReport.model_validate_json(render_report(report, "json")) == report
