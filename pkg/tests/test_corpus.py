"""
Tests for corpus generation.
"""

import pytest

from laskerlab.components.corpus import CorpusSpec, generate_corpus, named_corpus
from laskerlab.utils.errors import ValidationError


def tiny():
    return CorpusSpec(size_cap=4, poly_quotients=[], idealizations=[])


class TestCorpus:
    def test_rings_within_cap(self):
        entries = generate_corpus(tiny())
        rings = list(dict.fromkeys(e.ring for e in entries))
        assert [r.size for r in rings] == [2, 3, 4, 4]
        assert [r.kind for r in rings] == ["zmod", "zmod", "zmod", "product"]

    def test_multiplicative_sets_deduplicated(self):
        entries = generate_corpus(tiny())
        assert len(entries) == 8
        masks = [(e.ring.ring_id, e.mset.mask) for e in entries]
        assert len(set(masks)) == len(masks)

    def test_deterministic(self):
        first = [(e.ring.ring_id, e.mset.mask) for e in generate_corpus(tiny())]
        second = [(e.ring.ring_id, e.mset.mask) for e in generate_corpus(tiny())]
        assert first == second

    def test_empty(self):
        assert generate_corpus(named_corpus("empty")) == []

    def test_unknown_name(self):
        with pytest.raises(ValidationError):
            named_corpus("huge")

    def test_from_config_ignores_unknown_keys(self):
        spec = CorpusSpec.from_config({"corpus": {"size_cap": 8, "comment": "ignored"}}, seed=3)
        assert spec.size_cap == 8
        assert spec.seed == 3
