"""
Corpus Generation

Deterministic list of (ring, multiplicative set) pairs the theorem suites run
over: the modular rings, products of two prime-power modular rings, boolean
rings, a few polynomial quotients and idealizations. Every ring gets {1}, the
closure of each non-nilpotent element and the unit group, deduplicated by
element set.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from laskerlab.core.constructions import construct_ring, nilradical
from laskerlab.core.ideals import MultiplicativeSet, mset_closure, trivial_mset, unit_group
from laskerlab.core.integers import is_prime_power
from laskerlab.core.rings import FiniteRing
from laskerlab.core.specs import IdealizationSpec, PolyQuotientSpec, ProductSpec, RingSpec, ZModSpec
from laskerlab.utils.config import DEFAULT_CONFIG
from laskerlab.utils.errors import ValidationError

logger = logging.getLogger(__name__)


class PolyQuotientEntry(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    p: int
    f: List[int]


class IdealizationEntry(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int
    m: int


class CorpusSpec(BaseModel):
    """Ring families, size cap, multiplicative-set policy and seed of a corpus."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    max_modulus: int = 60
    product_size_cap: int = 64
    boolean_ranks: List[int] = Field(default_factory=lambda: [2, 3, 4])
    poly_quotients: List[PolyQuotientEntry] = Field(
        default_factory=lambda: [PolyQuotientEntry(**e) for e in DEFAULT_CONFIG["corpus"]["poly_quotients"]]
    )
    idealizations: List[IdealizationEntry] = Field(
        default_factory=lambda: [IdealizationEntry(**e) for e in DEFAULT_CONFIG["corpus"]["idealizations"]]
    )
    size_cap: int = 64
    seed: int = 0
    include_trivial: bool = True
    include_singletons: bool = True
    include_units: bool = True

    @classmethod
    def from_config(cls, config: Dict[str, Any], **overrides: Any) -> "CorpusSpec":
        """Corpus spec from the ``corpus`` section of a lab configuration."""
        values = {**config.get("corpus", {}), **overrides}
        return cls(**{k: v for k, v in values.items() if k in cls.model_fields})


@dataclass(frozen=True)
class CorpusEntry:
    ring: FiniteRing
    mset: MultiplicativeSet


def default_corpus() -> CorpusSpec:
    return CorpusSpec()


def small_corpus() -> CorpusSpec:
    return CorpusSpec(size_cap=16)


def empty_corpus() -> CorpusSpec:
    return CorpusSpec(max_modulus=1, product_size_cap=0, boolean_ranks=[], poly_quotients=[], idealizations=[])


NAMED_CORPORA = {
    "default": default_corpus,
    "small": small_corpus,
    "empty": empty_corpus,
}


def named_corpus(name: str) -> CorpusSpec:
    if name not in NAMED_CORPORA:
        raise ValidationError(f"unknown corpus {name!r}; choose from {', '.join(NAMED_CORPORA)}")
    return NAMED_CORPORA[name]()


def _ring_specs(spec: CorpusSpec) -> List[RingSpec]:
    specs: List[RingSpec] = [ZModSpec(n=n) for n in range(2, spec.max_modulus + 1)]

    prime_powers = [q for q in range(2, spec.product_size_cap // 2 + 1) if is_prime_power(q)]
    for i, q1 in enumerate(prime_powers):
        for q2 in prime_powers[i:]:
            if q1 * q2 <= spec.product_size_cap:
                specs.append(ProductSpec(factors=[ZModSpec(n=q1), ZModSpec(n=q2)]))

    for rank in spec.boolean_ranks:
        specs.append(ProductSpec(factors=[ZModSpec(n=2)] * rank))
    for entry in spec.poly_quotients:
        specs.append(PolyQuotientSpec(p=entry.p, f=list(entry.f)))
    for entry in spec.idealizations:
        specs.append(IdealizationSpec(base=ZModSpec(n=entry.n), m=entry.m))
    return specs


def _approximate_size(spec: RingSpec) -> Optional[int]:
    if isinstance(spec, ZModSpec):
        return spec.n
    if isinstance(spec, ProductSpec):
        size = 1
        for factor in spec.factors:
            size *= _approximate_size(factor)
        return size
    if isinstance(spec, PolyQuotientSpec):
        return spec.p ** (len(spec.f) - 1)
    if isinstance(spec, IdealizationSpec):
        return _approximate_size(spec.base) * spec.m
    return None


def corpus_rings(spec: CorpusSpec) -> List[FiniteRing]:
    """Distinct rings of the corpus within the size cap, in generation order."""
    rings: List[FiniteRing] = []
    seen = set()
    for ring_spec in _ring_specs(spec):
        size = _approximate_size(ring_spec)
        if size is not None and size > spec.size_cap:
            continue
        ring = construct_ring(ring_spec, size_cap=spec.size_cap)
        if ring.ring_id not in seen:
            seen.add(ring.ring_id)
            rings.append(ring)
    return rings


def ring_msets(ring: FiniteRing, spec: CorpusSpec) -> List[MultiplicativeSet]:
    """Multiplicative sets of ``ring`` under the corpus policy, deduplicated by element set."""
    found: Dict[int, MultiplicativeSet] = {}
    if spec.include_trivial:
        S = trivial_mset(ring)
        found.setdefault(S.mask, S)
    if spec.include_singletons:
        nil = nilradical(ring)
        for x in ring.elements():
            if nil.contains(x):
                continue
            S = mset_closure(ring, [x])
            found.setdefault(S.mask, S)
    if spec.include_units:
        S = unit_group(ring)
        found.setdefault(S.mask, S)
    return list(found.values())


def generate_corpus(spec: Optional[CorpusSpec] = None) -> List[CorpusEntry]:
    """
    Build the corpus described by ``spec``.

    Returns:
        (ring, multiplicative set) entries, rings in generation order and
        sets in discovery order; identical specs give identical lists
    """
    spec = spec or CorpusSpec()
    entries = [CorpusEntry(ring, S) for ring in corpus_rings(spec) for S in ring_msets(ring, spec)]
    logger.info(f"Corpus: {len({e.ring.ring_id for e in entries})} rings, {len(entries)} pairs")
    return entries
