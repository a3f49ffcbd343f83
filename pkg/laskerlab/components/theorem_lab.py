"""
Theorem Lab

Property suites that check the transfer, decomposition and minimality
results over a generated corpus. Each property is a function of a single
serialisable instance, so a reported counterexample can be rebuilt and
re-run on its own with ``replay_counterexample``. Suites re-derive their
hypotheses from the raw predicates; gated instances whose hypothesis fails
are counted as not applicable, and a suite with no applicable instance is
reported as vacuous.
"""

import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import lcm
from typing import Any, Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field

from laskerlab.components import predicates as raw
from laskerlab.components.corpus import CorpusEntry, CorpusSpec, generate_corpus
from laskerlab.components.decompose import (
    decompose_finite,
    decompose_integers,
    find_s_maximal,
    laskerian_report,
    minimalize,
    colon_split_identity,
)
from laskerlab.components.recheck import (
    direct_integer_spot_check,
    recheck_radically_s_finite,
    recheck_s_primary,
)
from laskerlab.core.constructions import (
    construct_ring,
    image_ideal,
    image_mset,
    is_reduced,
    localize,
    nilradical,
    quotient_ring,
)
from laskerlab.core.ideals import (
    Ideal,
    MultiplicativeSet,
    complement_of_prime,
    disjoint_from,
    enumerate_ideals,
    ideal_contains,
    ideal_generate,
    ideal_intersect,
    intersect_all,
    is_divided,
    mset_closure,
    parse_ideal,
    parse_mset,
    prime_set_mset,
    principal_ideal,
    radical,
    saturation,
    trivial_mset,
)
from laskerlab.core.integers import factorization
from laskerlab.core.rings import IntegerRing, RingElement, RingHandle
from laskerlab.core.specs import ProductSpec, ZModSpec, ring_spec_document
from laskerlab.utils.errors import ColonSplitPreconditionError, LaskerLabError, ValidationError

logger = logging.getLogger(__name__)

MAX_RECORDED_COUNTEREXAMPLES = 20
NOT_APPLICABLE = "n/a"


# -- predicate bundle ------------------------------------------------------------------------

@dataclass(frozen=True)
class Predicates:
    """The decision procedures the suites call; swap one out to run a mutation check."""

    is_s_primary: Callable = raw.is_s_primary
    is_s_prime: Callable = raw.is_s_prime
    is_s_irreducible: Callable = raw.is_s_irreducible
    is_primary: Callable = raw.is_primary
    is_prime_ideal: Callable = raw.is_prime_ideal
    is_irreducible: Callable = raw.is_irreducible


DEFAULT_PREDICATES = Predicates()


# -- reports -------------------------------------------------------------------------------

class Counterexample(BaseModel):
    """A failed property instance, complete enough to rebuild and re-run."""

    property: str
    ring: Dict[str, Any]
    msets: List[Dict[str, Any]] = Field(default_factory=list)
    ideals: List[Dict[str, Any]] = Field(default_factory=list)
    element: Optional[Any] = None
    extra: Dict[str, Any] = Field(default_factory=dict)
    message: str
    certificate: Optional[Dict[str, Any]] = None


class SuiteReport(BaseModel):
    suite: str
    instances: int
    not_applicable: int = 0
    verdict: str
    vacuous: bool
    counterexample_count: int = 0
    counterexamples: List[Counterexample] = Field(default_factory=list)
    wall_time: float = 0.0

    @property
    def status(self) -> str:
        if self.verdict == "fail":
            return "fail"
        return "vacuous" if self.vacuous else "pass"


class Failure(NamedTuple):
    message: str
    certificate: Optional[Dict[str, Any]] = None


Outcome = Union[None, str, Failure]


@dataclass(frozen=True)
class Instance:
    ring: RingHandle
    msets: Tuple[MultiplicativeSet, ...] = ()
    ideals: Tuple[Ideal, ...] = ()
    element: Optional[RingElement] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def S(self) -> MultiplicativeSet:
        return self.msets[0]

    def counterexample(self, prop: str, failure: Failure) -> Counterexample:
        return Counterexample(
            property=prop,
            ring=ring_spec_document(self.ring.spec),
            msets=[S.to_document() for S in self.msets],
            ideals=[I.to_document() for I in self.ideals],
            element=None if self.element is None else self.element.to_json(),
            extra=self.extra,
            message=failure.message,
            certificate=failure.certificate,
        )


# -- cached raw derivations -------------------------------------------------------------------------

@lru_cache(maxsize=8192)
def _laskerian(ring: RingHandle, S: MultiplicativeSet, p: Predicates, nonnil_only: bool) -> bool:
    return laskerian_report(ring, S, nonnil_only=nonnil_only, s_primary=p.is_s_primary).verdict


@lru_cache(maxsize=8192)
def _quotient(ring: RingHandle, I: Ideal):
    return quotient_ring(ring, I)


@lru_cache(maxsize=2048)
def _localization(ring: RingHandle, S: MultiplicativeSet):
    return localize(ring, S)


def _decomposes(I: Ideal, S: MultiplicativeSet, p: Predicates) -> bool:
    return decompose_finite(I, S, p.is_s_primary) is not None


def _nonnil(I: Ideal) -> bool:
    return raw.is_nonnil(I)


def _ideals(ring: RingHandle) -> List[Ideal]:
    return enumerate_ideals(ring)


def _proper_disjoint(ring: RingHandle, S: MultiplicativeSet) -> List[Ideal]:
    return [I for I in _ideals(ring) if I.is_proper and disjoint_from(I, S)]


# -- properties -------------------------------------------------------------------------------

def _intersection_same_radical(p: Predicates, inst: Instance) -> Outcome:
    S = inst.S
    meet = intersect_all(list(inst.ideals))
    certificate = p.is_s_primary(meet, S)
    if not certificate.verdict:
        return Failure(f"{' ∩ '.join(map(str, inst.ideals))} = {meet} is not S-primary", certificate.model_dump())
    shared = saturation(radical(inst.ideals[0]), S)
    if saturation(radical(meet), S) != shared:
        return Failure(f"S(rad({meet})) differs from the shared {shared}")
    return None


def _intersection_primary_meet(p: Predicates, inst: Instance) -> Outcome:
    Q, J = inst.ideals
    meet = ideal_intersect(Q, J)
    certificate = p.is_s_primary(meet, inst.S)
    if not certificate.verdict:
        return Failure(f"{Q} ∩ {J} = {meet} is not S-primary", certificate.model_dump())
    if radical(meet) != ideal_intersect(radical(Q), radical(J)):
        return Failure(f"rad({meet}) differs from rad({Q}) ∩ rad({J})")
    return None


def _quotient_nil_ideal(p: Predicates, inst: Instance) -> Outcome:
    ring, S = inst.ring, inst.S
    (I,) = inst.ideals
    bar, projection = _quotient(ring, I)
    if nilradical(bar) != image_ideal(projection, nilradical(ring)):
        return Failure(f"Nil(R/{I}) is not Nil(R)/{I}")
    if not _laskerian(ring, S, p, True):
        return NOT_APPLICABLE
    if not _laskerian(bar, image_mset(projection, S), p, True):
        return Failure(f"R/{I} is not nonnil-S-Laskerian although R is")
    return None


def _quotient_reduced(p: Predicates, inst: Instance) -> Outcome:
    ring, S = inst.ring, inst.S
    nil = nilradical(ring)
    if not (_decomposes(nil, S, p) and _laskerian(ring, S, p, True)):
        return NOT_APPLICABLE
    bar, projection = _quotient(ring, nil)
    if not _laskerian(bar, image_mset(projection, S), p, False):
        return Failure("R/Nil(R) is not S-Laskerian")
    return None


def _quotient_divided_converse(p: Predicates, inst: Instance) -> Outcome:
    ring, S = inst.ring, inst.S
    nil = nilradical(ring)
    if not is_divided(nil):
        return NOT_APPLICABLE
    bar, projection = _quotient(ring, nil)
    if not _laskerian(bar, image_mset(projection, S), p, False):
        return NOT_APPLICABLE
    if not _laskerian(ring, S, p, True):
        return Failure("Nil(R) is divided and R/Nil(R) is S-Laskerian, yet R is not nonnil-S-Laskerian")
    return None


def _quotient_nonnil(p: Predicates, inst: Instance) -> Outcome:
    ring, S = inst.ring, inst.S
    (I,) = inst.ideals
    if not _laskerian(ring, S, p, True):
        return NOT_APPLICABLE
    bar, projection = _quotient(ring, I)
    if not _laskerian(bar, image_mset(projection, S), p, False):
        return Failure(f"R/{I} is not S-Laskerian for the nonnil ideal {I}")
    return None


def _nil_hypothesis(ring: RingHandle, S: MultiplicativeSet, p: Predicates) -> bool:
    nil = nilradical(ring)
    return p.is_prime_ideal(nil) and is_divided(nil) and disjoint_from(nil, S)


def _nil_primary_equivalence(p: Predicates, inst: Instance) -> Outcome:
    ring, S = inst.ring, inst.S
    (I,) = inst.ideals
    if not _nil_hypothesis(ring, S, p):
        return NOT_APPLICABLE
    decomposable = _decomposes(I, S, p)
    primary = p.is_s_primary(I, S)
    if decomposable != primary.verdict:
        return Failure(
            f"nil ideal {I}: S-decomposable={decomposable} but S-primary={primary.verdict}",
            primary.model_dump(),
        )
    return None


def _nil_primary_laskerian_clause(p: Predicates, inst: Instance) -> Outcome:
    ring, S = inst.ring, inst.S
    if not _nil_hypothesis(ring, S, p):
        return NOT_APPLICABLE
    nil = nilradical(ring)
    nil_ideals = [I for I in _ideals(ring) if ideal_contains(nil, I)]
    expected = _laskerian(ring, S, p, True) and all(p.is_s_primary(I, S).verdict for I in nil_ideals)
    actual = _laskerian(ring, S, p, False)
    if actual != expected:
        return Failure(f"S-Laskerian={actual} disagrees with the nonnil/nil-primary characterisation ({expected})")
    return None


def _spectrum_ring(p: Predicates, inst: Instance) -> Outcome:
    ring, S = inst.ring, inst.S
    if not (_decomposes(nilradical(ring), S, p) and _laskerian(ring, S, p, True)):
        return NOT_APPLICABLE
    report = raw.has_s_noetherian_spectrum(ring, S)
    if not report.verdict:
        return Failure("a prime ideal is not radically S-finite", report.model_dump())
    for P in raw.prime_ideals(ring):
        if not recheck_radically_s_finite(P, raw.is_radically_s_finite(P, S)):
            return Failure(f"certificate for {P} does not re-check")
    return None


def _spectrum_integers(p: Predicates, inst: Instance) -> Outcome:
    (P,) = inst.ideals
    certificate = raw.is_radically_s_finite(P, inst.S)
    if not certificate.verdict or not recheck_radically_s_finite(P, certificate):
        return Failure(f"{P} is not certified radically S-finite", certificate.model_dump())
    return None


def _localization_primary_image(p: Predicates, inst: Instance) -> Outcome:
    ring, S = inst.ring, inst.S
    (Q,) = inst.ideals
    local, canonical = _localization(ring, S)
    if not canonical.is_homomorphism():
        return Failure("a -> a/1 is not a ring homomorphism")
    image = image_ideal(canonical, Q)
    if not image.is_proper or not p.is_primary(image):
        return Failure(f"S^-1 {Q} = {image} is not primary in S^-1 R")
    return None


def _localization_nonnil_laskerian(p: Predicates, inst: Instance) -> Outcome:
    if not _laskerian(inst.ring, inst.S, p, True):
        return NOT_APPLICABLE
    local, _ = _localization(inst.ring, inst.S)
    if not _laskerian(local, trivial_mset(local), p, True):
        return Failure("S^-1 R is not nonnil-Laskerian")
    return None


def _main_decomposes(p: Predicates, inst: Instance) -> Outcome:
    (I,) = inst.ideals
    if decompose_finite(I, inst.S, p.is_s_primary) is None:
        return Failure(f"nonnil ideal {I} has no S-primary decomposition")
    return None


def _main_irreducible_primary(p: Predicates, inst: Instance) -> Outcome:
    (I,) = inst.ideals
    if not p.is_s_irreducible(I, inst.S).verdict:
        return NOT_APPLICABLE
    certificate = p.is_s_primary(I, inst.S)
    if not certificate.verdict:
        return Failure(f"nonnil S-irreducible {I} is not S-primary", certificate.model_dump())
    return None


def _main_minimalize(p: Predicates, inst: Instance) -> Outcome:
    (I,) = inst.ideals
    S = inst.S
    d = decompose_finite(I, S, p.is_s_primary)
    if d is None:
        return NOT_APPLICABLE
    try:
        once = minimalize(I, S, d, p.is_s_primary)
        twice = minimalize(I, S, once, p.is_s_primary)
    except LaskerLabError as e:
        return Failure(f"minimalize({d}) failed: {e}")
    if set(twice.primaries) != set(once.primaries):
        return Failure(f"minimalize is not idempotent on {once}: got {twice}")
    return None


def _main_s_maximal(p: Predicates, inst: Instance) -> Outcome:
    family = [I for I in _proper_disjoint(inst.ring, inst.S) if _nonnil(I)]
    if not family:
        return NOT_APPLICABLE
    if find_s_maximal(family, inst.S) is None:
        return Failure("no S-maximal element among the nonnil ideals disjoint from S")
    return None


def _integer_components(p: Predicates, inst: Instance) -> Outcome:
    (I,) = inst.ideals
    S = inst.S
    d = decompose_integers(I, S, p.is_s_primary)
    for c in d.components:
        certificate = p.is_s_primary(c.primary, S)
        if not recheck_s_primary(c.primary, S, certificate):
            return Failure(f"component {c.primary} of {I} fails the re-check", certificate.model_dump())
    if lcm(*(Q.generator for Q in d.primaries)) != I.generator:
        return Failure(f"components of {I} do not intersect to {I}")
    return None


def _integer_example(p: Predicates, inst: Instance) -> Outcome:
    ring = inst.ring
    six = ideal_generate(ring, [6])
    S = complement_of_prime(ring, 3)
    if p.is_irreducible(six):
        return Failure("6Z reported irreducible although 6Z = 2Z ∩ 3Z")
    if not p.is_s_irreducible(six, S).verdict:
        return Failure("6Z reported not S-irreducible for S = Z minus 3Z")
    certificate = p.is_s_primary(six, S)
    if not certificate.verdict or not recheck_s_primary(six, S, certificate):
        return Failure("6Z is not certified S-primary for S = Z minus 3Z", certificate.model_dump())
    return None


def _integer_direct(p: Predicates, inst: Instance) -> Outcome:
    (Q,) = inst.ideals
    certificate = p.is_s_primary(Q, inst.S)
    contradiction = direct_integer_spot_check(Q, inst.S, certificate, seed=inst.extra.get("seed", 0))
    if contradiction is not None:
        return Failure(f"residue verdict for {Q} contradicted at {contradiction}", certificate.model_dump())
    return None


def _boolean_zero_ideal(p: Predicates, inst: Instance) -> Outcome:
    ring, S = inst.ring, inst.S
    zero = ideal_generate(ring, [])
    e1 = inst.element
    certificate = p.is_s_primary(zero, S)
    if not certificate.verdict or ring.element(certificate.witness) != e1:
        return Failure(f"(0) is not S-primary with witness {e1}", certificate.model_dump())
    d = decompose_finite(zero, S, p.is_s_primary)
    if d is None or d.primaries != [zero]:
        return Failure(f"(0) did not decompose as the single component (0): {d}")
    return None


def _degeneration_predicates(p: Predicates, inst: Instance) -> Outcome:
    (I,) = inst.ideals
    S = inst.S
    pairs = [
        ("S-primary", p.is_s_primary(I, S).verdict, p.is_primary(I)),
        ("S-prime", p.is_s_prime(I, S).verdict, p.is_prime_ideal(I)),
        ("S-irreducible", p.is_s_irreducible(I, S).verdict, p.is_irreducible(I)),
    ]
    for name, relative, classical in pairs:
        if relative != classical:
            return Failure(f"{I}: {name}={relative} but the classical notion gives {classical}")
    return None


def _classical_components(ring: RingHandle, I: Ideal) -> List[Ideal]:
    """(p^v) over the prime powers p^v exactly dividing d, where I = (d) and d | n."""
    n = ring.size
    d = min((x.payload for x in ring.elements() if x.payload and I.contains(x)), default=n)
    return [principal_ideal(ring, (q ** v) % n) for q, v in factorization(d).items()]


def _degeneration_oracle(p: Predicates, inst: Instance) -> Outcome:
    (I,) = inst.ideals
    d = decompose_finite(I, inst.S, p.is_s_primary)
    expected = set(_classical_components(inst.ring, I))
    if d is None or set(d.primaries) != expected:
        found = "none" if d is None else str(d)
        return Failure(f"{I}: decomposition {found} differs from {' ∩ '.join(map(str, expected))}")
    return None


def _colon_split(p: Predicates, inst: Instance) -> Outcome:
    (I,) = inst.ideals
    try:
        left, right, holds = colon_split_identity(I, inst.element)
    except ColonSplitPreconditionError:
        return NOT_APPLICABLE
    if not holds:
        return Failure(f"({I} : {inst.element}) ∩ ({I} + R{inst.element}) = {ideal_intersect(left, right)} ≠ {I}")
    return None


def _monotone_predicate(p: Predicates, inst: Instance) -> Outcome:
    (Q,) = inst.ideals
    small, large = inst.msets
    if not disjoint_from(Q, large) or not p.is_s_primary(Q, small).verdict:
        return NOT_APPLICABLE
    certificate = p.is_s_primary(Q, large)
    if not certificate.verdict:
        return Failure(f"{Q} is S1-primary but not S2-primary for S1 ⊆ S2", certificate.model_dump())
    return None


def _monotone_ring(p: Predicates, inst: Instance) -> Outcome:
    small, large = inst.msets
    if not _laskerian(inst.ring, small, p, True):
        return NOT_APPLICABLE
    if not _laskerian(inst.ring, large, p, True):
        return Failure("nonnil-S1-Laskerian but not nonnil-S2-Laskerian for S1 ⊆ S2")
    return None


def _monotone_reduced(p: Predicates, inst: Instance) -> Outcome:
    if not is_reduced(inst.ring):
        return NOT_APPLICABLE
    if _laskerian(inst.ring, inst.S, p, True) != _laskerian(inst.ring, inst.S, p, False):
        return Failure("reduced ring where nonnil-S-Laskerian and S-Laskerian disagree")
    return None


PROPERTIES: Dict[str, Callable[[Predicates, Instance], Outcome]] = {
    "intersection.same-radical": _intersection_same_radical,
    "intersection.primary-meet": _intersection_primary_meet,
    "quotient.nil-ideal": _quotient_nil_ideal,
    "quotient.reduced": _quotient_reduced,
    "quotient.divided-converse": _quotient_divided_converse,
    "quotient.nonnil": _quotient_nonnil,
    "nil-primary.equivalence": _nil_primary_equivalence,
    "nil-primary.laskerian-clause": _nil_primary_laskerian_clause,
    "spectrum.ring": _spectrum_ring,
    "spectrum.integers": _spectrum_integers,
    "localization.primary-image": _localization_primary_image,
    "localization.nonnil-laskerian": _localization_nonnil_laskerian,
    "main.decomposes": _main_decomposes,
    "main.irreducible-primary": _main_irreducible_primary,
    "main.minimalize": _main_minimalize,
    "main.s-maximal": _main_s_maximal,
    "main.integers": _integer_components,
    "degeneration.predicates": _degeneration_predicates,
    "degeneration.oracle": _degeneration_oracle,
    "colon-split.identity": _colon_split,
    "integers.decomposition": _integer_components,
    "integers.example": _integer_example,
    "integers.direct": _integer_direct,
    "boolean.zero-ideal": _boolean_zero_ideal,
    "monotonicity.predicate": _monotone_predicate,
    "monotonicity.ring": _monotone_ring,
    "monotonicity.reduced": _monotone_reduced,
}


# -- instance generators ---------------------------------------------------------------------

Unit = Iterable[Tuple[str, Instance]]


def _intersection_instances(entry: CorpusEntry, p: Predicates) -> Unit:
    ring, S = entry.ring, entry.mset
    disjoint = _proper_disjoint(ring, S)
    groups: Dict[Ideal, List[Ideal]] = {}
    for Q in disjoint:
        if p.is_s_primary(Q, S).verdict:
            groups.setdefault(saturation(radical(Q), S), []).append(Q)
    for members in groups.values():
        for k in (2, 3):
            for chosen in combinations(members, k):
                yield "intersection.same-radical", Instance(ring, (S,), chosen)

    meeting = [J for J in _ideals(ring) if not disjoint_from(J, S)]
    for Q in disjoint:
        if p.is_primary(Q):
            for J in meeting:
                yield "intersection.primary-meet", Instance(ring, (S,), (Q, J))


def _quotient_instances(entry: CorpusEntry, p: Predicates) -> Unit:
    ring, S = entry.ring, entry.mset
    nil = nilradical(ring)
    for I in _ideals(ring):
        if ideal_contains(nil, I):
            yield "quotient.nil-ideal", Instance(ring, (S,), (I,))
    yield "quotient.reduced", Instance(ring, (S,))
    yield "quotient.divided-converse", Instance(ring, (S,))
    for I in _proper_disjoint(ring, S):
        if _nonnil(I):
            yield "quotient.nonnil", Instance(ring, (S,), (I,))


def _nil_primary_instances(entry: CorpusEntry, p: Predicates) -> Unit:
    ring, S = entry.ring, entry.mset
    nil = nilradical(ring)
    for I in _ideals(ring):
        if ideal_contains(nil, I):
            yield "nil-primary.equivalence", Instance(ring, (S,), (I,))
    yield "nil-primary.laskerian-clause", Instance(ring, (S,))


def _spectrum_instances(entry: CorpusEntry, p: Predicates) -> Unit:
    yield "spectrum.ring", Instance(entry.ring, (entry.mset,))


def _spectrum_integer_instances(p: Predicates) -> Unit:
    ring = IntegerRing()
    S = complement_of_prime(ring, 3)
    for q in (2, 3, 5, 7, 11):
        yield "spectrum.integers", Instance(ring, (S,), (ideal_generate(ring, [q]),))


def _localization_instances(entry: CorpusEntry, p: Predicates) -> Unit:
    ring, S = entry.ring, entry.mset
    for Q in _proper_disjoint(ring, S):
        if p.is_s_primary(Q, S).verdict:
            yield "localization.primary-image", Instance(ring, (S,), (Q,))
    yield "localization.nonnil-laskerian", Instance(ring, (S,))


def _main_instances(entry: CorpusEntry, p: Predicates) -> Unit:
    ring, S = entry.ring, entry.mset
    for I in _proper_disjoint(ring, S):
        if not _nonnil(I):
            continue
        for prop in ("main.decomposes", "main.irreducible-primary", "main.minimalize"):
            yield prop, Instance(ring, (S,), (I,))
    yield "main.s-maximal", Instance(ring, (S,))


def _integer_msets(ring: RingHandle) -> List[MultiplicativeSet]:
    msets = [complement_of_prime(ring, q) for q in (2, 3, 5, 7)]
    for primes in ((), (2,), (3,), (2, 3), (5,)):
        msets.append(prime_set_mset(ring, primes, units=bool(primes)))
    return msets


def _main_integer_instances(seed: int, count: int = 24) -> Unit:
    ring = IntegerRing()
    rng = random.Random(seed)
    msets = _integer_msets(ring)
    for k in range(count):
        n = rng.randint(2, 1000)
        S = msets[k % len(msets)]
        I = ideal_generate(ring, [n])
        if disjoint_from(I, S):
            yield "main.integers", Instance(ring, (S,), (I,))


def _integer_instances(bound: int, seed: int, direct_samples: int = 40) -> Unit:
    ring = IntegerRing()
    yield "integers.example", Instance(ring)
    msets = _integer_msets(ring)
    for n in range(2, bound + 1):
        I = ideal_generate(ring, [n])
        for S in msets:
            if disjoint_from(I, S):
                yield "integers.decomposition", Instance(ring, (S,), (I,))
    rng = random.Random(seed)
    for k in range(direct_samples):
        n = rng.randint(2, bound)
        S = msets[rng.randrange(len(msets))]
        I = ideal_generate(ring, [n])
        if disjoint_from(I, S):
            yield "integers.direct", Instance(ring, (S,), (I,), extra={"seed": seed + k})


def _boolean_instances(rank: int) -> Unit:
    ring = construct_ring(ProductSpec(factors=[ZModSpec(n=2)] * rank))
    e1 = ring.element([1] + [0] * (rank - 1))
    S = mset_closure(ring, [e1])
    yield "boolean.zero-ideal", Instance(ring, (S,), element=e1)


def _degeneration_instances(ring: RingHandle) -> Unit:
    S = trivial_mset(ring)
    for I in _ideals(ring):
        if I.is_proper:
            yield "degeneration.predicates", Instance(ring, (S,), (I,))
            yield "degeneration.oracle", Instance(ring, (S,), (I,))


def _colon_split_instances(ring: RingHandle) -> Unit:
    for I in _ideals(ring):
        for s in ring.elements():
            yield "colon-split.identity", Instance(ring, (), (I,), element=s)


def _monotonicity_instances(ring: RingHandle, msets: Sequence[MultiplicativeSet]) -> Unit:
    for S in msets:
        yield "monotonicity.reduced", Instance(ring, (S,))
    for small in msets:
        for large in msets:
            if small == large or small.mask & ~large.mask:
                continue
            yield "monotonicity.ring", Instance(ring, (small, large))
            for Q in _proper_disjoint(ring, small):
                yield "monotonicity.predicate", Instance(ring, (small, large), (Q,))


# -- running --------------------------------------------------------------------------------

CorpusInput = Union[CorpusSpec, Sequence[CorpusEntry], None]


def _entries(corpus: CorpusInput) -> List[CorpusEntry]:
    if corpus is None or isinstance(corpus, CorpusSpec):
        return generate_corpus(corpus)
    return list(corpus)


def _rings(entries: Sequence[CorpusEntry]) -> List[Tuple[RingHandle, List[MultiplicativeSet]]]:
    grouped: Dict[RingHandle, List[MultiplicativeSet]] = {}
    for entry in entries:
        grouped.setdefault(entry.ring, []).append(entry.mset)
    return list(grouped.items())


def _evaluate(unit: Callable[[], Unit], p: Predicates) -> List[Tuple[str, Instance, Outcome]]:
    results = []
    for prop, instance in unit():
        try:
            outcome = PROPERTIES[prop](p, instance)
        except LaskerLabError as e:
            outcome = Failure(f"{type(e).__name__}: {e}")
        results.append((prop, instance, outcome))
    return results


def _run(suite: str, units: List[Callable[[], Unit]], p: Predicates, workers: int) -> SuiteReport:
    logger.info(f"Suite {suite}: {len(units)} work units")
    started = time.perf_counter()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(lambda unit: _evaluate(unit, p), units))
    else:
        batches = [_evaluate(unit, p) for unit in units]

    instances = not_applicable = failures = 0
    recorded: List[Counterexample] = []
    for batch in batches:
        for prop, instance, outcome in batch:
            if outcome == NOT_APPLICABLE:
                not_applicable += 1
                continue
            instances += 1
            if isinstance(outcome, Failure):
                failures += 1
                logger.warning(f"Suite {suite}: {prop} failed: {outcome.message}")
                if len(recorded) < MAX_RECORDED_COUNTEREXAMPLES:
                    recorded.append(instance.counterexample(prop, outcome))

    report = SuiteReport(
        suite=suite,
        instances=instances,
        not_applicable=not_applicable,
        verdict="fail" if failures else "pass",
        vacuous=instances == 0,
        counterexample_count=failures,
        counterexamples=recorded,
        wall_time=round(time.perf_counter() - started, 3),
    )
    logger.info(f"Suite {suite}: {report.status} ({instances} instances, {not_applicable} n/a)")
    return report


def _per_entry(generator, entries: Sequence[CorpusEntry], p: Predicates) -> List[Callable[[], Unit]]:
    return [lambda entry=entry: generator(entry, p) for entry in entries]


def suite_intersection(corpus: CorpusInput = None, predicates: Predicates = DEFAULT_PREDICATES, workers: int = 1) -> SuiteReport:
    """Intersections of S-primary ideals with a common S(rad), and primary-meets-S intersections."""
    entries = _entries(corpus)
    return _run("intersection", _per_entry(_intersection_instances, entries, predicates), predicates, workers)


def suite_quotient_transfer(corpus: CorpusInput = None, predicates: Predicates = DEFAULT_PREDICATES, workers: int = 1) -> SuiteReport:
    """Transfer of the Laskerian properties to R/I, R/Nil(R), and back through a divided nilradical."""
    entries = _entries(corpus)
    return _run("quotient-transfer", _per_entry(_quotient_instances, entries, predicates), predicates, workers)


def suite_nil_primary(corpus: CorpusInput = None, predicates: Predicates = DEFAULT_PREDICATES, workers: int = 1) -> SuiteReport:
    entries = _entries(corpus)
    return _run("nil-primary", _per_entry(_nil_primary_instances, entries, predicates), predicates, workers)


def suite_spectrum(corpus: CorpusInput = None, predicates: Predicates = DEFAULT_PREDICATES, workers: int = 1) -> SuiteReport:
    entries = _entries(corpus)
    units = _per_entry(_spectrum_instances, entries, predicates)
    if entries:
        units.append(lambda: _spectrum_integer_instances(predicates))
    return _run("spectrum", units, predicates, workers)


def suite_localization(corpus: CorpusInput = None, predicates: Predicates = DEFAULT_PREDICATES, workers: int = 1) -> SuiteReport:
    entries = _entries(corpus)
    return _run("localization", _per_entry(_localization_instances, entries, predicates), predicates, workers)


def suite_main_theorem(
    corpus: CorpusInput = None, predicates: Predicates = DEFAULT_PREDICATES, workers: int = 1, seed: int = 0
) -> SuiteReport:
    """Decomposition of every nonnil ideal, S-irreducible implies S-primary, minimalization, S-maximal elements."""
    entries = _entries(corpus)
    units = _per_entry(_main_instances, entries, predicates)
    if entries:
        units.append(lambda: _main_integer_instances(seed))
    return _run("main-theorem", units, predicates, workers)


def suite_degeneration(corpus: CorpusInput = None, predicates: Predicates = DEFAULT_PREDICATES, workers: int = 1) -> SuiteReport:
    """S = {1} over the modular rings of the corpus."""
    rings = [ring for ring, _ in _rings(_entries(corpus)) if ring.kind == "zmod"]
    return _run("degeneration", [lambda ring=ring: _degeneration_instances(ring) for ring in rings], predicates, workers)


def suite_colon_split(corpus: CorpusInput = None, predicates: Predicates = DEFAULT_PREDICATES, workers: int = 1) -> SuiteReport:
    rings = [ring for ring, _ in _rings(_entries(corpus))]
    return _run("colon-split", [lambda ring=ring: _colon_split_instances(ring) for ring in rings], predicates, workers)


def suite_integers(
    bound: int = 200, predicates: Predicates = DEFAULT_PREDICATES, workers: int = 1, seed: int = 0
) -> SuiteReport:
    """Decomposition of nZ for n up to ``bound`` under both set shapes, plus direct spot checks."""
    return _run("integers", [lambda: _integer_instances(bound, seed)], predicates, workers)


def suite_boolean(
    ranks: Sequence[int] = (2, 3, 4, 5, 6), predicates: Predicates = DEFAULT_PREDICATES, workers: int = 1
) -> SuiteReport:
    """(0) in (Z/2)^n with S = {1, e_1}."""
    return _run("boolean", [lambda rank=rank: _boolean_instances(rank) for rank in ranks], predicates, workers)


def suite_monotonicity(corpus: CorpusInput = None, predicates: Predicates = DEFAULT_PREDICATES, workers: int = 1) -> SuiteReport:
    rings = _rings(_entries(corpus))
    units = [lambda ring=ring, msets=msets: _monotonicity_instances(ring, msets) for ring, msets in rings]
    return _run("monotonicity", units, predicates, workers)


CORPUS_SUITES = {
    "intersection": suite_intersection,
    "quotient-transfer": suite_quotient_transfer,
    "nil-primary": suite_nil_primary,
    "spectrum": suite_spectrum,
    "localization": suite_localization,
    "main-theorem": suite_main_theorem,
    "degeneration": suite_degeneration,
    "colon-split": suite_colon_split,
    "monotonicity": suite_monotonicity,
}

SUITE_NAMES = list(CORPUS_SUITES) + ["integers", "boolean"]


def run_suite(
    name: str,
    corpus: CorpusInput = None,
    predicates: Predicates = DEFAULT_PREDICATES,
    workers: int = 1,
    seed: int = 0,
    integer_bound: int = 200,
) -> SuiteReport:
    """Run one suite by name."""
    if name == "integers":
        return suite_integers(integer_bound, predicates, workers, seed)
    if name == "boolean":
        return suite_boolean(predicates=predicates, workers=workers)
    if name == "main-theorem":
        return suite_main_theorem(corpus, predicates, workers, seed)
    if name not in CORPUS_SUITES:
        raise ValidationError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)} or all")
    return CORPUS_SUITES[name](corpus, predicates, workers)


def run_all(
    corpus: CorpusInput = None,
    predicates: Predicates = DEFAULT_PREDICATES,
    workers: int = 1,
    seed: int = 0,
    integer_bound: int = 200,
) -> List[SuiteReport]:
    entries = _entries(corpus)
    return [run_suite(name, entries, predicates, workers, seed, integer_bound) for name in SUITE_NAMES]


# -- replay -------------------------------------------------------------------------------------

def rebuild_instance(counterexample: Counterexample, size_cap: int = 4096) -> Instance:
    ring = construct_ring(counterexample.ring, size_cap=size_cap)
    return Instance(
        ring,
        tuple(parse_mset(ring, doc) for doc in counterexample.msets),
        tuple(parse_ideal(ring, doc) for doc in counterexample.ideals),
        None if counterexample.element is None else ring.element(counterexample.element),
        dict(counterexample.extra),
    )


def replay_counterexample(
    counterexample: Union[Counterexample, Dict[str, Any]], predicates: Predicates = DEFAULT_PREDICATES
) -> bool:
    """Rebuild a recorded instance and re-run its property; True when the failure reproduces."""
    if not isinstance(counterexample, Counterexample):
        counterexample = Counterexample.model_validate(counterexample)
    if counterexample.property not in PROPERTIES:
        raise ValidationError(f"unknown property {counterexample.property!r}")
    instance = rebuild_instance(counterexample)
    try:
        outcome = PROPERTIES[counterexample.property](predicates, instance)
    except LaskerLabError:
        return True
    return isinstance(outcome, Failure)
