"""
S-Primary Decompositions

Brute-force decomposition search for finite rings, a factorisation-based
construction for the integers, the minimalisation procedure (common
saturating element, grouping by saturated radicals, dropping redundant groups,
rewriting each group as S(I'_t) ∩ (I + Rs*)) and the minimality report.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from laskerlab.components.certificates import Certificate
from laskerlab.components.predicates import is_nonnil, is_s_primary
from laskerlab.components.recheck import recheck_s_primary
from laskerlab.core.ideals import (
    Ideal,
    MultiplicativeSet,
    canonical_order,
    disjoint_from,
    enumerate_ideals,
    ideal_colon,
    ideal_contains,
    ideal_generate,
    ideal_intersect,
    ideal_scale,
    ideal_sum,
    intersect_all,
    parse_ideal,
    principal_ideal,
    radical,
    s_part,
    saturating_element,
    saturation,
)
from laskerlab.core.integers import factorization, prime_part
from laskerlab.core.rings import RingElement, RingHandle
from laskerlab.utils.errors import (
    ColonSplitPreconditionError,
    DecompositionValidationError,
    ImproperIdealError,
    InfiniteRingError,
    MeetsMultiplicativeSetError,
    MinimalizationError,
    UnsupportedShapeError,
    ValidationError,
)

logger = logging.getLogger(__name__)

SPrimaryCheck = Callable[[Ideal, MultiplicativeSet], Certificate]


class MinimalityReport(BaseModel):
    """Both minimality conditions, with condition (2) in its two stated forms."""

    model_config = ConfigDict(frozen=True)

    distinct_saturated_radicals: bool
    no_redundant_saturation: bool
    no_redundant_component: bool
    forms_agree: bool
    minimal: bool
    equal_radical_pairs: List[Tuple[int, int]] = Field(default_factory=list)
    redundant_components: List[int] = Field(default_factory=list)


@dataclass(frozen=True)
class Component:
    primary: Ideal
    radical: Ideal
    witness: RingElement

    def to_document(self) -> Dict[str, Any]:
        return {
            "Q": self.primary.to_document(),
            "P": self.radical.to_document(),
            "s": self.witness.to_json(),
        }


@dataclass(frozen=True)
class Decomposition:
    """I = Q_1 ∩ ... ∩ Q_k with each Q_i S-primary at witness s_i."""

    target: Ideal
    components: Tuple[Component, ...]
    minimality: Optional[MinimalityReport] = field(default=None, compare=False)

    @property
    def primaries(self) -> List[Ideal]:
        return [c.primary for c in self.components]

    @property
    def minimal(self) -> bool:
        return bool(self.minimality and self.minimality.minimal)

    def to_document(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {
            "target": self.target.to_document(),
            "components": [c.to_document() for c in self.components],
        }
        if self.minimality is not None:
            document["minimal"] = self.minimality.model_dump()
        return document

    def __str__(self) -> str:
        return " ∩ ".join(str(Q) for Q in self.primaries)


def parse_decomposition(ring: RingHandle, document: Dict[str, Any]) -> Decomposition:
    """Read a decomposition document; radicals are taken as given and checked by validation."""
    if not isinstance(document, dict) or "target" not in document or "components" not in document:
        raise ValidationError('decomposition documents need "target" and "components"')
    components = []
    for entry in document["components"]:
        Q = parse_ideal(ring, entry["Q"])
        P = parse_ideal(ring, entry["P"]) if "P" in entry else radical(Q)
        components.append(Component(Q, P, ring.element(entry["s"]) if "s" in entry else ring.one))
    return Decomposition(parse_ideal(ring, document["target"]), tuple(components))


def _component(Q: Ideal, certificate: Certificate) -> Component:
    return Component(Q, radical(Q), Q.ring.element(certificate.witness))


def _require_decomposable_target(I: Ideal, S: MultiplicativeSet, operation: str) -> None:
    if not I.is_proper:
        raise ImproperIdealError(f"{operation}: the ideal {I} is the whole ring")
    if not disjoint_from(I, S):
        raise MeetsMultiplicativeSetError(f"{operation}: the ideal {I} meets the multiplicative set {S}")


# -- search ------------------------------------------------------------------------------

def decompose_finite(
    I: Ideal, S: MultiplicativeSet, s_primary: SPrimaryCheck = is_s_primary
) -> Optional[Decomposition]:
    """
    Search an S-primary decomposition of I in a finite ring.

    Candidates are the S-primary ideals containing I (canonical order);
    subsets are tried by increasing size, so the first hit has the fewest
    components.

    Args:
        I: Proper ideal disjoint from S
        S: Multiplicative set
        s_primary: S-primary decision procedure (replaceable for mutation runs)

    Returns:
        The first decomposition found, or None when none exists
    """
    ring = I.ring
    if not ring.is_finite:
        raise InfiniteRingError("decompose_finite")
    _require_decomposable_target(I, S, "decompose_finite")

    candidates: List[Tuple[Ideal, Certificate]] = []
    for X in enumerate_ideals(ring):
        if X.mask & I.mask != I.mask or not X.is_proper or not disjoint_from(X, S):
            continue
        certificate = s_primary(X, S)
        if certificate.verdict:
            candidates.append((X, certificate))

    if not candidates or intersect_all([X for X, _ in candidates]).mask != I.mask:
        logger.info(f"{I}: no S-primary decomposition over {S} ({len(candidates)} candidates)")
        return None

    for k in range(1, len(candidates) + 1):
        for chosen in combinations(candidates, k):
            mask = (1 << ring.size) - 1
            for X, _ in chosen:
                mask &= X.mask
            if mask == I.mask:
                return Decomposition(I, tuple(_component(X, c) for X, c in chosen))
    return None


def decompose_integers(
    I: Ideal, S: MultiplicativeSet, s_primary: SPrimaryCheck = is_s_primary
) -> Decomposition:
    """
    Decompose nZ as the intersection of (u q^f)Z over the prime powers q^f of
    the part of n outside S, u being the part of n made of S-primes.

    Raises:
        MeetsMultiplicativeSetError: nZ meets S
        DecompositionValidationError: a constructed component fails the S-primary check
    """
    ring = I.ring
    if ring.is_finite:
        raise UnsupportedShapeError("decompose_integers needs an ideal of the integers")
    _require_decomposable_target(I, S, "decompose_integers")
    n = I.generator
    if n == 0:
        pieces = [0]
    else:
        u = s_part(n, S)
        pieces = [u * prime_part(n // u, q) for q in sorted(factorization(n // u))]

    components = []
    for generator in pieces:
        Q = ideal_generate(ring, [generator])
        certificate = s_primary(Q, S)
        if not certificate.verdict:
            raise DecompositionValidationError(f"constructed component {Q} of {I} is not S-primary")
        components.append(_component(Q, certificate))
    return Decomposition(I, tuple(components))


def decompose(I: Ideal, S: MultiplicativeSet) -> Optional[Decomposition]:
    if I.ring.is_finite:
        return decompose_finite(I, S)
    return decompose_integers(I, S)


def validate_decomposition(d: Decomposition, S: MultiplicativeSet) -> None:
    """
    Check a decomposition: target disjoint from S, intersection equal to the
    target, recorded radicals correct, every component S-primary at its
    recorded witness (re-checked independently).

    Raises:
        DecompositionValidationError: naming the first failed condition
    """
    I = d.target
    if not d.components:
        raise DecompositionValidationError("a decomposition needs at least one component")
    if not disjoint_from(I, S):
        raise DecompositionValidationError(f"target {I} meets the multiplicative set {S}")
    meet = intersect_all(d.primaries)
    if meet != I:
        raise DecompositionValidationError(f"components intersect to {meet}, not {I}")
    for i, c in enumerate(d.components):
        if c.radical != radical(c.primary):
            raise DecompositionValidationError(f"component {i + 1}: recorded radical {c.radical} is wrong")
        if not disjoint_from(c.primary, S):
            raise DecompositionValidationError(f"component {i + 1}: {c.primary} meets {S}")
        certificate = Certificate(
            predicate="s-primary", verdict=True, witness=c.witness.to_json()
        )
        if not recheck_s_primary(c.primary, S, certificate):
            raise DecompositionValidationError(
                f"component {i + 1}: {c.primary} is not S-primary at s={c.witness}"
            )


# -- minimality ------------------------------------------------------------------------------

def verify_minimality(d: Decomposition, S: MultiplicativeSet) -> MinimalityReport:
    """Evaluate both minimality conditions; condition (2) is computed in both forms."""
    ring = d.target.ring
    saturated_radicals = [saturation(c.radical, S) for c in d.components]
    saturated = [saturation(c.primary, S) for c in d.components]
    k = len(d.components)

    equal_pairs = [
        (i, j) for i in range(k) for j in range(i + 1, k) if saturated_radicals[i] == saturated_radicals[j]
    ]
    via_saturations = []
    via_components = []
    for i in range(k):
        others = [j for j in range(k) if j != i]
        via_saturations.append(ideal_contains(saturated[i], intersect_all([saturated[j] for j in others], ring)))
        via_components.append(ideal_contains(saturated[i], intersect_all([d.components[j].primary for j in others], ring)))

    distinct = not equal_pairs
    no_redundant_saturation = not any(via_saturations)
    no_redundant_component = not any(via_components)
    return MinimalityReport(
        distinct_saturated_radicals=distinct,
        no_redundant_saturation=no_redundant_saturation,
        no_redundant_component=no_redundant_component,
        forms_agree=via_saturations == via_components,
        minimal=distinct and no_redundant_saturation and no_redundant_component,
        equal_radical_pairs=equal_pairs,
        redundant_components=[i for i in range(k) if via_saturations[i] or via_components[i]],
    )


def minimalize(
    I: Ideal, S: MultiplicativeSet, d: Decomposition, s_primary: SPrimaryCheck = is_s_primary
) -> Decomposition:
    """
    Turn a decomposition of I into a minimal one.

    Steps: find s* in S with (Q_i : s*) = S(Q_i) for every component, seeded
    by the product of the recorded witnesses; group components by S(P_i);
    drop groups whose S(I'_t) contains the meet of the others; rewrite every
    remaining group as S(I'_t) ∩ (I + Rs*).

    Raises:
        DecompositionValidationError: ``d`` does not decompose I
        MinimalizationError: no common saturating element, or the result
            fails the post-verification
    """
    if d.target != I:
        raise DecompositionValidationError(f"decomposition target {d.target} is not {I}")
    validate_decomposition(d, S)
    ring = I.ring

    seed = ring.one
    for c in d.components:
        seed = ring.mul(seed, c.witness)
    s_star = saturating_element(d.primaries, S, preferred=[seed])
    if s_star is None:
        raise MinimalizationError(f"no element of {S} saturates every component of {d}")
    logger.debug(f"minimalize {d}: s* = {s_star}")

    groups: Dict[Ideal, List[Component]] = {}
    for c in d.components:
        groups.setdefault(saturation(c.radical, S), []).append(c)
    saturated_groups = [saturation(intersect_all([c.primary for c in members]), S) for members in groups.values()]

    kept = list(saturated_groups)
    dropped = True
    while dropped and len(kept) > 1:
        dropped = False
        for t, current in enumerate(kept):
            others = intersect_all(kept[:t] + kept[t + 1:], ring)
            if ideal_contains(current, others):
                del kept[t]
                dropped = True
                break

    shift = ideal_sum(I, principal_ideal(ring, s_star))
    components = []
    for current in kept:
        Q = ideal_intersect(current, shift)
        certificate = s_primary(Q, S)
        if not certificate.verdict:
            raise MinimalizationError(f"rewritten component {Q} is not S-primary")
        components.append(_component(Q, certificate))

    result = Decomposition(I, tuple(components))
    if intersect_all(result.primaries) != I:
        raise MinimalizationError(f"rewritten components of {d} no longer intersect to {I}")
    report = verify_minimality(result, S)
    if not report.minimal:
        raise MinimalizationError(f"minimalized decomposition {result} is not minimal")
    return Decomposition(I, result.components, report)


# -- the colon split and S-maximal elements ------------------------------------------------------

def colon_split_identity(
    I: Ideal, s: RingElement, S: Optional[MultiplicativeSet] = None
) -> Tuple[Ideal, Ideal, bool]:
    """
    Return (I : s), I + Rs and whether their intersection is I.

    Raises:
        ColonSplitPreconditionError: (I : s) differs from (I : s^2)
        ValidationError: ``S`` is given and does not contain s
    """
    ring = I.ring
    if not ring.is_finite:
        raise InfiniteRingError("colon_split_identity")
    if S is not None and not S.contains(s):
        raise ValidationError(f"{s} is not in the multiplicative set {S}")
    left = ideal_colon(I, s)
    if left != ideal_colon(I, ring.mul(s, s)):
        raise ColonSplitPreconditionError(f"({I} : {s}) differs from ({I} : {s}^2)")
    right = ideal_sum(I, principal_ideal(ring, s))
    return left, right, ideal_intersect(left, right) == I


def find_s_maximal(family: Sequence[Ideal], S: MultiplicativeSet) -> Optional[Tuple[Ideal, RingElement]]:
    """First (I, s) in canonical order with sJ ⊆ I for every family member J ⊇ I."""
    if not family:
        raise ValidationError("find_s_maximal needs a non-empty family")
    ring = family[0].ring
    if not ring.is_finite:
        raise InfiniteRingError("find_s_maximal")
    candidates = [ring.one] + [x for x in S.elements() if x.index != ring.one_index]
    ordered = canonical_order(family)
    for I in ordered:
        above = [J for J in ordered if ideal_contains(J, I)]
        for s in candidates:
            if all(ideal_contains(I, ideal_scale(s, J)) for J in above):
                return I, s
    return None


# -- ring-level verdicts ------------------------------------------------------------------------

@dataclass
class LaskerianReport:
    """Ring-level verdict with the decomposition of every checked ideal."""

    verdict: bool
    decompositions: List[Tuple[Ideal, Decomposition]]
    failure: Optional[Ideal] = None

    def to_certificate(self, predicate: str) -> Certificate:
        return Certificate(
            predicate=predicate,
            verdict=self.verdict,
            counterexample=None if self.failure is None else [self.failure.to_document()],
            universe=f"{len(self.decompositions)} ideals decomposed",
            details={
                "decompositions": [
                    {"ideal": I.to_document(), "components": [c.to_document() for c in d.components]}
                    for I, d in self.decompositions
                ]
            },
        )


def laskerian_report(
    ring: RingHandle,
    S: MultiplicativeSet,
    nonnil_only: bool = True,
    s_primary: SPrimaryCheck = is_s_primary,
) -> LaskerianReport:
    if not ring.is_finite:
        raise InfiniteRingError("laskerian_report")
    decompositions = []
    for I in enumerate_ideals(ring):
        if not disjoint_from(I, S) or (nonnil_only and not is_nonnil(I)):
            continue
        d = decompose_finite(I, S, s_primary)
        if d is None:
            return LaskerianReport(False, decompositions, I)
        decompositions.append((I, d))
    return LaskerianReport(True, decompositions)


def is_nonnil_s_laskerian(ring: RingHandle, S: MultiplicativeSet) -> LaskerianReport:
    """Every nonnil ideal disjoint from S is S-decomposable."""
    return laskerian_report(ring, S, nonnil_only=True)


def is_s_laskerian(ring: RingHandle, S: MultiplicativeSet) -> LaskerianReport:
    """Every ideal disjoint from S is S-decomposable."""
    return laskerian_report(ring, S, nonnil_only=False)
