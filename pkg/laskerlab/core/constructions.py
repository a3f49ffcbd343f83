"""
Ring Constructions

Turns specification records into validated rings and provides the derived
constructions the transfer results need: quotient rings R/I with their
projection, localisations S^-1 R with their canonical map, and the nilradical.
"""

import logging
from typing import Any, Optional, Sequence, Tuple, Union

import numpy as np

from laskerlab.core.ideals import (
    Ideal,
    MultiplicativeSet,
    ideal_colon,
    ideal_generate,
    mset_closure,
    mset_from_elements,
    zero_ideal,
)
from laskerlab.core.rings import (
    FiniteRing,
    IntegerRing,
    RingElement,
    RingHandle,
    RingMap,
    build_idealization,
    build_poly_quotient,
    build_product,
    build_zmod,
    mask_from_bools,
    thaw_payload,
)
from laskerlab.core.specs import (
    IdealizationSpec,
    IntegersSpec,
    LocalizationSpec,
    PolyQuotientSpec,
    ProductSpec,
    QuotientSpec,
    RingSpec,
    ZModSpec,
    parse_ring_spec,
)
from laskerlab.utils.config import default_size_cap
from laskerlab.utils.errors import (
    ImproperIdealError,
    InfiniteRingError,
    RingConstructionError,
    ValidationError,
)

logger = logging.getLogger(__name__)

DEFAULT_AXIOM_CHECK_LIMIT = 64


def construct_ring(
    spec: Union[RingSpec, dict, str],
    size_cap: Optional[int] = None,
    axiom_check_limit: int = DEFAULT_AXIOM_CHECK_LIMIT,
) -> RingHandle:
    """
    Build and validate a ring from its specification record.

    Args:
        spec: Ring specification (record, dict or JSON text)
        size_cap: Largest allowed finite ring; defaults to LASKERLAB_SIZE_CAP or 4096
        axiom_check_limit: Rings up to this size get the cubic axiom checks

    Returns:
        A validated ring

    Raises:
        RingConstructionError: size cap exceeded, bad modulus or polynomial,
            non-homomorphic action, or a failing ring axiom
    """
    spec = parse_ring_spec(spec)
    size_cap = default_size_cap() if size_cap is None else size_cap
    ring = _build(spec, size_cap, axiom_check_limit)
    if ring.is_finite:
        ring.verify_axioms(axiom_check_limit)
        logger.debug(f"Constructed {spec.kind} ring {ring.ring_id} with {ring.size} elements")
    return ring


def _build(spec: RingSpec, size_cap: int, limit: int) -> RingHandle:
    if isinstance(spec, IntegersSpec):
        return IntegerRing(spec)
    if isinstance(spec, ZModSpec):
        return build_zmod(spec, size_cap)
    if isinstance(spec, PolyQuotientSpec):
        return build_poly_quotient(spec, size_cap)

    if isinstance(spec, ProductSpec):
        factors = [_finite_base(f, size_cap, limit, "product factor") for f in spec.factors]
        return build_product(spec, factors, size_cap)
    if isinstance(spec, IdealizationSpec):
        base = _finite_base(spec.base, size_cap, limit, "idealization base")
        return build_idealization(spec, base, size_cap)
    if isinstance(spec, QuotientSpec):
        base = _finite_base(spec.base, size_cap, limit, "quotient base")
        ideal = ideal_generate(base, spec.ideal_gens)
        ring, _ = _build_quotient(spec, base, ideal)
        return ring
    if isinstance(spec, LocalizationSpec):
        base = _finite_base(spec.base, size_cap, limit, "localization base")
        mset = mset_closure(base, spec.mset_gens)
        ring, _ = _build_localization(spec, base, mset)
        return ring
    raise RingConstructionError(f"unknown ring kind {spec.kind!r}")


def _finite_base(spec: RingSpec, size_cap: int, limit: int, role: str) -> FiniteRing:
    base = _build(spec, size_cap, limit)
    if not base.is_finite:
        raise RingConstructionError(f"{role} must be a finite ring")
    return base


def _require_finite(ring: RingHandle, operation: str) -> FiniteRing:
    if not ring.is_finite:
        raise InfiniteRingError(operation)
    return ring


# -- quotients ------------------------------------------------------------------

def _coset_classes(ring: FiniteRing, ideal: Ideal) -> Tuple[np.ndarray, np.ndarray]:
    """Class id of every element and the canonical (smallest) representative of every class."""
    reps_of = ring.add_table[:, ideal.members].min(axis=1)
    reps, class_of = np.unique(reps_of, return_inverse=True)
    return class_of.reshape(-1), reps


def _build_quotient(spec: RingSpec, ring: FiniteRing, ideal: Ideal) -> Tuple[FiniteRing, RingMap]:
    if not ideal.is_proper:
        raise ImproperIdealError(f"cannot form the quotient by the improper ideal {ideal}")
    class_of, reps = _coset_classes(ring, ideal)
    add = class_of[ring.add_table[np.ix_(reps, reps)]]
    mul = class_of[ring.mul_table[np.ix_(reps, reps)]]
    neg = class_of[ring.neg_table[reps]]
    payloads = [ring.payloads[r] for r in reps]
    quotient = FiniteRing(
        spec, add, mul, neg, payloads,
        int(class_of[ring.zero_index]), int(class_of[ring.one_index]),
    )
    return quotient, RingMap(ring, quotient, class_of)


def quotient_ring(ring: RingHandle, ideal: Ideal) -> Tuple[FiniteRing, RingMap]:
    """
    R/I with canonical coset representatives and the projection R -> R/I.

    Raises:
        ImproperIdealError: I = R
        InfiniteRingError: R is the integers
    """
    ring = _require_finite(ring, "quotient_ring")
    spec = QuotientSpec(
        base=ring.spec,
        ideal_gens=[thaw_payload(ring.payloads[i]) for i in ideal.generators],
    )
    return _build_quotient(spec, ring, ideal)


# -- localisation ----------------------------------------------------------------

def saturating_product(mset: MultiplicativeSet) -> RingElement:
    """t* = product of all elements of S; (0 : t*) is the kernel of R -> S^-1 R."""
    ring = mset.ring
    t = ring.one_index
    for s in mset.members:
        t = int(ring.mul_table[t, s])
    return ring.element_at(t)


def _build_localization(
    spec: RingSpec, ring: FiniteRing, mset: MultiplicativeSet
) -> Tuple[FiniteRing, RingMap]:
    # Finite rings: every fraction a/s equals b/1 for some b, so S^-1 R is
    # R modulo the kernel {a : ta = 0 for some t in S} = (0 : t*).
    kernel = ideal_colon(zero_ideal(ring), saturating_product(mset))
    return _build_quotient(spec, ring, kernel)


def localize(ring: RingHandle, mset: MultiplicativeSet) -> Tuple[FiniteRing, RingMap]:
    """
    S^-1 R and the canonical map a -> a/1.

    Raises:
        InfiniteRingError: R is the integers (out of scope)
    """
    ring = _require_finite(ring, "localize")
    spec = LocalizationSpec(
        base=ring.spec,
        mset_gens=[thaw_payload(ring.payloads[i]) for i in (mset.gens or tuple(mset.members))],
    )
    return _build_localization(spec, ring, mset)


def fraction(canonical: RingMap, mset: MultiplicativeSet, a: RingElement, s: RingElement) -> RingElement:
    """The element a/s of S^-1 R, found as the b/1 with t*(a - bs) = 0."""
    ring = canonical.source
    ring.check(a, s)
    if not mset.contains(s):
        raise ValidationError(f"denominator {s} is not in the multiplicative set")
    t = saturating_product(mset).index
    bs = ring.mul_table[:, s.index]
    differences = ring.add_table[a.index, ring.neg_table[bs]]
    candidates = np.flatnonzero(ring.mul_table[t, differences] == ring.zero_index)
    return canonical(ring.element_at(int(candidates[0])))


# -- ring-level helpers -------------------------------------------------------------

def nilradical(ring: RingHandle) -> Ideal:
    """Nil(R); finite rings use a^|R| = 0, which detects every nilpotent."""
    if not ring.is_finite:
        return zero_ideal(ring)
    nilpotent = ring.power_indices(ring.size) == ring.zero_index
    return Ideal(ring, mask=mask_from_bools(nilpotent))


def is_reduced(ring: RingHandle) -> bool:
    return nilradical(ring) == zero_ideal(ring)


def enumerate_elements(ring: RingHandle) -> list:
    return ring.elements()


def ring_arithmetic(ring: RingHandle, op: str, args: Sequence[Any]) -> RingElement:
    """Evaluate ``op`` (add, sub, mul, neg, pow) on elements or payloads of ``ring``."""
    if op == "pow":
        base, exponent = args
        return ring.pow(ring.element(base), int(exponent))
    elements = [ring.element(a) for a in args]
    if op == "neg":
        (x,) = elements
        return ring.neg(x)
    operations = {"add": ring.add, "sub": ring.sub, "mul": ring.mul}
    if op not in operations:
        raise ValidationError(f"unknown ring operation {op!r}")
    x, y = elements
    return operations[op](x, y)


# -- images under ring maps ------------------------------------------------------------

def image_ideal(f: RingMap, I: Ideal) -> Ideal:
    """f(I); an ideal whenever f is surjective, as for projections and localisations."""
    if I.ring != f.source:
        raise ValidationError("ideal does not belong to the source ring")
    return Ideal(f.target, mask=f.image_mask(I.mask))


def preimage_ideal(f: RingMap, J: Ideal) -> Ideal:
    if J.ring != f.target:
        raise ValidationError("ideal does not belong to the target ring")
    return Ideal(f.source, mask=f.preimage_mask(J.mask))


def image_mset(f: RingMap, S: MultiplicativeSet) -> MultiplicativeSet:
    """The image {f(s)}, e.g. S̄ = {s + I} in R/I."""
    if S.ring != f.source:
        raise ValidationError("multiplicative set does not belong to the source ring")
    return mset_from_elements(f.target, [f.target.element_at(i) for i in np.unique(f.table[S.members])])
