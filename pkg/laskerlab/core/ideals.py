"""
Ideals and Multiplicative Sets

Ideal lattice arithmetic for finite rings (bitmask over element indices) and
principal-ideal arithmetic for the integers (one non-negative generator).
Multiplicative sets are closed element sets for finite rings and one of two
saturated shapes for the integers: all ±products of a finite prime set, or the
complement of a single prime.
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from laskerlab.core.integers import (
    gcd_all,
    is_prime,
    lcm_all,
    prime_factors,
    prime_part,
    split_by_primes,
    squarefree_kernel,
)
from laskerlab.core.rings import (
    FiniteRing,
    RingElement,
    RingHandle,
    bools_from_mask,
    indices_from_mask,
    mask_from_bools,
    thaw_payload,
)
from laskerlab.core.specs import (
    ComplementOfPrimeMsetSpec,
    IntegerIdealSpec,
    PrimeSetMsetSpec,
    parse_ideal_spec,
    parse_mset_spec,
)
from laskerlab.utils.errors import (
    CrossRingError,
    InfiniteRingError,
    MultiplicativeSetError,
    UnsupportedShapeError,
    ValidationError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Ideal:
    """
    An ideal of ``ring``.

    Finite rings store the member bitmask and a generator list of element
    indices; the integers store the generator ``n`` of nZ.
    """

    ring: RingHandle
    mask: Optional[int] = None
    gens: Tuple[int, ...] = ()
    generator: Optional[int] = None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ideal) and self.ring == other.ring and self._value == other._value

    def __hash__(self) -> int:
        return hash((self.ring.ring_id, self._value))

    @property
    def _value(self) -> int:
        return self.mask if self.ring.is_finite else self.generator

    @cached_property
    def members(self) -> np.ndarray:
        """Sorted member indices (finite rings only)."""
        if not self.ring.is_finite:
            raise InfiniteRingError("ideal members")
        return indices_from_mask(self.mask, self.ring.size)

    @cached_property
    def flags(self) -> np.ndarray:
        return bools_from_mask(self.mask, self.ring.size)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @cached_property
    def sort_key(self) -> Tuple:
        """Canonical order: cardinality, then the sorted member indices."""
        if self.ring.is_finite:
            return (self.size, tuple(int(i) for i in self.members))
        return (self.generator == 0, self.generator)

    def contains(self, x: RingElement) -> bool:
        self.ring.check(x)
        if self.ring.is_finite:
            return bool(self.mask >> x.index & 1)
        if self.generator == 0:
            return x.payload == 0
        return x.payload % self.generator == 0

    @property
    def is_proper(self) -> bool:
        if self.ring.is_finite:
            return not (self.mask >> self.ring.one_index & 1)
        return self.generator != 1

    @cached_property
    def generators(self) -> Tuple[int, ...]:
        """A generator list (element indices) that regenerates this ideal."""
        if not self.ring.is_finite:
            return (self.generator,)
        if self.gens and _generated_mask(self.ring, self.gens) == self.mask:
            return self.gens
        chosen: List[int] = []
        current = 1 << self.ring.zero_index
        for i in self.members:
            if not current >> int(i) & 1:
                chosen.append(int(i))
                current = _sum_masks(self.ring, current, _principal_mask(self.ring, int(i)))
                if current == self.mask:
                    break
        return tuple(chosen)

    def to_document(self) -> Dict[str, Any]:
        if not self.ring.is_finite:
            return {"n": self.generator}
        return {"gens": [thaw_payload(self.ring.payloads[i]) for i in self.generators]}

    def __str__(self) -> str:
        if not self.ring.is_finite:
            return f"{self.generator}Z"
        gens = ", ".join(str(thaw_payload(self.ring.payloads[i])) for i in self.generators)
        return f"({gens})" if gens else "(0)"

    def __repr__(self) -> str:
        return f"Ideal{self}"


@dataclass(frozen=True, eq=False)
class MultiplicativeSet:
    """
    A multiplicatively closed set containing 1.

    ``shape`` is ``finite``, ``prime_set`` (±products of ``primes``, signs only
    when ``units``) or ``complement_of_prime`` (Z minus pZ).
    """

    ring: RingHandle
    shape: str = "finite"
    mask: Optional[int] = None
    gens: Tuple[int, ...] = ()
    primes: FrozenSet[int] = frozenset()
    units: bool = True
    prime: Optional[int] = None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MultiplicativeSet) and self.ring == other.ring and self._key == other._key

    def __hash__(self) -> int:
        return hash((self.ring.ring_id, self._key))

    @property
    def _key(self) -> Tuple:
        return (self.shape, self.mask, self.primes, self.units, self.prime)

    @cached_property
    def members(self) -> np.ndarray:
        if self.shape != "finite":
            raise InfiniteRingError("multiplicative set members")
        return indices_from_mask(self.mask, self.ring.size)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def elements(self) -> List[RingElement]:
        return [self.ring.element_at(i) for i in self.members]

    def contains(self, x: RingElement) -> bool:
        self.ring.check(x)
        if self.shape == "finite":
            return bool(self.mask >> x.index & 1)
        value = x.payload
        if value == 0:
            return False
        if self.shape == "complement_of_prime":
            return value % self.prime != 0
        if value < 0 and not self.units:
            return False
        return all(p in self.primes for p in prime_factors(value))

    def residues(self, n: int) -> Dict[int, int]:
        """
        Attainable residues of S modulo n (n >= 1), each with an actual element of S.

        For ``prime_set`` this is the multiplicative closure of the generator
        residues (and -1 when units are included); for ``complement_of_prime``
        every residue class that contains an integer prime to p.
        """
        if self.shape == "finite":
            raise UnsupportedShapeError("residues are defined for integer multiplicative sets only")
        if n < 1:
            raise ValidationError("residues need a modulus >= 1")
        if self.shape == "complement_of_prime":
            p = self.prime
            found: Dict[int, int] = {}
            for r in range(n):
                candidate = r if r > 0 else n
                for _ in range(p + 1):
                    if candidate % p:
                        found[r] = candidate
                        break
                    candidate += n
            return found

        generators = sorted(self.primes) + ([-1] if self.units else [])
        found = {1 % n: 1}
        frontier = [1]
        while frontier:
            next_frontier = []
            for value in frontier:
                for g in generators:
                    product = value * g
                    r = product % n
                    if r not in found:
                        found[r] = product
                        next_frontier.append(product)
            frontier = next_frontier
        return found

    def to_document(self) -> Dict[str, Any]:
        if self.shape == "complement_of_prime":
            return {"complement_of_prime": self.prime}
        if self.shape == "prime_set":
            return {"primes": sorted(self.primes), "units": self.units}
        return {"gens": [thaw_payload(self.ring.payloads[i]) for i in self.gens]}

    def __str__(self) -> str:
        if self.shape == "complement_of_prime":
            return f"Z\\{self.prime}Z"
        if self.shape == "prime_set":
            sign = "±" if self.units else ""
            return f"{sign}<{', '.join(map(str, sorted(self.primes)))}>"
        return "{" + ", ".join(str(thaw_payload(self.ring.payloads[i])) for i in self.members) + "}"


# -- helpers on masks ------------------------------------------------------------

def _principal_mask(ring: FiniteRing, index: int) -> int:
    flags = np.zeros(ring.size, dtype=bool)
    flags[ring.multiples(index)] = True
    return mask_from_bools(flags)


def _sum_masks(ring: FiniteRing, left: int, right: int) -> int:
    a = indices_from_mask(left, ring.size)
    b = indices_from_mask(right, ring.size)
    if len(a) == 0:
        return right
    if len(b) == 0:
        return left
    flags = np.zeros(ring.size, dtype=bool)
    flags[ring.add_table[np.ix_(a, b)].ravel()] = True
    return mask_from_bools(flags)


def _generated_mask(ring: FiniteRing, gens: Iterable[int]) -> int:
    mask = 1 << ring.zero_index
    for g in gens:
        if not mask >> int(g) & 1:
            mask = _sum_masks(ring, mask, _principal_mask(ring, int(g)))
    return mask


def _finite_ideal(ring: FiniteRing, mask: int, gens: Tuple[int, ...] = ()) -> Ideal:
    return Ideal(ring, mask=mask, gens=gens)


def _integer_ideal(ring: RingHandle, n: int) -> Ideal:
    return Ideal(ring, generator=abs(int(n)))


def _same_ring(*objects: Union[Ideal, MultiplicativeSet]) -> RingHandle:
    ring = objects[0].ring
    for obj in objects[1:]:
        if obj.ring != ring:
            raise CrossRingError(f"objects from rings {ring.ring_id} and {obj.ring.ring_id} were mixed")
    return ring


# -- construction ------------------------------------------------------------------

def ideal_generate(ring: RingHandle, gens: Sequence[Any]) -> Ideal:
    """Smallest ideal containing ``gens`` (elements or payloads)."""
    elements = [ring.element(g) for g in gens]
    if not ring.is_finite:
        return _integer_ideal(ring, gcd_all(x.payload for x in elements))
    indices = tuple(x.index for x in elements)
    return _finite_ideal(ring, _generated_mask(ring, indices), indices)


def principal_ideal(ring: RingHandle, x: Any) -> Ideal:
    return ideal_generate(ring, [x])


def zero_ideal(ring: RingHandle) -> Ideal:
    return ideal_generate(ring, [])


def whole_ring(ring: RingHandle) -> Ideal:
    return ideal_generate(ring, [ring.one])


def ideal_from_mask(ring: FiniteRing, mask: int) -> Ideal:
    return _finite_ideal(ring, mask)


def parse_ideal(ring: RingHandle, document: Any) -> Ideal:
    """Ideal from ``{"gens": [...]}`` or, for the integers, ``{"n": k}``."""
    if isinstance(document, Ideal):
        if document.ring != ring:
            raise CrossRingError("ideal belongs to another ring")
        return document
    spec = parse_ideal_spec(document)
    if isinstance(spec, IntegerIdealSpec):
        if ring.is_finite:
            raise ValidationError('the {"n": k} ideal form is only valid for the integers')
        return _integer_ideal(ring, spec.n)
    return ideal_generate(ring, spec.gens)


# -- lattice operations ------------------------------------------------------------

def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    ring = _same_ring(I, J)
    if not ring.is_finite:
        return _integer_ideal(ring, gcd(I.generator, J.generator))
    return _finite_ideal(ring, _sum_masks(ring, I.mask, J.mask))


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    ring = _same_ring(I, J)
    if not ring.is_finite:
        return _integer_ideal(ring, lcm_all([I.generator, J.generator]))
    return _finite_ideal(ring, I.mask & J.mask)


def intersect_all(ideals: Sequence[Ideal], ring: Optional[RingHandle] = None) -> Ideal:
    """Intersection of a list of ideals; the whole ring for an empty list."""
    if not ideals:
        return whole_ring(ring)
    result = ideals[0]
    for other in ideals[1:]:
        result = ideal_intersect(result, other)
    return result


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    ring = _same_ring(I, J)
    if not ring.is_finite:
        return _integer_ideal(ring, I.generator * J.generator)
    products = np.unique(ring.mul_table[np.ix_(I.members, J.members)])
    return _finite_ideal(ring, _generated_mask(ring, products))


def ideal_scale(s: RingElement, I: Ideal) -> Ideal:
    """sI = {s x : x in I}, itself an ideal."""
    ring = I.ring
    ring.check(s)
    if not ring.is_finite:
        return _integer_ideal(ring, s.payload * I.generator)
    flags = np.zeros(ring.size, dtype=bool)
    flags[ring.mul_table[s.index, I.members]] = True
    return _finite_ideal(ring, mask_from_bools(flags))


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """True iff J is a subset of I."""
    ring = _same_ring(I, J)
    if not ring.is_finite:
        if I.generator == 0:
            return J.generator == 0
        return J.generator % I.generator == 0
    return J.mask & ~I.mask == 0


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    _same_ring(I, J)
    return I == J


def ideal_members(I: Ideal) -> List[RingElement]:
    """Members of an ideal of a finite ring, in element order."""
    if not I.ring.is_finite:
        raise InfiniteRingError("ideal_members")
    return [I.ring.element_at(int(i)) for i in I.members]


def is_proper(I: Ideal) -> bool:
    return I.is_proper


def ideal_colon(I: Ideal, by: Union[RingElement, Ideal]) -> Ideal:
    """(I : s) = {a : sa in I}; (I : J) = {a : aJ in I}."""
    ring = I.ring
    if isinstance(by, Ideal):
        _same_ring(I, by)
        if not ring.is_finite:
            return _integer_colon(ring, I.generator, by.generator)
        if len(by.members) == 0:
            return whole_ring(ring)
        inside = I.flags[ring.mul_table[:, by.members]].all(axis=1)
        return _finite_ideal(ring, mask_from_bools(inside))
    ring.check(by)
    if not ring.is_finite:
        return _integer_colon(ring, I.generator, by.payload)
    return _finite_ideal(ring, mask_from_bools(I.flags[ring.multiples(by.index)]))


def _integer_colon(ring: RingHandle, n: int, s: int) -> Ideal:
    if n == 0:
        return _integer_ideal(ring, 1 if s == 0 else 0)
    return _integer_ideal(ring, n // gcd(n, s))


def radical(I: Ideal) -> Ideal:
    """{a : a^k in I for some k}; finite rings use k = |R|, which always suffices."""
    ring = I.ring
    if not ring.is_finite:
        return _integer_ideal(ring, squarefree_kernel(I.generator))
    powers = ring.power_indices(ring.size)
    return _finite_ideal(ring, mask_from_bools(I.flags[powers]))


# -- multiplicative sets -------------------------------------------------------------

def mset_closure(ring: RingHandle, gens: Sequence[Any]) -> MultiplicativeSet:
    """
    Smallest multiplicatively closed set containing ``gens`` and 1.

    Raises:
        MultiplicativeSetError: when 0 is reached, with the product chain
    """
    if not ring.is_finite:
        raise UnsupportedShapeError(
            "integer multiplicative sets are given as {'primes': [...]} or {'complement_of_prime': p}"
        )
    elements = [ring.element(g) for g in gens]
    gen_indices = tuple(dict.fromkeys(x.index for x in elements))
    payload = lambda i: thaw_payload(ring.payloads[i])  # noqa: E731

    for g in gen_indices:
        if g == ring.zero_index:
            raise MultiplicativeSetError("multiplicative set generators must be nonzero", [f"{payload(g)} = 0"])

    parent: Dict[int, Tuple[int, int]] = {}
    members = {ring.one_index}
    frontier = [ring.one_index]
    while frontier:
        next_frontier = []
        for e in frontier:
            for g in gen_indices:
                product = int(ring.mul_table[e, g])
                if product in members:
                    continue
                parent[product] = (e, g)
                if product == ring.zero_index:
                    chain = _product_chain(ring, parent, product)
                    raise MultiplicativeSetError(
                        f"multiplicative closure reaches 0: {chain[-1]}", chain
                    )
                members.add(product)
                next_frontier.append(product)
        frontier = next_frontier

    flags = np.zeros(ring.size, dtype=bool)
    flags[list(members)] = True
    return MultiplicativeSet(ring, "finite", mask=mask_from_bools(flags), gens=gen_indices)


def _product_chain(ring: FiniteRing, parent: Dict[int, Tuple[int, int]], end: int) -> List[str]:
    steps: List[str] = []
    current = end
    while current in parent:
        left, right = parent[current]
        steps.append(
            f"{thaw_payload(ring.payloads[left])}·{thaw_payload(ring.payloads[right])} = "
            f"{thaw_payload(ring.payloads[current])}"
        )
        current = left
    return list(reversed(steps))


def mset_from_elements(ring: FiniteRing, elements: Sequence[Any]) -> MultiplicativeSet:
    """Validate an explicit element set as a multiplicative set."""
    indices = sorted({ring.element(e).index for e in elements})
    members = set(indices)
    if ring.one_index not in members:
        raise MultiplicativeSetError("multiplicative set must contain 1")
    if ring.zero_index in members:
        raise MultiplicativeSetError("multiplicative set must not contain 0")
    block = ring.mul_table[np.ix_(indices, indices)]
    if not all(int(v) in members for v in np.unique(block)):
        raise MultiplicativeSetError("element set is not closed under multiplication")
    flags = np.zeros(ring.size, dtype=bool)
    flags[indices] = True
    return MultiplicativeSet(ring, "finite", mask=mask_from_bools(flags), gens=tuple(indices))


def trivial_mset(ring: RingHandle) -> MultiplicativeSet:
    """S = {1}."""
    if not ring.is_finite:
        return prime_set_mset(ring, [], units=False)
    return mset_closure(ring, [])


def unit_group(ring: FiniteRing) -> MultiplicativeSet:
    if not ring.is_finite:
        raise InfiniteRingError("unit_group")
    is_unit = (ring.mul_table == ring.one_index).any(axis=1)
    return mset_from_elements(ring, [ring.element_at(i) for i in np.flatnonzero(is_unit)])


def prime_set_mset(ring: RingHandle, primes: Iterable[int], units: bool = True) -> MultiplicativeSet:
    if ring.is_finite:
        raise UnsupportedShapeError("prime-set multiplicative sets are defined for the integers only")
    primes = frozenset(int(p) for p in primes)
    for p in primes:
        if not is_prime(p):
            raise ValidationError(f"{p} is not a prime")
    return MultiplicativeSet(ring, "prime_set", primes=primes, units=units)


def complement_of_prime(ring: RingHandle, p: int) -> MultiplicativeSet:
    if ring.is_finite:
        raise UnsupportedShapeError("complement-of-prime sets are defined for the integers only")
    if not is_prime(p):
        raise ValidationError(f"{p} is not a prime")
    return MultiplicativeSet(ring, "complement_of_prime", prime=int(p))


def parse_mset(ring: RingHandle, document: Any) -> MultiplicativeSet:
    if isinstance(document, MultiplicativeSet):
        if document.ring != ring:
            raise CrossRingError("multiplicative set belongs to another ring")
        return document
    spec = parse_mset_spec(document)
    if isinstance(spec, ComplementOfPrimeMsetSpec):
        return complement_of_prime(ring, spec.complement_of_prime)
    if isinstance(spec, PrimeSetMsetSpec):
        return prime_set_mset(ring, spec.primes, spec.units)
    return mset_closure(ring, spec.gens)


# -- saturation and friends ------------------------------------------------------------

def saturation(I: Ideal, S: MultiplicativeSet) -> Ideal:
    """S(I) = {a : sa in I for some s in S}."""
    ring = _same_ring(I, S)
    if not ring.is_finite:
        n = I.generator
        if n == 0:
            return I
        if S.shape == "complement_of_prime":
            return _integer_ideal(ring, prime_part(n, S.prime))
        return _integer_ideal(ring, split_by_primes(n, S.primes)[1])
    flags = np.zeros(ring.size, dtype=bool)
    for s in S.members:
        flags |= I.flags[ring.multiples(s)]
    return _finite_ideal(ring, mask_from_bools(flags))


def s_part(n: int, S: MultiplicativeSet) -> int:
    """The factor of n made of primes that are units-up-to-S (n != 0)."""
    if S.shape == "complement_of_prime":
        return abs(n) // prime_part(n, S.prime)
    return split_by_primes(n, S.primes)[0]


def saturating_element(
    ideals: Sequence[Ideal],
    S: MultiplicativeSet,
    preferred: Sequence[RingElement] = (),
) -> Optional[RingElement]:
    """
    Some s* in S with (X : s*) = S(X) for every X in ``ideals``.

    Finite rings try ``preferred`` first and then S in element order; the
    integers build s* from the S-parts of the generators. Returns None when no
    element of S works.
    """
    ring = S.ring
    targets = [saturation(X, S) for X in ideals]
    if not ring.is_finite:
        value = lcm_all([s_part(X.generator, S) for X in ideals if X.generator != 0] or [1])
        candidates = [ring.element(value)]
    else:
        candidates = [x for x in preferred if S.contains(x)] + S.elements()
    for s in candidates:
        if all(ideal_colon(X, s) == target for X, target in zip(ideals, targets)):
            return s
    return None


def disjoint_from(I: Ideal, S: MultiplicativeSet) -> bool:
    ring = _same_ring(I, S)
    if ring.is_finite:
        return I.mask & S.mask == 0
    n = I.generator
    if n == 0:
        return True
    if S.shape == "complement_of_prime":
        return n % S.prime == 0
    return any(p not in S.primes for p in prime_factors(n))


def is_divided(I: Ideal) -> bool:
    """I is contained in aR for every a outside I (non-strict containment)."""
    ring = I.ring
    if not ring.is_finite:
        return I.generator in (0, 1)
    for a in range(ring.size):
        if I.mask >> a & 1:
            continue
        if I.mask & ~_principal_mask(ring, a):
            return False
    return True


@lru_cache(maxsize=512)
def _enumerate_ideal_masks(ring: FiniteRing) -> Tuple[Tuple[int, Tuple[int, ...]], ...]:
    principal: Dict[int, Tuple[int, ...]] = {}
    for g in range(ring.size):
        principal.setdefault(_principal_mask(ring, g), (g,))
    known: Dict[int, Tuple[int, ...]] = dict(principal)
    frontier = list(principal)
    while frontier:
        next_frontier = []
        for mask in frontier:
            for p_mask, (g,) in principal.items():
                if p_mask & ~mask == 0:
                    continue
                total = _sum_masks(ring, mask, p_mask)
                if total not in known:
                    known[total] = known[mask] + (g,)
                    next_frontier.append(total)
        frontier = next_frontier
    logger.debug(f"Ring {ring.ring_id}: {len(known)} ideals")
    return tuple(known.items())


def enumerate_ideals(ring: RingHandle) -> List[Ideal]:
    """All ideals of a finite ring, each once, in canonical order."""
    if not ring.is_finite:
        raise InfiniteRingError("enumerate_ideals")
    ideals = [_finite_ideal(ring, mask, gens) for mask, gens in _enumerate_ideal_masks(ring)]
    return sorted(ideals, key=lambda I: I.sort_key)


def canonical_order(ideals: Iterable[Ideal]) -> List[Ideal]:
    return sorted(ideals, key=lambda I: I.sort_key)
