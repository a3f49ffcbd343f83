"""
Certificate Re-checks

Verifies certificates against the raw definitions, element by element, through
the public ring arithmetic only. Nothing here reuses the vectorised searches
of ``predicates`` or the residue reduction, so a passing re-check is
independent evidence for a verdict.
"""

import logging
import random
from math import gcd
from typing import Any, Dict, List, Optional, Set

from laskerlab.components.certificates import Certificate
from laskerlab.core.ideals import Ideal, MultiplicativeSet, parse_ideal
from laskerlab.core.integers import squarefree_kernel
from laskerlab.core.rings import RingElement, RingHandle

logger = logging.getLogger(__name__)


def _members(I: Ideal) -> Set[Any]:
    return {x.payload for x in I.ring.elements() if I.contains(x)}


def _radical_members(I: Ideal) -> Set[Any]:
    ring = I.ring
    found = set()
    for x in ring.elements():
        power = x
        for _ in range(ring.size):
            if I.contains(power):
                found.add(x.payload)
                break
            power = ring.mul(power, x)
    return found


def _violations(ring: RingHandle, first: Set[Any], second: Set[Any], s: RingElement) -> List[tuple]:
    """Ordered pairs (a, b) with ab in ``first`` but sa not in ``first`` and sb not in ``second``."""
    bad = []
    elements = ring.elements()
    for a in elements:
        sa_in = ring.mul(s, a).payload in first
        for b in elements:
            if sa_in or ring.mul(a, b).payload not in first:
                continue
            if ring.mul(s, b).payload not in second:
                bad.append((a.payload, b.payload))
    return bad


def _integer_violation(n: int, second: int, s: int, a: int, b: int) -> bool:
    return (a * b) % n == 0 and (s * a) % n != 0 and (s * b) % second != 0


def recheck_s_primary(Q: Ideal, S: MultiplicativeSet, certificate: Certificate) -> bool:
    """
    Re-verify an S-prime or S-primary certificate.

    A true verdict is re-checked at its witness over every ordered pair; a
    false verdict needs a recorded refutation for every candidate witness.
    """
    ring = Q.ring
    prime_mode = certificate.predicate == "s-prime"
    if not ring.is_finite:
        return _recheck_integer(Q.generator, S, certificate, prime_mode)

    first = _members(Q)
    second = first if prime_mode else _radical_members(Q)
    if certificate.verdict:
        s = ring.element(certificate.witness)
        return S.contains(s) and not _violations(ring, first, second, s)

    refuted = {}
    for entry in certificate.details.get("refutations", []):
        s, a, b = (ring.element(entry[k]) for k in ("s", "a", "b"))
        ab_in = ring.mul(a, b).payload in first
        sa_out = ring.mul(s, a).payload not in first
        sb_out = ring.mul(s, b).payload not in second
        refuted[s.payload] = ab_in and sa_out and sb_out
    return all(refuted.get(s.payload, False) for s in S.elements())


def _recheck_integer(n: int, S: MultiplicativeSet, certificate: Certificate, prime_mode: bool) -> bool:
    if n == 0:
        return certificate.verdict
    second = n if prime_mode else squarefree_kernel(n)
    if certificate.verdict:
        s = certificate.witness
        if not S.contains(S.ring.element(s)):
            return False
        return not any(_integer_violation(n, second, s, a, b) for a, b in _zero_products(n))
    by_gcd = {entry["gcd"]: entry for entry in certificate.details.get("refutations", [])}
    for residue in S.residues(n):
        g = gcd(residue, n)
        entry = by_gcd.get(g)
        if entry is None or not _integer_violation(n, second, residue, entry["a"], entry["b"]):
            return False
    return True


def _zero_products(n: int):
    """Residue pairs (a, b) mod n with ab = 0: b runs over multiples of n / gcd(a, n)."""
    for a in range(n):
        step = n // gcd(a, n)
        for b in range(0, n, step):
            yield a, b


def recheck_s_finite(I: Ideal, certificate: Certificate) -> bool:
    """sI ⊆ J ⊆ I for the recorded (s, J)."""
    if not certificate.verdict:
        return True
    ring = I.ring
    J = parse_ideal(ring, certificate.witness_ideal)
    s = ring.element(certificate.witness)
    if not ring.is_finite:
        n, m = I.generator, J.generator
        return _divides(m, s.payload * n) and _divides(n, m)
    inner, outer = _members(J), _members(I)
    scaled = {ring.mul(s, ring.element(x)).payload for x in outer}
    return scaled <= inner <= outer


def _divides(d: int, n: int) -> bool:
    return n == 0 if d == 0 else n % d == 0


def recheck_sft(I: Ideal, certificate: Certificate) -> bool:
    """F ⊆ I and x^n in F for every x in I."""
    if not certificate.verdict:
        return True
    ring = I.ring
    F = parse_ideal(ring, certificate.witness_ideal)
    k = certificate.exponent
    if not ring.is_finite:
        n, m = I.generator, F.generator
        return _divides(n, m) and _divides(m, n ** k)
    inside, members = _members(F), _members(I)
    return inside <= members and all(ring.pow(ring.element(x), k).payload in inside for x in members)


def recheck_radically_s_finite(I: Ideal, certificate: Certificate) -> bool:
    """sI ⊆ rad(J) ⊆ rad(I) for the recorded (s, J)."""
    if not certificate.verdict:
        return True
    ring = I.ring
    J = parse_ideal(ring, certificate.witness_ideal)
    s = ring.element(certificate.witness)
    if not ring.is_finite:
        rad_i = squarefree_kernel(I.generator)
        rad_j = squarefree_kernel(J.generator)
        return _divides(rad_j, s.payload * I.generator) and _divides(rad_i, rad_j)
    rad_j, rad_i = _radical_members(J), _radical_members(I)
    scaled = {ring.mul(s, ring.element(x)).payload for x in _members(I)}
    return scaled <= rad_j <= rad_i


def direct_integer_spot_check(
    Q: Ideal, S: MultiplicativeSet, certificate: Certificate, seed: int = 0, samples: int = 200
) -> Optional[Dict[str, int]]:
    """
    Compare a residue-based verdict for nZ with direct evaluation on actual integers.

    A true verdict must hold at the witness for random a, b up to 10n; for a
    false verdict, random actual elements s of S up to 10n must each fail on
    some pair. Returns the first contradiction found, or None.
    """
    n = Q.generator
    if n == 0:
        return None
    rng = random.Random(seed)
    bound = 10 * n
    second = squarefree_kernel(n)
    if certificate.verdict:
        s = certificate.witness
        for _ in range(samples):
            a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
            if _integer_violation(n, second, s, a, b):
                return {"s": s, "a": a, "b": b}
        return None

    ring = S.ring
    for _ in range(samples):
        s = rng.randint(1, bound)
        if not S.contains(ring.element(s)):
            continue
        if not any(_integer_violation(n, second, s, a, b) for a, b in _zero_products(n)):
            return {"s": s}
    return None
