"""
Ideal Predicates

Decision procedures for the classical and S-relative ideal predicates. Finite
rings are searched exhaustively with numpy over the operation tables; ideals
of the integers go through the residue procedures in ``residues``. Every
S-relative verdict comes back as a certificate that the ``recheck`` module can
verify without sharing code with these searches.
"""

import logging
from functools import lru_cache
from math import gcd
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from laskerlab.components import residues
from laskerlab.components.certificates import Certificate, SFiniteCertificate, SPrimaryCertificate
from laskerlab.core.constructions import nilradical
from laskerlab.core.ideals import (
    Ideal,
    MultiplicativeSet,
    canonical_order,
    disjoint_from,
    enumerate_ideals,
    ideal_colon,
    ideal_contains,
    ideal_from_mask,
    ideal_scale,
    radical,
)
from laskerlab.core.integers import factorization, is_prime, is_prime_power, prime_part
from laskerlab.core.rings import RingElement, RingHandle, indices_from_mask, mask_from_indices, thaw_payload
from laskerlab.utils.errors import (
    ImproperIdealError,
    InfiniteRingError,
    MeetsMultiplicativeSetError,
    ValidationError,
)

logger = logging.getLogger(__name__)


def _payload(ring: RingHandle, index: int) -> Any:
    return thaw_payload(ring.payloads[int(index)])


def _require_proper(I: Ideal, predicate: str) -> None:
    if not I.is_proper:
        raise ImproperIdealError(f"{predicate}: the ideal {I} is the whole ring")


def _require_disjoint(I: Ideal, S: MultiplicativeSet, predicate: str) -> None:
    _require_proper(I, predicate)
    if not disjoint_from(I, S):
        raise MeetsMultiplicativeSetError(f"{predicate}: the ideal {I} meets the multiplicative set {S}")


def _s_candidates(S: MultiplicativeSet) -> List[RingElement]:
    """Elements of S tried as witnesses: 1 first, then S in element order."""
    ring = S.ring
    if not ring.is_finite:
        return [ring.one]
    rest = [x for x in S.elements() if x.index != ring.one_index]
    return [ring.one] + rest


# -- classical predicates ------------------------------------------------------------

def is_nonnil(I: Ideal) -> bool:
    """True iff I is not contained in Nil(R)."""
    return not ideal_contains(nilradical(I.ring), I)


def prime_certificate(P: Ideal) -> Certificate:
    return _classical_certificate(P, P, "prime")


def primary_certificate(Q: Ideal) -> Certificate:
    return _classical_certificate(Q, radical(Q), "primary")


def _classical_certificate(Q: Ideal, second: Ideal, predicate: str) -> Certificate:
    _require_proper(Q, predicate)
    ring = Q.ring
    if not ring.is_finite:
        n = Q.generator
        holds = n == 0 or (is_prime(n) if predicate == "prime" else is_prime_power(n))
        counterexample = None
        if not holds:
            p = min(factorization(n))
            a = p if is_prime_power(n) else prime_part(n, p)
            counterexample = [a, n // a]
        return Certificate(
            predicate=predicate,
            verdict=holds,
            counterexample=counterexample,
            universe="factorization of the generator",
        )

    hits = np.nonzero(Q.flags[ring.mul_table] & ~Q.flags[:, None] & ~second.flags[None, :])
    holds = len(hits[0]) == 0
    return Certificate(
        predicate=predicate,
        verdict=holds,
        counterexample=None if holds else [_payload(ring, hits[0][0]), _payload(ring, hits[1][0])],
        universe=f"(a, b) in R x R ({ring.size * ring.size} ordered pairs)",
    )


def is_prime_ideal(P: Ideal) -> bool:
    return prime_certificate(P).verdict


def is_primary(Q: Ideal) -> bool:
    return primary_certificate(Q).verdict


def prime_ideals(ring: RingHandle) -> List[Ideal]:
    """The prime ideals of a finite ring in canonical order."""
    if not ring.is_finite:
        raise InfiniteRingError("prime_ideals")
    return [P for P in enumerate_ideals(ring) if P.is_proper and is_prime_ideal(P)]


def irreducible_certificate(Q: Ideal) -> Certificate:
    _require_proper(Q, "irreducible")
    ring = Q.ring
    if not ring.is_finite:
        n = Q.generator
        if n == 0 or is_prime_power(n):
            return Certificate(predicate="irreducible", verdict=True, universe="factorization of the generator")
        p = min(factorization(n))
        a = prime_part(n, p)
        return Certificate(
            predicate="irreducible",
            verdict=False,
            counterexample=[{"n": a}, {"n": n // a}],
            universe="factorization of the generator",
        )

    above = [X for X in enumerate_ideals(ring) if X.mask != Q.mask and X.mask & Q.mask == Q.mask]
    for i, I in enumerate(above):
        for J in above[i:]:
            if I.mask & J.mask == Q.mask:
                return Certificate(
                    predicate="irreducible",
                    verdict=False,
                    counterexample=[I.to_document(), J.to_document()],
                    universe=f"pairs of the {len(above)} ideals strictly above Q",
                )
    return Certificate(
        predicate="irreducible", verdict=True, universe=f"pairs of the {len(above)} ideals strictly above Q"
    )


def is_irreducible(Q: Ideal) -> bool:
    return irreducible_certificate(Q).verdict


# -- S-prime and S-primary -------------------------------------------------------------

@lru_cache(maxsize=65536)
def is_s_prime(P: Ideal, S: MultiplicativeSet) -> SPrimaryCertificate:
    """
    Decide whether P is S-prime: some s in S has ab in P => sa in P or sb in P.

    Raises:
        ImproperIdealError: P = R
        MeetsMultiplicativeSetError: P meets S
    """
    _require_disjoint(P, S, "s-prime")
    return _s_primary_search(P, S, prime_mode=True)


@lru_cache(maxsize=65536)
def is_s_primary(Q: Ideal, S: MultiplicativeSet) -> SPrimaryCertificate:
    """
    Decide whether Q is S-primary: some s in S has ab in Q => sa in Q or sb in rad(Q).

    Ordered pairs (a, b) are checked as quantified; the condition is not
    symmetrised.

    Args:
        Q: Proper ideal disjoint from S
        S: Multiplicative set of the same ring

    Returns:
        Certificate with the first working witness in element order, or one
        refutation per candidate witness

    Raises:
        ImproperIdealError: Q = R
        MeetsMultiplicativeSetError: Q meets S
    """
    _require_disjoint(Q, S, "s-primary")
    return _s_primary_search(Q, S, prime_mode=False)


def _s_primary_search(Q: Ideal, S: MultiplicativeSet, prime_mode: bool) -> SPrimaryCertificate:
    predicate = "s-prime" if prime_mode else "s-primary"
    ring = Q.ring
    second = Q if prime_mode else radical(Q)
    details: Dict[str, Any] = {"radical": second.to_document()}

    if not ring.is_finite:
        n = Q.generator
        if n == 0:
            # Z is a domain: (0) is prime, so s = 1 works
            return SPrimaryCertificate(
                predicate=predicate, verdict=True, witness=1, universe="(0) in a domain", details=details
            )
        witness, refutations, classes = residues.residue_search(n, S, prime_mode)
        universe = (
            f"a, b in residues mod {n}; s over {len(S.residues(n))} attainable residues of S "
            f"in {classes} gcd classes"
        )
        if witness is not None:
            return SPrimaryCertificate(
                predicate=predicate, verdict=True, witness=witness, universe=universe, details=details
            )
        first = refutations[0]
        return SPrimaryCertificate(
            predicate=predicate,
            verdict=False,
            counterexample=[first["a"], first["b"]],
            universe=universe,
            details={**details, "refutations": refutations},
        )

    pa, pb = np.nonzero(Q.flags[ring.mul_table])
    universe = f"s in S ({S.size} elements), (a, b) in R x R ({ring.size * ring.size} ordered pairs)"
    refutations = []
    for s in S.members:
        row = ring.mul_table[s]
        bad = np.flatnonzero(~Q.flags[row[pa]] & ~second.flags[row[pb]])
        if len(bad) == 0:
            logger.debug(f"{predicate} {Q}: witness {_payload(ring, s)}")
            return SPrimaryCertificate(
                predicate=predicate,
                verdict=True,
                witness=_payload(ring, s),
                universe=universe,
                details=details,
            )
        k = bad[0]
        refutations.append(
            {"s": _payload(ring, s), "a": _payload(ring, pa[k]), "b": _payload(ring, pb[k])}
        )
    first = refutations[0]
    return SPrimaryCertificate(
        predicate=predicate,
        verdict=False,
        counterexample=[first["a"], first["b"]],
        universe=universe,
        details={**details, "refutations": refutations},
    )


# -- S-irreducibility ------------------------------------------------------------------

def is_s_irreducible(Q: Ideal, S: MultiplicativeSet) -> Certificate:
    """
    Decide S-irreducibility of Q.

    Every (I, J, s) with s(I ∩ J) ⊆ Q ⊆ I ∩ J must admit s' in S with
    ss'I ⊆ Q or ss'J ⊆ Q. A false verdict names the offending (I, J, s).
    """
    _require_disjoint(Q, S, "s-irreducible")
    ring = Q.ring
    if not ring.is_finite:
        n = Q.generator
        universe = f"divisor ideals of {n}Z and residues of S mod {n}"
        if n == 0:
            return Certificate(predicate="s-irreducible", verdict=True, universe="(0) is prime in Z")
        bad = residues.s_irreducible_search(Q, S)
        if bad is None:
            return Certificate(predicate="s-irreducible", verdict=True, universe=universe)
        return Certificate(
            predicate="s-irreducible",
            verdict=False,
            counterexample=[{"n": bad["a"]}, {"n": bad["b"]}, bad["s"]],
            universe=universe,
        )

    above = [X for X in enumerate_ideals(ring) if X.mask & Q.mask == Q.mask]
    # (Q : X) ∩ S for every X above Q; s' works for (I, J, s) iff ss' lies in one of them
    rescue = {X.mask: ideal_colon(Q, X).mask & S.mask for X in above}
    orbit = {int(s): mask_from_indices(np.unique(ring.mul_table[s, S.members])) for s in S.members}
    hypothesis: Dict[int, int] = {}
    universe = f"pairs of the {len(above)} ideals containing Q, s and s' in S ({S.size} elements)"

    for i, I in enumerate(above):
        for J in above[i:]:
            meet = I.mask & J.mask
            if meet not in hypothesis:
                hypothesis[meet] = ideal_colon(Q, ideal_from_mask(ring, meet)).mask & S.mask
            if not hypothesis[meet]:
                continue
            rescuers = rescue[I.mask] | rescue[J.mask]
            for s in indices_from_mask(hypothesis[meet], ring.size):
                if not orbit[int(s)] & rescuers:
                    return Certificate(
                        predicate="s-irreducible",
                        verdict=False,
                        counterexample=[I.to_document(), J.to_document(), _payload(ring, s)],
                        universe=universe,
                    )
    return Certificate(predicate="s-irreducible", verdict=True, universe=universe)


# -- finiteness conditions ---------------------------------------------------------------

def _sub_ideals(I: Ideal) -> List[Ideal]:
    """I itself, then every ideal inside I in canonical order."""
    if not I.ring.is_finite:
        return [I]
    return [I] + [J for J in enumerate_ideals(I.ring) if J != I and ideal_contains(I, J)]


def is_s_finite(I: Ideal, S: MultiplicativeSet) -> SFiniteCertificate:
    """
    Search s in S and a finitely generated J with sI ⊆ J ⊆ I.

    Every ideal of a finite ring, and every ideal of Z, is finitely
    generated, so the search stops at s = 1, J = I; the condition is still
    evaluated as stated.
    """
    candidates = _sub_ideals(I)
    for s in _s_candidates(S):
        scaled = ideal_scale(s, I)
        for J in candidates:
            if ideal_contains(J, scaled) and ideal_contains(I, J):
                return SFiniteCertificate(
                    predicate="s-finite",
                    verdict=True,
                    witness=s.to_json(),
                    witness_ideal=J.to_document(),
                    universe="s in S, J finitely generated inside I",
                )
    return SFiniteCertificate(predicate="s-finite", verdict=False, universe="s in S, J finitely generated inside I")


def _power_bound(I: Ideal, F: Ideal) -> Optional[int]:
    """Smallest n with x^n in F for every x in I, or None."""
    ring = I.ring
    if not ring.is_finite:
        n, m = I.generator, F.generator
        if n == 0:
            return 1
        if m == 0:
            return None
        needed = 1
        for p, e in factorization(m).items():
            if n % p:
                return None
            v = factorization(n)[p]
            needed = max(needed, -(-e // v))
        return needed
    for exponent in range(1, ring.size + 1):
        if F.flags[ring.power_indices(exponent, I.members)].all():
            return exponent
    return None


def _sft_search(I: Ideal, S: Optional[MultiplicativeSet], sub_ideal: Optional[Ideal]) -> SFiniteCertificate:
    predicate = "sft" if S is None else "s-sft"
    if sub_ideal is not None:
        if not ideal_contains(I, sub_ideal):
            raise ValidationError(f"{predicate}: {sub_ideal} is not inside {I}")
        candidates = [sub_ideal]
    elif I.ring.is_finite:
        candidates = canonical_order(J for J in enumerate_ideals(I.ring) if ideal_contains(I, J))
    else:
        candidates = [I]

    best: Optional[tuple] = None
    for F in candidates:
        details: Dict[str, Any] = {}
        if S is not None:
            finite = is_s_finite(F, S)
            if not finite.verdict:
                continue
            details["s_finite"] = finite.model_dump()
        exponent = _power_bound(I, F)
        if exponent is not None and (best is None or exponent < best[1]):
            best = (F, exponent, details)
    bound = "n <= |R|" if I.ring.is_finite else "n <= the largest exponent of the generator"
    universe = f"F finitely generated inside I ({len(candidates)} candidates), {bound}"
    if best is None:
        return SFiniteCertificate(predicate=predicate, verdict=False, universe=universe)
    F, exponent, details = best
    return SFiniteCertificate(
        predicate=predicate,
        verdict=True,
        witness_ideal=F.to_document(),
        exponent=exponent,
        universe=universe,
        details=details,
    )


def is_sft(I: Ideal, sub_ideal: Optional[Ideal] = None) -> SFiniteCertificate:
    """
    Search a finitely generated F ⊆ I and the smallest n with x^n in F for all x in I.

    Ties on n go to the first F in canonical order; ``sub_ideal`` fixes F.
    """
    return _sft_search(I, None, sub_ideal)


def is_s_sft(I: Ideal, S: MultiplicativeSet, sub_ideal: Optional[Ideal] = None) -> SFiniteCertificate:
    """As ``is_sft`` with F required to be S-finite; its certificate sits in ``details``."""
    return _sft_search(I, S, sub_ideal)


def is_radically_s_finite(
    I: Ideal, S: MultiplicativeSet, candidate: Optional[Ideal] = None
) -> SFiniteCertificate:
    """
    Search s in S and a finitely generated J with sI ⊆ rad(J) ⊆ rad(I).

    J = I is tried first, so without ``candidate`` the certificate names I
    itself; on the integers it is the only default candidate. Pass
    ``candidate`` to certify another J, for example 25Z for 5Z.
    """
    ring = I.ring
    rad_I = radical(I)
    if candidate is not None:
        candidates = [candidate]
    elif ring.is_finite:
        candidates = [I] + [J for J in enumerate_ideals(ring) if J != I]
    else:
        candidates = [I]

    universe = f"s in S, J among {len(candidates)} finitely generated ideals"
    for J in candidates:
        rad_J = radical(J)
        if not ideal_contains(rad_I, rad_J):
            continue
        for s in _radical_multipliers(I, rad_J, S):
            if ideal_contains(rad_J, ideal_scale(s, I)):
                return SFiniteCertificate(
                    predicate="radically-s-finite",
                    verdict=True,
                    witness=s.to_json(),
                    witness_ideal=J.to_document(),
                    universe=universe,
                )
    return SFiniteCertificate(predicate="radically-s-finite", verdict=False, universe=universe)


def _radical_multipliers(I: Ideal, rad_J: Ideal, S: MultiplicativeSet) -> List[RingElement]:
    ring = I.ring
    if ring.is_finite:
        return _s_candidates(S)
    # smallest s with s * n divisible by the generator of rad(J)
    n, r = I.generator, rad_J.generator
    multipliers = [ring.one]
    if r and n:
        s = ring.element(r // gcd(r, n))
        if S.contains(s):
            multipliers.append(s)
    return multipliers


def has_s_noetherian_spectrum(ring: RingHandle, S: MultiplicativeSet) -> Certificate:
    """Radical S-finiteness of every prime ideal, with the per-prime certificates."""
    if not ring.is_finite:
        raise InfiniteRingError("has_s_noetherian_spectrum")
    primes = []
    verdict = True
    for P in prime_ideals(ring):
        certificate = is_radically_s_finite(P, S)
        verdict = verdict and certificate.verdict
        primes.append({"ideal": P.to_document(), "certificate": certificate.model_dump()})
    return Certificate(
        predicate="s-noetherian-spectrum",
        verdict=verdict,
        universe=f"{len(primes)} prime ideals",
        details={"primes": primes},
    )


# -- chains and ring-level finiteness -------------------------------------------------------

def is_s_stationary(chain: Sequence[Ideal], S: MultiplicativeSet) -> Certificate:
    """
    A finite ascending chain I_1 ⊆ ... ⊆ I_m is S-stationary iff some k and
    s in S have sI_i ⊆ I_k for every i.
    """
    if not chain:
        raise ValidationError("is_s_stationary needs a non-empty chain")
    if not chain[0].ring.is_finite:
        raise InfiniteRingError("is_s_stationary")
    for lower, upper in zip(chain, chain[1:]):
        if not ideal_contains(upper, lower):
            raise ValidationError(f"chain is not ascending at {lower} ⊄ {upper}")
    for k, I_k in enumerate(chain):
        for s in _s_candidates(S):
            if all(ideal_contains(I_k, ideal_scale(s, I)) for I in chain):
                return Certificate(
                    predicate="s-stationary",
                    verdict=True,
                    witness=s.to_json(),
                    universe=f"k in 1..{len(chain)}, s in S",
                    details={"k": k + 1},
                )
    return Certificate(predicate="s-stationary", verdict=False, universe=f"k in 1..{len(chain)}, s in S")


def is_nonnil_s_noetherian(ring: RingHandle, S: MultiplicativeSet) -> Certificate:
    """Every nonnil ideal of a finite ring is S-finite."""
    if not ring.is_finite:
        raise InfiniteRingError("is_nonnil_s_noetherian")
    checked = 0
    for I in enumerate_ideals(ring):
        if not is_nonnil(I):
            continue
        checked += 1
        certificate = is_s_finite(I, S)
        if not certificate.verdict:
            return Certificate(
                predicate="nonnil-s-noetherian",
                verdict=False,
                counterexample=[I.to_document()],
                universe=f"{checked} nonnil ideals",
            )
    return Certificate(predicate="nonnil-s-noetherian", verdict=True, universe=f"{checked} nonnil ideals")
