"""
Integer Residue Procedures

Decides the S-relative predicates for ideals nZ of the integers. Membership of
ab in nZ, of sa in nZ and of sb in rad(n)Z depends only on residues modulo n,
and the conditions on s depend only on gcd(s, n); so a, b range over 0..n-1
and s over one representative of each gcd class of the attainable residues
of S modulo n. docs/INTEGER_REDUCTIONS.md has the argument.
"""

import logging
from math import gcd, lcm
from typing import Dict, List, Optional, Tuple

import numpy as np

from laskerlab.core.ideals import Ideal, MultiplicativeSet
from laskerlab.core.integers import positive_divisors, squarefree_kernel

logger = logging.getLogger(__name__)


def zero_product_pairs(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """All residue pairs (a, b) modulo n with ab = 0 mod n."""
    a = np.arange(n, dtype=np.int64)
    hits = (a[:, None] * a[None, :]) % n == 0
    return np.nonzero(hits)


def gcd_classes(S: MultiplicativeSet, n: int) -> List[Tuple[int, int, int]]:
    """
    One ``(gcd, residue, element)`` per gcd class of attainable residues mod n.

    Classes are listed by smallest residue, so the first working class yields
    the smallest working residue.
    """
    classes: Dict[int, Tuple[int, int, int]] = {}
    for residue, element in sorted(S.residues(n).items()):
        g = gcd(residue, n)
        classes.setdefault(g, (g, residue, element))
    return list(classes.values())


def residue_search(
    n: int, S: MultiplicativeSet, prime_mode: bool
) -> Tuple[Optional[int], List[Dict[str, int]], int]:
    """
    Search a witness for nZ being S-primary (or S-prime when ``prime_mode``).

    Returns:
        (witness element or None, refutations per failed gcd class, class count)
    """
    second_modulus = n if prime_mode else squarefree_kernel(n)
    pa, pb = zero_product_pairs(n)
    refutations: List[Dict[str, int]] = []
    classes = gcd_classes(S, n)
    for g, residue, element in classes:
        first_ok = (residue * pa) % n == 0
        second_ok = (residue * pb) % second_modulus == 0
        bad = np.flatnonzero(~first_ok & ~second_ok)
        if len(bad) == 0:
            logger.debug(f"{n}Z: witness s={element} (gcd class {g})")
            return element, refutations, len(classes)
        k = bad[0]
        refutations.append({"gcd": g, "s": element, "a": int(pa[k]), "b": int(pb[k])})
    return None, refutations, len(classes)


def s_irreducible_search(Q: Ideal, S: MultiplicativeSet) -> Optional[Dict[str, int]]:
    """
    Decide S-irreducibility of nZ (n >= 2); returns a violating (a, b, s) or None.

    Candidate ideals I = aZ, J = bZ must contain nZ, so a and b divide n. The
    hypothesis s(I ∩ J) ⊆ nZ reads (n / lcm(a, b)) | s, and the conclusion
    needs some t in sS with (n / a) | t or (n / b) | t; everything depends on
    residues of s and t modulo n only.
    """
    n = Q.generator
    residues = S.residues(n)
    keys = np.array(sorted(residues), dtype=np.int64)
    products = (keys[:, None] * keys[None, :]) % n
    product_gcds = np.gcd(products, n)
    divisors = positive_divisors(n)
    # reachable[d][i]: some t in s_i * S is divisible by d (mod n)
    reachable = {d: (product_gcds % d == 0).any(axis=1) for d in divisors}

    for ia, a in enumerate(divisors):
        for b in divisors[ia:]:
            needed = n // lcm(a, b)
            hypothesis = keys % needed == 0
            rescued = reachable[n // a] | reachable[n // b]
            failing = np.flatnonzero(hypothesis & ~rescued)
            if len(failing):
                s_residue = int(keys[failing[0]])
                return {"a": a, "b": b, "s": residues[s_residue]}
    return None
