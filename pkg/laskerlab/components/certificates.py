"""
Certificates

Verdicts returned by the predicates. A true verdict carries the witness that
makes it re-checkable; a false verdict carries the counterexample (and, for
the S-relative predicates, one refutation per candidate witness).
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

Payload = Any


class Certificate(BaseModel):
    """Outcome of a predicate, serialisable as JSON."""

    model_config = ConfigDict(frozen=True)

    predicate: str
    verdict: bool
    witness: Optional[Payload] = None
    counterexample: Optional[List[Payload]] = None
    universe: str = ""
    details: Dict[str, Any] = Field(default_factory=dict)


class SPrimaryCertificate(Certificate):
    """
    Certificate of an S-prime / S-primary check.

    ``details["refutations"]`` lists, for a false verdict, one violating pair
    ``{"s": .., "a": .., "b": ..}`` per candidate witness (per gcd class in Z).
    """


class SFiniteCertificate(Certificate):
    """Certificate of S-finiteness, SFT, S-SFT or radical S-finiteness."""

    witness_ideal: Optional[Dict[str, Any]] = None
    exponent: Optional[int] = None


def yes_no(verdict: bool) -> str:
    return "YES" if verdict else "NO"
