"""
Shared fixtures for the laskerlab tests.
"""

import sys
from pathlib import Path

import pytest

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

from laskerlab.core.constructions import construct_ring
from laskerlab.core.ideals import complement_of_prime, mset_closure, trivial_mset
from laskerlab.core.specs import IntegersSpec, ProductSpec, ZModSpec

PROJECT_ROOT = Path(__file__).parent.parent
SCHEMA_DIR = PROJECT_ROOT / "schemas"


def zmod(n: int):
    return construct_ring({"kind": "zmod", "n": n})


def boolean_ring(rank: int):
    return construct_ring(ProductSpec(factors=[ZModSpec(n=2)] * rank))


@pytest.fixture
def z12():
    return zmod(12)


@pytest.fixture
def integers():
    return construct_ring(IntegersSpec())


@pytest.fixture
def not_three(integers):
    """S = Z minus 3Z."""
    return complement_of_prime(integers, 3)


@pytest.fixture
def klein():
    """Z/2 x Z/2 with S = {(1,1), (1,0)}."""
    ring = boolean_ring(2)
    return ring, mset_closure(ring, [[1, 0]])


@pytest.fixture
def trivial(z12):
    return trivial_mset(z12)


def flipped_s_primary(Q, S):
    """A deliberately broken S-primary check for mutation runs."""
    from laskerlab.components.predicates import is_s_primary

    certificate = is_s_primary(Q, S)
    return certificate.model_copy(update={"verdict": not certificate.verdict})
