"""
Rings

Commutative rings with identity. Finite rings carry explicit addition,
multiplication and negation tables over element indices ``0..N-1``; the
integer ring computes with Python integers. Elements are immutable values
tagged with the id of their ring; payloads are always in canonical form.
"""

import hashlib
import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import Poly, symbols

from laskerlab.core.integers import is_prime
from laskerlab.core.specs import (
    IdealizationSpec,
    IntegersSpec,
    PolyQuotientSpec,
    ProductSpec,
    RingSpec,
    ZModSpec,
    canonical_json,
)
from laskerlab.utils.errors import (
    CrossRingError,
    InfiniteRingError,
    RingConstructionError,
    ValidationError,
)

logger = logging.getLogger(__name__)

INDEX_DTYPE = np.int32
# rows of the multiplication table built per numpy call for poly quotients
_CHUNK_CELLS = 1 << 22


def freeze_payload(payload: Any) -> Any:
    """Nested lists become nested tuples so payloads can be hashed."""
    if isinstance(payload, (list, tuple)):
        return tuple(freeze_payload(p) for p in payload)
    if isinstance(payload, (bool, np.bool_)):
        raise ValidationError(f"boolean is not an element payload: {payload!r}")
    if isinstance(payload, (int, np.integer)):
        return int(payload)
    raise ValidationError(f"unsupported element payload: {payload!r}")


def thaw_payload(payload: Any) -> Any:
    """Inverse of :func:`freeze_payload`, for JSON output."""
    if isinstance(payload, tuple):
        return [thaw_payload(p) for p in payload]
    return payload


def mask_from_bools(flags: np.ndarray) -> int:
    """Pack a boolean vector into an int bitmask (bit i set iff flags[i])."""
    packed = np.packbits(np.asarray(flags, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def bools_from_mask(mask: int, size: int) -> np.ndarray:
    nbytes = (size + 7) // 8
    raw = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:size].astype(bool)


def indices_from_mask(mask: int, size: int) -> np.ndarray:
    return np.flatnonzero(bools_from_mask(mask, size)).astype(INDEX_DTYPE)


def mask_from_indices(indices: Sequence[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << int(i)
    return mask


@dataclass(frozen=True)
class RingElement:
    """An element of a ring: canonical payload plus the index for finite rings."""

    ring_id: str
    payload: Any
    index: Optional[int] = None

    def to_json(self) -> Any:
        return thaw_payload(self.payload)

    def __str__(self) -> str:
        return str(self.to_json())


class RingHandle:
    """Common interface of finite rings and the integers."""

    kind: str = ""
    is_finite: bool = True

    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.ring_id = hashlib.sha1(canonical_json(spec).encode()).hexdigest()[:12]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RingHandle) and other.ring_id == self.ring_id

    def __hash__(self) -> int:
        return hash(self.ring_id)

    @property
    def element_count(self) -> Union[int, str]:
        return self.size if self.is_finite else "infinite"

    def check(self, *elements: RingElement) -> None:
        for x in elements:
            if not isinstance(x, RingElement) or x.ring_id != self.ring_id:
                raise CrossRingError(f"element {x} does not belong to ring {self.ring_id}")

    def sub(self, x: RingElement, y: RingElement) -> RingElement:
        return self.add(x, self.neg(y))

    def pow(self, x: RingElement, exponent: int) -> RingElement:
        self.check(x)
        if exponent < 0:
            raise ValidationError("pow exponent must be >= 0")
        result, base = self.one, x
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exponent >>= 1
        return result


class FiniteRing(RingHandle):
    """A finite commutative ring given by operation tables over element indices."""

    def __init__(
        self,
        spec: RingSpec,
        add_table: np.ndarray,
        mul_table: np.ndarray,
        neg_table: np.ndarray,
        payloads: List[Any],
        zero_index: int,
        one_index: int,
    ):
        super().__init__(spec)
        self.kind = spec.kind
        self.size = len(payloads)
        self.add_table = np.ascontiguousarray(add_table, dtype=INDEX_DTYPE)
        self.mul_table = np.ascontiguousarray(mul_table, dtype=INDEX_DTYPE)
        self.neg_table = np.ascontiguousarray(neg_table, dtype=INDEX_DTYPE)
        for table in (self.add_table, self.mul_table, self.neg_table):
            table.setflags(write=False)
        self.payloads = [freeze_payload(p) for p in payloads]
        self._payload_index = {p: i for i, p in enumerate(self.payloads)}
        self.zero_index = zero_index
        self.one_index = one_index
        self.zero = self.element_at(zero_index)
        self.one = self.element_at(one_index)

    def __repr__(self) -> str:
        return f"FiniteRing({self.kind}, size={self.size}, id={self.ring_id})"

    # -- elements --------------------------------------------------------

    def element_at(self, index: int) -> RingElement:
        return RingElement(self.ring_id, self.payloads[int(index)], int(index))

    def decode(self, payload: Any) -> int:
        key = freeze_payload(payload)
        try:
            return self._payload_index[key]
        except KeyError:
            raise ValidationError(
                f"payload {thaw_payload(key)!r} is not a canonical element of {self.kind} ring {self.ring_id}"
            ) from None

    def element(self, payload: Any) -> RingElement:
        if isinstance(payload, RingElement):
            self.check(payload)
            return payload
        return self.element_at(self.decode(payload))

    def elements(self) -> List[RingElement]:
        return [self.element_at(i) for i in range(self.size)]

    def __iter__(self) -> Iterator[RingElement]:
        return iter(self.elements())

    # -- arithmetic ------------------------------------------------------

    def add(self, x: RingElement, y: RingElement) -> RingElement:
        self.check(x, y)
        return self.element_at(self.add_table[x.index, y.index])

    def mul(self, x: RingElement, y: RingElement) -> RingElement:
        self.check(x, y)
        return self.element_at(self.mul_table[x.index, y.index])

    def neg(self, x: RingElement) -> RingElement:
        self.check(x)
        return self.element_at(self.neg_table[x.index])

    def power_indices(self, exponent: int, base: Optional[np.ndarray] = None) -> np.ndarray:
        """a**exponent for every index a in ``base`` (all elements by default)."""
        base = np.arange(self.size, dtype=INDEX_DTYPE) if base is None else np.asarray(base)
        result = np.full(base.shape, self.one_index, dtype=INDEX_DTYPE)
        while exponent:
            if exponent & 1:
                result = self.mul_table[result, base]
            base = self.mul_table[base, base]
            exponent >>= 1
        return result

    def multiples(self, index: int) -> np.ndarray:
        """Row ``index`` of the multiplication table: the products index * r."""
        return self.mul_table[index]

    # -- validation ------------------------------------------------------

    def verify_axioms(self, exhaustive_limit: int = 64) -> None:
        """
        Check the commutative-ring axioms.

        Rings up to ``exhaustive_limit`` elements are checked on every triple;
        larger rings get the quadratic checks only (commutativity, identities,
        inverses).

        Raises:
            RingConstructionError: naming the first failing axiom and a witness
        """
        n = self.size
        add, mul, neg = self.add_table, self.mul_table, self.neg_table
        idx = np.arange(n)

        def fail(axiom: str, where: np.ndarray) -> None:
            witness = tuple(int(v) for v in np.argwhere(where)[0])
            raise RingConstructionError(f"{axiom} fails at element indices {witness}")

        if (bad := add != add.T).any():
            fail("commutativity of addition", bad)
        if (bad := mul != mul.T).any():
            fail("commutativity of multiplication", bad)
        if (bad := add[self.zero_index] != idx).any():
            fail("additive identity", bad)
        if (bad := mul[self.one_index] != idx).any():
            fail("multiplicative identity", bad)
        if (bad := add[idx, neg] != self.zero_index).any():
            fail("additive inverse", bad)

        if n > exhaustive_limit:
            logger.debug(f"Ring {self.ring_id}: {n} elements, skipping cubic axiom checks")
            return

        if (bad := add[add, :] != add[:, add]).any():
            fail("associativity of addition", bad)
        if (bad := mul[mul, :] != mul[:, mul]).any():
            fail("associativity of multiplication", bad)
        left = mul[:, add]  # a * (b + c)
        right = add[mul[:, :, None], mul[:, None, :]]  # a*b + a*c
        if (bad := left != right).any():
            fail("distributivity", bad)


class IntegerRing(RingHandle):
    """The ring of integers, with arbitrary-precision arithmetic."""

    kind = "integers"
    is_finite = False

    def __init__(self, spec: Optional[IntegersSpec] = None):
        super().__init__(spec or IntegersSpec())
        self.size = None
        self.zero = RingElement(self.ring_id, 0)
        self.one = RingElement(self.ring_id, 1)

    def __repr__(self) -> str:
        return "IntegerRing()"

    def element(self, payload: Any) -> RingElement:
        if isinstance(payload, RingElement):
            self.check(payload)
            return payload
        value = freeze_payload(payload)
        if not isinstance(value, int):
            raise ValidationError(f"integer payload expected, got {payload!r}")
        return RingElement(self.ring_id, value)

    def elements(self) -> List[RingElement]:
        raise InfiniteRingError("enumerate_elements")

    def add(self, x: RingElement, y: RingElement) -> RingElement:
        self.check(x, y)
        return RingElement(self.ring_id, x.payload + y.payload)

    def mul(self, x: RingElement, y: RingElement) -> RingElement:
        self.check(x, y)
        return RingElement(self.ring_id, x.payload * y.payload)

    def neg(self, x: RingElement) -> RingElement:
        self.check(x)
        return RingElement(self.ring_id, -x.payload)


class RingMap:
    """A map between finite rings given by the target index of every source element."""

    def __init__(self, source: FiniteRing, target: FiniteRing, table: np.ndarray):
        self.source = source
        self.target = target
        self.table = np.asarray(table, dtype=INDEX_DTYPE)

    def __call__(self, x: RingElement) -> RingElement:
        self.source.check(x)
        return self.target.element_at(self.table[x.index])

    def is_homomorphism(self) -> bool:
        """Exhaustive check on all element pairs, plus 1 -> 1."""
        f, s, t = self.table, self.source, self.target
        if f[s.one_index] != t.one_index:
            return False
        adds = f[s.add_table] == t.add_table[f[:, None], f[None, :]]
        muls = f[s.mul_table] == t.mul_table[f[:, None], f[None, :]]
        return bool(adds.all() and muls.all())

    def is_bijective(self) -> bool:
        return self.source.size == self.target.size and len(np.unique(self.table)) == self.target.size

    def image_mask(self, mask: int) -> int:
        members = indices_from_mask(mask, self.source.size)
        return mask_from_indices(np.unique(self.table[members]))

    def preimage_mask(self, mask: int) -> int:
        flags = bools_from_mask(mask, self.target.size)
        return mask_from_bools(flags[self.table])


# -- table builders for the structural ring kinds -----------------------------

def _check_cap(size: int, size_cap: int, what: str) -> None:
    if size > size_cap:
        raise RingConstructionError(f"{what} would have {size} elements, above the size cap {size_cap}")


def build_zmod(spec: ZModSpec, size_cap: int) -> FiniteRing:
    n = spec.n
    if n < 2:
        raise RingConstructionError(f"zmod modulus must be >= 2, got {n}")
    _check_cap(n, size_cap, f"zmod({n})")
    a = np.arange(n, dtype=np.int64)
    add = (a[:, None] + a[None, :]) % n
    mul = (a[:, None] * a[None, :]) % n
    neg = (-a) % n
    return FiniteRing(spec, add, mul, neg, list(range(n)), 0, 1)


def build_product(spec: ProductSpec, factors: List[FiniteRing], size_cap: int) -> FiniteRing:
    if not factors:
        raise RingConstructionError("product needs at least one factor")
    total = int(np.prod([f.size for f in factors], dtype=object))
    _check_cap(total, size_cap, "product")

    add, mul, neg = factors[0].add_table, factors[0].mul_table, factors[0].neg_table
    payloads: List[Tuple] = [(p,) for p in factors[0].payloads]
    zero, one = factors[0].zero_index, factors[0].one_index
    for factor in factors[1:]:
        n_left, n_right = len(payloads), factor.size
        size = n_left * n_right

        def combine(left: np.ndarray, right: np.ndarray) -> np.ndarray:
            joined = left[:, None, :, None].astype(np.int64) * n_right + right[None, :, None, :]
            return joined.reshape(size, size)

        add = combine(add, factor.add_table)
        mul = combine(mul, factor.mul_table)
        neg = (neg[:, None].astype(np.int64) * n_right + factor.neg_table[None, :]).reshape(size)
        payloads = [p + (q,) for p in payloads for q in factor.payloads]
        zero = zero * n_right + factor.zero_index
        one = one * n_right + factor.one_index
    return FiniteRing(spec, add, mul, neg, payloads, zero, one)


def _reduced_monomials(p: int, f: List[int]) -> np.ndarray:
    """Coefficient vectors (lowest degree first) of x^k mod f for k < 2 deg f - 1."""
    d = len(f) - 1
    tail = [c % p for c in reversed(f[1:])]  # f_0 .. f_{d-1}
    rows = []
    current = [0] * d
    current[0] = 1
    for _ in range(2 * d - 1):
        rows.append(list(current))
        top = current[-1]
        shifted = [0] + current[:-1]
        current = [(c - top * t) % p for c, t in zip(shifted, tail)]
    return np.array(rows, dtype=np.int64)


def build_poly_quotient(spec: PolyQuotientSpec, size_cap: int) -> FiniteRing:
    p, f = spec.p, [c % spec.p if spec.p else c for c in spec.f]
    if not is_prime(p):
        raise RingConstructionError(f"poly_quot characteristic must be prime, got {p}")
    if len(f) < 2:
        raise RingConstructionError("poly_quot polynomial must have degree >= 1")
    if f[0] != 1:
        raise RingConstructionError(f"poly_quot polynomial {spec.f} is not monic over F_{p}")
    if spec.require_irreducible:
        x = symbols("x")
        if not Poly(f, x, modulus=p).is_irreducible:
            raise RingConstructionError(f"polynomial {spec.f} is reducible over F_{p}")
    d = len(f) - 1
    size = p ** d
    _check_cap(size, size_cap, f"F_{p}[x]/(f) of degree {d}")

    place = p ** np.arange(d, dtype=np.int64)
    digits = (np.arange(size, dtype=np.int64)[:, None] // place[None, :]) % p  # lowest first

    add = np.zeros((size, size), dtype=np.int64)
    for k in range(d):
        add += ((digits[:, k][:, None] + digits[:, k][None, :]) % p) * place[k]
    neg = ((-digits) % p) @ place

    monomials = _reduced_monomials(p, f)
    basis = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            basis[i, j] = monomials[i + j]
    mul = np.zeros((size, size), dtype=np.int64)
    chunk = max(1, _CHUNK_CELLS // max(1, size * d))
    for start in range(0, size, chunk):
        rows = digits[start:start + chunk]
        coeffs = np.einsum("ai,bj,ijk->abk", rows, digits, basis) % p
        mul[start:start + chunk] = coeffs @ place

    payloads = [tuple(int(c) for c in reversed(row)) for row in digits]
    return FiniteRing(spec, add, mul, neg, payloads, 0, 1)


def build_idealization(spec: IdealizationSpec, base: FiniteRing, size_cap: int) -> FiniteRing:
    m = spec.m
    if m < 2:
        raise RingConstructionError(f"idealization module modulus must be >= 2, got {m}")
    size = base.size * m
    _check_cap(size, size_cap, "idealization")

    if spec.action is not None:
        action = np.array(spec.action, dtype=np.int64)
        if action.shape != (base.size,):
            raise RingConstructionError(
                f"idealization action lists {len(spec.action)} images for a base ring of {base.size} elements"
            )
        action %= m
    elif base.kind == "zmod":
        action = np.array([int(p) % m for p in base.payloads], dtype=np.int64)
    else:
        raise RingConstructionError("idealization over a non-zmod base needs an explicit action")

    phi_add = action[base.add_table] == (action[:, None] + action[None, :]) % m
    phi_mul = action[base.mul_table] == (action[:, None] * action[None, :]) % m
    if action[base.one_index] != 1 % m or not phi_add.all() or not phi_mul.all():
        raise RingConstructionError(f"idealization action is not a ring homomorphism onto Z/{m}")

    x = np.arange(m, dtype=np.int64)
    base_add = base.add_table.astype(np.int64)
    base_mul = base.mul_table.astype(np.int64)
    add = base_add[:, None, :, None] * m + ((x[:, None] + x[None, :]) % m)[None, :, None, :]
    module_part = (
        action[:, None, None, None] * x[None, None, None, :]
        + action[None, None, :, None] * x[None, :, None, None]
    ) % m
    mul = base_mul[:, None, :, None] * m + module_part
    neg = base.neg_table.astype(np.int64)[:, None] * m + ((-x) % m)[None, :]

    payloads = [(rp, int(xv)) for rp in base.payloads for xv in range(m)]
    return FiniteRing(
        spec,
        add.reshape(size, size),
        mul.reshape(size, size),
        neg.reshape(size),
        payloads,
        base.zero_index * m,
        base.one_index * m,
    )
