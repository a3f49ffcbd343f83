"""
Specification Records

Pydantic models for the JSON documents that describe rings, ideals and
multiplicative sets. Element payloads are plain JSON values (integers or
nested lists) whose shape follows the ring kind.
"""

import json
from typing import Annotated, Any, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter
from pydantic import ValidationError as PydanticValidationError

from laskerlab.utils.errors import ParseError, ValidationError

# int, or arbitrarily nested lists of ints
Payload = Any


class _Record(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class ZModSpec(_Record):
    kind: Literal["zmod"] = "zmod"
    n: int


class ProductSpec(_Record):
    kind: Literal["product"] = "product"
    factors: List["RingSpec"]


class PolyQuotientSpec(_Record):
    """F_p[x]/(f) with f listed highest degree first."""

    kind: Literal["poly_quot"] = "poly_quot"
    p: int
    f: List[int]
    require_irreducible: bool = False


class QuotientSpec(_Record):
    kind: Literal["quotient"] = "quotient"
    base: "RingSpec"
    ideal_gens: List[Payload] = Field(default_factory=list)


class IdealizationSpec(_Record):
    """R(+)Z/m; ``action`` lists the image in Z/m of each base element, in element order."""

    kind: Literal["idealization"] = "idealization"
    base: "RingSpec"
    m: int
    action: Optional[List[int]] = None


class LocalizationSpec(_Record):
    kind: Literal["localization"] = "localization"
    base: "RingSpec"
    mset_gens: List[Payload] = Field(default_factory=list)


class IntegersSpec(_Record):
    kind: Literal["integers"] = "integers"


RingSpec = Annotated[
    Union[
        ZModSpec,
        ProductSpec,
        PolyQuotientSpec,
        QuotientSpec,
        IdealizationSpec,
        LocalizationSpec,
        IntegersSpec,
    ],
    Field(discriminator="kind"),
]

for _model in (ProductSpec, QuotientSpec, IdealizationSpec, LocalizationSpec):
    _model.model_rebuild()


class GeneratedIdealSpec(_Record):
    gens: List[Payload] = Field(default_factory=list)


class IntegerIdealSpec(_Record):
    n: int = Field(ge=0)


IdealSpec = Union[IntegerIdealSpec, GeneratedIdealSpec]


class GeneratedMsetSpec(_Record):
    gens: List[Payload] = Field(default_factory=list)


class PrimeSetMsetSpec(_Record):
    primes: List[int]
    units: bool = True


class ComplementOfPrimeMsetSpec(_Record):
    complement_of_prime: int


MsetSpec = Union[ComplementOfPrimeMsetSpec, PrimeSetMsetSpec, GeneratedMsetSpec]

_ring_adapter = TypeAdapter(RingSpec)
_ideal_adapter = TypeAdapter(IdealSpec)
_mset_adapter = TypeAdapter(MsetSpec)


def _load(document: Union[str, dict, BaseModel]) -> Any:
    if isinstance(document, BaseModel):
        return document.model_dump()
    if isinstance(document, str):
        try:
            return json.loads(document)
        except json.JSONDecodeError as e:
            raise ParseError(f"malformed JSON: {e}") from e
    return document


def _validate(adapter: TypeAdapter, document: Any, what: str) -> Any:
    try:
        return adapter.validate_python(_load(document))
    except PydanticValidationError as e:
        raise ValidationError(f"invalid {what} specification: {e}") from e


def parse_ring_spec(document: Union[str, dict, BaseModel]) -> RingSpec:
    """Parse a ring specification from JSON text, a dict or an existing record."""
    return _validate(_ring_adapter, document, "ring")


def parse_ideal_spec(document: Union[str, dict, BaseModel]) -> IdealSpec:
    return _validate(_ideal_adapter, document, "ideal")


def parse_mset_spec(document: Union[str, dict, BaseModel]) -> MsetSpec:
    return _validate(_mset_adapter, document, "multiplicative set")


def ring_spec_document(spec: RingSpec) -> dict:
    """JSON-ready dict of a ring specification, without defaulted-away fields."""
    return spec.model_dump(exclude_defaults=False, exclude_none=True)


def canonical_json(spec: BaseModel) -> str:
    return json.dumps(spec.model_dump(exclude_none=True), sort_keys=True, separators=(",", ":"))
