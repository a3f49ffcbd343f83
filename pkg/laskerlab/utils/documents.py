"""
Input Documents

Reads the ring, ideal, multiplicative-set and decomposition documents the
command line accepts, either inline as JSON or from a JSON/YAML file.
"""

import json
import logging
from pathlib import Path
from typing import Any, Optional

import yaml

from laskerlab.utils.errors import ParseError, ValidationError

logger = logging.getLogger(__name__)


def parse_inline(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{what}: malformed JSON: {e}") from e


def read_document_file(path: Path, what: str) -> Any:
    """
    Load a JSON or YAML document from disk.

    Raises:
        ParseError: file missing, unreadable, or not valid JSON/YAML
    """
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"{what}: cannot read {path}: {e}") from e
    try:
        # JSON is a subset of YAML 1.2 for the documents used here
        document = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ParseError(f"{what}: {path} is not valid JSON or YAML: {e}") from e
    logger.debug(f"Read {what} document from {path}")
    return document


def resolve_document(inline: Optional[str], path: Optional[Path], what: str, required: bool = True) -> Any:
    """
    Pick the document given inline or as a file.

    Raises:
        ValidationError: both forms were given, or neither when ``required``
    """
    if inline is not None and path is not None:
        raise ValidationError(f"{what} given both inline and as a file; pass only one")
    if path is not None:
        return read_document_file(path, what)
    if inline is not None:
        return parse_inline(inline, what)
    if required:
        raise ValidationError(f"{what} is required")
    return None


def dump_json(document: Any) -> str:
    return json.dumps(document, ensure_ascii=False, sort_keys=False, default=str)
