"""
Error Display Utilities

Functions for showing errors on the terminal and rendering reports as stable
text lines or single JSON documents.
"""

import logging
import sys
from typing import Any, Dict, List, Optional, TextIO

from pydantic import BaseModel

from laskerlab.components.certificates import Certificate, yes_no
from laskerlab.utils.documents import dump_json

logger = logging.getLogger(__name__)

_SPECIAL_NAMES = {
    "sft": "SFT",
    "s-sft": "S-SFT",
    "s-noetherian-spectrum": "S-Noetherian spectrum",
    "nonnil-s-laskerian": "nonnil-S-Laskerian",
    "s-laskerian": "S-Laskerian",
    "nonnil-s-noetherian": "nonnil-S-Noetherian",
    "radically-s-finite": "radically S-finite",
}


def display_error_message(
    title: str,
    message: str,
    details: Optional[str] = None,
    stream: Optional[TextIO] = None,
) -> None:
    """
    Write a titled error to stderr and log it.

    Args:
        title: Error title to display
        message: Main error message
        details: Optional extra lines (for example a product chain)
        stream: Output stream; stderr when omitted
    """
    stream = stream or sys.stderr
    print(f"error: {title}: {message}", file=stream)
    if details:
        for line in details.splitlines():
            print(f"  {line}", file=stream)

    logger.error(f"{title}: {message}" + (f" | Details: {details}" if details else ""))


def display_parse_error(error: Exception, stream: Optional[TextIO] = None) -> None:
    display_error_message("Parse Error", str(error), stream=stream)


def display_validation_error(error: Exception, stream: Optional[TextIO] = None) -> None:
    """Validation errors, with the product chain when a closure reached zero."""
    chain = getattr(error, "chain", None)
    details = "\n".join(chain) if chain else None
    display_error_message("Validation Error", str(error), details=details, stream=stream)


def predicate_label(predicate: str) -> str:
    """Human-readable predicate name: ``s-primary`` becomes ``S-primary``."""
    if predicate in _SPECIAL_NAMES:
        return _SPECIAL_NAMES[predicate]
    return "S-" + predicate[2:] if predicate.startswith("s-") else predicate


def _jsonable(report: Any) -> Any:
    if isinstance(report, BaseModel):
        return report.model_dump(mode="json")
    if isinstance(report, list):
        return [_jsonable(r) for r in report]
    if isinstance(report, dict):
        return {k: _jsonable(v) for k, v in report.items()}
    return report


def _certificate_lines(certificate: Certificate) -> List[str]:
    line = f"{predicate_label(certificate.predicate)}: {yes_no(certificate.verdict)}"
    extras = []
    if certificate.verdict and certificate.witness is not None:
        extras.append(f"witness s={certificate.witness}")
    witness_ideal = getattr(certificate, "witness_ideal", None)
    if certificate.verdict and witness_ideal is not None:
        extras.append(f"J={witness_ideal}")
    exponent = getattr(certificate, "exponent", None)
    if certificate.verdict and exponent is not None:
        extras.append(f"n={exponent}")
    if not certificate.verdict and certificate.counterexample:
        extras.append("counterexample " + ", ".join(map(str, certificate.counterexample)))
    if extras:
        line += f" ({'; '.join(extras)})"
    lines = [line]
    refutations = certificate.details.get("refutations")
    if refutations:
        lines.append(f"  {len(refutations)} candidate witnesses refuted")
    return lines


def _suite_lines(report: Dict[str, Any]) -> List[str]:
    status = report.get("status") or ("fail" if report["verdict"] == "fail" else
                                      "vacuous" if report["vacuous"] else "pass")
    lines = [
        f"{report['suite']}: {status.upper()} {report['instances']} instances, "
        f"{report['not_applicable']} not applicable, "
        f"{report['counterexample_count']} counterexamples ({report['wall_time']:.2f}s)"
    ]
    for cx in report["counterexamples"]:
        lines.append(f"  [{cx['property']}] {cx['message']}")
    return lines


def render_report(report: Any, mode: str = "text") -> str:
    """
    Render a certificate, suite report, list of suite reports or plain document.

    Args:
        report: Pydantic model, list of models, or a JSON-ready dict
        mode: ``text`` (stable line-oriented) or ``json`` (one document)

    Returns:
        The rendered output, without a trailing newline
    """
    if mode == "json":
        return dump_json(_jsonable(report))

    if isinstance(report, Certificate):
        return "\n".join(_certificate_lines(report))
    if isinstance(report, list) and all(hasattr(r, "suite") for r in report):
        lines: List[str] = []
        for r in report:
            lines.extend(_suite_lines({**r.model_dump(mode="json"), "status": r.status}))
        failed = sum(1 for r in report if r.status != "pass")
        lines.append(f"{len(report)} suites, {failed} not passing")
        return "\n".join(lines)
    if hasattr(report, "suite"):
        return "\n".join(_suite_lines({**report.model_dump(mode="json"), "status": report.status}))
    if isinstance(report, BaseModel):
        report = report.model_dump(mode="json")
    if isinstance(report, dict):
        return "\n".join(f"{key}: {value}" for key, value in report.items())
    return str(report)
