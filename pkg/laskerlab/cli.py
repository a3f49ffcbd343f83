"""
laskerlab Command Line

Parses ring, ideal and multiplicative-set documents, dispatches predicates,
decompositions and theorem suites, and prints text or a single JSON document.

Exit codes: 0 success, 1 mathematical failure (a suite found a counterexample,
no decomposition exists, a replayed failure reproduces), 2 vacuous suite,
64 malformed input or usage, 65 invalid input, 70 unexpected error, 130
interrupted.

Usage:
    laskerlab check s-irreducible --ring '{"kind":"integers"}' --mset '{"complement_of_prime":3}' --ideal '{"n":6}'
    laskerlab verify all --corpus small --json
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from laskerlab.components import predicates
from laskerlab.components.certificates import Certificate
from laskerlab.components.corpus import CorpusSpec, generate_corpus, named_corpus
from laskerlab.components.decompose import (
    Decomposition,
    colon_split_identity,
    decompose,
    is_nonnil_s_laskerian,
    is_s_laskerian,
    minimalize,
    parse_decomposition,
    validate_decomposition,
    verify_minimality,
)
from laskerlab.components.theorem_lab import SUITE_NAMES, Counterexample, replay_counterexample, run_all, run_suite
from laskerlab.core.constructions import construct_ring, is_reduced, nilradical
from laskerlab.core.ideals import (
    Ideal,
    MultiplicativeSet,
    enumerate_ideals,
    is_divided,
    parse_ideal,
    parse_mset,
    trivial_mset,
    unit_group,
)
from laskerlab.core.rings import RingHandle
from laskerlab.core.specs import ring_spec_document
from laskerlab.utils.config import load_lab_config
from laskerlab.utils.documents import parse_inline, read_document_file, resolve_document
from laskerlab.utils.error_display import (
    display_error_message,
    display_parse_error,
    display_validation_error,
    render_report,
)
from laskerlab.utils.errors import LaskerLabError, ParseError, ValidationError
from laskerlab.utils.logging_config import setup_container_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_VACUOUS = 2
EXIT_SOFTWARE = 70
EXIT_INTERRUPTED = 130


class LabArgumentParser(argparse.ArgumentParser):
    """Usage errors become ``ParseError`` so they share the exit-code path."""

    def error(self, message: str) -> None:
        raise ParseError(f"{self.prog}: {message}")


# -- argument parsing ---------------------------------------------------------------------

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="Lab configuration file (YAML)")
    common.add_argument("--json", action="store_true", help="Emit one JSON document")
    common.add_argument("--seed", type=int, help="Seed for sampled integer instances")
    common.add_argument("--size-cap", type=int, help="Largest finite ring to construct")
    common.add_argument("--verbose", "-v", action="store_true", help="Enable debug logging")
    return common


def _ring_options(parser: argparse.ArgumentParser, ideal: bool = False, mset: bool = False) -> None:
    parser.add_argument("--ring", help="Ring specification as inline JSON")
    parser.add_argument("--ring-file", type=Path, help="Ring specification file (JSON or YAML)")
    if ideal:
        parser.add_argument("--ideal", help="Ideal as inline JSON, e.g. '{\"gens\": [2]}' or '{\"n\": 6}'")
        parser.add_argument("--ideal-file", type=Path, help="Ideal document file")
    if mset:
        parser.add_argument("--mset", help="Multiplicative set as inline JSON; {1} when omitted")
        parser.add_argument("--mset-file", type=Path, help="Multiplicative set document file")


CHECKS = [
    "nonnil",
    "prime",
    "primary",
    "s-prime",
    "s-primary",
    "irreducible",
    "s-irreducible",
    "s-finite",
    "sft",
    "s-sft",
    "radically-s-finite",
    "divided",
    "s-noetherian-spectrum",
    "nonnil-s-laskerian",
    "s-laskerian",
    "nonnil-s-noetherian",
]

RING_LEVEL_CHECKS = {"s-noetherian-spectrum", "nonnil-s-laskerian", "s-laskerian", "nonnil-s-noetherian"}


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = LabArgumentParser(
        prog="laskerlab",
        description="S-primary decompositions and nonnil-S-Laskerian checks over finite rings and the integers",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s ring-info --ring '{"kind": "zmod", "n": 12}'
  %(prog)s check s-primary --ring '{"kind": "integers"}' --ideal '{"n": 6}' --mset '{"complement_of_prime": 3}'
  %(prog)s decompose --ring '{"kind": "zmod", "n": 12}' --ideal '{"gens": [0]}'
  %(prog)s verify all --corpus small
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=LabArgumentParser)

    p = sub.add_parser("ring-info", parents=[common], help="Size, nilradical, units and ideal count")
    _ring_options(p)

    p = sub.add_parser("enumerate-ideals", parents=[common], help="Every ideal of a finite ring in canonical order")
    _ring_options(p)

    p = sub.add_parser("check", parents=[common], help="Decide one predicate and print its certificate")
    p.add_argument("predicate", choices=CHECKS)
    _ring_options(p, ideal=True, mset=True)
    p.add_argument("--sub-ideal", help="Fixed sub-ideal F (sft, s-sft) or candidate J (radically-s-finite)")

    for name, help_text in (
        ("decompose", "Find an S-primary decomposition"),
        ("minimalize", "Turn a decomposition into a minimal one"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        _ring_options(p, ideal=True, mset=True)
        if name == "minimalize":
            p.add_argument("--decomposition", help="Decomposition document; searched when omitted")
            p.add_argument("--decomposition-file", type=Path)

    p = sub.add_parser("verify-minimality", parents=[common], help="Evaluate both minimality conditions")
    _ring_options(p, mset=True)
    p.add_argument("--decomposition", help="Decomposition document as inline JSON")
    p.add_argument("--decomposition-file", type=Path)

    p = sub.add_parser("colon-split", parents=[common], help="Check I = (I : s) ∩ (I + Rs)")
    _ring_options(p, ideal=True, mset=True)
    p.add_argument("--element", required=True, help="Element s as inline JSON")

    p = sub.add_parser("verify", parents=[common], help="Run a theorem suite, or all of them")
    p.add_argument("suite", choices=SUITE_NAMES + ["all"])
    p.add_argument("--corpus", default="default", help="Named corpus: default, small or empty")
    p.add_argument("--corpus-file", type=Path, help="Corpus specification file (YAML)")
    p.add_argument("--workers", type=int, help="Worker threads per suite")

    p = sub.add_parser("corpus", parents=[common], help="List the rings and multiplicative sets of a corpus")
    p.add_argument("--corpus", default="default")
    p.add_argument("--corpus-file", type=Path)

    p = sub.add_parser("replay", parents=[common], help="Re-run a recorded counterexample")
    p.add_argument("counterexample_file", type=Path)

    return parser


# -- input helpers --------------------------------------------------------------------------

def _ring(args: argparse.Namespace, config: Dict[str, Any]) -> RingHandle:
    document = resolve_document(args.ring, args.ring_file, "ring")
    size_cap = args.size_cap if args.size_cap is not None else config["rings"]["size_cap"]
    return construct_ring(document, size_cap=size_cap, axiom_check_limit=config["rings"]["axiom_check_limit"])


def _ideal(args: argparse.Namespace, ring: RingHandle) -> Ideal:
    return parse_ideal(ring, resolve_document(args.ideal, args.ideal_file, "ideal"))


def _mset(args: argparse.Namespace, ring: RingHandle) -> MultiplicativeSet:
    document = resolve_document(args.mset, args.mset_file, "multiplicative set", required=False)
    return trivial_mset(ring) if document is None else parse_mset(ring, document)


def _decomposition(args: argparse.Namespace, ring: RingHandle, required: bool = True) -> Optional[Decomposition]:
    document = resolve_document(args.decomposition, args.decomposition_file, "decomposition", required=required)
    return None if document is None else parse_decomposition(ring, document)


def _corpus(args: argparse.Namespace, config: Dict[str, Any]) -> CorpusSpec:
    overrides = {} if args.seed is None else {"seed": args.seed}
    if args.corpus_file is not None:
        document = read_document_file(args.corpus_file, "corpus")
        if not isinstance(document, dict):
            raise ValidationError("corpus files must hold a mapping")
        try:
            return CorpusSpec(**{**document, **overrides})
        except Exception as e:
            raise ValidationError(f"invalid corpus specification: {e}") from e
    if args.corpus == "default":
        return CorpusSpec.from_config(config, **overrides)
    spec = named_corpus(args.corpus)
    return spec.model_copy(update=overrides) if overrides else spec


def _emit(args: argparse.Namespace, document: Any, text: Optional[str] = None) -> None:
    if args.json:
        print(render_report(document, "json"))
    else:
        print(text if text is not None else render_report(document, "text"))


# -- subcommands ----------------------------------------------------------------------------

def cmd_ring_info(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    ring = _ring(args, config)
    document: Dict[str, Any] = {
        "kind": ring.kind,
        "ring_id": ring.ring_id,
        "size": ring.element_count,
        "spec": ring_spec_document(ring.spec),
    }
    if ring.is_finite:
        nil = nilradical(ring)
        document.update(
            reduced=is_reduced(ring),
            nilradical=nil.to_document(),
            nilradical_size=nil.size,
            units=unit_group(ring).size,
            ideals=len(enumerate_ideals(ring)),
        )
    else:
        document.update(reduced=True, nilradical={"n": 0})
    _emit(args, document)
    return EXIT_OK


def cmd_enumerate_ideals(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    ring = _ring(args, config)
    nil = nilradical(ring)
    rows = []
    for I in enumerate_ideals(ring):
        proper = I.is_proper
        rows.append(
            {
                "ideal": I.to_document(),
                "size": I.size,
                "proper": proper,
                "prime": proper and predicates.is_prime_ideal(I),
                "primary": proper and predicates.is_primary(I),
                "nonnil": I.mask & ~nil.mask != 0,
            }
        )
    document = {"ring_id": ring.ring_id, "count": len(rows), "ideals": rows}
    lines = [
        f"{i + 1:>3}. {parse_ideal(ring, row['ideal'])} |I|={row['size']}"
        + "".join(f" {flag}" for flag in ("prime", "primary", "nonnil") if row[flag])
        for i, row in enumerate(rows)
    ]
    lines.append(f"{len(rows)} ideals")
    _emit(args, document, "\n".join(lines))
    return EXIT_OK


def _bool_certificate(predicate: str, verdict: bool, universe: str) -> Certificate:
    return Certificate(predicate=predicate, verdict=verdict, universe=universe)


def _check(args: argparse.Namespace, ring: RingHandle) -> Certificate:
    name = args.predicate
    if name in RING_LEVEL_CHECKS:
        S = _mset(args, ring)
        if name == "s-noetherian-spectrum":
            return predicates.has_s_noetherian_spectrum(ring, S)
        if name == "nonnil-s-noetherian":
            return predicates.is_nonnil_s_noetherian(ring, S)
        if name == "nonnil-s-laskerian":
            return is_nonnil_s_laskerian(ring, S).to_certificate(name)
        return is_s_laskerian(ring, S).to_certificate(name)

    I = _ideal(args, ring)
    sub_ideal = parse_ideal(ring, parse_inline(args.sub_ideal, "sub-ideal")) if args.sub_ideal else None
    classical: Dict[str, Callable[[Ideal], Certificate]] = {
        "prime": predicates.prime_certificate,
        "primary": predicates.primary_certificate,
        "irreducible": predicates.irreducible_certificate,
    }
    if name in classical:
        return classical[name](I)
    if name == "nonnil":
        return _bool_certificate(name, predicates.is_nonnil(I), "I against Nil(R)")
    if name == "divided":
        return _bool_certificate(name, is_divided(I), "principal ideals aR with a outside I")
    if name == "sft":
        return predicates.is_sft(I, sub_ideal)

    S = _mset(args, ring)
    relative: Dict[str, Callable[[], Certificate]] = {
        "s-prime": lambda: predicates.is_s_prime(I, S),
        "s-primary": lambda: predicates.is_s_primary(I, S),
        "s-irreducible": lambda: predicates.is_s_irreducible(I, S),
        "s-finite": lambda: predicates.is_s_finite(I, S),
        "s-sft": lambda: predicates.is_s_sft(I, S, sub_ideal),
        "radically-s-finite": lambda: predicates.is_radically_s_finite(I, S, sub_ideal),
    }
    return relative[name]()


def cmd_check(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    ring = _ring(args, config)
    certificate = _check(args, ring)
    logger.info(f"check {args.predicate}: {certificate.verdict}")
    _emit(args, certificate)
    return EXIT_OK


def _decomposition_text(d: Decomposition) -> str:
    lines = [f"{d.target} = {d}"]
    for i, c in enumerate(d.components, start=1):
        lines.append(f"  Q{i} = {c.primary}  rad = {c.radical}  s = {c.witness}")
    if d.minimality is not None:
        lines.append(f"  minimal: {d.minimality.minimal}")
    return "\n".join(lines)


def cmd_decompose(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    ring = _ring(args, config)
    I, S = _ideal(args, ring), _mset(args, ring)
    d = decompose(I, S)
    if d is None:
        _emit(args, {"target": I.to_document(), "components": None}, f"{I}: no S-primary decomposition over {S}")
        return EXIT_FAILURE
    _emit(args, d.to_document(), _decomposition_text(d))
    return EXIT_OK


def cmd_minimalize(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    ring = _ring(args, config)
    I, S = _ideal(args, ring), _mset(args, ring)
    d = _decomposition(args, ring, required=False) or decompose(I, S)
    if d is None:
        _emit(args, {"target": I.to_document(), "components": None}, f"{I}: no S-primary decomposition over {S}")
        return EXIT_FAILURE
    result = minimalize(I, S, d)
    _emit(args, result.to_document(), _decomposition_text(result))
    return EXIT_OK


def cmd_verify_minimality(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    ring = _ring(args, config)
    S = _mset(args, ring)
    d = _decomposition(args, ring)
    validate_decomposition(d, S)
    report = verify_minimality(d, S)
    _emit(args, report)
    return EXIT_OK


def cmd_colon_split(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    ring = _ring(args, config)
    I = _ideal(args, ring)
    S = _mset(args, ring) if (args.mset or args.mset_file) else None
    s = ring.element(parse_inline(args.element, "element"))
    left, right, holds = colon_split_identity(I, s, S)
    document = {"colon": left.to_document(), "sum": right.to_document(), "holds": holds}
    _emit(args, document, f"({I} : {s}) = {left}\n{I} + R{s} = {right}\nidentity holds: {holds}")
    return EXIT_OK


def _suite_exit(statuses: Sequence[str]) -> int:
    if "fail" in statuses:
        return EXIT_FAILURE
    if "vacuous" in statuses:
        return EXIT_VACUOUS
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    # the integer and boolean suites bring their own instances
    corpus = [] if args.suite in ("integers", "boolean") else generate_corpus(_corpus(args, config))
    workers = args.workers or config["suites"]["workers"]
    seed = args.seed if args.seed is not None else config["corpus"]["seed"]
    bound = config["suites"]["integer_bound"]
    if args.suite == "all":
        reports = run_all(corpus, workers=workers, seed=seed, integer_bound=bound)
    else:
        reports = [run_suite(args.suite, corpus, workers=workers, seed=seed, integer_bound=bound)]
    statuses = [r.status for r in reports]
    code = _suite_exit(statuses)
    overall = {EXIT_OK: "pass", EXIT_FAILURE: "fail", EXIT_VACUOUS: "vacuous"}[code]
    if args.json:
        suites = [{**r.model_dump(mode="json"), "status": r.status} for r in reports]
        print(render_report({"status": overall, "suites": suites}, "json"))
    else:
        print(render_report(reports, "text"))
    return code


def cmd_corpus(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    entries = generate_corpus(_corpus(args, config))
    rings: Dict[str, Dict[str, Any]] = {}
    for entry in entries:
        row = rings.setdefault(
            entry.ring.ring_id,
            {"ring": ring_spec_document(entry.ring.spec), "size": entry.ring.size, "msets": []},
        )
        row["msets"].append(entry.mset.to_document())
    document = {"rings": len(rings), "pairs": len(entries), "entries": list(rings.values())}
    lines = [f"{row['ring']} |R|={row['size']} sets={len(row['msets'])}" for row in rings.values()]
    lines.append(f"{len(rings)} rings, {len(entries)} (ring, S) pairs")
    _emit(args, document, "\n".join(lines))
    return EXIT_OK


def cmd_replay(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    document = read_document_file(args.counterexample_file, "counterexample")
    try:
        counterexample = Counterexample.model_validate(document)
    except Exception as e:
        raise ValidationError(f"invalid counterexample document: {e}") from e
    reproduced = replay_counterexample(counterexample)
    _emit(
        args,
        {"property": counterexample.property, "reproduced": reproduced},
        f"{counterexample.property}: {'reproduced' if reproduced else 'not reproduced'}",
    )
    return EXIT_FAILURE if reproduced else EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, Dict[str, Any]], int]] = {
    "ring-info": cmd_ring_info,
    "enumerate-ideals": cmd_enumerate_ideals,
    "check": cmd_check,
    "decompose": cmd_decompose,
    "minimalize": cmd_minimalize,
    "verify-minimality": cmd_verify_minimality,
    "colon-split": cmd_colon_split,
    "verify": cmd_verify,
    "corpus": cmd_corpus,
    "replay": cmd_replay,
}


def run(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv`` and run one subcommand; returns the exit code."""
    try:
        args = build_parser().parse_args(argv)
        config = load_lab_config(args.config)
        setup_container_logging(
            level=config["logging"]["level"],
            format_type=config["logging"]["format"],
            verbose=args.verbose,
        )
        return COMMANDS[args.command](args, config)
    except ParseError as e:
        display_parse_error(e)
        return e.exit_code
    except LaskerLabError as e:
        display_validation_error(e)
        return e.exit_code
    except KeyboardInterrupt:
        logger.info("Operation cancelled by user")
        return EXIT_INTERRUPTED
    except Exception as e:
        logger.exception(f"Unexpected error: {e}")
        display_error_message("Unexpected Error", str(e))
        return EXIT_SOFTWARE


def main(argv: Optional[List[str]] = None) -> int:
    """Console-script entry point."""
    code = run(argv)
    if argv is None:
        sys.exit(code)
    return code


if __name__ == "__main__":
    main()
