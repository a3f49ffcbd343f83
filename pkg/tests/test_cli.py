"""
Tests for the command line, driven by tests/golden/cli_examples.yaml.
"""

import json
import logging
from pathlib import Path

import jsonschema
import pytest
import yaml

from laskerlab import cli
from laskerlab.cli import main
from laskerlab.components.corpus import CorpusEntry
from laskerlab.components.theorem_lab import Predicates, suite_intersection
from laskerlab.core.ideals import trivial_mset
from laskerlab.utils.errors import MinimalizationError, ParseError
from tests.conftest import PROJECT_ROOT, SCHEMA_DIR, flipped_s_primary, zmod

GOLDEN = yaml.safe_load((Path(__file__).parent / "golden" / "cli_examples.yaml").read_text())


@pytest.fixture(autouse=True)
def project_root(monkeypatch):
    """Run from the project root so relative example paths and lab.config.yaml resolve."""
    monkeypatch.chdir(PROJECT_ROOT)
    monkeypatch.delenv("LASKERLAB_CONFIG", raising=False)
    monkeypatch.delenv("LASKERLAB_SIZE_CAP", raising=False)
    for name in ("LASKERLAB_LOG_LEVEL", "LASKERLAB_LOG_FORMAT", "LASKERLAB_APP_NAME"):
        monkeypatch.delenv(name, raising=False)


def load_schema(name):
    return json.loads((SCHEMA_DIR / name).read_text())


@pytest.mark.parametrize("case", GOLDEN, ids=[case["name"] for case in GOLDEN])
def test_golden(case, capsys):
    code = main(list(case["argv"]))
    out = capsys.readouterr().out

    assert code == case["exit"], out
    if "stdout" in case:
        assert out.rstrip("\n") == case["stdout"]
    for fragment in case.get("contains", []):
        assert fragment in out
    if "schema" in case:
        jsonschema.validate(json.loads(out), load_schema(case["schema"]))


class TestErrors:
    def test_validation_error_goes_to_stderr(self, capsys):
        code = main(["check", "s-primary", "--ring", '{"kind": "zmod", "n": 8}', "--mset", '{"gens": [2]}',
                     "--ideal", '{"gens": [0]}'])
        captured = capsys.readouterr()
        assert code == 65
        assert captured.out == ""
        assert "error: Validation Error" in captured.err
        # the product chain that reached zero
        assert "4·2 = 0" in captured.err

    def test_missing_ring(self, capsys):
        assert main(["ring-info"]) == 65
        assert "ring is required" in capsys.readouterr().err


class TestReplay:
    def test_counterexample_file(self, tmp_path, capsys):
        ring = zmod(4)
        mutated = Predicates(is_s_primary=flipped_s_primary)
        counterexample = suite_intersection([CorpusEntry(ring, trivial_mset(ring))], mutated).counterexamples[0]
        path = tmp_path / "counterexample.json"
        path.write_text(counterexample.model_dump_json())

        # the stock predicates do not reproduce a failure found under a mutated one
        assert main(["replay", str(path), "--json"]) == 0
        assert json.loads(capsys.readouterr().out) == {
            "property": "intersection.primary-meet",
            "reproduced": False,
        }

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"property": ')
        assert main(["replay", str(path)]) == 64

    def test_missing_file(self, tmp_path):
        assert main(["replay", str(tmp_path / "absent.json")]) == 64


class TestVerify:
    def test_small_corpus_file(self, capsys):
        code = main(["verify", "degeneration", "--corpus-file", "config_examples/small_corpus.yaml", "--json"])
        document = json.loads(capsys.readouterr().out)
        jsonschema.validate(document, load_schema("verify_report.schema.json"))
        assert code == 0
        assert document["status"] == "pass"
        assert document["suites"][0]["instances"] > 0


class TestExitCodes:
    @pytest.mark.parametrize(
        "error, code",
        [
            (ParseError("bad document"), 64),
            (MinimalizationError("no common saturating element"), 65),
            (KeyboardInterrupt(), 130),
            (RuntimeError("boom"), 70),
        ],
    )
    def test_exceptions_map_to_exit_codes(self, monkeypatch, error, code):
        def fail(args, config):
            raise error

        monkeypatch.setitem(cli.COMMANDS, "corpus", fail)
        assert main(["corpus", "--corpus", "empty"]) == code


class TestLogging:
    def test_environment_level_applies(self, monkeypatch, capsys):
        monkeypatch.setenv("LASKERLAB_LOG_LEVEL", "INFO")
        assert main(["corpus", "--corpus", "empty", "--json"]) == 0
        assert logging.getLogger("laskerlab").level == logging.INFO
        assert json.loads(capsys.readouterr().out)["pairs"] == 0

    def test_verbose_beats_environment(self, monkeypatch, capsys):
        monkeypatch.setenv("LASKERLAB_LOG_LEVEL", "ERROR")
        assert main(["corpus", "--corpus", "empty", "--verbose"]) == 0
        assert logging.getLogger("laskerlab").level == logging.DEBUG
