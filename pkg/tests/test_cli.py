"""The verification CLI: reports, config handling, exit codes."""

import json

import pytest

from orekit.report import (CheckResult, VerificationReport, emit_report,
                           PASS, FAIL, INCONCLUSIVE, SKIPPED, _plain)
from orekit.vericli import (ConfigError, SuiteConfig, parse_config_text,
                            apply_settings, load_config, build_parser,
                            run_suite, main, SUITE_NAMES)


def run_main(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_of(argv, capsys):
    code, out, err = run_main(argv, capsys)
    return code, json.loads(out), err


def zeroed(doc):
    doc = json.loads(json.dumps(doc))
    for c in doc["checks"]:
        c["ms"] = 0.0
    return doc


class TestReport:
    def test_plain_conversion(self):
        assert _plain({"a": (1, 2), "b": {3, 1}}) \
            == {"a": [1, 2], "b": [1, 3]}
        assert _plain(CheckResult("n", "a", PASS)) \
            == "CheckResult(name='n', anchor='a', status='pass', " \
               "witness=None, bound=None, ms=0.0)"

    def test_status_vocabulary(self):
        with pytest.raises(ValueError):
            CheckResult("n", "a", "maybe")
        for status in (PASS, FAIL, INCONCLUSIVE, SKIPPED):
            CheckResult("n", "a", status)

    def test_overall_fail_iff_any_fail(self):
        rep = VerificationReport(suite="s", params={})
        rep.add("one", "a", PASS)
        rep.add("two", "b", INCONCLUSIVE, witness="budget")
        assert rep.overall == PASS
        assert rep.warnings == 1
        rep.add("three", "c", FAIL)
        assert rep.overall == FAIL

    def test_run_times_the_check(self):
        rep = VerificationReport(suite="s", params={})
        rep.run("one", "a", lambda: (PASS, {"n": 3}))
        assert rep.checks[0].status == PASS
        assert rep.checks[0].witness == {"n": 3}
        assert rep.checks[0].ms >= 0

    def test_json_shape(self):
        rep = VerificationReport(suite="s", params={"ring": "zmod:4"})
        rep.add("one", "a", PASS, witness={"k": 1}, bound=4)
        doc = json.loads(rep.to_json())
        assert list(doc) == ["version", "suite", "params", "checks"]
        assert list(doc["checks"][0]) \
            == ["name", "anchor", "status", "witness", "bound", "ms"]

    def test_text_format(self):
        rep = VerificationReport(suite="s", params={"ring": "zmod:4"})
        rep.add("one", "a", PASS)
        text = rep.to_text()
        assert text.startswith("suite s")
        assert "[pass] one" in text and "overall: pass" in text
        assert emit_report(rep, "json").startswith("{")
        with pytest.raises(ValueError):
            emit_report(rep, "yaml")


class TestConfigFile:
    def test_parse_tokens(self):
        cfg = parse_config_text("# comment\nring=zmod:6  D=3\nseed=4\n")
        assert cfg == {"ring": "zmod:6", "D": "3", "seed": "4"}

    def test_aliases(self):
        cfg = apply_settings(SuiteConfig(),
                             parse_config_text("D=3 D1=1 D2=2 L=5"))
        assert (cfg.degree_bound, cfg.d_small, cfg.d_big, cfg.length) \
            == (3, 1, 2, 5)

    def test_bad_token_pins_line(self):
        with pytest.raises(ConfigError) as err:
            parse_config_text("ring=zmod:6\nbroken token\n")
        assert "line 2" in str(err.value)

    def test_apply_rejects_unknown_key(self):
        with pytest.raises(ConfigError):
            apply_settings(SuiteConfig(), {"whatkey": "1"})

    def test_apply_types(self):
        cfg = apply_settings(SuiteConfig(), {"seed": "7", "checks": "a,b",
                                             "ring": "zmod:6"})
        assert cfg.seed == 7 and cfg.checks == ("a", "b")
        with pytest.raises(ConfigError):
            apply_settings(SuiteConfig(), {"seed": "x"})


class TestParser:
    def test_suite_choices(self):
        parser = build_parser()
        args = parser.parse_args(["lattice", "--ring", "zmod:8"])
        assert args.suite == "lattice" and args.ring == "zmod:8"
        assert set(SUITE_NAMES) \
            == {"lattice", "laurent", "special", "family5", "examples"}

    def test_check_subset_flag(self):
        parser = build_parser()
        args = parser.parse_args(["family5", "--suite", "closure,central"])
        cfg = load_config(args)
        assert cfg.checks == ("closure", "central")

    def test_cli_overrides_config(self, tmp_path):
        path = tmp_path / "cfg.txt"
        path.write_text("ring=zmod:10 seed=3\n")
        parser = build_parser()
        args = parser.parse_args(["lattice", "--config", str(path),
                                  "--ring", "zmod:9"])
        cfg = load_config(args)
        assert cfg.ring == "zmod:9" and cfg.seed == 3


class TestSchema:
    def test_every_suite_emits_valid_schema(self, capsys):
        runs = [
            ["lattice", "--ring", "zmod:6"],
            ["laurent", "--ring", "zmod:4", "--degree-bound", "3"],
            ["special", "--ring", "zmod:4", "--degree-bound", "3"],
            ["family5", "--degree-bound", "5"],
            ["examples", "--example", "example3"],
        ]
        for argv in runs:
            code, doc, err = json_of(argv, capsys)
            assert code == 0, argv
            assert doc["version"] == "1" and doc["suite"] == argv[0]
            assert isinstance(doc["params"], dict) and doc["checks"]
            for check in doc["checks"]:
                assert check["status"] in ("pass", "fail",
                                           "bounded-inconclusive",
                                           "skipped-hypothesis")
                assert check["name"] and check["anchor"]
                assert check["ms"] >= 0

    def test_check_subset_respected(self, capsys):
        code, doc, _ = json_of(["family5", "--suite", "central"], capsys)
        assert code == 0
        assert [c["name"] for c in doc["checks"]] \
            == ["p^r-th variable powers are central"]

    def test_lattice_witness_values(self, capsys):
        code, doc, _ = json_of(["lattice", "--ring", "zmod:12"], capsys)
        assert code == 0
        by_name = {c["name"]: c for c in doc["checks"]}
        udim = by_name["uniform dimension by two routes"]
        assert udim["witness"]["udim"] == 2
        assert udim["witness"]["distinct_prime_factors"] == 2
        sing = by_name["singular ideal by annihilator exhaustion"]
        assert sing["witness"] == {"order": 2, "expected_order": 2}
        survey = by_name["nicely essential subring transfers"]
        assert survey["witness"]["proper_pairs"] == 0
        assert survey["witness"]["failures"] == 0


class TestDeterminism:
    def test_same_seed_same_json(self, capsys):
        runs = []
        for _ in range(2):
            code, doc, _ = json_of(["family5", "--seed", "11"], capsys)
            assert code == 0
            runs.append(zeroed(doc))
        assert runs[0] == runs[1]

    def test_examples_deterministic(self, capsys):
        a = zeroed(json_of(["examples", "--seed", "5"], capsys)[1])
        b = zeroed(json_of(["examples", "--seed", "5"], capsys)[1])
        assert a == b


class TestExitCodes:
    def test_corrupted_closure_fails(self, capsys):
        code, doc, err = json_of(
            ["family5", "--drop-term", "x0^2*x1^2"], capsys)
        assert code == 1
        bad = [c for c in doc["checks"] if c["status"] == "fail"]
        assert bad
        witness = bad[0]["witness"]
        assert witness["left"] and witness["right"]
        assert witness["offending"] == "x0^2*x1^2"

    def test_corrupted_lattice_span(self, capsys):
        code, doc, err = run_main(
            ["laurent", "--ring", "zmod:4", "--drop-term", "x0^2",
             "--suite", "closure"], capsys)
        assert code == 1

    def test_config_errors_exit_two(self, capsys, tmp_path):
        cases = [
            [],
            ["orbit"],
            ["lattice", "--ring", "nonsense:9"],
            ["special", "--carrier", "laurent"],
            ["laurent", "--drop-term", "%%%"],
        ]
        for argv in cases:
            if argv == ["orbit"]:
                with pytest.raises(SystemExit) as err:
                    main(argv)  # argparse rejects unknown positional
                assert err.value.code == 2
                capsys.readouterr()
                continue
            code, out, err = run_main(argv, capsys)
            assert code == 2, argv
            assert err.startswith("error:")

    def test_bad_config_file(self, capsys, tmp_path):
        path = tmp_path / "cfg.txt"
        path.write_text("whatkey=3\n")
        code, out, err = run_main(["lattice", "--config", str(path)], capsys)
        assert code == 2 and "whatkey" in err

    def test_missing_config_file(self, capsys, tmp_path):
        code, out, err = run_main(
            ["lattice", "--config", str(tmp_path / "nope.txt")], capsys)
        assert code == 2

    def test_out_writes_file(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code, out, err = run_main(
            ["examples", "--example", "example3", "--out", str(path)],
            capsys)
        assert code == 0 and out == ""
        doc = json.loads(path.read_text())
        assert doc["suite"] == "examples"

    def test_text_format_flag(self, capsys):
        code, out, err = run_main(
            ["examples", "--example", "example3", "--format", "text"],
            capsys)
        assert code == 0 and out.startswith("suite examples")


class TestRunSuite:
    def test_direct_dispatch(self):
        rep = run_suite(SuiteConfig(suite="examples", example="example3"))
        assert rep.suite == "examples" and rep.overall == "pass"

    def test_unknown_suite(self):
        with pytest.raises(ConfigError):
            run_suite(SuiteConfig(suite="orbit"))

    def test_pisano_check_present(self):
        rep = run_suite(SuiteConfig(suite="examples", example="example2"))
        names = [c.name for c in rep.checks]
        assert "conjugation orders match the matrix oracle" in names
