import json

import pytest

from ppring.cli import (ParseError, RunConfig, UnknownName, build_parser, main,
                        parse_group_spec, run)
from ppring.grp import OrderCapExceeded


class TestParseGroupSpec:
    def test_named(self):
        assert parse_group_spec("C6").order == 6
        assert parse_group_spec("S3").order == 6
        assert parse_group_spec("S4").order == 24
        assert parse_group_spec("D8").order == 8
        assert parse_group_spec("Q8").order == 8
        assert parse_group_spec("A4").order == 12
        assert parse_group_spec("V4").order == 4

    def test_products(self):
        assert parse_group_spec("C2xC2").order == 4
        assert parse_group_spec("C2xC3").order == 6
        assert parse_group_spec("C2xC2xC2").order == 8

    def test_json_name(self):
        assert parse_group_spec('{"name": "C6"}').order == 6

    def test_json_generators(self):
        G = parse_group_spec('{"degree": 3, "generators": [[[0, 1, 2]]]}')
        assert G.order == 3

    def test_unknown_name(self):
        with pytest.raises(UnknownName):
            parse_group_spec("E8")

    def test_bad_json(self):
        with pytest.raises(ParseError):
            parse_group_spec("{not json")

    def test_cap(self):
        with pytest.raises(OrderCapExceeded):
            parse_group_spec("S5", max_order=100)

    def test_symmetric_bound(self):
        with pytest.raises(UnknownName):
            parse_group_spec("S6")


class TestCommands:
    def test_pairs_s3(self):
        code, text = run(RunConfig(command="pairs", group="S3", p=3, fmt="json"))
        assert code == 0
        report = json.loads(text)
        assert len(report["pairs"]) == 4

    def test_lattice_s3(self):
        code, text = run(RunConfig(command="lattice", group="S3", fmt="json"))
        assert code == 0
        report = json.loads(text)
        assert report["subgroup_count"] == 6

    def test_idempotents_c2(self):
        code, text = run(RunConfig(command="idempotents", group="C2", p=2, fmt="json"))
        assert code == 0
        report = json.loads(text)
        assert len(report["idempotents"]) == 2
        assert all(r["delta_ok"] and r["routes_agree"]
                   for r in report["idempotents"])

    def test_verify_c2_p5(self):
        code, text = run(RunConfig(command="verify", group="C2", p=5, fmt="json"))
        assert code == 0
        report = json.loads(text)
        assert report["all_ok"] and report["failed"] == 0

    def test_oracle_check(self):
        code, text = run(RunConfig(command="oracle-check", group="S3", p=3,
                                   fmt="json", samples=5, seed=3))
        assert code == 0
        assert json.loads(text)["all_agree"]

    def test_burnside_csv(self):
        code, text = run(RunConfig(command="burnside", group="S3", fmt="csv"))
        assert code == 0
        lines = text.strip().splitlines()
        assert lines[0].startswith("transitive_set")
        assert len(lines) == 5  # header + 4 subgroup classes

    def test_species_table_csv(self):
        code, text = run(RunConfig(command="species-table", group="S3", p=3,
                                   fmt="csv"))
        assert code == 0
        assert "(|P|=3" in text.splitlines()[0]

    def test_determinism(self):
        config = RunConfig(command="verify", group="S3", p=2, fmt="json")
        assert run(config) == run(config)
        config2 = RunConfig(command="oracle-check", group="C6", p=2, fmt="json",
                            samples=6, seed=11)
        assert run(config2) == run(config2)

    def test_usage_error_exit_2(self):
        code, text = run(RunConfig(command="pairs", group="E8"))
        assert code == 2
        assert "error" in text

    def test_invalid_p_rejected(self):
        with pytest.raises(ValueError):
            RunConfig(command="pairs", group="C2", p=4)


class TestMain:
    def test_main_writes_out_file(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        code = main(["pairs", "--group", "C2", "--p", "2",
                     "--format", "json", "--out", str(out)])
        assert code == 0
        report = json.loads(out.read_text())
        assert len(report["pairs"]) == 2
        assert capsys.readouterr().out == ""

    def test_main_stdout_and_exit_codes(self, capsys):
        assert main(["verify", "--group", "C3", "--p", "2"]) == 0
        assert "all_ok: True" in capsys.readouterr().out
        assert main(["pairs", "--group", "nope"]) == 2

    def test_parser_rejects_unknown_command(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["frobnicate", "--group", "C2"])
