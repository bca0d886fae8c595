import json

import pytest

from naq.main import main, parse_arguments


@pytest.fixture
def config_file(tmp_path):
    def write(data, name="session.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)
    return write


def test_parse_arguments():
    args = parse_arguments(["--debug", "eval", "s.json", "--expr", "x1*x2", "--out", "r.json"])
    assert (args.command, args.config, args.expr, args.out, args.debug) == (
        "eval", "s.json", "x1*x2", "r.json", True)
    with pytest.raises(SystemExit):
        parse_arguments(["eval", "s.json"])


def test_version(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["--version"])
    assert excinfo.value.code == 0
    assert capsys.readouterr().out.startswith("naq ")


def test_check_pass_config(config_file, capsys):
    assert main(["check", config_file({}), "--no-timing"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["summary"]["exit_code"] == 0
    assert "timing" not in report


def test_check_fail_config(config_file, capsys):
    path = config_file({"product": {"kind": "flexible"}, "checks": ["associative"]})
    assert main(["check", path]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["summary"]["failed"] == ["associative"]
    assert report["checks"][0]["witness"] is not None


@pytest.mark.parametrize("content", ['{"session": {"dimension": 0}}', "{not json", "[]"])
def test_check_malformed_config(tmp_path, capsys, content):
    path = tmp_path / "bad.json"
    path.write_text(content, encoding="utf-8")
    assert main(["check", str(path)]) == 2
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize("config", [
    {"bivector": {"kind": "constant", "matrix": [[0, "x1"], ["-x1", 0]]}},
    {"product": {"kind": "moyal", "gauge": [[{"coeff": 1, "alpha": ["a", 0]}]]}},
    {"product": {"kind": "moyal", "gauge": [[{"coeff": [1], "alpha": [1, 0]}]]}},
    {"checks": [["associative"]]},
    {"session": {"dimension": 2},
     "bivector": {"kind": "linear", "structure_constants": [[1, 2], [3]]}},
    {"session": {"dimension": 2},
     "bivector": {"kind": "linear", "structure_constants": [[[0, 0], [1, 0]], [[-1, 0]]]}},
], ids=["symbolic-constant", "gauge-index", "gauge-coefficient", "nested-check",
        "flat-constants", "ragged-constants"])
def test_check_malformed_sections_exit_with_two(config_file, capsys, config):
    assert main(["check", config_file(config)]) == 2
    assert capsys.readouterr().out == ""


def test_check_below_sandwich_order_is_inconclusive(config_file, capsys):
    path = config_file({"checks": ["sandwich"]})
    assert main(["check", path, "--no-timing"]) == 1
    summary = json.loads(capsys.readouterr().out)["summary"]
    assert summary["failed"] == []
    assert summary["inconclusive"] == ["sandwich"]
    assert summary["checks_holding"] == 0


def test_missing_config(tmp_path):
    assert main(["check", str(tmp_path / "absent.json")]) == 2


def test_precondition_error_exits_with_two(config_file):
    path = config_file({"session": {"dimension": 3}, "bivector": {"kind": "su2"}})
    assert main(["check", path]) == 2


def test_reports_are_byte_identical(config_file, capsys):
    path = config_file({"checks": ["associative", "unitality"],
                        "session": {"backstop_samples": 2, "corpus_seed": 5}})
    main(["check", path, "--no-timing"])
    first = capsys.readouterr().out
    main(["check", path, "--no-timing"])
    assert capsys.readouterr().out == first


def test_out_writes_a_file(config_file, tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["check", config_file({}), "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text(encoding="utf-8"))["checks"][0]["identity"] == "associative"


def test_jacobiator_command(config_file, capsys):
    path = config_file({"session": {"dimension": 6}, "bivector": {"kind": "monopole"}})
    assert main(["jacobiator", path]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["jacobiator"] == [{"indices": [4, 5, 6], "expr": "-3"}]
    assert document["jacobi"]["witness"]["indices"] == [4, 5, 6]


def test_eval_command(config_file, capsys):
    assert main(["eval", config_file({}), "--expr", "bracket(x1, x2)"]) == 0
    assert json.loads(capsys.readouterr().out)["coefficients"] == ["1", "0", "0"]


def test_eval_parse_error(config_file, capsys):
    assert main(["eval", config_file({}), "--expr", "x1 * (x2"]) == 2
    assert capsys.readouterr().out == ""


def test_log_file(config_file, tmp_path):
    log = tmp_path / "naq.log"
    assert main(["--log-file", str(log), "eval", config_file({}), "--expr", "x1"]) == 0
    assert "Starting naq eval" in log.read_text(encoding="utf-8")
