import json

import pytest

from flathg.cli import main
from flathg.hypergraph import parse_hypergraph

BOOL_LATTICE = json.dumps(
    {
        "elements": ["0", "1"],
        "add": [[0, 1], [1, 1]],
        "mul": [[0, 0], [0, 1]],
        "zero": 0,
    }
)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExitCodes:
    def test_holding_identity_exits_zero(self, capsys):
        code, out, _ = run(capsys, ["check", "builtin:sc_abc", "eq3.1"])
        assert code == 0
        assert out == "holds\n"

    def test_failing_identity_exits_one(self, capsys):
        code, out, _ = run(capsys, ["check", "builtin:s7", "eq4.4"])
        assert code == 1
        assert out == "fails: x1=1 x2=1 x3=1 x4=1 y1=1 y2=1 y3=1 y4=a\n"

    def test_no_subcommand_is_a_usage_error(self, capsys):
        code, _, err = run(capsys, [])
        assert code == 2
        assert "a subcommand is required" in err

    def test_unknown_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["nonsense"])
        assert exc.value.code == 2

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, ["validate", "/no/such/file.json"])
        assert code == 2
        assert "cannot read file: /no/such/file.json" in err

    def test_unknown_builtin_for_hypergraph_command(self, capsys):
        code, _, err = run(capsys, ["semiring", "builtin:s7"])
        assert code == 2
        assert "needs a hypergraph" in err

    def test_budget_exceeded_is_an_input_error(self, capsys, tmp_path):
        path = tmp_path / "bool.json"
        path.write_text(BOOL_LATTICE)
        code, _, err = run(
            capsys, ["--budget-evals", "3", "check", str(path), "x1*x2=x2*x1"]
        )
        assert code == 2
        assert "budget exceeded: 2^2 = 4 evaluations > 3" in err


class TestValidate:
    def test_families_are_valid(self, capsys):
        code, out, _ = run(capsys, ["validate", "family:fan:2"])
        assert code == 0
        assert out == "valid: 9 vertices, 5 edges\n"

    def test_violations_are_listed(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({
            "vertices": ["a", "b", "c", "d"],
            "edges": [["a", "b", "c"], ["a", "b", "d"]],
        }))
        code, out, _ = run(capsys, ["validate", str(path)])
        assert code == 1
        assert "linear" in out


class TestCheck:
    def test_identity_literal(self, capsys):
        code, out, _ = run(capsys, ["check", "builtin:sc_abc", "x1*x2=x2*x1"])
        assert code == 0
        assert out == "holds\n"

    def test_family_token_subject(self, capsys):
        code, out, _ = run(capsys, ["check", "family:nested:1", "eq4.2"])
        assert code == 0
        code, out, _ = run(capsys, ["check", "family:nested:2", "eq4.2"])
        assert code == 1

    def test_structured_record(self, capsys):
        code, out, _ = run(
            capsys, ["--format", "structured", "check", "builtin:sc_abc", "eq3.1"]
        )
        assert code == 0
        record = json.loads(out)
        assert record["verdict"] == "holds"
        assert record["method"] == "flat"
        assert record["counterexample"] is None

    def test_flags_work_after_the_subcommand_too(self, capsys):
        _, before, _ = run(
            capsys, ["--format", "structured", "check", "builtin:sc_abc", "eq3.1"]
        )
        _, after, _ = run(
            capsys, ["check", "builtin:sc_abc", "eq3.1", "--format", "structured"]
        )
        assert before == after


class TestColor:
    def test_default_reports_the_count(self, capsys):
        code, out, _ = run(capsys, ["color", "family:beam:1"])
        assert code == 0
        assert out == "strongly 3-colorable: 6 colorings\n"

    def test_robust_pass(self, capsys):
        code, out, _ = run(capsys, ["color", "family:n_cycle:4", "--robust"])
        assert code == 0
        assert out == "2-robust\n"

    def test_robust_failure_names_the_pair(self, capsys):
        code, out, _ = run(capsys, ["color", "family:nested:1", "--robust"])
        assert code == 1
        assert out == "not 2-robust: pair u1,u4 with colors 0,1 does not extend\n"

    def test_extend_verdicts(self, capsys):
        code, out, _ = run(
            capsys, ["color", "family:n_cycle:4", "--extend", "u1=0,u4=1"]
        )
        assert (code, out) == (0, "extends\n")
        code, out, _ = run(
            capsys, ["color", "family:beam:1", "--extend", "u1=0,u4=1"]
        )
        assert (code, out) == (1, "does not extend\n")

    def test_enumerate_lists_then_counts(self, capsys):
        code, out, _ = run(capsys, ["color", "family:beam:1", "--enumerate"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "u1=0 u2=1 u3=2 u4=0 u5=1 u6=2"
        assert lines[-1] == "6 strong colorings"
        assert len(lines) == 7


class TestWitness:
    def test_pipeline_report(self, capsys):
        code, out, _ = run(capsys, ["witness", "triangle_in_abcd"])
        assert code == 0
        assert "ok: yes" in out.splitlines()

    def test_unknown_kind(self, capsys):
        code, _, err = run(capsys, ["witness", "bogus"])
        assert code == 2
        assert "unknown witness kind" in err

    def test_beam_step_with_index(self, capsys):
        code, out, _ = run(capsys, ["witness", "beam_step", "2"])
        assert code == 0
        assert "quotient-size: 26" in out.splitlines()

    def test_index_must_be_numeric(self, capsys):
        code, _, err = run(capsys, ["witness", "beam_step", "two"])
        assert code == 2
        assert "index must be an integer" in err


class TestFamily:
    def test_output_is_parseable(self, capsys):
        code, out, _ = run(capsys, ["family", "nested", "1"])
        assert code == 0
        h = parse_hypergraph(out)
        assert len(h.vertices) == 6 and len(h.edges) == 3

    def test_unknown_kind(self, capsys):
        code, _, err = run(capsys, ["family", "wheel", "3"])
        assert code == 2

    def test_export_writes_the_same_document(self, capsys, tmp_path):
        target = tmp_path / "h.json"
        code, out, _ = run(
            capsys, ["family", "n_cycle", "4", "--export", str(target)]
        )
        assert code == 0
        assert json.loads(target.read_text()) == json.loads(out)


class TestSuite:
    def test_structured_output_is_byte_identical(self, capsys):
        code1, out1, _ = run(capsys, ["--format", "structured", "suite"])
        code2, out2, _ = run(capsys, ["suite", "--format", "structured"])
        assert code1 == code2 == 0
        assert out1 == out2

    def test_text_output_ends_with_the_tally(self, capsys):
        code, out, _ = run(capsys, ["suite"])
        assert code == 0
        lines = out.splitlines()
        assert all(line.startswith(("PASS", "FAIL")) for line in lines[:-1])
        assert lines[-1] == f"{len(lines) - 1} passed, 0 failed"
