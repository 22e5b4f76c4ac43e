import json
from pathlib import Path

import jsonschema
import pytest

from dscodes import cli

SCHEMA = json.loads(
    (Path(__file__).resolve().parents[1] / "src/dscodes/schemas/output.schema.json")
    .read_text()
)


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMA)
    return code, payload, err


def test_field_command(capsys):
    code, payload, _ = run_json(capsys, "field", "--p", "3", "--m", "2")
    assert code == 0
    assert payload["field"]["q"] == 9
    assert payload["field"]["modulus"] == [1, 0, 1]


def test_field_honors_modulus_override(capsys):
    code, payload, _ = run_json(
        capsys, "field", "--p", "2", "--m", "3", "--field-poly", "1,1,0,1"
    )
    assert code == 0
    assert payload["field"]["modulus"] == [1, 1, 0, 1]


def test_code_command_cubic_example(capsys):
    code, payload, _ = run_json(capsys, "code", "--p", "2", "--m", "5", "--set", "trcubic")
    assert code == 0
    c = payload["code"]
    assert (c["n"], c["k"]) == (11, 5)
    assert c["enumerator"] == "1+10z^4+16z^6+5z^8"
    assert c["dual"] == {"n_minus_k": 6, "d": 3}
    assert c["pless_ok"] is True


def test_verify_match_exits_zero(capsys):
    code, payload, _ = run_json(capsys, "verify", "--claim", "thm5", "--m", "6")
    assert code == 0
    assert payload["report"]["verdict"] == "match"


def test_verify_hypothesis_not_met_exits_one(capsys):
    code, payload, _ = run_json(capsys, "verify", "--claim", "thm4", "--m", "4")
    assert code == 1
    assert payload["report"]["verdict"] == "hypothesis-not-met"


def test_verify_mismatch_exits_two(capsys):
    code, payload, _ = run_json(
        capsys, "verify", "--claim", "cor4even", "--p", "3", "--m", "2",
        "--set", "qf:1,0,1",
    )
    assert code == 2
    assert payload["report"]["verdict"] == "mismatch"
    assert payload["report"]["first_diff"]["w"] == 4


def test_usage_errors_exit_three(capsys):
    for argv in (
        ["verify", "--claim", "nosuch", "--m", "5"],
        ["code", "--p", "2", "--m", "4", "--set", "nosuch"],
        ["code", "--p", "2", "--m", "40", "--set", "simplex"],
        ["verify", "--m", "5"],
        ["ssreport", "--m", "6", "--set", "trcubic", "--format", "csv"],
        ["nosuchcommand"],
        ["code", "--p", "2", "--m", "4", "--set", "simplex", "--format", "bogus"],
    ):
        code, out, err = run(capsys, *argv)
        assert code == 3, argv
        assert err != ""


def test_outputs_are_byte_identical(capsys):
    argv = ("scan", "--claim", "cor2", "--p", "3", "--m", "2,3")
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2


def test_property_claim_is_seeded_and_deterministic(capsys):
    argv = ("verify", "--claim", "thm1prop", "--p", "3", "--m", "2")
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    jsonschema.validate(payload, SCHEMA)
    assert payload["report"]["all_matched"] is True
    code3, out3, _ = run(capsys, *argv, "--seed", "999")
    assert code3 == 0


def test_scan_exit_codes(capsys):
    code, payload, _ = run_json(capsys, "scan", "--claim", "thm4", "--m", "5,7")
    assert code == 0
    code, payload, _ = run_json(capsys, "scan", "--claim", "thm4", "--m", "3..7")
    assert code == 1  # m = 3 fails the floor hypothesis
    code, payload, _ = run_json(
        capsys, "scan", "--claim", "cor4even", "--p", "3", "--m", "2"
    )
    assert code == 2  # the 4-to-1 form mismatch is in range
    assert payload["summary"]["mismatch"] >= 1


def test_csv_output_shape(capsys):
    code, out, _ = run(
        capsys, "verify", "--claim", "thm5", "--m", "6", "--format", "csv"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "claim,p,m,n,k,w,A_w,verdict"
    assert lines[1] == "thm5,2,6,31,6,12,10,match"
    assert len(lines) == 4  # header + three weights


def test_csv_row_for_unmet_hypothesis(capsys):
    code, out, _ = run(
        capsys, "scan", "--claim", "thm4", "--m", "3", "--format", "csv"
    )
    assert code == 1
    lines = out.splitlines()
    assert lines[1].startswith("thm4,2,3,,,,,")


def test_text_format_smoke(capsys):
    for argv in (
        ("field", "--p", "2", "--m", "4"),
        ("code", "--p", "2", "--m", "5", "--set", "trcubic"),
        ("verify", "--claim", "thm3", "--h", "1"),
        ("scan", "--claim", "thm5", "--m", "4..8"),
        ("expsum", "--m", "6", "--a", "3", "--b", "5"),
        ("walsh", "--m", "5"),
        ("ssreport", "--m", "6", "--set", "trcubic"),
    ):
        code, out, _ = run(capsys, *argv, "--format", "text")
        assert code == 0, argv
        assert out.strip(), argv


def test_expsum_agrees_with_direct(capsys):
    code, payload, _ = run_json(capsys, "expsum", "--m", "7", "--a", "1", "--b", "1")
    assert code == 0
    assert payload["direct"] == payload["closed_form"] == 16
    code, payload, _ = run_json(capsys, "expsum", "--m", "5", "--a", "3", "--b", "7")
    assert code == 0
    assert payload["closed_form"] is None and payload["agree"] is None


def test_walsh_reports_semibent(capsys):
    code, payload, _ = run_json(capsys, "walsh", "--m", "7")
    assert code == 0
    assert payload["semibent"] is True
    total = sum(count for _, count in payload["value_histogram"])
    assert total == 1 << 7


def test_walsh_accepts_truth_table_file(capsys, tmp_path):
    path = tmp_path / "table.txt"
    path.write_text("1111011110111100\n")
    code, payload, _ = run_json(
        capsys, "walsh", "--m", "4", "--set", f"bool:{path}"
    )
    assert code == 0
    assert payload["n_f"] == 12


def test_truth_table_binary_and_hex_agree(capsys, tmp_path):
    bits = "1111011110111100"
    p1 = tmp_path / "bin.txt"
    p1.write_text(bits + "\n")
    p2 = tmp_path / "hex.txt"
    p2.write_text(format(int(bits, 2), "x") + "\n")
    _, out1, _ = run(capsys, "walsh", "--m", "4", "--set", f"bool:{p1}")
    _, out2, _ = run(capsys, "walsh", "--m", "4", "--set", f"bool:{p2}")
    assert out1 == out2


def test_truth_table_errors(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("xyz\n")
    code, _, err = run(capsys, "walsh", "--m", "4", "--set", f"bool:{path}")
    assert code == 3
    code, _, err = run(capsys, "walsh", "--m", "4", "--set", "bool:/nonexistent")
    assert code == 3


def test_ssreport_cubic_m8(capsys):
    code, payload, _ = run_json(capsys, "ssreport", "--m", "8", "--set", "trcubic")
    assert code == 0
    assert payload["ratio"]["raw_ratio"] == [48, 64]
    assert payload["ratio"]["passes"] is True
    assert payload["minimal"]["all_minimal"] is True
    assert payload["minimal_skipped"] is None


def test_thm2_requires_room_for_second_half(capsys):
    code, _, err = run(
        capsys, "verify", "--claim", "thm2", "--p", "2", "--m", "4",
        "--set", "simplex",
    )
    assert code == 3
    assert "covers every unit" in err


def test_recursive_complement_selector(capsys):
    code, payload, _ = run_json(
        capsys, "code", "--p", "2", "--m", "4", "--set", "complement:complement:trcubic"
    )
    assert code == 0
    inner, _, _ = run_json(capsys, "code", "--p", "2", "--m", "4", "--set", "trcubic")


def test_max_q_is_checked_before_field_build(capsys):
    code, _, err = run(
        capsys, "field", "--p", "2", "--m", "21", "--max-q", "1048576"
    )
    assert code == 3
    assert "exceeds" in err
