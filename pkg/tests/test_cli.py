"""Command-line interface: grammars, output schemas, and exit codes."""

import json

from wittsums.cli import main


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out


def test_sum_worked_case(capsys):
    code, out = run(capsys, ["sum", "--ring", "2,2,1", "--f", "T"])
    assert code == 0
    data = json.loads(out)
    assert data["ring"] == {"p": 2, "l": 2, "m": 1}
    assert abs(data["sum"]["abs"] - 2**0.5) < 1e-9
    assert data["sum"]["coeffs"] == [1, 1]  # 1 + i


def test_sum_constants(capsys):
    code, out = run(capsys, ["sum", "--ring", "2,2,1", "--f", "0"])
    assert code == 0 and json.loads(out)["sum"]["abs"] == 2.0
    code, out = run(capsys, ["sum", "--ring", "3,2,1", "--f", "1"])
    assert code == 0 and abs(json.loads(out)["sum"]["abs"] - 3.0) < 1e-9


def test_lfun_worked_case(capsys):
    code, out = run(
        capsys, ["lfun", "--ring", "2,2,1", "--f-witt", "(x,0)", "--terms", "4"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["degree"] == 1
    assert data["coefficients"] == [[1, 0], [1, 1]]
    assert data["trailing_zero"] is True


def test_lfun_degenerate_exit4(capsys):
    code, _ = run(
        capsys, ["lfun", "--ring", "2,2,1", "--f-witt", "(x^2+x,0)", "--terms", "4"]
    )
    assert code == 4


def test_lfun_too_few_terms_exit2(capsys):
    code, _ = run(
        capsys, ["lfun", "--ring", "2,2,1", "--f-witt", "(x^3,0)", "--terms", "2"]
    )
    assert code == 2


def test_parse_error_exit2(capsys):
    code, _ = run(capsys, ["sum", "--ring", "2,2,1", "--f", "T +"])
    assert code == 2
    code, _ = run(capsys, ["sum", "--ring", "2,2", "--f", "T"])
    assert code == 2


def test_cap_exit3(capsys):
    code, _ = run(capsys, ["sum", "--ring", "2,2,30", "--f", "T"])
    assert code == 3


def test_bound_examples(capsys):
    code, out = run(capsys, ["bound", "kumar", "--ring", "2,2,3", "--degs", "3,1"])
    assert code == 0
    assert abs(json.loads(out)["bound"] - 5 * 2**1.5) < 1e-9
    code, out = run(
        capsys, ["bound", "cor52", "--p", "3", "--g", "1", "--poles", "1:2"]
    )
    assert code == 0
    assert json.loads(out)["coefficient"] == 13.0
    code, out = run(
        capsys,
        ["bound", "thm51", "--p", "3", "--l", "2", "--g", "1", "--poles", "1:2,5:1:1"],
    )
    assert code == 0
    assert json.loads(out)["coefficient"] == 13.0


def test_bound_precondition_exit4(capsys):
    code, _ = run(capsys, ["bound", "cor53", "--p", "2", "--g", "0", "--poles", "1:1"])
    assert code == 4


def test_witt_examples(capsys):
    code, out = run(
        capsys, ["witt", "add", "--p", "2", "--l", "2", "--over", "f2", "(1,0)", "(1,0)"]
    )
    assert code == 0 and out.strip() == "(0,1)"
    code, out = run(
        capsys, ["witt", "mul", "--p", "2", "--l", "2", "--over", "f2", "(1,1)", "(1,1)"]
    )
    assert code == 0 and out.strip() == "(1,0)"
    code, out = run(
        capsys, ["witt", "verschiebung", "--p", "2", "--l", "2", "--over", "f2", "(1,1)"]
    )
    assert code == 0 and out.strip() == "(0,1)"


def test_genus_command(capsys):
    code, out = run(capsys, ["genus", "--ring", "2,2,1", "--f-witt", "(x,0)"])
    assert code == 0
    data = json.loads(out)
    assert data["base_genus"] == 0 and data["genus"] >= 0


def test_verify_exit_codes(capsys):
    code, out = run(capsys, ["verify", "empty"])
    assert code == 0 and json.loads(out)["pass"] is True
    code, out = run(
        capsys, ["verify", "kumar", "--ring", "2,2,1", "--degs", "2,1"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["violations"] == 0 and data["instances"] > 0


def test_verify_csv_format(capsys):
    code, out = run(
        capsys,
        ["verify", "kumar", "--ring", "2,2,1", "--degs", "1,1", "--format", "csv"],
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "instance,abs,bound,ratio"
    assert len(lines) > 1


def test_deterministic_output(capsys):
    argv = ["lfun", "--ring", "2,2,1", "--f-witt", "(x^3,0)", "--terms", "7"]
    _, out1 = run(capsys, argv)
    _, out2 = run(capsys, argv)
    assert out1 == out2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out = run(
        capsys, ["sum", "--ring", "2,2,1", "--f", "T", "--out", str(target)]
    )
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["sum"]["coeffs"] == [1, 1]


def test_elliptic_curve_input(capsys):
    code, out = run(
        capsys,
        [
            "lfun", "--ring", "2,2,1", "--f-witt", "(y,0)",
            "--curve", "y^2+y=x^3", "--terms", "9",
        ],
    )
    assert code == 0
    data = json.loads(out)
    assert data["conductor_degree"] == 7
    assert data["degree"] == 7  # deg D + 2g - 2 with g = 1
    for r in data["inverse_root_moduli"]:
        assert abs(r - 2**0.5) < 1e-6 * 2


def test_singular_curve_exit4(capsys):
    code, _ = run(
        capsys,
        ["genus", "--ring", "2,2,1", "--f-witt", "(x,0)", "--curve", "y^2=x^3"],
    )
    assert code == 4
