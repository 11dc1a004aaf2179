import json
from fractions import Fraction

import pytest

from valext.cli import (
    PolyParseError,
    format_element,
    main,
    parse_defining_poly,
    parse_element,
    parse_poly,
)
from valext.numberfield import NumberField


# -- parser -------------------------------------------------------------------


def test_parse_poly_basic():
    assert parse_poly("x^2+1", "x") == [Fraction(1), Fraction(0), Fraction(1)]
    assert parse_poly("x^3 - x - 1", "x") == [Fraction(-1), Fraction(-1), Fraction(0), Fraction(1)]
    assert parse_poly("2*x^2 + 3", "x") == [Fraction(3), Fraction(0), Fraction(2)]
    assert parse_poly("2x^2+3", "x") == [Fraction(3), Fraction(0), Fraction(2)]
    assert parse_poly("1/2*a^2 + a - 3", "a") == [Fraction(-3), Fraction(1), Fraction(1, 2)]
    assert parse_poly("-x + 5", "x") == [Fraction(5), Fraction(-1)]
    assert parse_poly("7", "x") == [Fraction(7)]
    assert parse_poly("x + x", "x") == [Fraction(0), Fraction(2)]


def test_parse_poly_whitespace_insensitive():
    assert parse_poly(" x ^ 2 + 1 ", "x") == parse_poly("x^2+1", "x")


def test_parse_poly_rejects_garbage():
    for bad in ["", "x^", "x**2", "^2", "x^2 + + 1", "y^2+1", "1/0", "3..5"]:
        with pytest.raises(PolyParseError):
            parse_poly(bad, "x")


def test_parse_defining_poly_constraints():
    with pytest.raises(PolyParseError):
        parse_defining_poly("2x^2+1")  # non-monic
    with pytest.raises(PolyParseError):
        parse_defining_poly("1/2*x^2+x")  # non-integer
    with pytest.raises(PolyParseError):
        parse_defining_poly("5")  # degree 0
    fld = parse_defining_poly("x^2+1")
    assert fld.n == 2


def test_parse_element_reduces():
    fld = NumberField([1, 0, 1])
    x = parse_element("a^2 + 1", fld)
    assert x.is_zero
    y = parse_element("1/2*a + 3", fld)
    assert y.coords == [Fraction(3), Fraction(1, 2)]


def test_format_element_round_trip():
    fld = NumberField([-1, -1, 0, 1])
    for coords in [[1, 0, 0], [0, 1, 0], [-3, Fraction(1, 2), 2], [0, 0, 0], [0, -1, 0]]:
        x = fld.element(coords)
        assert parse_element(format_element(x), fld) == x


# -- commands ----------------------------------------------------------------


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_extensions_json(capsys):
    code, out, err = run_cli(
        capsys, "extensions", "--prime", "5", "--poly", "x^2+1", "--output", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert [(e["e"], e["f"]) for e in data["extensions"]] == [(1, 1), (1, 1)]
    assert all(
        set(e) == {"index", "e", "f", "residue_field_dim", "prime_basis"}
        for e in data["extensions"]
    )


def test_extensions_text(capsys):
    code, out, err = run_cli(capsys, "extensions", "--prime", "2", "--poly", "x^2+1")
    assert code == 0
    assert "w_1: e=2 f=1" in out


def test_value_text_matches_spec_shape(capsys):
    code, out, err = run_cli(
        capsys, "value", "--prime", "2", "--poly", "x^2+1", "--elem", "a+1"
    )
    assert code == 0
    assert out.strip() == "w_1(a + 1) = 1/2"


def test_value_json_all_extensions(capsys):
    code, out, err = run_cli(
        capsys, "value", "--prime", "5", "--poly", "x^2+1", "--elem", "a+2",
        "--output", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert sorted(v["value"] for v in data["values"]) == ["0", "1"]


def test_value_extension_filter(capsys):
    code, out, err = run_cli(
        capsys, "value", "--prime", "5", "--poly", "x^2+1", "--elem", "a+2",
        "--extension", "1", "--output", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert len(data["values"]) == 1
    assert data["values"][0]["extension"] == 1


def test_residue_command(capsys):
    code, out, err = run_cli(
        capsys, "residue", "--prime", "5", "--poly", "x^2+1", "--elem", "a",
        "--extension", "1", "--output", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["residue"] in ([2], [3])


def test_residue_negative_value_is_math_error(capsys):
    code, out, err = run_cli(
        capsys, "residue", "--prime", "5", "--poly", "x^2+1", "--elem", "1/5",
        "--extension", "1", "--output", "json",
    )
    assert code == 1
    data = json.loads(out)
    assert data["error"]["type"] == "NegativeValue"


def test_math_error_text_goes_to_stderr(capsys):
    code, out, err = run_cli(
        capsys, "residue", "--prime", "5", "--poly", "x^2+1", "--elem", "1/5",
        "--extension", "1",
    )
    assert code == 1
    assert out == ""
    assert "NegativeValue" in err


def test_weak_approx_command(capsys):
    code, out, err = run_cli(
        capsys, "weak-approx", "--prime", "5", "--poly", "x^2+1",
        "--targets", "0;1", "--output", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["residues"] == [[0], [1]]


def test_approx_command(capsys):
    code, out, err = run_cli(
        capsys, "approx", "--prime", "2", "--poly", "x^2+1",
        "--extension", "1", "--gamma", "1/2", "--output", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["values"][0]["value"] == "1/2"


def test_approx_negative_gamma(capsys):
    code, out, err = run_cli(
        capsys, "approx", "--prime", "2", "--poly", "x^2+1",
        "--extension", "1", "--gamma", "-1/2", "--output", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["values"][0]["value"] == "-1/2"


def test_verify_command(capsys):
    code, out, err = run_cli(
        capsys, "verify", "--prime", "23", "--poly", "x^3-x-1",
        "--trials", "5", "--seed", "7", "--output", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True
    assert data["sum_ef"] == 3
    assert len(data["trials"]) == 5


def test_order_command(capsys):
    code, out, err = run_cli(
        capsys, "order", "--prime", "2", "--poly", "x^3+x^2-2x+8", "--output", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == [["1", "0", "0"], ["0", "1/2", "1/2"], ["0", "0", "1"]]
    # row-major rationals reconstruct exactly
    assert [[Fraction(x) for x in row] for row in data["basis"]]


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["extensions", "--prime", "4", "--poly", "x^2+1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["extensions", "--prime", "5", "--poly", "2x^2+1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["value", "--prime", "5", "--poly", "x^2+1", "--elem", "a", "--extension", "9"])
    assert exc.value.code == 2


def test_trace_text_lines(capsys):
    code, out, err = run_cli(
        capsys, "extensions", "--prime", "5", "--poly", "x^2+1", "--trace"
    )
    assert code == 0
    lines = out.splitlines()
    assert any(l.startswith("SPLIT{") for l in lines)
    assert any(l.startswith("LIFT{") for l in lines)


def test_trace_json_field(capsys):
    code, out, err = run_cli(
        capsys, "value", "--prime", "5", "--poly", "x^2+1", "--elem", "a",
        "--trace", "--output", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert all(
        t.startswith(("SPLIT{", "LIFT{", "CASE1{", "CASE2{", "CASE3{")) for t in data["trace"]
    )
    assert any(t.startswith("CASE") for t in data["trace"])


def test_trace_field_input_has_no_split(capsys):
    code, out, err = run_cli(
        capsys, "extensions", "--prime", "7", "--poly", "x^2+1", "--trace",
        "--output", "json",
    )
    data = json.loads(out)
    assert not any(t.startswith("SPLIT") for t in data["trace"])


def test_byte_identical_determinism(capsys):
    args = ["verify", "--prime", "5", "--poly", "x^2+1", "--trials", "4",
            "--seed", "3", "--output", "json"]
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_val_string_round_trip_through_json(capsys):
    from valext import Val

    code, out, _ = run_cli(
        capsys, "value", "--prime", "2", "--poly", "x^2+1", "--elem", "a+1",
        "--output", "json",
    )
    data = json.loads(out)
    for entry in data["values"]:
        Val.parse(entry["value"])  # must parse back
    assert data["values"][0]["value"] == "1/2"
