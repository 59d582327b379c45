"""CLI behavior: reference grammar, output formats, exit codes, determinism."""

import json

import pytest

from stabkit.catalog import entry_from_json_dict, load_catalog
from stabkit.cli import main
from stabkit.errors import SchemaError

CUSTOM_ENTRY = {
    "name": "custom",
    "genus": 1,
    "seifert": [[2, 1], [0, -1]],
    "discs": [{"name": "d", "curves": [[1, 2]]}],
}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------------------------------------------- alexander


def test_alexander_text(capsys):
    code, out, err = run(capsys, "alexander", "9_46")
    assert code == 0 and err == ""
    assert "knot: 9_46" in out
    assert "[0, -1 + 2*t]" in out
    assert "[-2 + t, 0]" in out
    assert "alexander polynomial: 1 - 5/2*t + t^2" in out


def test_alexander_json_matches_library(capsys):
    code, out, _ = run(capsys, "--json", "alexander", "6_1")
    assert code == 0
    payload = json.loads(out)
    assert payload["genus"] == 1
    assert payload["generating_rank"] == 1
    assert payload["order"] == "1 - 5/2*t + t^2"
    assert payload["invariant_factors"] == ["1 - 5/2*t + t^2"]
    assert payload["free_rank"] == 0


def test_alexander_of_sum_power(capsys):
    code, out, _ = run(capsys, "--json", "alexander", "sum^3(9_46)")
    assert code == 0
    payload = json.loads(out)
    assert payload["genus"] == 3
    assert payload["knot"] == "9_46#9_46#9_46"


def test_alexander_of_explicit_sum(capsys):
    code, out, _ = run(capsys, "--json", "alexander", "sum(9_46,6_1)")
    assert code == 0
    assert json.loads(out)["genus"] == 2


def test_alexander_unknot(capsys):
    code, out, _ = run(capsys, "--json", "alexander", "unknot")
    assert code == 0
    payload = json.loads(out)
    assert payload["presentation"] == []
    assert payload["order"] == "1"


# ------------------------------------------------------------------- kernels


def test_kernels_default_discs(capsys):
    code, out, _ = run(capsys, "--json", "kernels", "9_46")
    assert code == 0
    payload = json.loads(out)
    by_disc = {k["disc"]: k for k in payload["kernels"]}
    assert by_disc["left"]["order"] == "-2 + t"
    assert by_disc["right"]["order"] == "-1/2 + t"
    (pair,) = payload["pairs"]
    assert pair["intersection_is_zero"] is True
    assert pair["quotient_gr"] == [1, 1]


def test_kernels_text_output(capsys):
    code, out, _ = run(capsys, "kernels", "6_1")
    assert code == 0
    assert "kernel[gamma]: gr 1, order -1/2 + t" in out


def test_kernels_per_summand_discs(capsys):
    code, out, _ = run(capsys, "--json", "kernels", "sum(9_46,9_46)", "--discs", "left+right")
    assert code == 0
    payload = json.loads(out)
    assert payload["kernels"][0]["generating_rank"] == 1


def test_kernels_on_sum_require_discs(capsys):
    code, _, err = run(capsys, "kernels", "sum(9_46,9_46)")
    assert code == 2
    assert "no discs given" in err


# --------------------------------------------------------------------- bound


def test_bound_d2_text(capsys):
    code, out, _ = run(capsys, "bound", "d2", "--knot", "9_46", "--discs", "left,right")
    assert code == 0
    assert "quantity: d2" in out
    assert "lower:    1" in out
    assert "upper:    1" in out


@pytest.mark.parametrize("n", [2, 3])
def test_bound_d2_scales_with_summands(capsys, n):
    code, out, _ = run(
        capsys,
        "--json",
        "bound",
        "d2",
        "--knot",
        f"sum^{n}(9_46)",
        "--discs",
        f"left^{n},right^{n}",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["lower"] == n
    assert payload["upper"] == n


def test_bound_metabelian_thmc(capsys):
    code, out, _ = run(capsys, "--json", "bound", "metabelian", "--scenario", "thmC(g=1)")
    assert code == 0
    payload = json.loads(out)
    assert payload["quantity"] == "d2_metabelian"
    assert payload["lower"] == 1
    assert payload["upper"] == 4


def test_bound_metabelian_scenario_json(capsys, tmp_path):
    spec = {
        "base": "6_1",
        "base_disc": "gamma",
        "companion": "6_1",
        "companion_disc": "gamma",
        "copies": 8,
    }
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "--json", "bound", "metabelian", "--scenario-json", str(path))
    assert code == 0
    payload = json.loads(out)
    assert payload["lower"] == 2
    assert payload["upper"] == 8


def test_bound_d1(capsys):
    code, out, _ = run(
        capsys, "--json", "bound", "d1", "--two-knot", "double(9_46.right)^3", "--vs", "unknot"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["lower"] == 3
    assert payload["upper"] == "infinity"


def test_bound_d1_mixed_sum(capsys):
    # left+right is cyclic (coprime orders merge), so only left+left gains rank
    code, out, _ = run(
        capsys,
        "--json",
        "bound",
        "d1",
        "--two-knot",
        "double(9_46.left)+double(9_46.right)",
        "--vs",
        "double(9_46.right)",
    )
    assert code == 0
    assert json.loads(out)["lower"] == 0

    code, out, _ = run(
        capsys,
        "--json",
        "bound",
        "d1",
        "--two-knot",
        "double(9_46.left)^2",
        "--vs",
        "double(9_46.right)",
    )
    assert code == 0
    assert json.loads(out)["lower"] == 1


def test_bound_d1_equal_sides(capsys):
    code, out, _ = run(
        capsys, "--json", "bound", "d1", "--two-knot", "double(6_1.gamma)", "--vs", "double(6_1.gamma)"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["lower"] == 0
    assert payload["upper"] == 0


# ---------------------------------------------------------------- exit codes


def test_unknown_knot_is_exit_2(capsys):
    code, _, err = run(capsys, "alexander", "nope")
    assert code == 2
    assert "unknown knot" in err


def test_unknown_disc_is_exit_2(capsys):
    code, _, err = run(capsys, "kernels", "9_46", "--discs", "middle")
    assert code == 2
    assert "unknown disc" in err


def test_unknown_two_knot_is_exit_2(capsys):
    code, _, err = run(capsys, "bound", "d1", "--two-knot", "sphere", "--vs", "unknot")
    assert code == 2
    assert "unknown 2-knot" in err


def test_disc_spec_arity_mismatch_is_exit_2(capsys):
    code, _, err = run(capsys, "kernels", "sum(9_46,9_46)", "--discs", "left+right+left")
    assert code == 2
    assert "3 discs for 2 summands" in err


def test_bound_d2_needs_two_specs(capsys):
    code, _, err = run(capsys, "bound", "d2", "--knot", "9_46", "--discs", "left")
    assert code == 2
    assert "exactly two" in err


def test_thmc_g0_is_exit_2(capsys):
    code, _, err = run(capsys, "bound", "metabelian", "--scenario", "thmC(g=0)")
    assert code == 2
    assert "g >= 1" in err


def test_missing_scenario_is_exit_2(capsys):
    code, _, _ = run(capsys, "bound", "metabelian")
    assert code == 2


def test_scenario_json_missing_field_is_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"base": "6_1"}))
    code, _, err = run(capsys, "bound", "metabelian", "--scenario-json", str(path))
    assert code == 2
    assert "missing field" in err


def test_scenario_json_unparseable_is_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "bound", "metabelian", "--scenario-json", str(path))
    assert code == 2
    assert "not valid JSON" in err


def test_scenario_json_missing_file_is_exit_2(capsys, tmp_path):
    code, _, _ = run(capsys, "bound", "metabelian", "--scenario-json", str(tmp_path / "no.json"))
    assert code == 2


def test_failed_hypothesis_is_exit_3(capsys, tmp_path):
    spec = {
        "base": "6_1",
        "base_disc": "gamma",
        "companion": "unknot",
        "companion_disc": "trivial",
        "copies": 4,
    }
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(spec))
    code, _, err = run(capsys, "bound", "metabelian", "--scenario-json", str(path))
    assert code == 3
    assert "failed hypothesis" in err
    assert "obstruction vanishes" in err


def test_no_command_is_exit_2(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_version_is_exit_0(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0
    assert out.startswith("stabkit ")


# ------------------------------------------------------------- custom catalog


def test_custom_catalog_entry(capsys, tmp_path):
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps([CUSTOM_ENTRY]))
    code, out, _ = run(capsys, "--json", "--catalog", str(path), "kernels", "custom")
    assert code == 0
    payload = json.loads(out)
    assert payload["kernels"][0]["disc"] == "d"
    assert payload["kernels"][0]["generating_rank"] == 1


def test_custom_catalog_keeps_builtins(capsys, tmp_path):
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps(CUSTOM_ENTRY))  # single object form
    code, _, _ = run(capsys, "--catalog", str(path), "alexander", "9_46")
    assert code == 0


def test_invalid_catalog_curve_is_exit_2(capsys, tmp_path):
    bad = dict(CUSTOM_ENTRY, discs=[{"name": "d", "curves": [[1, 0]]}])
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps([bad]))
    code, _, err = run(capsys, "--catalog", str(path), "kernels", "custom")
    assert code == 2
    assert "0-framed" in err


def test_unparseable_catalog_is_exit_2(capsys, tmp_path):
    path = tmp_path / "catalog.json"
    path.write_text("[")
    code, _, err = run(capsys, "--catalog", str(path), "alexander", "9_46")
    assert code == 2
    assert "not valid JSON" in err


def test_entry_validation_details():
    with pytest.raises(SchemaError, match="missing field"):
        entry_from_json_dict({"name": "x", "genus": 1, "seifert": [[0, 1], [0, 0]]})
    with pytest.raises(SchemaError, match="genus field disagrees"):
        entry_from_json_dict(dict(CUSTOM_ENTRY, genus=2))
    with pytest.raises(SchemaError, match="duplicate disc"):
        entry_from_json_dict(
            dict(CUSTOM_ENTRY, discs=[{"name": "d", "curves": [[1, 2]]}] * 2)
        )
    with pytest.raises(SchemaError, match="eta_class"):
        entry_from_json_dict(dict(CUSTOM_ENTRY, eta_class="gamma"))
    with pytest.raises(SchemaError, match="matrix of integers"):
        entry_from_json_dict(dict(CUSTOM_ENTRY, seifert=[[0.5, 1], [0, 0]]))


def test_load_catalog_rejects_non_list(tmp_path):
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps("just a string"))
    with pytest.raises(SchemaError, match="list of knot entries"):
        load_catalog(str(path))


# --------------------------------------------------------------- determinism


@pytest.mark.parametrize(
    "argv",
    [
        ("--json", "kernels", "9_46"),
        ("--json", "bound", "metabelian", "--scenario", "thmC(g=1)"),
        ("--json", "alexander", "sum(9_46,6_1)"),
    ],
)
def test_repeated_runs_are_byte_identical(capsys, argv):
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2


# --------------------------------------------------------- verify, properties


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "PASS" in out
    assert "FAIL" not in out
    assert "all anchors passed" in out


def test_properties_command_small(capsys):
    code, out, _ = run(capsys, "--seed", "7", "properties", "--cases", "3")
    assert code == 0
    assert "PASS snf_integers (3 cases, seed 7)" in out
    assert "FAIL" not in out
