"""End-to-end tests of the command line through main(argv)."""
from __future__ import annotations

import json

import pytest

from repvar.cli import build_parser, main
from repvar.cli.catalog_commands import parse_params
from repvar.errors import InputError

TREFOIL_TEXT = "gens x, y; rel x^2 = y^3; ab x=3, y=2;"

ALPHA_1_TEXT = """
field 12;
x = [zeta(4), 0; 1, -zeta(4)];
y = [zeta(6), zeta(6)^-1 - zeta(6); 0, zeta(6)^-1];
"""

ALPHA_0_TEXT = """
field 12;
x = [zeta(4), 0; 0, -zeta(4)];
y = [zeta(6), zeta(6)^-1 - zeta(6); 0, zeta(6)^-1];
"""

NOT_A_REP_TEXT = """
field 12;
x = [1, 0; 0, 1];
y = [zeta(6), 0; 0, zeta(6)^-1];
"""

DYCK_333_TEXT = "gens a, b; rel a^3, b^3, (a b)^3;"

DYCK_RHO0_TEXT = """
field 12;
a = [zeta(3), 0; 0, zeta(3)^2];
b = [zeta(3), 0; 0, zeta(3)^2];
"""

AXIS_COCYCLE_TEXT = "level 1; a = [0, 0; 0, 0]; b = [0, 1; 0, 0];"
MIXED_COCYCLE_TEXT = "level 1; a = [0, 0; 0, 0]; b = [0, 1; 1, 0];"


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

@pytest.fixture
def files(tmp_path):
    contents = {
        "trefoil.pres": TREFOIL_TEXT,
        "alpha1.rep": ALPHA_1_TEXT,
        "alpha0.rep": ALPHA_0_TEXT,
        "bad.rep": NOT_A_REP_TEXT,
        "dyck.pres": DYCK_333_TEXT,
        "rho0.rep": DYCK_RHO0_TEXT,
        "axis.cochain": AXIS_COCYCLE_TEXT,
        "mixed.cochain": MIXED_COCYCLE_TEXT,
    }
    paths = {}
    for name, text in contents.items():
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        paths[name] = str(path)
    return paths


def _run_json(capsys, argv: list[str]) -> tuple[int, dict]:
    code = main([*argv, "--format", "json"])
    return code, json.loads(capsys.readouterr().out)


# ===========================================================================
# Exit codes and reports
# ===========================================================================

class TestExitCodes:
    def test_check_rep(self, files, capsys):
        code, report = _run_json(capsys, ["check-rep", "--presentation", files["trefoil.pres"],
                                          "--rep", files["alpha1.rep"]])
        assert code == 0
        assert report["schema_version"] == "1.0"
        assert report["ok"] is True
        assert report["verdict"] is True
        assert report["result"]["relators_verified"] == 1

    def test_relation_violated(self, files, capsys):
        code, report = _run_json(capsys, ["check-rep", "--presentation", files["trefoil.pres"],
                                          "--rep", files["bad.rep"]])
        assert code == 1
        assert report["ok"] is False
        assert report["result"]["exception"] == "RelationViolated"
        assert report["result"]["relator_index"] == 0

    def test_missing_file(self, files, capsys, tmp_path):
        code = main(["check-rep", "--presentation", str(tmp_path / "missing.pres"), "--rep", files["alpha1.rep"]])
        assert code == 2
        assert "repvar: error:" in capsys.readouterr().err

    def test_parse_error(self, files, capsys, tmp_path):
        broken = tmp_path / "broken.pres"
        broken.write_text("gens x, x; rel ;", encoding="utf-8")
        code = main(["irreducible", "--presentation", str(broken), "--rep", files["alpha1.rep"]])
        assert code == 2

    def test_usage_error(self, capsys):
        assert main([]) == 2

    def test_unknown_option(self, capsys):
        assert main(["catalog", "list", "--bogus"]) == 2


# ===========================================================================
# Commands
# ===========================================================================

class TestRepresentationCommands:
    def test_irreducible(self, files, capsys):
        code, report = _run_json(capsys, ["irreducible", "--presentation", files["trefoil.pres"],
                                          "--rep", files["alpha1.rep"]])
        assert code == 0
        assert report["result"]["algebra_dimension"] == 4

    def test_reducible_exits_one(self, files, capsys):
        code, report = _run_json(capsys, ["irreducible", "--presentation", files["trefoil.pres"],
                                          "--rep", files["alpha0.rep"]])
        assert code == 1
        assert report["verdict"] is False
        assert report["ok"] is True

    def test_character(self, files, capsys):
        code, report = _run_json(capsys, ["character", "--presentation", files["trefoil.pres"],
                                          "--rep", files["alpha1.rep"], "--words", "x, y^2"])
        assert code == 0
        assert report["result"]["words"] == ["x", "y^2"]
        assert report["result"]["traces"][0] == "0"

    def test_metabelian(self, files, capsys):
        code, report = _run_json(capsys, ["metabelian", "--presentation", files["trefoil.pres"],
                                          "--alpha", "zeta(6)", "--n", "2"])
        assert code == 0
        assert report["result"]["dimension"] == 2

    def test_text_output(self, files, capsys):
        code = main(["irreducible", "--presentation", files["trefoil.pres"], "--rep", files["alpha1.rep"]])
        out = capsys.readouterr().out
        assert code == 0
        assert out.startswith("repvar irreducible")
        assert "verdict: yes" in out


class TestCohomologyCommands:
    def test_cohomology_with_tangent_gap(self, files, capsys):
        code, report = _run_json(capsys, ["cohomology", "--presentation", files["dyck.pres"],
                                          "--rep", files["rho0.rep"], "--known-local-dim", "3"])
        assert code == 0
        assert report["result"]["h1"] == 2
        assert report["result"]["tangent_gap"]["gap"] == 1

    def test_known_local_dim_needs_adjoint_module(self, files, capsys):
        code = main(["cohomology", "--presentation", files["dyck.pres"], "--rep", files["rho0.rep"],
                     "--module", "standard", "--known-local-dim", "3"])
        assert code == 2

    def test_cocycles(self, files, capsys):
        code, report = _run_json(capsys, ["cocycles", "--presentation", files["dyck.pres"],
                                          "--rep", files["rho0.rep"]])
        assert code == 0
        assert report["result"]["dimension"] == 4
        assert len(report["result"]["basis"]) == 4

    def test_regularity(self, files, capsys):
        code, report = _run_json(capsys, ["regularity", "--presentation", files["trefoil.pres"],
                                          "--rep", files["alpha1.rep"]])
        assert code == 0
        assert report["result"]["regular"] is True

    def test_obstruction_extends(self, files, capsys):
        code, report = _run_json(capsys, ["obstruction", "--presentation", files["dyck.pres"],
                                          "--rep", files["rho0.rep"], "--cochain", files["axis.cochain"]])
        assert code == 0
        assert report["result"]["reached_order"] == 2
        assert report["result"]["obstructed"] is False

    def test_obstruction_obstructed(self, files, capsys):
        code, report = _run_json(capsys, ["obstruction", "--presentation", files["dyck.pres"],
                                          "--rep", files["rho0.rep"], "--cochain", files["mixed.cochain"]])
        assert code == 1
        assert report["result"]["reached_order"] == 1
        assert report["result"]["obstructed"] is True


class TestAlexanderCommands:
    def test_classical_polynomial(self, files, capsys):
        code, report = _run_json(capsys, ["alexander", "--presentation", files["trefoil.pres"],
                                          "--lambda", "zeta(6)"])
        assert code == 0
        assert report["result"]["delta1_text"] == "t^2 - t + 1"
        assert report["result"]["evaluations"][0]["is_simple"] is True

    def test_deform_condition(self, files, capsys):
        code, report = _run_json(capsys, ["deform-condition", "--presentation", files["trefoil.pres"],
                                          "--lambda", "zeta(12)"])
        assert code == 0
        assert report["result"]["deformable"] is True

    def test_deform_condition_off_root(self, files, capsys):
        code, _ = _run_json(capsys, ["deform-condition", "--presentation", files["trefoil.pres"],
                                     "--lambda", "1"])
        assert code == 1

    def test_deform_condition_needs_lambda(self, files, capsys):
        assert main(["deform-condition", "--presentation", files["trefoil.pres"]]) == 2

    def test_sym_power(self, files, capsys):
        code, report = _run_json(capsys, ["deform-condition", "--presentation", files["trefoil.pres"],
                                          "--lambda", "zeta(12)", "--sym-power", "3"])
        assert code == 0
        assert report["result"]["predicted_component_dim"] == 10


class TestCatalogCommand:
    def test_list(self, capsys):
        code, report = _run_json(capsys, ["catalog", "list"])
        assert code == 0
        assert "lubotzky_magid" in [e["name"] for e in report["result"]["entries"]]

    def test_list_text(self, capsys):
        assert main(["catalog", "list"]) == 0
        assert "dyck333" in capsys.readouterr().out

    def test_run(self, capsys):
        code, report = _run_json(capsys, ["catalog", "run", "lubotzky_magid"])
        assert code == 0
        assert report["result"]["passed"] is True

    def test_run_with_param(self, capsys):
        code, report = _run_json(capsys, ["catalog", "run", "torus_knot", "--param", "p=5"])
        assert code == 0
        assert report["result"]["params"] == {"p": 5}

    def test_unknown_entry(self, capsys):
        assert main(["catalog", "run", "nonexistent"]) == 2

    def test_run_needs_entry(self, capsys):
        assert main(["catalog", "run"]) == 2

    def test_parse_params(self):
        assert parse_params(["p=5", " s = zeta(4) "]) == {"p": "5", "s": "zeta(4)"}
        with pytest.raises(InputError):
            parse_params(["p"])

    def test_parser_lists_every_command(self):
        parser = build_parser()
        args = parser.parse_args(["catalog", "list"])
        assert args.command == "catalog"
        assert args.output_format == "text"
