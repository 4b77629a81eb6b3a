"""CLI surface: exit codes, JSON shapes, file outputs."""

import json

import pytest

from qdisc.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    cap = capsys.readouterr()
    return rc, cap.out, cap.err


def run_json(capsys, *argv):
    rc, out, err = run(capsys, *argv)
    assert err == ""
    return rc, json.loads(out)


class TestNormalForm:
    def test_disc_text(self, capsys):
        rc, out, _ = run(capsys, "nf", "z^* z")
        assert rc == 0
        assert out.strip() == "(1 - q^2) + q^2*z z^*"

    def test_json_shape(self, capsys):
        rc, doc = run_json(capsys, "nf", "z^* z", "--format", "json")
        assert rc == 0
        assert doc == {"schema": 1, "algebra": "disc", "input": "z^* z",
                       "normal_form": "(1 - q^2) + q^2*z z^*"}

    def test_flag(self, capsys):
        rc, out, _ = run(capsys, "nf", "t12 t11", "--algebra", "flag")
        assert rc == 0
        assert out.strip() == "q^(-1)*t11 t12"

    def test_uqsl2_commutator(self, capsys):
        rc, out, _ = run(capsys, "nf", "E F - F E", "--algebra", "uqsl2")
        assert rc == 0
        assert "K^-1" in out and "K" in out

    def test_scalar_only(self, capsys):
        rc, out, _ = run(capsys, "nf", "q^2 - q^2")
        assert rc == 0
        assert out.strip() == "0"

    def test_parse_error_exit_2(self, capsys):
        rc, out, err = run(capsys, "nf", "z +")
        assert rc == 2
        assert out == ""
        assert "position 3" in err


class TestAct:
    def test_disc_default(self, capsys):
        rc, out, _ = run(capsys, "act", "E", "z")
        assert rc == 0
        assert out.strip() == "(-q^(1/2))*z^2"

    def test_laurent_inverse(self, capsys):
        rc, out, _ = run(capsys, "act", "K", "z^-3", "--algebra", "laurent")
        assert rc == 0
        assert out.strip() == "(q^(-6))*z^-3"

    def test_holo_rejects_inverse(self, capsys):
        rc, _, err = run(capsys, "act", "K", "z^-1", "--algebra", "holo")
        assert rc == 2
        assert "negative powers" in err

    def test_antiholo_validates(self, capsys):
        rc, _, err = run(capsys, "act", "E", "z", "--algebra", "antiholo")
        assert rc == 2
        assert "antiholomorphic" in err

    def test_extended_json(self, capsys):
        rc, doc = run_json(capsys, "act", "E", "f0 z^*",
                           "--algebra", "extended", "--format", "json")
        assert rc == 0
        assert doc["schema"] == 1
        assert doc["result"] == \
            "(q^(-3/2))*f0 + ((q^(1/2))/(-1 + q^2))*z f0 z^*"


class TestFock:
    def test_exact_matrix(self, capsys):
        rc, doc = run_json(capsys, "fock", "z^* z", "--N", "2",
                           "--format", "json")
        assert rc == 0
        assert doc["mode"] == "exact-weighted"
        assert doc["matrix"][0][0] == "1 - q^2"
        assert doc["matrix"][2][2] == "1 - q^6"
        assert doc["matrix"][0][1] == "0"

    def test_numeric(self, capsys):
        rc, doc = run_json(capsys, "fock", "z", "--N", "3", "--q0", "1/4",
                           "--format", "json")
        assert rc == 0
        assert doc["mode"] == "numeric-orthonormal"
        assert doc["q0"] == "1/4"
        # sqrt(1 - q0^2) on the first subdiagonal
        assert abs(float(doc["matrix"][1][0]) - 0.9682458365518543) < 1e-12

    def test_q0_out_of_range(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["fock", "z", "--q0", "2"])
        assert exc.value.code == 2


class TestIntegral:
    def test_exact(self, capsys):
        rc, out, _ = run(capsys, "integral", "f0")
        assert rc == 0
        assert out.strip() == "1"

    def test_with_value(self, capsys):
        rc, doc = run_json(capsys, "integral", "z f0 z^*", "--q0", "1/4",
                           "--format", "json")
        assert rc == 0
        assert doc["integral"] == "q^(-2) - 1"
        assert doc["at_q0"] == {"q0": "1/4", "value": "15", "float": 15.0}

    def test_polynomial_part_rejected(self, capsys):
        rc, _, err = run(capsys, "integral", "z")
        assert rc == 2
        assert "finite part" in err


class TestDemos:
    def test_rmatrix_demo(self, capsys):
        rc, doc = run_json(capsys, "rmatrix-demo", "--format", "json")
        assert rc == 0
        assert doc["passed"] is True
        steps = {s["step"]: s["value"] for s in doc["steps"]}
        assert steps["rule"] == "(1 - q^2) + q^2*z z^*"
        assert steps["presentation"] == "match"

    def test_flag_demo(self, capsys):
        rc, doc = run_json(capsys, "flag-demo", "--format", "json")
        assert rc == 0
        assert doc["passed"] is True
        assert doc["quasi_commutation"] == ["q^(-2)", "1", "q^2"]
        assert doc["inverse_products"] == ["((1)*1)", "((1)*1)"]
        assert len(doc["action_match"]) == 9 * 4


class TestRootData:
    def test_json_default(self, capsys):
        rc, doc = run_json(capsys, "rootdata", "A", "1")
        assert rc == 0
        assert doc["type"] == "A1"
        assert doc["cartan_matrix"] == [[2]]
        assert doc["positive_roots"] == [[1]]
        assert doc["maximal_root"] == [1]
        assert doc["parabolic_nodes"] == [1]
        g = doc["gradations"]["1"]
        assert (g["dim_p_plus"], g["dim_k"], g["dim_g"]) == (1, 1, 3)

    def test_no_parabolic_nodes(self, capsys):
        rc, doc = run_json(capsys, "rootdata", "G", "2")
        assert rc == 0
        assert doc["parabolic_nodes"] == []
        assert doc["gradations"] == {}
        assert doc["maximal_root"] == [3, 2]

    def test_bad_rank_exit_2(self, capsys):
        rc, _, err = run(capsys, "rootdata", "E", "9")
        assert rc == 2
        assert err.startswith("error:")


class TestVerify:
    def test_empty_selector_usage_error(self, capsys):
        rc, _, err = run(capsys, "verify")
        assert rc == 2
        assert "no suite selected" in err

    def test_unknown_suite(self, capsys):
        rc, _, err = run(capsys, "verify", "bogus")
        assert rc == 2
        assert "unknown suite" in err and "available" in err

    def test_single_suite_text(self, capsys):
        rc, out, _ = run(capsys, "verify", "scalars")
        assert rc == 0
        lines = out.strip().splitlines()
        assert all(l.startswith("PASS scalars.") for l in lines[:-1])
        assert lines[-1].endswith("passed, 0 failed")

    def test_json_report(self, capsys):
        rc, doc = run_json(capsys, "verify", "scalars", "--format", "json")
        assert rc == 0
        assert doc["schema"] == 1
        assert doc["passed"] is True
        assert doc["counts"]["fail"] == 0
        row = doc["checks"][0]
        assert set(row) == {"suite", "name", "mode", "statement", "passed",
                            "witness", "seconds"}

    def test_figures_directory(self, capsys, tmp_path):
        out = tmp_path / "report"
        rc, _, _ = run(capsys, "verify", "scalars", "--figures", str(out))
        assert rc == 0
        assert (out / "report.json").exists()
        header = (out / "checks.csv").read_text().splitlines()[0]
        assert header == "suite,name,mode,statement,passed,witness,seconds"
        pngs = sorted(p.name for p in out.glob("*.png"))
        assert pngs == ["fock_heatmap.png", "gram_spectrum.png",
                        "spherical_ranks.png", "weights.png"]
        assert all((out / p).stat().st_size > 0 for p in pngs)
