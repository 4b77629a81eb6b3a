"""Check-suite runner: selection, determinism, report shape."""

from fractions import Fraction

import pytest

from qdisc.verify import Options, run_verify, suite_names

FAST = Options(degree=2, N=8, q0=Fraction(1, 4), seed=0)


class TestSelection:
    def test_suite_names_stable(self):
        assert suite_names() == ["scalars", "rewrite", "uqsl2", "modalg",
                                 "rmatrix", "fock", "integral", "flag",
                                 "rootdata"]

    def test_unknown_suite_raises(self):
        with pytest.raises(ValueError, match="unknown suite"):
            run_verify(["scalars", "nope"], FAST)

    def test_subset_runs_only_selected(self):
        r = run_verify(["scalars", "rootdata"], FAST)
        assert set(r["suites"]) == {"scalars", "rootdata"}
        assert all(c["suite"] in ("scalars", "rootdata")
                   for c in r["checks"])

    def test_all_selector(self):
        r = run_verify(["all"], FAST)
        assert set(r["suites"]) == set(suite_names())
        assert r["counts"]["pass"] == len(r["checks"])
        assert r["passed"] is True


class TestReport:
    def test_schema_and_options(self):
        r = run_verify(["scalars"], FAST)
        assert r["schema"] == 1
        assert r["options"] == {"degree": 2, "N": 8, "q0": "1/4", "seed": 0}

    def test_rows_in_registry_order(self):
        r = run_verify(["scalars", "uqsl2"], FAST)
        suites_seen = [c["suite"] for c in r["checks"]]
        assert suites_seen == sorted(
            suites_seen, key=lambda s: suite_names().index(s))

    def test_deterministic_given_seed(self):
        strip = lambda r: [(c["suite"], c["name"], c["passed"], c["witness"])
                           for c in r["checks"]]
        a = run_verify(["scalars", "rewrite", "modalg"], FAST)
        b = run_verify(["scalars", "rewrite", "modalg"], FAST)
        assert strip(a) == strip(b)

    def test_seed_changes_sampled_witnesses_only(self):
        a = run_verify(["scalars"], FAST)
        b = run_verify(["scalars"],
                       Options(degree=2, N=8, q0=Fraction(1, 4), seed=7))
        assert a["passed"] and b["passed"]
        names = [c["name"] for c in a["checks"]]
        assert names == [c["name"] for c in b["checks"]]
