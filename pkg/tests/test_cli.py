import json

import pytest
from click.testing import CliRunner

from flagcalc.cli import main, parse_poly
from flagcalc.families import double_grothendieck, double_schubert
from flagcalc.perms import Permutation
from flagcalc.rings import QQ, SparsePoly, beta_ring


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main, list(args), catch_exceptions=False)


class TestParsePoly:
    def test_basic(self):
        ring = beta_ring()
        got = parse_poly("2 x1^2 y1 - b x2 + 1", ring)
        x1 = SparsePoly.var(ring, "x1")
        want = (2 * x1 ** 2 * SparsePoly.var(ring, "y1")
                - SparsePoly.var(ring, "b") * SparsePoly.var(ring, "x2")
                + SparsePoly.const(ring, 1))
        assert got == want

    def test_fractions(self):
        got = parse_poly("3/2 x1", QQ)
        assert got.to_text() == "3/2 x1"

    def test_stars_allowed(self):
        ring = beta_ring()
        assert parse_poly("2*x1*x2", ring) == parse_poly("2 x1 x2", ring)

    def test_garbage_rejected(self):
        import click
        with pytest.raises(click.UsageError):
            parse_poly("x1 + (x2)", beta_ring())


class TestFamilyCommand:
    def test_schubert_simple(self, runner):
        res = invoke(runner, "family", "--theory", "schubert",
                     "--perm", "2 1")
        assert res.exit_code == 0
        assert res.output.strip() == "x1 - y1"

    def test_beta_identity(self, runner):
        res = invoke(runner, "family", "--perm", "1 2")
        assert res.output.strip() == "1"

    def test_matches_library(self, runner):
        res = invoke(runner, "family", "--theory", "grothendieck",
                     "--perm", "3 2 1")
        assert res.output.strip() == \
            double_grothendieck(Permutation((3, 2, 1))).to_text()

    def test_embedding_flag(self, runner):
        res = invoke(runner, "family", "--theory", "schubert",
                     "--perm", "2 1", "--n", "3")
        assert res.output.strip() == \
            double_schubert(Permutation((2, 1, 3))).to_text()

    def test_json_output(self, runner):
        res = invoke(runner, "family", "--perm", "2 1", "--format", "json")
        obj = json.loads(res.output)
        assert "terms" in obj and "vars" in obj


class TestPorteousCommand:
    def test_ch_line_bundles(self, runner):
        res = invoke(runner, "porteous", "--e", "1", "--f", "1", "--r", "0",
                     "--theory", "ch")
        assert res.output.strip() == "c1 - d1"

    def test_json_carries_slots(self, runner):
        res = invoke(runner, "porteous", "--e", "1", "--f", "1", "--r", "0",
                     "--theory", "ck", "--format", "json")
        obj = json.loads(res.output)
        assert obj["theory"] == "CK"
        assert obj["slots"]["d"] == "c_j(Edual)"


class TestHeckeCommand:
    def test_verify_passes(self, runner):
        res = invoke(runner, "hecke", "verify", "--n", "2")
        assert res.exit_code == 0
        results = json.loads(res.output)
        assert results and all(r["ok"] for r in results)


class TestBraidCommand:
    def test_beta_mode_holds(self, runner):
        res = invoke(runner, "braid", "--law", "beta", "--n", "3")
        assert json.loads(res.output) == {"holds": True}

    def test_universal_counterexample(self, runner):
        res = invoke(runner, "braid", "--law", "universal", "--n", "3",
                     "--trunc", "4")
        obj = json.loads(res.output)
        assert obj["holds"] is False
        assert obj["witness"]
        assert obj["input"]

    def test_multiplicative_holds(self, runner):
        res = invoke(runner, "braid", "--law", "multiplicative", "--n", "3",
                     "--trunc", "5")
        assert json.loads(res.output)["holds"] is True


class TestFlagringCommand:
    def test_trivial_reduce(self, runner):
        res = invoke(runner, "flagring", "reduce", "--n", "2", "--trivial",
                     "--input", "x2")
        want = (-SparsePoly.var(beta_ring(), "x1")).to_text()
        assert res.output.strip() == want

    def test_symbolic_elementary(self, runner):
        res = invoke(runner, "flagring", "reduce", "--n", "2",
                     "--input", "x1 x2")
        assert res.output.strip() == "c2"


class TestChernTensorCommand:
    def test_line_bundles(self, runner):
        res = invoke(runner, "chern-tensor", "--law", "additive",
                     "--e", "1", "--f", "1")
        lines = res.output.strip().splitlines()
        assert lines[0].startswith("chern_polynomial: ")
        assert lines[1] == "top: x1 - y1"


class TestDeterminism:
    @pytest.mark.parametrize("args", [
        ("family", "--perm", "3 1 2", "--format", "json"),
        ("braid", "--law", "universal", "--n", "3", "--trunc", "4",
         "--seed", "7"),
        ("porteous", "--e", "2", "--f", "2", "--r", "1", "--format", "json"),
    ], ids=["family", "braid", "porteous"])
    def test_repeated_runs_identical(self, runner, args):
        first = invoke(runner, *args)
        second = invoke(runner, *args)
        assert first.output == second.output
        assert first.exit_code == second.exit_code == 0


class TestErrors:
    def test_bad_perm_is_usage_error(self, runner):
        res = runner.invoke(main, ["family", "--perm", "1 1"])
        assert res.exit_code != 0

    def test_bad_poly_is_usage_error(self, runner):
        res = runner.invoke(main, ["flagring", "reduce", "--n", "2",
                                   "--input", "(x1)"])
        assert res.exit_code == 2
