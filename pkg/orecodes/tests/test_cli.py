"""End-to-end tests for the command line."""

import json

import pytest

from config import get_settings
from cli.schemas import ContextDescriptor
from main import main
from ore.context import make_frobenius_context


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    monkeypatch.setenv("ORECODES_TRIALS", "0.01")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def write_subspaces(tmp_path, entries):
    path = tmp_path / "subspaces.json"
    path.write_text(json.dumps(entries), encoding="utf-8")
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


class TestCtx:
    def test_frobenius(self, capsys):
        code, report = run(capsys, ["ctx"])
        assert code == 0
        assert report["s"] == 2
        assert report["descriptor"]["kind"] == "frobenius"
        assert report["z_coeffs"] is None
        assert len(report["gram"]) == 2

    def test_differential(self, capsys):
        code, report = run(capsys, ["ctx", "--kind", "differential", "--p", "2"])
        assert code == 0
        assert report["s"] == 2
        assert len(report["z_coeffs"]) == 2

    def test_descriptor_rebuilds_the_context(self, ctx_b, ctx_d):
        for ctx in (ctx_b, ctx_d):
            assert ContextDescriptor.from_context(ctx).to_context() == ctx

    def test_custom_modulus_round_trips(self, capsys):
        code, report = run(capsys, ["ctx", "--modulus", "2,1,1"])
        assert code == 0
        assert report["descriptor"]["modulus"] == [2, 1, 1]
        rebuilt = ContextDescriptor(**report["descriptor"]).to_context()
        assert rebuilt == make_frobenius_context(3, 1, 2, 0, [2, 1, 1])
        assert rebuilt != make_frobenius_context(3, 1, 2, 0)

    def test_reducible_modulus_is_rejected(self, capsys):
        # x^2 + x + 1 = (x - 1)^2 over F_3
        assert main(["ctx", "--modulus", "1,1,1"]) == 2

    def test_s_equal_one_is_rejected(self, capsys):
        assert main(["ctx", "--s", "1"]) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "SIsOne" in captured.err


class TestCode:
    def test_lrs_is_msrd(self, capsys, tmp_path):
        subspaces = write_subspaces(tmp_path, ["K", "K"])
        code, report = run(
            capsys,
            ["code", "--family", "lrs", "--k", "2", "--points", "1;1,1", "--subspaces", subspaces, "--check", "msrd"],
        )
        assert code == 0
        assert report["n"] == 4
        assert report["dimension"] == 2
        assert report["distance"] == 3
        assert report["msrd"] is True

    def test_lg_k_too_large(self, capsys, tmp_path):
        subspaces = write_subspaces(tmp_path, [["1"]])
        code, _ = run(capsys, ["code", "--family", "lg", "--k", "1", "--points", "1", "--subspaces", subspaces])
        assert code == 3

    def test_subspace_count_mismatch(self, capsys, tmp_path):
        subspaces = write_subspaces(tmp_path, ["K"])
        code, _ = run(capsys, ["code", "--family", "lrs", "--k", "1", "--points", "1;1,1", "--subspaces", subspaces])
        assert code == 2

    def test_infinite_field_exceeds_budget(self, capsys, tmp_path):
        subspaces = write_subspaces(tmp_path, ["K"])
        argv = [
            "code", "--kind", "differential", "--p", "2", "--family", "lrs", "--k", "1",
            "--points", "1", "--subspaces", subspaces, "--check", "msrd",
        ]
        code, _ = run(capsys, argv)
        assert code == 4


class TestDualcheck:
    def argv(self, tmp_path):
        subspaces = write_subspaces(tmp_path, [["1"], "K"])
        return ["dualcheck", "--k", "1", "--points", "1;1,1", "--subspaces", subspaces]

    def test_passes(self, capsys, tmp_path):
        code, report = run(capsys, self.argv(tmp_path))
        assert code == 0
        assert report["passed"]
        assert report["lrs_dimension"] + report["lg_dimension"] == report["n"]
        assert len(report["pairings"]) == report["lg_dimension"] * report["lrs_dimension"]

    def test_corrupted_fails(self, capsys, tmp_path):
        code, report = run(capsys, self.argv(tmp_path) + ["--corrupt"])
        assert code == 1
        assert report["corrupted"]
        assert not report["passed"]


class TestResidueDemo:
    def test_worked_example(self, capsys):
        # t X / ((Z + 1)(Z + t^2 + 1)) over F_2(t)
        argv = [
            "residue-demo", "--kind", "differential", "--p", "2",
            "--num", "0;0,1", "--den", "1,0,1;0,0,1;1",
        ]
        code, report = run(capsys, argv)
        assert code == 0
        assert report["asserted"]
        assert not report["unasserted"]
        assert report["total"]["num"] == [0]
        assert len(report["values"]) == 2

    def test_non_split_denominator(self, capsys):
        code, _ = run(capsys, ["residue-demo", "--num", "0;1", "--den", "1;0;1"])
        assert code == 3


class TestSelftest:
    def test_subset(self, capsys):
        code, report = run(capsys, ["selftest", "--suites", "1", "3", "--seed", "5"])
        assert code == 0
        assert report["passed"]
        assert report["seed"] == 5
        assert report["trials"] == 0.01
        assert [s["number"] for s in report["suites"]] == [1, 3]

    def test_unknown_suite(self, capsys):
        code, _ = run(capsys, ["selftest", "--suites", "99"])
        assert code == 2
