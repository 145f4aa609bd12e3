import json

import pytest

from liestab import build, cli
from liestab.serialize import (
    algebra_from_json,
    algebra_to_json,
    dumps,
    form_to_json,
    report_from_json,
    subspace_from_json,
)
from liestab.stab import FormStabilizerRecord, ScalarGroupRecord, VerificationReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_algebra(tmp_path, series, rank, name="alg.json"):
    path = tmp_path / name
    path.write_text(dumps(algebra_to_json(build(series, rank))))
    return path


class TestBuild:
    def test_build_sl2(self, tmp_path, capsys):
        out = tmp_path / "a1.json"
        code, _, _ = run(capsys, "build", "--series", "A", "--rank", "1", "--out", str(out))
        assert code == 0
        assert algebra_from_json(json.loads(out.read_text())) == build("A", 1)

    def test_build_g2_passes_load_validation(self, tmp_path, capsys):
        out = tmp_path / "g2.json"
        code, _, _ = run(capsys, "build", "--series", "G", "--rank", "2", "--out", str(out))
        assert code == 0
        g = algebra_from_json(json.loads(out.read_text()))  # validates Jacobi on load
        assert g.dim == 14

    def test_build_over_size_cap_rejected(self, tmp_path, capsys):
        code, _, err = run(capsys, "build", "--series", "A", "--rank", "9",
                           "--out", str(tmp_path / "big.json"))
        assert code == 2
        assert "cap" in err

    def test_allow_large_overrides_cap(self, tmp_path, capsys):
        out = tmp_path / "a6.json"
        code, _, _ = run(capsys, "build", "--series", "A", "--rank", "6",
                         "--out", str(out), "--allow-large")
        assert code == 0

    def test_unsupported_rank(self, tmp_path, capsys):
        code, _, err = run(capsys, "build", "--series", "C", "--rank", "2",
                           "--out", str(tmp_path / "x.json"))
        assert code == 2
        assert "unsupported" in err

    def test_build_to_stdout(self, capsys):
        code, out, _ = run(capsys, "build", "--series", "A", "--rank", "1")
        assert code == 0
        assert json.loads(out)["dim"] == 3


class TestVerify:
    def test_sl3_degree_three_passes(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        code, _, _ = run(capsys, "verify", "--series", "A", "--rank", "2",
                         "--degree", "3", "--out", str(out))
        assert code == 0
        report = report_from_json(json.loads(out.read_text()))
        assert report.overall_pass
        assert report.forms[0].stabilizer_dim == 8

    def test_sl3_degree_four_is_vacuous_pass(self, tmp_path, capsys):
        out = tmp_path / "report4.json"
        code, _, _ = run(capsys, "verify", "--series", "A", "--rank", "2",
                         "--degree", "4", "--out", str(out))
        assert code == 0
        report = report_from_json(json.loads(out.read_text()))
        assert report.overall_pass and report.vacuous
        assert report.dim_invariant_forms == 0

    def test_degree_not_below_dim_is_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "--series", "A", "--rank", "1", "--degree", "3")
        assert code == 2
        assert "degree" in err

    def test_verification_failure_maps_to_exit_one(self, capsys, monkeypatch):
        failing = VerificationReport(
            algebra="A2", degree=3, seed=0, dim_invariant_forms=1, vacuous=False,
            forms=(FormStabilizerRecord("basis[0]", 9, True, False, True, 0, 0, True),),
            m_group=ScalarGroupRecord(1, 3, "exp(2*pi*i/3) * id"),
            overall_pass=False,
        )
        monkeypatch.setattr(cli, "verify_stabilizer", lambda *a, **k: failing)
        code, _, _ = run(capsys, "verify", "--series", "A", "--rank", "2", "--degree", "3")
        assert code == 1

    def test_deterministic_bytes(self, tmp_path, capsys):
        paths = [tmp_path / "r1.json", tmp_path / "r2.json"]
        for p in paths:
            code, _, _ = run(capsys, "verify", "--series", "A", "--rank", "2",
                             "--degree", "3", "--seed", "42", "--out", str(p))
            assert code == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()


class TestInvariants:
    def test_sl2_degree_three_generator(self, tmp_path, capsys):
        alg = write_algebra(tmp_path, "A", 1)
        out = tmp_path / "forms.json"
        code, _, _ = run(capsys, "invariants", "--alg", str(alg),
                         "--degree", "3", "--out", str(out))
        assert code == 0
        doc = json.loads(out.read_text())
        assert doc == [{"dim": 3, "degree": 3,
                        "terms": [{"idx": [1, 2, 3], "num": "1", "den": "1"}]}]

    def test_degree_out_of_range(self, tmp_path, capsys):
        alg = write_algebra(tmp_path, "A", 1)
        code, _, err = run(capsys, "invariants", "--alg", str(alg), "--degree", "4")
        assert code == 2

    def test_malformed_json_reports_path(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"name": "x", "dim": 2, "labels": ["a", "b"]}')
        code, _, err = run(capsys, "invariants", "--alg", str(bad), "--degree", "1")
        assert code == 2
        assert "sc" in err

    def test_unparsable_json(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _, err = run(capsys, "invariants", "--alg", str(bad), "--degree", "1")
        assert code == 2
        assert "invalid JSON" in err


class TestStabilizer:
    def test_stabilizer_of_invariant_form(self, tmp_path, capsys):
        alg = write_algebra(tmp_path, "A", 2)
        forms = tmp_path / "forms.json"
        code, _, _ = run(capsys, "invariants", "--alg", str(alg),
                         "--degree", "3", "--out", str(forms))
        assert code == 0
        out = tmp_path / "stab.json"
        code, _, _ = run(capsys, "stabilizer", "--alg", str(alg),
                         "--form", f"{forms}#0", "--out", str(out))
        assert code == 0
        sub = subspace_from_json(json.loads(out.read_text()))
        assert sub.dim == 8

    def test_zero_form_is_schema_error(self, tmp_path, capsys):
        from liestab.exterior import AlternatingForm

        alg = write_algebra(tmp_path, "A", 1)
        form_path = tmp_path / "zero.json"
        form_path.write_text(dumps(form_to_json(AlternatingForm.zero(3, 2))))
        code, _, err = run(capsys, "stabilizer", "--alg", str(alg), "--form", str(form_path))
        assert code == 2
        assert "nonzero" in err

    def test_ambient_mismatch_is_schema_error(self, tmp_path, capsys):
        from liestab.exterior import AlternatingForm

        alg = write_algebra(tmp_path, "A", 1)
        form_path = tmp_path / "w.json"
        form_path.write_text(dumps(form_to_json(AlternatingForm.monomial(4, (0, 1)))))
        code, _, err = run(capsys, "stabilizer", "--alg", str(alg), "--form", str(form_path))
        assert code == 2
        assert "match" in err

    def test_form_index_out_of_range(self, tmp_path, capsys):
        alg = write_algebra(tmp_path, "A", 1)
        forms = tmp_path / "forms.json"
        run(capsys, "invariants", "--alg", str(alg), "--degree", "3", "--out", str(forms))
        code, _, err = run(capsys, "stabilizer", "--alg", str(alg), "--form", f"{forms}#5")
        assert code == 2
        assert "out of range" in err


class TestMgroupAndProfile:
    def test_mgroup_degree_one_is_trivial(self, tmp_path, capsys):
        alg = write_algebra(tmp_path, "A", 1)
        code, out, _ = run(capsys, "mgroup", "--alg", str(alg), "--degree", "1")
        assert code == 0
        doc = json.loads(out)
        assert doc["order"] == 1 and doc["centralizer_dim"] == 1

    def test_mgroup_degree_three(self, tmp_path, capsys):
        alg = write_algebra(tmp_path, "A", 1)
        code, out, _ = run(capsys, "mgroup", "--alg", str(alg), "--degree", "3")
        assert code == 0
        assert json.loads(out)["order"] == 3

    def test_mgroup_degree_zero_is_usage_error(self, tmp_path, capsys):
        alg = write_algebra(tmp_path, "A", 1)
        code, _, _ = run(capsys, "mgroup", "--alg", str(alg), "--degree", "0")
        assert code == 2

    def test_profile_sl2(self, tmp_path, capsys):
        alg = write_algebra(tmp_path, "A", 1)
        code, out, _ = run(capsys, "profile", "--alg", str(alg))
        assert code == 0
        assert json.loads(out) == {"algebra": "A1", "dims": [1, 0, 0, 1]}


class TestUsage:
    def test_missing_subcommand_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            cli.main([])
        assert exc.value.code == 2

    def test_unknown_option_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["build", "--series", "A", "--rank", "1", "--frob"])
        assert exc.value.code == 2
