import json
from pathlib import Path

import jsonschema
import pytest

import schurlab.cli as cli
from schurlab import serialize
from schurlab.experiments import RatioSample


SCHEMA_DIR = Path(cli.__file__).parent / "schemas"


def load_report(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def body_bytes(path):
    return serialize.dumps_canonical(load_report(path)["body"]).encode()


def validate(path, command):
    with open(SCHEMA_DIR / f"report.{command}.schema.json", encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.validate(load_report(path), schema)


class TestExitCodes:
    def test_bks_success(self, tmp_path):
        out = tmp_path / "r.json"
        code = cli.main(["bks", "--p", "1", "--theta", "0.5", "--dims", "2,4",
                         "--trials", "50", "--seed", "7", "--out", str(out)])
        assert code == 0
        validate(out, "bks")
        report = load_report(out)
        assert report["body"]["results"]["max_ratio"] <= 1.0 + 1e-9
        assert report["body"]["seed"] == 7

    def test_zero_trials_is_input_error(self, tmp_path):
        code = cli.main(["estimate-constant", "--p", "0.5", "--theta", "0.5",
                         "--trials", "0", "--out", str(tmp_path / "r.json")])
        assert code == 1

    def test_unknown_command_is_input_error(self):
        assert cli.main(["no-such-command"]) == 1

    def test_bad_flag_value(self, tmp_path):
        assert cli.main(["bks", "--p", "zero", "--theta", "0.5",
                         "--out", str(tmp_path / "r.json")]) == 1

    def test_violation_exits_2(self, tmp_path, monkeypatch):
        def fake_bks(x, y, p, theta):
            return RatioSample(2.0, 1.0, 2.0, False, "deadbeef", {})
        monkeypatch.setattr(cli, "bks_check", fake_bks)
        out = tmp_path / "r.json"
        code = cli.main(["bks", "--p", "1", "--theta", "0.5", "--trials", "3",
                         "--out", str(out)])
        assert code == 2
        assert load_report(out)["body"]["results"]["pass"] is False


class TestDeterminism:
    def test_byte_identical_bodies(self, tmp_path):
        args = ["verify-ando", "--trials", "10", "--dims", "2,3", "--seed", "3"]
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        assert cli.main(args + ["--out", str(out1)]) == 0
        assert cli.main(args + ["--out", str(out2)]) == 0
        assert body_bytes(out1) == body_bytes(out2)

    def test_threads_do_not_change_body(self, tmp_path):
        base = ["bks", "--p", "1", "--theta", "0.5", "--trials", "40", "--seed", "1"]
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        assert cli.main(base + ["--threads", "1", "--out", str(out1)]) == 0
        assert cli.main(base + ["--threads", "4", "--out", str(out2)]) == 0
        b1, b2 = load_report(out1)["body"], load_report(out2)["body"]
        assert b1["results"] == b2["results"]

    def test_csv_body_identical(self, tmp_path):
        args = ["kernel-spectrum", "--kmax", "3", "--nystrom", "128",
                "--quadrature", "256", "--format", "csv"]
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        assert cli.main(args + ["--out", str(out1)]) == 0
        assert cli.main(args + ["--out", str(out2)]) == 0
        strip = lambda p: [l for l in p.read_text().splitlines()
                           if not l.startswith("# timestamp")
                           and not l.startswith("# duration")]
        assert strip(out1) == strip(out2)


class TestReports:
    def test_kernel_spectrum_table(self, tmp_path):
        out = tmp_path / "r.json"
        assert cli.main(["kernel-spectrum", "--kmax", "4", "--nystrom", "256",
                         "--quadrature", "256", "--out", str(out)]) == 0
        validate(out, "kernel-spectrum")
        table = load_report(out)["body"]["results"]["table"]
        assert [row["k"] for row in table] == [1, 2, 3, 4]
        assert all(set(row) == {"k", "theta", "lambda", "nystrom_lambda", "rel_err"}
                   for row in table)

    def test_kernel_spectrum_csv_columns(self, tmp_path):
        out = tmp_path / "r.csv"
        assert cli.main(["kernel-spectrum", "--kmax", "2", "--nystrom", "128",
                         "--quadrature", "256", "--format", "csv",
                         "--out", str(out)]) == 0
        lines = [l for l in out.read_text().splitlines() if not l.startswith("#")]
        assert lines[0] == "k,theta,lambda,nystrom_lambda,rel_err"
        assert len(lines) == 3

    def test_estimate_constant_report(self, tmp_path):
        out = tmp_path / "r.json"
        assert cli.main(["estimate-constant", "--p", "0.5", "--theta", "0.5",
                         "--dims", "2", "--trials", "20", "--seed", "11",
                         "--out", str(out)]) == 0
        validate(out, "estimate-constant")
        body = load_report(out)["body"]
        assert body["results"]["best_ratio"] >= 1.0 - 1e-9
        assert body["results"]["witness_x"]["dim"] == 2
        assert not (tmp_path / "r.json.ckpt.json").exists()

    def test_multiplier_bound_sandwich(self, tmp_path):
        out = tmp_path / "r.json"
        assert cli.main(["multiplier-bound", "--kernel", "cosine-product",
                         "--p", "1", "--trials", "2", "--samples", "8",
                         "--out", str(out)]) == 0
        validate(out, "multiplier-bound")
        res = load_report(out)["body"]["results"]
        assert res["lower"] <= res["upper"] + 1e-9

    def test_factorize_export(self, tmp_path):
        out = tmp_path / "r.json"
        assert cli.main(["factorize", "--kernel", "cosine-product", "--p", "1",
                         "--cutoff", "8", "--out", str(out)]) == 0
        validate(out, "factorize")
        res = load_report(out)["body"]["results"]
        assert res["reconstruction_error"] <= 1e-9

    def test_kfunctional_sweep(self, tmp_path):
        out = tmp_path / "r.json"
        assert cli.main(["kfunctional", "--p0", "0.5", "--p1", "2", "--dim", "3",
                         "--trials", "2", "--t", "0.5,2", "--grid", "32",
                         "--out", str(out)]) == 0
        validate(out, "kfunctional")
        rows = load_report(out)["body"]["results"]["table"]
        assert len(rows) == 4

    def test_weak_lp_sweep(self, tmp_path):
        out = tmp_path / "r.json"
        assert cli.main(["weak-lp", "--p", "1", "--q", "0.5,inf", "--dim", "3",
                         "--trials", "2", "--out", str(out)]) == 0
        validate(out, "weak-lp")

    def test_commutator_and_mazur(self, tmp_path):
        out = tmp_path / "c.json"
        assert cli.main(["commutator", "--p", "0.5", "--theta", "0.5", "--dim", "3",
                         "--trials", "5", "--out", str(out)]) == 0
        validate(out, "commutator")
        out2 = tmp_path / "m.json"
        assert cli.main(["mazur", "--p", "1", "--q", "2", "--dim", "3",
                         "--trials", "5", "--out", str(out2)]) == 0
        validate(out2, "mazur")

    def test_witness_reevaluates_offline(self, tmp_path):
        out = tmp_path / "r.json"
        assert cli.main(["bks", "--p", "1", "--theta", "0.5", "--dims", "3",
                         "--trials", "30", "--seed", "2", "--out", str(out)]) == 0
        res = load_report(out)["body"]["results"]
        from schurlab.experiments import bks_check
        x = serialize.matrix_from_json(res["witness_x"])
        y = serialize.matrix_from_json(res["witness_y"])
        replay = bks_check(x, y, 1.0, 0.5)
        assert replay.ratio == pytest.approx(res["max_ratio"], rel=1e-12)

    def test_outdir_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv("SCHURLAB_OUTDIR", str(tmp_path))
        assert cli.main(["bks", "--p", "1", "--theta", "0.5", "--trials", "5"]) == 0
        assert (tmp_path / "bks-report.json").exists()


class TestResume:
    def test_resume_reproduces_full_run(self, tmp_path):
        out_full = tmp_path / "full.json"
        args = ["estimate-constant", "--p", "0.5", "--theta", "0.5", "--dims", "2,3",
                "--trials", "30", "--seed", "4"]
        assert cli.main(args + ["--out", str(out_full)]) == 0

        # fabricate an interrupted run: library-level checkpoint written to
        # the path the CLI will look up with --resume
        from schurlab.experiments import estimate_constant
        snaps = []
        estimate_constant(0.5, 0.5, False, [2, 3], 30, seed=4,
                          checkpoint_every=20, checkpoint_cb=snaps.append)
        out_res = tmp_path / "resumed.json"
        ckpt = Path(str(out_res) + ".ckpt.json")
        ckpt.write_text(serialize.dumps_canonical(snaps[0]))
        assert cli.main(args + ["--resume", "--out", str(out_res)]) == 0
        full = load_report(out_full)["body"]["results"]
        resumed = load_report(out_res)["body"]["results"]
        assert resumed["best_ratio"] == full["best_ratio"]
        assert resumed["per_dim"] == full["per_dim"]
        assert not ckpt.exists()
