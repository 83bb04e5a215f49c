import json

import pandas as pd
import pytest

from maxdens import __version__
from maxdens.cli import main
from maxdens.core.labels import COVERAGE_COLUMNS, KS_COLUMNS, LOGIT_COLUMNS, LOGIT_SAMPLE_COLUMNS, \
    MANIFEST_FILE_NAME, SWEEP_COLUMNS


def error_payload(capsys) -> dict:
    return json.loads(capsys.readouterr().err.strip().splitlines()[-1])


class TestSolve:
    def test_symmetric_beta(self, capsys):
        assert main(["solve", "--target", "0.5", "--constraint", "concentration", "--value", "10"]) == 0
        output = json.loads(capsys.readouterr().out)
        assert output["constraint"] == {"kind": "concentration", "value": 10.0}
        assert output["report"]["converged"] is True
        assert output["report"]["params"]["a"] == pytest.approx(5.0, rel=1e-8)
        assert output["report"]["params"]["b"] == pytest.approx(5.0, rel=1e-8)
        assert output["summary"]["mean"] == pytest.approx(0.5)

    def test_dirichlet(self, capsys):
        argv = ["solve", "--family", "dirichlet", "--target", "0.2,0.3,0.5", "--constraint", "cosine",
                "--value", "0.05"]
        assert main(argv) == 0
        output = json.loads(capsys.readouterr().out)
        assert len(output["report"]["params"]["a"]) == 3
        assert output["summary"]["taylor_mean_cosine_error"] == pytest.approx(0.05, rel=1e-6)

    def test_infeasible_variance(self, capsys):
        assert main(["solve", "--target", "0.5", "--constraint", "variance", "--value", "0.26"]) == 2
        assert error_payload(capsys)["alias"] == "infeasible_constraint"

    def test_convergence_failure(self, capsys):
        argv = ["solve", "--family", "dirichlet", "--target", "0.2,0.3,0.5", "--constraint", "concentration",
                "--value", "10", "--maxiter", "1", "--max-restarts", "0"]
        assert main(argv) == 3
        assert error_payload(capsys)["alias"] == "convergence_failure"

    def test_beta_target_must_be_a_single_number(self, capsys):
        assert main(["solve", "--target", "0.2,0.8", "--constraint", "concentration", "--value", "1"]) == 1
        assert error_payload(capsys)["alias"] == "domain_error"

    def test_missing_constraint_is_a_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["solve", "--target", "0.5", "--value", "1"])
        assert excinfo.value.code == 2


class TestExperimentCommands:
    def test_coverage(self, tmp_path):
        argv = ["coverage", "--theta-points", "4", "--out", str(tmp_path)]
        assert main(argv) == 0
        table = pd.read_csv(tmp_path / "coverage.csv")
        assert list(table.columns) == COVERAGE_COLUMNS
        assert len(table) == 2 * 2 * 4
        manifest = json.loads((tmp_path / MANIFEST_FILE_NAME).read_text())
        assert manifest["subcommand"] == "coverage"
        assert manifest["version"] == __version__
        assert manifest["outputs"] == ["coverage.csv"]
        assert manifest["seed"] is None
        assert "out" not in manifest["parameters"]

    def test_unknown_prior_method(self, tmp_path, capsys):
        assert main(["coverage", "--methods", "mean,bogus", "--out", str(tmp_path)]) == 1
        assert error_payload(capsys)["alias"] == "domain_error"
        assert not (tmp_path / "coverage.csv").exists()

    def test_mh(self, tmp_path):
        argv = ["mh", "--targets", "A", "--methods", "II,IV", "--reps", "2", "--iters", "200", "--burnin", "10",
                "--max-lag", "5", "--seed", "7", "--out", str(tmp_path)]
        assert main(argv) == 0
        ks = pd.read_csv(tmp_path / "mh_ks.csv")
        assert list(ks.columns) == KS_COLUMNS
        assert len(ks) == 4
        assert len(pd.read_csv(tmp_path / "mh_acf.csv")) == 2 * 6
        assert len(pd.read_csv(tmp_path / "mh_acf_curves.csv")) == 2 * 2 * 6
        assert json.loads((tmp_path / MANIFEST_FILE_NAME).read_text())["seed"] == 7

    def test_percentiles(self, tmp_path):
        argv = ["percentiles", "--c", "0.2", "--alphas", "1,10", "--methods", "mean,median", "--cdf-points", "20",
                "--out", str(tmp_path)]
        assert main(argv) == 0
        assert len(pd.read_csv(tmp_path / "percentiles.csv")) == 2 * 2 * 5
        assert len(pd.read_csv(tmp_path / "cdf.csv")) == 2 * 2 * 20

    def test_logit_beta(self, tmp_path):
        assert main(["logit", "--c", "0.2", "--alphas", "1", "--y-points", "50", "--out", str(tmp_path)]) == 0
        table = pd.read_csv(tmp_path / "logit.csv")
        assert list(table.columns) == LOGIT_COLUMNS
        assert len(table) == 3 * 50

    def test_logit_dirichlet(self, tmp_path):
        argv = ["logit", "--family", "dirichlet", "--c", "0.2,0.3,0.5", "--alphas", "5", "--samples", "100",
                "--out", str(tmp_path)]
        assert main(argv) == 0
        table = pd.read_csv(tmp_path / "logit_samples.csv")
        assert list(table.columns) == LOGIT_SAMPLE_COLUMNS
        assert len(table) == 2 * 100

    def test_signatures(self, tmp_path):
        argv = ["signatures", "--synthetic", "2", "--alphas", "10,100", "--kappas", "0.01,0.05", "--mc-samples",
                "100", "--out", str(tmp_path)]
        assert main(argv) == 0
        table = pd.read_csv(tmp_path / "signatures.csv")
        assert list(table.columns) == SWEEP_COLUMNS
        assert len(table) == 2 * 2 * 2
        assert (tmp_path / "signatures_summary.csv").exists()
        assert (tmp_path / "signatures_matched.csv").exists()

    def test_signatures_needs_a_catalog_source(self):
        with pytest.raises(SystemExit):
            main(["signatures", "--alphas", "10"])

    def test_missing_catalog_file(self, tmp_path, capsys):
        argv = ["signatures", "--catalog", str(tmp_path / "missing.tsv"), "--out", str(tmp_path)]
        assert main(argv) == 1
        assert error_payload(capsys)["alias"] == "catalog_error"


class TestRerun:
    @pytest.mark.parametrize("argv,outputs", [
        (["mh", "--targets", "B", "--methods", "IV", "--reps", "2", "--iters", "150", "--burnin", "5",
          "--max-lag", "3", "--seed", "11"], ["mh_ks.csv", "mh_acf.csv", "mh_acf_curves.csv"]),
        (["coverage", "--theta-points", "3", "--mode", "fixed"], ["coverage.csv"]),
    ])
    def test_reproduces_outputs(self, tmp_path, argv, outputs):
        first, second = tmp_path / "first", tmp_path / "second"
        assert main(argv + ["--out", str(first)]) == 0
        assert main(["rerun", str(first / MANIFEST_FILE_NAME), "--out", str(second)]) == 0
        for name in outputs:
            assert (second / name).read_bytes() == (first / name).read_bytes()
        assert (second / MANIFEST_FILE_NAME).read_text() == (first / MANIFEST_FILE_NAME).read_text()

    def test_defaults_to_the_manifest_directory(self, tmp_path):
        assert main(["coverage", "--theta-points", "2", "--methods", "mean", "--out", str(tmp_path)]) == 0
        before = (tmp_path / "coverage.csv").read_bytes()
        (tmp_path / "coverage.csv").unlink()
        assert main(["rerun", str(tmp_path / MANIFEST_FILE_NAME)]) == 0
        assert (tmp_path / "coverage.csv").read_bytes() == before

    def test_unknown_subcommand(self, tmp_path, capsys):
        manifest = tmp_path / MANIFEST_FILE_NAME
        manifest.write_text(json.dumps({"subcommand": "plot", "parameters": {}, "version": __version__}))
        assert main(["rerun", str(manifest)]) == 1
        assert error_payload(capsys)["alias"] == "domain_error"

    def test_missing_manifest(self, tmp_path, capsys):
        assert main(["rerun", str(tmp_path / "nowhere.json")]) == 1
        assert error_payload(capsys)["alias"] == "maxdens_error"
