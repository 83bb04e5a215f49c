import numpy as np
import pandas as pd
import pytest

from maxdens.core.exceptions import CatalogError, DomainError
from maxdens.core.labels import SWEEP_COLUMNS, SWEEP_SUMMARY_COLUMNS
from maxdens.experiments.signatures import iqr_at_matched_average, load_cosmic, sbs96_labels, \
    signature_scale_sweep, sweep_summary, synthetic_catalog, write_catalog


@pytest.fixture
def catalog_file(tmp_path):
    rng = np.random.default_rng(0)
    matrix = rng.uniform(size=(96, 3))
    matrix[5, 1] = 0.0
    matrix /= matrix.sum(axis=0)
    frame = pd.DataFrame(matrix, index=pd.Index(sbs96_labels(), name="Type"), columns=["SBS1", "SBS5", "SBS40"])
    path = tmp_path / "catalog.tsv"
    frame.to_csv(path, sep="\t")
    return path


class TestLoadCosmic:
    def test_labels(self):
        labels = sbs96_labels()
        assert len(labels) == len(set(labels)) == 96
        assert labels[0] == "A[C>A]A"
        assert labels[-1] == "T[T>G]T"

    def test_floors_and_renormalizes(self, catalog_file):
        catalog = load_cosmic(catalog_file)
        assert catalog.names == ("SBS1", "SBS5", "SBS40")
        assert catalog.matrix.shape == (96, 3)
        np.testing.assert_allclose(catalog.matrix.sum(axis=0), 1.0, atol=1e-12)
        assert catalog.matrix[5, 1] > 0.0
        assert catalog.signature("SBS5").dimension == 96

    def test_round_trip(self, catalog_file, tmp_path):
        catalog = load_cosmic(catalog_file)
        write_catalog(catalog, tmp_path / "copy.tsv")
        again = load_cosmic(tmp_path / "copy.tsv")
        assert again.names == catalog.names
        assert again.mutation_types == catalog.mutation_types
        np.testing.assert_allclose(again.matrix, catalog.matrix, rtol=1e-12)

    def test_wrong_row_count(self, tmp_path):
        path = tmp_path / "short.tsv"
        pd.DataFrame({"SBS1": np.full(95, 1 / 95)}, index=sbs96_labels()[:95]).to_csv(path, sep="\t")
        with pytest.raises(CatalogError, match="95 rows"):
            load_cosmic(path)

    def test_nonnumeric_entry(self, catalog_file):
        text = catalog_file.read_text().splitlines()
        fields = text[3].split("\t")
        fields[2] = "n/a"
        text[3] = "\t".join(fields)
        catalog_file.write_text("\n".join(text) + "\n")
        with pytest.raises(CatalogError, match="invalid entry"):
            load_cosmic(catalog_file)

    def test_negative_entry(self, catalog_file):
        text = catalog_file.read_text().splitlines()
        fields = text[10].split("\t")
        fields[1] = "-0.5"
        text[10] = "\t".join(fields)
        catalog_file.write_text("\n".join(text) + "\n")
        with pytest.raises(CatalogError):
            load_cosmic(catalog_file)

    def test_empty_and_missing_files(self, tmp_path):
        empty = tmp_path / "empty.tsv"
        empty.write_text("")
        with pytest.raises(CatalogError):
            load_cosmic(empty)
        with pytest.raises(CatalogError):
            load_cosmic(tmp_path / "missing.tsv")

    def test_no_signature_columns(self, tmp_path):
        path = tmp_path / "labels_only.tsv"
        path.write_text("Type\n" + "\n".join(sbs96_labels()) + "\n")
        with pytest.raises(CatalogError, match="no signature columns"):
            load_cosmic(path)


class TestSyntheticCatalog:
    def test_shape_and_determinism(self):
        first = synthetic_catalog(10, seed=1)
        second = synthetic_catalog(10, seed=1)
        assert len(first) == 10
        assert first.matrix.shape == (96, 10)
        np.testing.assert_array_equal(first.matrix, second.matrix)
        np.testing.assert_allclose(first.matrix.sum(axis=0), 1.0, atol=1e-12)
        assert np.all(first.matrix > 0.0)

    def test_rejects_empty(self):
        with pytest.raises(DomainError):
            synthetic_catalog(0)


class TestSweep:
    def test_max_density_rows_hit_their_target(self):
        catalog = synthetic_catalog(3, seed=2)
        table = signature_scale_sweep(catalog, "max-density", [0.01, 0.05], mc_samples=500, seed=0)
        assert list(table.columns) == SWEEP_COLUMNS
        assert len(table) == 6
        converged = table[table["converged"]]
        np.testing.assert_allclose(converged["taylor"], converged["grid_value"], rtol=1e-6)

    def test_mean_errors_shrink_with_concentration(self):
        catalog = synthetic_catalog(3, seed=2)
        table = signature_scale_sweep(catalog, "mean", [10.0, 1e3, 1e5], mc_samples=500, seed=0)
        for _, group in table.groupby("signature"):
            errors = group.sort_values("grid_value")["mc_mean_cosine_error"].to_numpy()
            assert np.all(np.diff(errors) < 0.0)
            assert errors[-1] < 1e-3

    def test_deterministic_and_worker_independent(self):
        catalog = synthetic_catalog(2, seed=3)
        first = signature_scale_sweep(catalog, "mean", [10.0, 100.0], mc_samples=200, seed=5)
        second = signature_scale_sweep(catalog, "mean", [10.0, 100.0], mc_samples=200, seed=5, workers=2)
        pd.testing.assert_frame_equal(first, second)

    def test_unknown_method(self):
        with pytest.raises(DomainError):
            signature_scale_sweep(synthetic_catalog(1), "median", [1.0])

    def test_summary_columns(self):
        catalog = synthetic_catalog(4, seed=4)
        table = signature_scale_sweep(catalog, "mean", [10.0, 100.0], mc_samples=200, seed=0)
        summary = sweep_summary(table)
        assert list(summary.columns) == SWEEP_SUMMARY_COLUMNS
        assert len(summary) == 2
        assert (summary["iqr"] >= 0.0).all()

    @pytest.mark.slow
    def test_max_density_spreads_errors_evenly_across_signatures(self):
        catalog = synthetic_catalog(10, seed=0)
        table = pd.concat([
            signature_scale_sweep(catalog, "mean", np.geomspace(10.0, 1e4, 8), mc_samples=5_000, seed=0),
            signature_scale_sweep(catalog, "max-density", np.geomspace(3e-3, 0.1, 6), mc_samples=5_000, seed=0),
        ], ignore_index=True)
        matched = iqr_at_matched_average(sweep_summary(table))
        assert len(matched) > 0
        assert (matched["iqr_max_density"] < matched["iqr_mean"]).all()
