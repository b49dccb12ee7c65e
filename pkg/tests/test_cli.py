import json

import numpy as np
import pytest

from medtriage.cli import run
from medtriage.synthetic import make_keyword_corpus, write_corpus_csv


@pytest.fixture(scope="module")
def corpus_csv(tmp_path_factory, keyword_corpus):
    path = tmp_path_factory.mktemp("data") / "snapshot.csv"
    write_corpus_csv(keyword_corpus, path)
    return path


FAST_TRAIN = ["--epochs", "10", "--learning-rate", "0.5"]


class TestUsage:
    def test_unknown_subcommand_exits_2(self, capsys):
        assert run(["frobnicate"]) == 2
        capsys.readouterr()

    def test_unknown_flag_exits_2(self, corpus_csv, capsys):
        assert run(["stats", "--data", str(corpus_csv), "--frob"]) == 2
        capsys.readouterr()

    def test_missing_file_nonzero(self, capsys, tmp_path):
        assert run(["stats", "--data", str(tmp_path / "nope.csv")]) == 1
        assert "error" in capsys.readouterr().err


class TestStats:
    def test_document_and_histogram(self, corpus_csv, tmp_path, capsys):
        out = tmp_path / "stats.json"
        hist = tmp_path / "hist.csv"
        code = run(
            ["stats", "--data", str(corpus_csv), "--out", str(out), "--histogram-out", str(hist)]
        )
        assert code == 0
        capsys.readouterr()
        document = json.loads(out.read_text())
        assert document["report_count"] == 200
        assert sum(document["per_class_counts"].values()) == 200
        assert sum(row[2] for row in document["length_histogram"]) == 200
        lines = hist.read_text().splitlines()
        assert lines[0] == "bucket_start,bucket_end,count"
        assert sum(int(line.split(",")[2]) for line in lines[1:]) == 200

    def test_stdout_when_no_out_flag(self, corpus_csv, capsys):
        assert run(["stats", "--data", str(corpus_csv)]) == 0
        document = json.loads(capsys.readouterr().out)
        assert document["report_count"] == 200


class TestTrainEvaluateClassify:
    def test_full_cycle(self, corpus_csv, tmp_path, capsys):
        out_dir = tmp_path / "artifacts"
        code = run(
            ["train", "--model", "logreg", "--data", str(corpus_csv), "--seed", "7",
             "--out-dir", str(out_dir)] + FAST_TRAIN
        )
        assert code == 0
        stdout = capsys.readouterr().out
        assert "test accuracy" in stdout
        artifact_path = out_dir / "logreg.json"
        manifest_path = out_dir / "logreg.manifest.json"
        assert artifact_path.exists() and manifest_path.exists()
        manifest = json.loads(manifest_path.read_text())
        assert manifest["seed"] == 7
        assert set(manifest["config_hashes"]) == {"clean", "tfidf", "pca", "model"}
        assert manifest["test_accuracy"] >= 0.9

        report_path = tmp_path / "report.json"
        code = run(["evaluate", "--model-artifact", str(artifact_path), "--data", str(corpus_csv),
                    "--out", str(report_path)])
        assert code == 0
        table = capsys.readouterr().out
        machine_readable = json.loads(report_path.read_text())
        assert set(machine_readable) == {"accuracy", "macro_f1", "per_class", "class_order", "confusion"}
        assert machine_readable["class_order"] == ["Heart", "Brain", "Reproductive", "Digestive"]
        assert sum(sum(row) for row in machine_readable["confusion"]) == 40
        for row in ("Heart", "Brain", "Reproductive", "Digestive"):
            assert row in table
        assert "Precision" in table and "Recall" in table and "F1-score" in table

        code = run(
            ["classify", "--model-artifact", str(artifact_path), "--text",
             "aorta murmur with systole noted"]
        )
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["label"] == "Heart"
        assert sum(payload["probabilities"]) == pytest.approx(1.0, abs=1e-9)

    def test_training_twice_byte_identical(self, corpus_csv, tmp_path, capsys):
        args = ["train", "--model", "logreg", "--data", str(corpus_csv), "--seed", "3"] + FAST_TRAIN
        run(args + ["--out-dir", str(tmp_path / "a")])
        run(args + ["--out-dir", str(tmp_path / "b")])
        capsys.readouterr()
        first = (tmp_path / "a" / "logreg.json").read_bytes()
        second = (tmp_path / "b" / "logreg.json").read_bytes()
        assert first == second

    def test_custom_resource_files_are_pinned_into_the_artifact(
        self, corpus_csv, tmp_path, capsys
    ):
        stopwords = tmp_path / "stop.txt"
        stopwords.write_text("the\nof\nand\nsystole\n")  # a class keyword as stopword
        lemmas = tmp_path / "lemmas.tsv"
        lemmas.write_text("murmurs\tmurmur\n")
        out_dir = tmp_path / "artifacts"
        code = run(
            ["train", "--model", "logreg", "--data", str(corpus_csv),
             "--out-dir", str(out_dir), "--stopwords", str(stopwords),
             "--lemmas", str(lemmas)] + FAST_TRAIN
        )
        assert code == 0
        capsys.readouterr()
        from medtriage.artifacts import ModelArtifact

        artifact = ModelArtifact.load(out_dir / "logreg.json")
        assert artifact.clean_config.stopwords == {"the", "of", "and", "systole"}
        assert artifact.clean_config.lemma_dictionary == {"murmurs": "murmur"}
        assert "systole" not in artifact.tfidf.vocabulary.token_to_index

    def test_classify_empty_text_fails(self, corpus_csv, tmp_path, capsys):
        out_dir = tmp_path / "artifacts"
        run(["train", "--model", "logreg", "--data", str(corpus_csv), "--out-dir", str(out_dir)]
            + FAST_TRAIN)
        capsys.readouterr()
        code = run(["classify", "--model-artifact", str(out_dir / "logreg.json"), "--text", ""])
        assert code == 1
        assert "zero tokens" in capsys.readouterr().err


class TestExportEmbeddings:
    def test_row_count_and_centroid_separation(self, corpus_csv, tmp_path, capsys):
        out = tmp_path / "embeddings.csv"
        code = run(["export-embeddings", "--data", str(corpus_csv), "--out", str(out)])
        assert code == 0
        assert "200 rows" in capsys.readouterr().out
        lines = out.read_text().splitlines()
        assert lines[0] == "x,y,label"
        assert len(lines) == 201
        points: dict[str, list] = {}
        for line in lines[1:]:
            x, y, label = line.split(",")
            points.setdefault(label, []).append((float(x), float(y)))
        centroids = {
            label: np.mean(np.array(values), axis=0) for label, values in points.items()
        }
        labels = list(centroids)
        assert len(labels) == 4
        for i, a in enumerate(labels):
            for b in labels[i + 1 :]:
                assert np.linalg.norm(centroids[a] - centroids[b]) > 0

    def test_identical_documents_share_coordinates(self, tmp_path, capsys):
        from medtriage.corpus import CuratedExample

        examples = [
            CuratedExample(f"r{i}", "Heart", "aorta murmur stent") for i in range(3)
        ] + [CuratedExample("d1", "Brain", "seizure cortex migraine")]
        csv_path = tmp_path / "same.csv"
        write_corpus_csv(examples, csv_path)
        out = tmp_path / "embeddings.csv"
        assert run(["export-embeddings", "--data", str(csv_path), "--out", str(out)]) == 0
        capsys.readouterr()
        rows = [line.split(",") for line in out.read_text().splitlines()[1:]]
        heart_points = {(row[0], row[1]) for row in rows if row[2] == "Heart"}
        assert len(heart_points) == 1
