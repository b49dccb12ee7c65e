"""Operator command line: stats, train, evaluate, classify,
export-embeddings, serve.

Every artifact-producing command writes a manifest next to the artifact
recording the seed, option set, dataset fingerprint, and section hashes;
re-running with the same inputs reproduces the artifact byte for byte.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import vectorize
from .artifacts import (
    MODEL_KINDS,
    ModelArtifact,
    TrainOptions,
    dataset_sha256,
    evaluate_artifact,
    train_artifact,
)
from .corpus import SpecialtyMapping, compute_stats, curate, load_reports, split_dataset
from .errors import MedTriageError, ShapeError
from .metrics import render_table
from .preprocess import default_clean_config, preprocess_document


def _add_data_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--data", required=True, help="snapshot CSV path")
    parser.add_argument("--mapping", help="specialty mapping TSV (default: built-in table)")


def _add_resource_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--stopwords", help="stopword file, one word per line")
    parser.add_argument("--lemmas", help="lemma dictionary file, surface<TAB>root per line")


def _clean_config_from(args):
    if not getattr(args, "stopwords", None) and not getattr(args, "lemmas", None):
        return default_clean_config()
    from .preprocess import CleanConfig, load_lemma_dictionary, load_stopwords

    base = default_clean_config()
    return CleanConfig(
        stopwords=load_stopwords(args.stopwords) if args.stopwords else base.stopwords,
        lemma_dictionary=(
            load_lemma_dictionary(args.lemmas) if args.lemmas else base.lemma_dictionary
        ),
    )


def _load_examples(args):
    mapping = (
        SpecialtyMapping.from_file(args.mapping) if args.mapping else SpecialtyMapping.default()
    )
    reports = load_reports(args.data)
    examples, curation = curate(reports, mapping)
    return examples, curation


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="medtriage")
    commands = parser.add_subparsers(dest="command", required=True)

    stats = commands.add_parser("stats", help="dataset statistics and length histogram")
    _add_data_flags(stats)
    stats.add_argument("--out", help="write the stats document here instead of stdout")
    stats.add_argument("--histogram-out", help="write bucket_start,bucket_end,count rows")

    train = commands.add_parser("train", help="train one model family and save an artifact")
    _add_data_flags(train)
    _add_resource_flags(train)
    train.add_argument("--model", required=True, choices=MODEL_KINDS)
    train.add_argument("--seed", type=int, default=0)
    train.add_argument("--out-dir", default="artifacts")
    train.add_argument("--name", help="artifact file stem (default: the model kind)")
    train.add_argument("--train-fraction", type=float, default=0.8)
    train.add_argument("--no-stratify", action="store_true")
    train.add_argument("--max-features", type=int)
    train.add_argument("--epochs", type=int, default=50)
    train.add_argument("--batch-size", type=int, default=100)
    train.add_argument("--learning-rate", type=float)
    train.add_argument("--l2-penalty", type=float, default=0.0)
    train.add_argument("--variance-threshold", type=float, default=0.95)
    train.add_argument(
        "--pca",
        choices=("on", "off"),
        help="force PCA on or off (default: on for logreg, off otherwise)",
    )
    train.add_argument("--n-estimators", type=int, default=150)
    train.add_argument("--max-depth", type=int, default=4)
    train.add_argument("--embed-dim", type=int, default=64)
    train.add_argument("--hidden-size", type=int, default=64)
    train.add_argument("--n-filters", type=int, default=32)
    train.add_argument("--kernel-width", type=int, default=5)
    train.add_argument("--max-len", type=int, default=256)

    evaluate = commands.add_parser("evaluate", help="score an artifact on its held-out split")
    _add_data_flags(evaluate)
    evaluate.add_argument("--model-artifact", required=True)
    evaluate.add_argument("--out", help="also write the machine-readable report here")

    classify = commands.add_parser("classify", help="classify a single report")
    classify.add_argument("--model-artifact", required=True)
    payload = classify.add_mutually_exclusive_group(required=True)
    payload.add_argument("--text")
    payload.add_argument("--file")

    export = commands.add_parser(
        "export-embeddings", help="write x,y,label rows from a 2-component projection"
    )
    _add_data_flags(export)
    _add_resource_flags(export)
    export.add_argument("--out", required=True)
    export.add_argument("--max-features", type=int)
    export.add_argument(
        "--model-artifact", help="reuse a trained artifact's vectorizer and axes"
    )

    serve = commands.add_parser("serve", help="run the classification service")
    serve.add_argument("--config", required=True, help="service config JSON")

    return parser


def _cmd_stats(args) -> int:
    examples, curation = _load_examples(args)
    stats = compute_stats(examples)
    document = stats.to_dict()
    document["curation"] = {
        "kept": curation.kept,
        "excluded_unmapped": curation.excluded_unmapped,
        "excluded_empty": curation.excluded_empty,
    }
    text = json.dumps(document, indent=2, ensure_ascii=False)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    if args.histogram_out:
        lines = ["bucket_start,bucket_end,count"]
        lines += [f"{start},{end},{count}" for start, end, count in stats.length_histogram]
        Path(args.histogram_out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return 0


def _cmd_train(args) -> int:
    examples, _ = _load_examples(args)
    options = TrainOptions(
        kind=args.model,
        seed=args.seed,
        train_fraction=args.train_fraction,
        stratified=not args.no_stratify,
        max_features=args.max_features,
        use_pca=None if args.pca is None else args.pca == "on",
        variance_threshold=args.variance_threshold,
        learning_rate=args.learning_rate,
        epochs=args.epochs,
        batch_size=args.batch_size,
        l2_penalty=args.l2_penalty,
        n_estimators=args.n_estimators,
        max_depth=args.max_depth,
        embed_dim=args.embed_dim,
        hidden_size=args.hidden_size,
        n_filters=args.n_filters,
        kernel_width=args.kernel_width,
        max_len=args.max_len,
    )
    fingerprint = dataset_sha256(args.data)
    result = train_artifact(
        examples, options, clean_config=_clean_config_from(args), dataset_fingerprint=fingerprint
    )

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    name = args.name or args.model
    artifact_path = out_dir / f"{name}.json"
    result.artifact.save(artifact_path)
    manifest = {
        "kind": args.model,
        "seed": args.seed,
        "command_line": ["medtriage"] + getattr(args, "_argv", []),
        "created_at": datetime.now(timezone.utc).isoformat(),
        "dataset_fingerprint": fingerprint,
        "config_hashes": result.artifact.section_hashes(),
        "options": {k: v for k, v in vars(options).items()},
        "test_accuracy": result.test_accuracy,
        "artifact_sha256": dataset_sha256(artifact_path),
    }
    manifest_path = out_dir / f"{name}.manifest.json"
    manifest_path.write_text(
        json.dumps(manifest, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
    )
    print(f"artifact: {artifact_path}")
    print(f"manifest: {manifest_path}")
    print(f"test accuracy: {result.test_accuracy:.4f}")
    print(render_table(result.report))
    return 0


def _cmd_evaluate(args) -> int:
    artifact = ModelArtifact.load(args.model_artifact)
    examples, _ = _load_examples(args)
    fingerprint = dataset_sha256(args.data)
    if artifact.dataset_fingerprint and fingerprint != artifact.dataset_fingerprint:
        print(
            "warning: dataset fingerprint differs from the one the artifact was trained on",
            file=sys.stderr,
        )
    _, test_set = split_dataset(examples, artifact.split)
    report = evaluate_artifact(artifact, test_set)
    print(f"test accuracy: {report.accuracy:.4f}")
    print(render_table(report))
    if args.out:
        Path(args.out).write_text(
            json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n",
            encoding="utf-8",
        )
    return 0


def _cmd_classify(args) -> int:
    artifact = ModelArtifact.load(args.model_artifact)
    text = args.text if args.text is not None else Path(args.file).read_text(encoding="utf-8")
    label, probs = artifact.classify(text)
    print(
        json.dumps(
            {
                "label": label,
                "probabilities": [float(p) for p in probs],
                "class_order": list(artifact.class_order),
            },
            ensure_ascii=False,
        )
    )
    return 0


def _cmd_export_embeddings(args) -> int:
    examples, _ = _load_examples(args)
    clean_config = _clean_config_from(args)
    if args.model_artifact:
        artifact = ModelArtifact.load(args.model_artifact)
        clean_config = artifact.clean_config
        tfidf = artifact.tfidf
        pca = artifact.pca
        if pca is None or pca.n_components < 2:
            raise ShapeError("artifact has no 2-component projection to export")
    else:
        tfidf = None
        pca = None
    docs = [
        preprocess_document(example.transcription, clean_config, example.id)
        for example in examples
    ]
    if tfidf is None:
        tfidf = vectorize.fit_tfidf(
            [doc for doc in docs if doc.tokens], max_features=args.max_features
        )
    matrix = vectorize.to_matrix([vectorize.transform_tfidf(tfidf, doc) for doc in docs])
    if pca is None:
        pca = vectorize.fit_pca(matrix, n_components=2)
    points = vectorize.project(pca, matrix)[:, :2]
    if points.shape[1] < 2:  # rank-1 data still exports a y column
        import numpy as np

        points = np.pad(points, ((0, 0), (0, 2 - points.shape[1])))
    lines = ["x,y,label"]
    for (x, y), example in zip(points, examples):
        lines.append(f"{float(x)!r},{float(y)!r},{example.label}")
    Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(examples)} rows to {args.out}")
    return 0


def _cmd_serve(args) -> int:
    from .service import ServiceConfig, serve

    serve(ServiceConfig.from_file(args.config))
    return 0


_HANDLERS = {
    "stats": _cmd_stats,
    "train": _cmd_train,
    "evaluate": _cmd_evaluate,
    "classify": _cmd_classify,
    "export-embeddings": _cmd_export_embeddings,
    "serve": _cmd_serve,
}


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return int(exit_request.code or 0)
    args._argv = list(argv)
    try:
        return _HANDLERS[args.command](args)
    except MedTriageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
