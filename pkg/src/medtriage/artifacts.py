"""Trained-model artifacts: end-to-end training, a single text-in
label-out classify path, and deterministic JSON serialization with exact
float round-trips.

An artifact is self-contained: it embeds the preprocessing resources
(stopwords, lemma dictionary), the fitted vectorizer state, and the model
parameters, so classification needs nothing but the artifact file. Large
dense arrays (the PCA basis) are stored as base64-encoded little-endian
float64; small weight matrices and all network tensors are stored as
decimal numbers. Both encodings are bit-exact.
"""

from __future__ import annotations

import base64
import hashlib
import json
from dataclasses import dataclass, field

import numpy as np

from . import classical, neural, vectorize
from .corpus import BODY_SYSTEMS, CuratedExample, SplitSpec, split_dataset
from .errors import ConfigError, InputError, UnclassifiableError
from .metrics import EvalReport, compute_metrics, confusion_matrix
from .preprocess import CleanConfig, TokenizedDoc, default_clean_config, preprocess_document
from .vectorize import PcaModel, TfidfModel, Vocabulary

ARTIFACT_VERSION = 1

LOGREG = "logreg"
FOREST = "forest"
LSTM = "lstm"
CNN_LSTM = "cnn-lstm"
MODEL_KINDS = (LOGREG, FOREST, LSTM, CNN_LSTM)


@dataclass
class TrainOptions:
    kind: str
    seed: int = 0
    train_fraction: float = 0.8
    stratified: bool = True
    max_features: int | None = None
    use_pca: bool | None = None  # default: on for logreg, off elsewhere
    variance_threshold: float = 0.95
    learning_rate: float | None = None
    epochs: int = 50
    batch_size: int = 100
    l2_penalty: float = 0.0
    n_estimators: int = 150
    max_depth: int = 4
    embed_dim: int = 64
    hidden_size: int = 64
    n_filters: int = 32
    kernel_width: int = 5
    max_len: int = 256

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise ConfigError(f"unknown model kind {self.kind!r}; choose from {MODEL_KINDS}")


@dataclass
class ModelArtifact:
    kind: str
    class_order: tuple[str, ...]
    clean_config: CleanConfig
    split: SplitSpec
    tfidf: TfidfModel
    pca: PcaModel | None
    model: object
    network_config: neural.NetworkConfig | None = None
    dataset_fingerprint: str = ""

    # ---- classification -------------------------------------------------

    def classify_tokens(self, doc: TokenizedDoc) -> tuple[str, np.ndarray]:
        if not doc.tokens:
            raise UnclassifiableError("preprocessing produced zero tokens")
        if self.kind == LOGREG:
            features = vectorize.transform_tfidf(self.tfidf, doc)
            dense = features.to_dense()
            if self.pca is not None:
                dense = vectorize.project(self.pca, dense)
            return classical.predict_softmax(self.model, dense)
        if self.kind == FOREST:
            features = vectorize.transform_tfidf(self.tfidf, doc)
            return classical.predict_forest(self.model, features)
        batch = neural.encode_sequences(
            [doc], self.tfidf.vocabulary, self.network_config.max_len
        )
        probs = neural.predict(self.model, self.network_config, batch)[0]
        return self.class_order[int(np.argmax(probs))], probs

    def classify(self, text: str) -> tuple[str, np.ndarray]:
        """Run the exact training-time preprocessing, then the model."""
        return self.classify_tokens(preprocess_document(text, self.clean_config))

    # ---- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        preprocessing = {
            "min_token_length": self.clean_config.min_token_length,
            "stopwords": sorted(self.clean_config.stopwords),
            "lemma_dictionary": dict(sorted(self.clean_config.lemma_dictionary.items())),
            "fingerprint": self.clean_config.fingerprint(),
        }
        tfidf = {
            "tokens": list(self.tfidf.vocabulary.index_to_token),
            "document_frequency": self.tfidf.document_frequency.tolist(),
            "document_count": self.tfidf.document_count,
            "smoothing": self.tfidf.smoothing,
        }
        pca = None
        if self.pca is not None:
            pca = {
                "mean_b64": _encode_f64(self.pca.mean),
                "components_b64": _encode_f64(self.pca.components),
                "shape": list(self.pca.components.shape),
                "explained_variance_ratio": self.pca.explained_variance_ratio.tolist(),
                "variance_threshold": self.pca.variance_threshold,
            }
        if self.kind == LOGREG:
            model = {
                "weights": self.model.weights.tolist(),
                "bias": self.model.bias.tolist(),
            }
        elif self.kind == FOREST:
            model = {
                "n_estimators": self.model.n_estimators,
                "max_depth": self.model.max_depth,
                "seed": self.model.seed,
                "n_features_in": self.model.n_features_in,
                "trees": [_node_to_dict(tree.root) for tree in self.model.trees],
            }
        else:
            config = self.network_config
            model = {
                "config": {
                    "architecture": config.architecture,
                    "vocab_size": config.vocab_size,
                    "embed_dim": config.embed_dim,
                    "hidden_size": config.hidden_size,
                    "n_filters": config.n_filters,
                    "kernel_width": config.kernel_width,
                    "max_len": config.max_len,
                    "epochs": config.epochs,
                    "batch_size": config.batch_size,
                    "learning_rate": config.learning_rate,
                    "seed": config.seed,
                    "n_classes": config.n_classes,
                },
                "vocabulary_hash": _vocabulary_hash(self.tfidf.vocabulary),
                "tensors": {
                    name: {"shape": list(tensor.shape), "data": tensor.ravel().tolist()}
                    for name, tensor in self.model.tensors().items()
                },
            }
        return {
            "format_version": ARTIFACT_VERSION,
            "kind": self.kind,
            "class_order": list(self.class_order),
            "preprocessing": preprocessing,
            "split": {
                "train_fraction": self.split.train_fraction,
                "seed": self.split.seed,
                "stratified": self.split.stratified,
            },
            "dataset_fingerprint": self.dataset_fingerprint,
            "tfidf": tfidf,
            "pca": pca,
            "model": model,
        }

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(self.to_json_dict(), handle, sort_keys=True, ensure_ascii=False)
            handle.write("\n")

    @classmethod
    def from_json_dict(cls, data: dict) -> "ModelArtifact":
        if data.get("format_version") != ARTIFACT_VERSION:
            raise InputError(f"unsupported artifact version {data.get('format_version')!r}")
        kind = data["kind"]
        class_order = tuple(data["class_order"])
        pre = data["preprocessing"]
        clean_config = CleanConfig(
            stopwords=frozenset(pre["stopwords"]),
            lemma_dictionary=dict(pre["lemma_dictionary"]),
            min_token_length=pre["min_token_length"],
        )
        split = SplitSpec(
            train_fraction=data["split"]["train_fraction"],
            seed=data["split"]["seed"],
            stratified=data["split"]["stratified"],
        )
        tfidf_data = data["tfidf"]
        tfidf = TfidfModel(
            vocabulary=Vocabulary.from_tokens(tfidf_data["tokens"]),
            document_frequency=np.array(tfidf_data["document_frequency"], dtype=np.int64),
            document_count=tfidf_data["document_count"],
            smoothing=tfidf_data["smoothing"],
        )
        pca = None
        if data["pca"] is not None:
            pca_data = data["pca"]
            k, dim = pca_data["shape"]
            pca = PcaModel(
                mean=_decode_f64(pca_data["mean_b64"], (dim,)),
                components=_decode_f64(pca_data["components_b64"], (k, dim)),
                explained_variance_ratio=np.array(pca_data["explained_variance_ratio"]),
                variance_threshold=pca_data["variance_threshold"],
            )
        model_data = data["model"]
        network_config = None
        if kind == LOGREG:
            model = classical.SoftmaxRegressionModel(
                weights=np.array(model_data["weights"], dtype=np.float64),
                bias=np.array(model_data["bias"], dtype=np.float64),
                class_order=class_order,
            )
        elif kind == FOREST:
            model = classical.RandomForestModel(
                trees=[
                    classical.DecisionTree(
                        root=_node_from_dict(node), max_depth=model_data["max_depth"]
                    )
                    for node in model_data["trees"]
                ],
                n_estimators=model_data["n_estimators"],
                max_depth=model_data["max_depth"],
                seed=model_data["seed"],
                class_order=class_order,
                n_features_in=model_data["n_features_in"],
            )
        else:
            config_data = model_data["config"]
            network_config = neural.NetworkConfig(**config_data)
            expected = _vocabulary_hash(tfidf.vocabulary)
            if model_data["vocabulary_hash"] != expected:
                raise InputError("artifact vocabulary hash mismatch")
            tensors = {
                name: np.array(entry["data"], dtype=np.float64).reshape(entry["shape"])
                for name, entry in model_data["tensors"].items()
            }
            conv = None
            if "conv.kernels" in tensors:
                conv = neural.Conv1dParams(
                    kernels=tensors["conv.kernels"], biases=tensors["conv.biases"]
                )
            model = neural.NetworkParams(
                embedding=tensors["embedding"],
                lstm=neural.LstmParams(
                    w_f=tensors["lstm.w_f"],
                    w_i=tensors["lstm.w_i"],
                    w_o=tensors["lstm.w_o"],
                    w_g=tensors["lstm.w_g"],
                    b_f=tensors["lstm.b_f"],
                    b_i=tensors["lstm.b_i"],
                    b_o=tensors["lstm.b_o"],
                    b_g=tensors["lstm.b_g"],
                ),
                w_out=tensors["w_out"],
                b_out=tensors["b_out"],
                conv=conv,
            )
        return cls(
            kind=kind,
            class_order=class_order,
            clean_config=clean_config,
            split=split,
            tfidf=tfidf,
            pca=pca,
            model=model,
            network_config=network_config,
            dataset_fingerprint=data.get("dataset_fingerprint", ""),
        )

    @classmethod
    def load(cls, path) -> "ModelArtifact":
        with open(path, encoding="utf-8") as handle:
            return cls.from_json_dict(json.load(handle))

    def section_hashes(self) -> dict[str, str]:
        """Stable hashes of each artifact section, recorded in manifests."""
        data = self.to_json_dict()
        return {
            "clean": data["preprocessing"]["fingerprint"],
            "tfidf": _sha256_json(data["tfidf"]),
            "pca": _sha256_json(data["pca"]),
            "model": _sha256_json(data["model"]),
        }


@dataclass
class TrainResult:
    artifact: ModelArtifact
    report: EvalReport
    loss_trace: list[float] = field(default_factory=list)

    @property
    def test_accuracy(self) -> float:
        return self.report.accuracy


def train_artifact(
    examples: list[CuratedExample],
    options: TrainOptions,
    clean_config: CleanConfig | None = None,
    dataset_fingerprint: str = "",
) -> TrainResult:
    """Split, preprocess, fit the requested model family, and evaluate on
    the held-out test side."""
    clean_config = clean_config or default_clean_config()
    split = SplitSpec(
        train_fraction=options.train_fraction, seed=options.seed, stratified=options.stratified
    )
    train_set, test_set = split_dataset(examples, split)
    train_docs = [
        preprocess_document(example.transcription, clean_config, example.id)
        for example in train_set
    ]
    train_labels = [example.label for example in train_set]

    tfidf = vectorize.fit_tfidf(
        [doc for doc in train_docs if doc.tokens], max_features=options.max_features
    )
    pca = None
    loss_trace: list[float] = []

    if options.kind == LOGREG:
        vectors = [vectorize.transform_tfidf(tfidf, doc) for doc in train_docs]
        matrix = vectorize.to_matrix(vectors)
        use_pca = True if options.use_pca is None else options.use_pca
        if use_pca:
            pca = vectorize.fit_pca(matrix, options.variance_threshold)
            matrix = vectorize.project(pca, matrix)
        config = classical.GdConfig(
            learning_rate=options.learning_rate or 0.1,
            epochs=options.epochs,
            batch_size=options.batch_size,
            seed=options.seed,
            l2_penalty=options.l2_penalty,
        )
        model, loss_trace = classical.train_softmax(matrix, train_labels, config, BODY_SYSTEMS)
        network_config = None
    elif options.kind == FOREST:
        vectors = [vectorize.transform_tfidf(tfidf, doc) for doc in train_docs]
        matrix = vectorize.to_matrix(vectors)
        if options.use_pca:
            pca = vectorize.fit_pca(matrix, options.variance_threshold)
            matrix = vectorize.project(pca, matrix)
        model = classical.train_forest(
            matrix,
            train_labels,
            n_estimators=options.n_estimators,
            max_depth=options.max_depth,
            seed=options.seed,
            class_order=BODY_SYSTEMS,
        )
        network_config = None
    else:
        network_config = neural.NetworkConfig(
            architecture=neural.LSTM if options.kind == LSTM else neural.CNN_LSTM,
            vocab_size=tfidf.vocabulary.size,
            embed_dim=options.embed_dim,
            hidden_size=options.hidden_size,
            n_filters=options.n_filters,
            kernel_width=options.kernel_width,
            max_len=options.max_len,
            epochs=options.epochs,
            batch_size=options.batch_size,
            learning_rate=options.learning_rate or 2.0,
            seed=options.seed,
            n_classes=len(BODY_SYSTEMS),
        )
        batch = neural.encode_sequences(train_docs, tfidf.vocabulary, options.max_len)
        positions = {name: i for i, name in enumerate(BODY_SYSTEMS)}
        batch.labels = np.array([positions[label] for label in train_labels], dtype=np.int64)
        model, loss_trace = neural.train_network(batch, network_config)

    artifact = ModelArtifact(
        kind=options.kind,
        class_order=BODY_SYSTEMS,
        clean_config=clean_config,
        split=split,
        tfidf=tfidf,
        pca=pca,
        model=model,
        network_config=network_config,
        dataset_fingerprint=dataset_fingerprint,
    )
    report = evaluate_artifact(artifact, test_set)
    return TrainResult(artifact=artifact, report=report, loss_trace=loss_trace)


def evaluate_artifact(artifact: ModelArtifact, examples: list[CuratedExample]) -> EvalReport:
    """Classify each example with the artifact's own preprocessing and
    compare against the stored labels. Unclassifiable documents count as
    wrong (predicted as no class matches: they take the first class)."""
    truths, predictions = [], []
    for example in examples:
        truths.append(example.label)
        try:
            label, _ = artifact.classify(example.transcription)
        except UnclassifiableError:
            label = artifact.class_order[0]
        predictions.append(label)
    return compute_metrics(confusion_matrix(truths, predictions, artifact.class_order))


def dataset_sha256(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _encode_f64(array: np.ndarray) -> str:
    return base64.b64encode(np.ascontiguousarray(array, dtype="<f8").tobytes()).decode("ascii")


def _decode_f64(payload: str, shape) -> np.ndarray:
    return np.frombuffer(base64.b64decode(payload), dtype="<f8").reshape(shape).copy()


def _vocabulary_hash(vocabulary: Vocabulary) -> str:
    joined = "\n".join(vocabulary.index_to_token).encode("utf-8")
    return hashlib.sha256(joined).hexdigest()


def _sha256_json(data) -> str:
    return hashlib.sha256(
        json.dumps(data, sort_keys=True, ensure_ascii=False).encode("utf-8")
    ).hexdigest()


def _node_to_dict(node: classical.TreeNode) -> dict:
    if node.is_leaf:
        return {"leaf": node.class_counts.tolist()}
    return {
        "feature": node.feature,
        "threshold": node.threshold,
        "left": _node_to_dict(node.left),
        "right": _node_to_dict(node.right),
    }


def _node_from_dict(data: dict) -> classical.TreeNode:
    if "leaf" in data:
        return classical.TreeNode(class_counts=np.array(data["leaf"], dtype=np.float64))
    return classical.TreeNode(
        feature=data["feature"],
        threshold=data["threshold"],
        left=_node_from_dict(data["left"]),
        right=_node_from_dict(data["right"]),
    )
