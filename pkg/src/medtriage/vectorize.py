"""TF-IDF vectorization and principal-component reduction.

The TF-IDF variant is pinned: term frequency is count over document
length, inverse document frequency is ln((1 + N) / (1 + df)) + 1, and
each document vector is L2-normalized. PCA is an exact eigendecomposition
of the centered covariance, switching to the N x N Gram matrix when the
feature dimension exceeds the document count.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, EmptyDatasetError, ShapeError
from .preprocess import TokenizedDoc

SMOOTHING_TAG = "ln1p-df1p-plus1-l2"


@dataclass(frozen=True)
class Vocabulary:
    token_to_index: dict[str, int]
    index_to_token: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.index_to_token)

    @classmethod
    def from_tokens(cls, tokens) -> "Vocabulary":
        ordered = tuple(sorted(tokens))
        return cls(
            token_to_index={token: i for i, token in enumerate(ordered)},
            index_to_token=ordered,
        )


@dataclass(frozen=True)
class FeatureVector:
    dimension: int
    indices: np.ndarray
    weights: np.ndarray

    def to_dense(self) -> np.ndarray:
        dense = np.zeros(self.dimension)
        dense[self.indices] = self.weights
        return dense


@dataclass(frozen=True)
class TfidfModel:
    vocabulary: Vocabulary
    document_frequency: np.ndarray
    document_count: int
    smoothing: str = SMOOTHING_TAG

    def idf(self) -> np.ndarray:
        return np.log((1.0 + self.document_count) / (1.0 + self.document_frequency)) + 1.0


def fit_tfidf(docs: list[TokenizedDoc], max_features: int | None = None) -> TfidfModel:
    """Build the vocabulary and document frequencies.

    With max_features set, the highest-document-frequency tokens are kept,
    ties broken lexicographically.
    """
    df_counter: Counter[str] = Counter()
    n_docs = 0
    for doc in docs:
        n_docs += 1
        df_counter.update(set(doc.tokens))
    if not df_counter:
        raise EmptyDatasetError("all documents are empty; vocabulary would be empty")
    tokens = df_counter.keys()
    if max_features is not None and max_features < len(df_counter):
        ranked = sorted(df_counter.items(), key=lambda item: (-item[1], item[0]))
        tokens = [token for token, _ in ranked[:max_features]]
    vocabulary = Vocabulary.from_tokens(tokens)
    df = np.array([df_counter[token] for token in vocabulary.index_to_token], dtype=np.int64)
    return TfidfModel(vocabulary=vocabulary, document_frequency=df, document_count=n_docs)


def transform_tfidf(model: TfidfModel, doc: TokenizedDoc) -> FeatureVector:
    """tf * idf per token, L2-normalized over the document.

    Out-of-vocabulary tokens contribute no entries (they still count
    toward document length, which cancels under the L2 norm). Empty
    documents map to the zero vector.
    """
    counts: Counter[int] = Counter()
    for token in doc.tokens:
        index = model.vocabulary.token_to_index.get(token)
        if index is not None:
            counts[index] += 1
    if not counts:
        return FeatureVector(
            dimension=model.vocabulary.size,
            indices=np.array([], dtype=np.int64),
            weights=np.array([]),
        )
    indices = np.array(sorted(counts), dtype=np.int64)
    tf = np.array([counts[i] for i in indices], dtype=np.float64) / len(doc.tokens)
    idf = np.log((1.0 + model.document_count) / (1.0 + model.document_frequency[indices])) + 1.0
    weights = tf * idf
    weights /= np.linalg.norm(weights)
    return FeatureVector(dimension=model.vocabulary.size, indices=indices, weights=weights)


def to_matrix(vectors: list[FeatureVector]) -> np.ndarray:
    """Stack sparse feature vectors into a dense (docs x dim) matrix."""
    if not vectors:
        raise EmptyDatasetError("no vectors to stack")
    dim = vectors[0].dimension
    matrix = np.zeros((len(vectors), dim))
    for row, vector in enumerate(vectors):
        if vector.dimension != dim:
            raise ShapeError(f"vector dimension {vector.dimension} != {dim}")
        matrix[row, vector.indices] = vector.weights
    return matrix


@dataclass(frozen=True)
class PcaModel:
    mean: np.ndarray
    components: np.ndarray
    explained_variance_ratio: np.ndarray
    variance_threshold: float

    @property
    def n_components(self) -> int:
        return self.components.shape[0]


def fit_pca(
    vectors,
    variance_threshold: float = 0.95,
    n_components: int | None = None,
) -> PcaModel:
    """Exact PCA keeping the fewest components whose cumulative explained
    variance reaches the threshold (or exactly n_components if given).

    Component signs are fixed so each component's largest-magnitude entry
    is positive, which makes fitted artifacts deterministic.
    """
    matrix = vectors if isinstance(vectors, np.ndarray) else to_matrix(list(vectors))
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] < 2:
        raise ConfigError("PCA needs at least 2 vectors")
    if not 0 < variance_threshold <= 1:
        raise ConfigError(f"variance threshold must be in (0, 1], got {variance_threshold}")
    n, d = matrix.shape
    mean = matrix.mean(axis=0)
    centered = matrix - mean
    denom = n - 1

    if d <= n:
        cov = centered.T @ centered / denom
        eigenvalues, eigenvectors = np.linalg.eigh(cov)
        order = np.argsort(eigenvalues)[::-1]
        eigenvalues = eigenvalues[order]
        components = eigenvectors[:, order].T
    else:
        # Gram trick: the N x N matrix shares the covariance spectrum and
        # its eigenvectors map back through the centered data.
        gram = centered @ centered.T / denom
        eigenvalues, eigenvectors = np.linalg.eigh(gram)
        order = np.argsort(eigenvalues)[::-1]
        eigenvalues = eigenvalues[order]
        eigenvectors = eigenvectors[:, order]
        positive = eigenvalues > max(eigenvalues.max(), 0.0) * 1e-12
        eigenvalues = eigenvalues[positive]
        scale = np.sqrt(eigenvalues * denom)
        components = (centered.T @ eigenvectors[:, positive] / scale).T

    total_variance = float(np.sum(centered * centered)) / denom
    if total_variance <= 0:
        raise ConfigError("data has zero variance; PCA is undefined")
    tol = eigenvalues.max() * 1e-12
    rank = int(np.sum(eigenvalues > tol))
    eigenvalues = eigenvalues[:rank]
    components = components[:rank]
    ratios = eigenvalues / total_variance

    if n_components is not None:
        if n_components < 1:
            raise ConfigError("n_components must be >= 1")
        k = min(n_components, rank)
    else:
        cumulative = np.cumsum(ratios)
        crossing = np.searchsorted(cumulative, variance_threshold - 1e-12)
        k = min(int(crossing) + 1, rank)

    components = components[:k].copy()
    signs = np.sign(components[np.arange(k), np.abs(components).argmax(axis=1)])
    signs[signs == 0] = 1.0
    components *= signs[:, None]
    return PcaModel(
        mean=mean,
        components=components,
        explained_variance_ratio=ratios[:k].copy(),
        variance_threshold=variance_threshold,
    )


def project(model: PcaModel, vector) -> np.ndarray:
    """Map a vector (or matrix of row vectors) onto the principal axes."""
    if isinstance(vector, FeatureVector):
        vector = vector.to_dense()
    array = np.asarray(vector, dtype=np.float64)
    if array.shape[-1] != model.mean.shape[0]:
        raise ShapeError(
            f"vector dimension {array.shape[-1]} != model dimension {model.mean.shape[0]}"
        )
    return (array - model.mean) @ model.components.T


def reconstruct(model: PcaModel, projected) -> np.ndarray:
    """Inverse of project; exact when the model retained full rank."""
    array = np.asarray(projected, dtype=np.float64)
    if array.shape[-1] != model.n_components:
        raise ShapeError(
            f"projection dimension {array.shape[-1]} != component count {model.n_components}"
        )
    return array @ model.components + model.mean
