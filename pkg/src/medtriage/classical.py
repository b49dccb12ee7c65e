"""Softmax-regression and random-forest classifiers built from first
principles on top of numpy."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .corpus import BODY_SYSTEMS
from .errors import ConfigError, DivergenceError, InputError, ShapeError
from .mathops import one_hot, softmax
from .vectorize import FeatureVector, to_matrix


@dataclass(frozen=True)
class GdConfig:
    learning_rate: float = 0.1
    epochs: int = 50
    batch_size: int = 100
    seed: int = 0
    l2_penalty: float = 0.0

    def __post_init__(self):
        if self.learning_rate <= 0:
            raise ConfigError(f"learning_rate must be > 0, got {self.learning_rate}")
        if self.epochs < 1:
            raise ConfigError(f"epochs must be >= 1, got {self.epochs}")
        if self.batch_size < 1:
            raise ConfigError(f"batch_size must be >= 1, got {self.batch_size}")
        if self.l2_penalty < 0:
            raise ConfigError(f"l2_penalty must be >= 0, got {self.l2_penalty}")


@dataclass
class SoftmaxRegressionModel:
    weights: np.ndarray
    bias: np.ndarray
    class_order: tuple[str, ...]


def _as_matrix(features) -> np.ndarray:
    if isinstance(features, np.ndarray):
        return np.asarray(features, dtype=np.float64)
    if features and isinstance(features[0], FeatureVector):
        return to_matrix(list(features))
    return np.asarray(features, dtype=np.float64)


def _label_indices(labels, class_order: tuple[str, ...]) -> np.ndarray:
    positions = {name: i for i, name in enumerate(class_order)}
    try:
        indices = np.array([positions[label] for label in labels], dtype=np.int64)
    except KeyError as err:
        raise InputError(f"label {err.args[0]!r} not in class order {class_order}") from None
    present = set(indices.tolist())
    missing = [name for i, name in enumerate(class_order) if i not in present]
    if missing:
        raise InputError(f"no training examples for classes {missing}")
    return indices


def train_softmax(
    features,
    labels,
    config: GdConfig,
    class_order: tuple[str, ...] = BODY_SYSTEMS,
) -> tuple[SoftmaxRegressionModel, list[float]]:
    """Mini-batch gradient descent on categorical cross-entropy.

    Parameters start at zero (so the untrained model is the uniform
    predictor) and the shuffle order is seeded, making training
    deterministic. Returns the model and the per-epoch mean loss trace.
    """
    x = _as_matrix(features)
    y = _label_indices(labels, class_order)
    if len(x) != len(y):
        raise InputError(f"{len(x)} feature rows but {len(y)} labels")
    n, dim = x.shape
    n_classes = len(class_order)
    weights = np.zeros((n_classes, dim))
    bias = np.zeros(n_classes)
    rng = np.random.default_rng(config.seed)
    trace = []
    for epoch in range(config.epochs):
        order = rng.permutation(n)
        loss_sum = 0.0
        with np.errstate(over="ignore", invalid="ignore"):
            for start in range(0, n, config.batch_size):
                batch = order[start : start + config.batch_size]
                xb, yb = x[batch], y[batch]
                probs = softmax(xb @ weights.T + bias)
                picked = probs[np.arange(len(batch)), yb]
                loss_sum += float(-np.sum(np.log(np.maximum(picked, 1e-12))))
                grad_logits = (probs - one_hot(yb, n_classes)) / len(batch)
                weights -= config.learning_rate * (
                    grad_logits.T @ xb + config.l2_penalty * weights
                )
                bias -= config.learning_rate * grad_logits.sum(axis=0)
        epoch_loss = loss_sum / n
        if not math.isfinite(epoch_loss):
            raise DivergenceError(epoch)
        trace.append(epoch_loss)
    return SoftmaxRegressionModel(weights=weights, bias=bias, class_order=class_order), trace


def predict_softmax(model: SoftmaxRegressionModel, feature_vector) -> tuple[str, np.ndarray]:
    """Class (argmax, ties to the earliest class) and the probability
    vector."""
    if isinstance(feature_vector, FeatureVector):
        feature_vector = feature_vector.to_dense()
    x = np.asarray(feature_vector, dtype=np.float64)
    if x.shape[-1] != model.weights.shape[1]:
        raise ShapeError(f"feature dimension {x.shape[-1]} != {model.weights.shape[1]}")
    probs = softmax(model.weights @ x + model.bias)
    return model.class_order[int(np.argmax(probs))], probs


def grid_search(
    features,
    labels,
    validation_fraction: float,
    candidates: list[GdConfig],
    class_order: tuple[str, ...] = BODY_SYSTEMS,
    seed: int = 0,
) -> tuple[GdConfig, list[float]]:
    """Train each candidate on a stratified train portion and score
    accuracy on the held-out validation portion.

    Diverging candidates score 0. Ties go to the earliest candidate.
    """
    if not candidates:
        raise ConfigError("grid search needs at least one candidate")
    if not 0 < validation_fraction < 1:
        raise ConfigError(f"validation fraction must be in (0, 1), got {validation_fraction}")
    x = _as_matrix(features)
    y = _label_indices(labels, class_order)
    rng = np.random.default_rng(seed)
    train_idx, val_idx = [], []
    for cls in range(len(class_order)):
        members = np.flatnonzero(y == cls)
        members = members[rng.permutation(len(members))]
        n_train = int((1 - validation_fraction) * len(members))
        train_idx.extend(members[:n_train])
        val_idx.extend(members[n_train:])
    train_idx, val_idx = np.array(sorted(train_idx)), np.array(sorted(val_idx))
    labels_arr = np.asarray(labels, dtype=object)

    scores = []
    for candidate in candidates:
        try:
            model, _ = train_softmax(
                x[train_idx], labels_arr[train_idx], candidate, class_order
            )
        except DivergenceError:
            scores.append(0.0)
            continue
        correct = sum(
            predict_softmax(model, x[i])[0] == labels_arr[i] for i in val_idx
        )
        scores.append(correct / len(val_idx))
    best = int(np.argmax(scores))
    return candidates[best], scores


@dataclass
class TreeNode:
    feature: int = -1
    threshold: float = 0.0
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None
    class_counts: np.ndarray | None = None

    @property
    def is_leaf(self) -> bool:
        return self.class_counts is not None


@dataclass
class DecisionTree:
    root: TreeNode
    max_depth: int

    def leaf_for(self, x: np.ndarray) -> TreeNode:
        node = self.root
        while not node.is_leaf:
            node = node.left if x[node.feature] <= node.threshold else node.right
        return node

    def depth(self) -> int:
        def walk(node: TreeNode) -> int:
            if node.is_leaf:
                return 0
            return 1 + max(walk(node.left), walk(node.right))

        return walk(self.root)


@dataclass
class RandomForestModel:
    trees: list[DecisionTree] = field(default_factory=list)
    n_estimators: int = 150
    max_depth: int = 4
    seed: int = 0
    class_order: tuple[str, ...] = BODY_SYSTEMS
    n_features_in: int = 0


def _best_split(x, y, indices, feature_ids, n_classes):
    """Scan candidate features for the split maximizing Gini decrease.

    Returns (feature, threshold, left indices, right indices) or None when
    no split strictly improves impurity.
    """
    labels = y[indices]
    counts = np.bincount(labels, minlength=n_classes).astype(np.float64)
    n = len(indices)
    parent_gini = 1.0 - np.sum((counts / n) ** 2)
    best = None
    best_decrease = 1e-12
    for feature in feature_ids:
        column = x[indices, feature]
        order = np.argsort(column, kind="stable")
        sorted_vals = column[order]
        if sorted_vals[0] == sorted_vals[-1]:
            continue
        sorted_labels = labels[order]
        prefix = np.cumsum(one_hot(sorted_labels, n_classes), axis=0)
        n_left = np.arange(1, n, dtype=np.float64)
        n_right = n - n_left
        left_counts = prefix[:-1]
        right_counts = counts - left_counts
        # weighted gini = n - sumsq_left/n_left - sumsq_right/n_right, so
        # maximizing the two ratio terms maximizes the impurity decrease
        score = (
            np.sum(left_counts**2, axis=1) / n_left
            + np.sum(right_counts**2, axis=1) / n_right
        )
        valid = sorted_vals[:-1] < sorted_vals[1:]
        score[~valid] = -np.inf
        position = int(np.argmax(score))
        weighted_gini = (n - score[position]) / n
        decrease = parent_gini - weighted_gini
        if decrease > best_decrease:
            threshold = (sorted_vals[position] + sorted_vals[position + 1]) / 2.0
            mask = column <= threshold
            best = (feature, float(threshold), indices[mask], indices[~mask])
            best_decrease = decrease
    return best


def _grow(x, y, indices, depth, max_depth, n_classes, n_features, rng):
    counts = np.bincount(y[indices], minlength=n_classes).astype(np.float64)
    if depth >= max_depth or len(indices) < 2 or np.count_nonzero(counts) <= 1:
        return TreeNode(class_counts=counts)
    feature_ids = rng.choice(x.shape[1], size=n_features, replace=False)
    split = _best_split(x, y, indices, feature_ids, n_classes)
    if split is None:
        return TreeNode(class_counts=counts)
    feature, threshold, left_idx, right_idx = split
    return TreeNode(
        feature=int(feature),
        threshold=threshold,
        left=_grow(x, y, left_idx, depth + 1, max_depth, n_classes, n_features, rng),
        right=_grow(x, y, right_idx, depth + 1, max_depth, n_classes, n_features, rng),
    )


def train_forest(
    features,
    labels,
    n_estimators: int = 150,
    max_depth: int = 4,
    seed: int = 0,
    class_order: tuple[str, ...] = BODY_SYSTEMS,
) -> RandomForestModel:
    """Bootstrap-aggregated Gini trees with per-split feature subsets of
    size ceil(sqrt(d)). Tree t uses seed + t, so training is deterministic
    and trees are independent."""
    if n_estimators < 1:
        raise ConfigError(f"n_estimators must be >= 1, got {n_estimators}")
    if max_depth < 1:
        raise ConfigError(f"max_depth must be >= 1, got {max_depth}")
    x = _as_matrix(features)
    positions = {name: i for i, name in enumerate(class_order)}
    try:
        y = np.array([positions[label] for label in labels], dtype=np.int64)
    except KeyError as err:
        raise InputError(f"label {err.args[0]!r} not in class order {class_order}") from None
    n, d = x.shape
    n_features = math.ceil(math.sqrt(d))
    model = RandomForestModel(
        n_estimators=n_estimators,
        max_depth=max_depth,
        seed=seed,
        class_order=class_order,
        n_features_in=d,
    )
    for t in range(n_estimators):
        rng = np.random.default_rng(seed + t)
        sample = rng.integers(0, n, size=n)
        root = _grow(x, y, sample, 0, max_depth, len(class_order), n_features, rng)
        model.trees.append(DecisionTree(root=root, max_depth=max_depth))
    return model


def predict_forest(model: RandomForestModel, feature_vector) -> tuple[str, np.ndarray]:
    """Plurality vote over the trees' leaf-majority classes.

    Returns the winning class (ties to the earliest class) and the vote
    fractions aligned with class_order."""
    if isinstance(feature_vector, FeatureVector):
        feature_vector = feature_vector.to_dense()
    x = np.asarray(feature_vector, dtype=np.float64)
    if model.n_features_in and x.shape[-1] != model.n_features_in:
        raise ShapeError(f"feature dimension {x.shape[-1]} != {model.n_features_in}")
    votes = np.zeros(len(model.class_order))
    for tree in model.trees:
        leaf = tree.leaf_for(x)
        votes[int(np.argmax(leaf.class_counts))] += 1
    votes /= len(model.trees)
    return model.class_order[int(np.argmax(votes))], votes
