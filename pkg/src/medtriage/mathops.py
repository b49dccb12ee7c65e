"""Softmax / cross-entropy primitives shared by the linear and recurrent
classifiers."""

from __future__ import annotations

import numpy as np

# Probabilities are clamped here before log so a confidently wrong
# prediction cannot produce an infinite loss.
PROB_FLOOR = 1e-12


def softmax(logits: np.ndarray) -> np.ndarray:
    """Row-wise softmax with max subtraction for numerical stability."""
    z = np.asarray(logits, dtype=np.float64)
    z = z - z.max(axis=-1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=-1, keepdims=True)


def one_hot(labels: np.ndarray, n_classes: int) -> np.ndarray:
    return np.eye(n_classes)[np.asarray(labels, dtype=np.int64)]


def cross_entropy(probs: np.ndarray, label_indices: np.ndarray) -> float:
    """Mean categorical cross-entropy of probability rows."""
    probs = np.asarray(probs, dtype=np.float64)
    picked = probs[np.arange(len(label_indices)), np.asarray(label_indices, dtype=np.int64)]
    return float(-np.mean(np.log(np.maximum(picked, PROB_FLOOR))))


def softmax_cross_entropy(logits: np.ndarray, label_indices: np.ndarray):
    """Return (per-example mean loss, probs, dLoss/dlogits summed form).

    The gradient is the exact identity probs - onehot, per example; divide
    by the batch size at the call site when averaging.
    """
    probs = softmax(logits)
    loss = cross_entropy(probs, label_indices)
    grad = probs - one_hot(label_indices, logits.shape[-1])
    return loss, probs, grad
