"""Sequence classifiers built from scratch: an LSTM and a CNN-LSTM over
learned token embeddings, trained by backpropagation through time.

Token id 0 is padding and id 1 is unknown; real tokens start at 2. The
padding embedding row is pinned to zero (and its gradient masked) so that
a padded position contributes exactly what lies beyond the array edge of
a shorter batch, which is what makes outputs invariant to trailing pad
length. The classification readout is the hidden state at each sequence's
last valid position.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DivergenceError, InputError, ShapeError
from .mathops import one_hot, softmax
from .preprocess import TokenizedDoc
from .vectorize import Vocabulary

PAD_ID = 0
UNKNOWN_ID = 1
INIT_SCALE = 0.08
GRADIENT_CLIP_NORM = 5.0

LSTM = "lstm"
CNN_LSTM = "cnn_lstm"


@dataclass(frozen=True)
class NetworkConfig:
    architecture: str
    vocab_size: int
    embed_dim: int = 64
    hidden_size: int = 64
    n_filters: int = 32
    kernel_width: int = 5
    max_len: int = 256
    epochs: int = 50
    batch_size: int = 100
    learning_rate: float = 2.0
    seed: int = 0
    n_classes: int = 4

    def __post_init__(self):
        if self.architecture not in (LSTM, CNN_LSTM):
            raise ConfigError(f"unknown architecture {self.architecture!r}")
        for name in (
            "vocab_size",
            "embed_dim",
            "hidden_size",
            "n_filters",
            "kernel_width",
            "max_len",
            "batch_size",
            "n_classes",
        ):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be positive")
        if self.epochs < 1:
            raise ConfigError(f"epochs must be >= 1, got {self.epochs}")
        if self.learning_rate <= 0:
            raise ConfigError("learning_rate must be > 0")
        if self.kernel_width % 2 == 0:
            raise ConfigError(f"kernel_width must be odd, got {self.kernel_width}")


@dataclass
class SequenceBatch:
    token_ids: np.ndarray
    lengths: np.ndarray
    labels: np.ndarray | None = None


@dataclass
class LstmParams:
    w_f: np.ndarray
    w_i: np.ndarray
    w_o: np.ndarray
    w_g: np.ndarray
    b_f: np.ndarray
    b_i: np.ndarray
    b_o: np.ndarray
    b_g: np.ndarray

    @property
    def hidden_size(self) -> int:
        return self.w_f.shape[0]


@dataclass
class Conv1dParams:
    kernels: np.ndarray  # (n_filters, kernel_width, in_channels)
    biases: np.ndarray


@dataclass
class NetworkParams:
    embedding: np.ndarray
    lstm: LstmParams
    w_out: np.ndarray
    b_out: np.ndarray
    conv: Conv1dParams | None = None

    def tensors(self) -> dict[str, np.ndarray]:
        out = {
            "embedding": self.embedding,
            "lstm.w_f": self.lstm.w_f,
            "lstm.w_i": self.lstm.w_i,
            "lstm.w_o": self.lstm.w_o,
            "lstm.w_g": self.lstm.w_g,
            "lstm.b_f": self.lstm.b_f,
            "lstm.b_i": self.lstm.b_i,
            "lstm.b_o": self.lstm.b_o,
            "lstm.b_g": self.lstm.b_g,
            "w_out": self.w_out,
            "b_out": self.b_out,
        }
        if self.conv is not None:
            out["conv.kernels"] = self.conv.kernels
            out["conv.biases"] = self.conv.biases
        return out


def encode_sequences(
    docs: list[TokenizedDoc], vocabulary: Vocabulary, max_len: int
) -> SequenceBatch:
    """Map token lists to padded id rows (unknown -> 1, pad -> 0),
    truncating at max_len."""
    ids = np.zeros((len(docs), max_len), dtype=np.int64)
    lengths = np.zeros(len(docs), dtype=np.int64)
    for row, doc in enumerate(docs):
        tokens = doc.tokens[:max_len]
        lengths[row] = len(tokens)
        for col, token in enumerate(tokens):
            index = vocabulary.token_to_index.get(token)
            ids[row, col] = UNKNOWN_ID if index is None else index + 2
    return SequenceBatch(token_ids=ids, lengths=lengths)


def _sigmoid(x: np.ndarray) -> np.ndarray:
    out = np.empty_like(x)
    positive = x >= 0
    out[positive] = 1.0 / (1.0 + np.exp(-x[positive]))
    e = np.exp(x[~positive])
    out[~positive] = e / (1.0 + e)
    return out


def lstm_cell_step(params: LstmParams, x_t, h_prev, c_prev):
    """One gated step: returns (h_t, c_t, gate activations dict)."""
    z = np.concatenate([np.atleast_2d(x_t), np.atleast_2d(h_prev)], axis=-1)
    f = _sigmoid(z @ params.w_f.T + params.b_f)
    i = _sigmoid(z @ params.w_i.T + params.b_i)
    o = _sigmoid(z @ params.w_o.T + params.b_o)
    g = np.tanh(z @ params.w_g.T + params.b_g)
    c_t = f * np.atleast_2d(c_prev) + i * g
    h_t = o * np.tanh(c_t)
    gates = {"f": f, "i": i, "o": o, "g": g}
    return h_t, c_t, gates


def init_params(config: NetworkConfig, seed: int | None = None) -> NetworkParams:
    """Uniform(-0.08, 0.08) initialization; the pad embedding row is zero."""
    rng = np.random.default_rng(config.seed if seed is None else seed)

    def uniform(*shape):
        return rng.uniform(-INIT_SCALE, INIT_SCALE, size=shape)

    embedding = uniform(config.vocab_size + 2, config.embed_dim)
    embedding[PAD_ID] = 0.0
    conv = None
    lstm_in = config.embed_dim
    if config.architecture == CNN_LSTM:
        conv = Conv1dParams(
            kernels=uniform(config.n_filters, config.kernel_width, config.embed_dim),
            biases=uniform(config.n_filters),
        )
        lstm_in = config.n_filters
    z_dim = lstm_in + config.hidden_size
    lstm = LstmParams(
        w_f=uniform(config.hidden_size, z_dim),
        w_i=uniform(config.hidden_size, z_dim),
        w_o=uniform(config.hidden_size, z_dim),
        w_g=uniform(config.hidden_size, z_dim),
        b_f=uniform(config.hidden_size),
        b_i=uniform(config.hidden_size),
        b_o=uniform(config.hidden_size),
        b_g=uniform(config.hidden_size),
    )
    return NetworkParams(
        embedding=embedding,
        lstm=lstm,
        w_out=uniform(config.n_classes, config.hidden_size),
        b_out=uniform(config.n_classes),
        conv=conv,
    )


def _conv_forward(conv: Conv1dParams, x: np.ndarray):
    """Same-length 1-D convolution via sliding windows.

    x is (B, T, Cin); returns pre-activation (B, T, F) and the window
    tensor cached for the backward pass.
    """
    n_filters, kernel_width, _ = conv.kernels.shape
    pad = (kernel_width - 1) // 2
    padded = np.pad(x, ((0, 0), (pad, pad), (0, 0)))
    t_len = x.shape[1]
    windows = np.stack([padded[:, k : k + t_len, :] for k in range(kernel_width)], axis=2)
    pre = np.einsum("btkc,fkc->btf", windows, conv.kernels) + conv.biases
    return pre, windows


def _conv_backward(conv: Conv1dParams, windows: np.ndarray, d_out: np.ndarray, t_len: int):
    kernel_width = conv.kernels.shape[1]
    pad = (kernel_width - 1) // 2
    d_kernels = np.einsum("btf,btkc->fkc", d_out, windows)
    d_biases = d_out.sum(axis=(0, 1))
    d_windows = np.einsum("btf,fkc->btkc", d_out, conv.kernels)
    d_padded = np.zeros(
        (d_out.shape[0], t_len + 2 * pad, conv.kernels.shape[2]), dtype=np.float64
    )
    for k in range(kernel_width):
        d_padded[:, k : k + t_len, :] += d_windows[:, :, k, :]
    d_x = d_padded[:, pad : pad + t_len, :]
    return d_x, d_kernels, d_biases


def forward(params: NetworkParams, config: NetworkConfig, batch: SequenceBatch):
    """Probability rows (batch x n_classes) plus cached activations for
    backpropagation. Rows with length 0 read out a zero hidden state."""
    ids = batch.token_ids
    if ids.ndim != 2:
        raise ShapeError("token_ids must be a (batch, time) matrix")
    if ids.max(initial=0) >= params.embedding.shape[0]:
        raise ShapeError("token id exceeds embedding table size")
    if (config.architecture == CNN_LSTM) != (params.conv is not None):
        raise ShapeError("params do not match architecture")
    b_size, t_len = ids.shape
    embedded = params.embedding[ids]

    cache = {"ids": ids, "embedded": embedded, "lengths": batch.lengths}
    if params.conv is not None:
        pre, windows = _conv_forward(params.conv, embedded)
        x = np.maximum(pre, 0.0)
        cache["conv_pre"] = pre
        cache["conv_windows"] = windows
    else:
        x = embedded
    cache["x"] = x

    hidden = params.lstm.hidden_size
    h = np.zeros((b_size, hidden))
    c = np.zeros((b_size, hidden))
    hs = np.zeros((t_len, b_size, hidden))
    cs = np.zeros((t_len, b_size, hidden))
    gate_stack = {name: np.zeros((t_len, b_size, hidden)) for name in ("f", "i", "o", "g")}
    c_prevs = np.zeros((t_len, b_size, hidden))
    for t in range(t_len):
        c_prevs[t] = c
        h, c, gates = lstm_cell_step(params.lstm, x[:, t, :], h, c)
        hs[t], cs[t] = h, c
        for name in gate_stack:
            gate_stack[name][t] = gates[name]
    cache.update(hs=hs, cs=cs, c_prevs=c_prevs, gates=gate_stack)

    readout = np.zeros((b_size, hidden))
    valid = batch.lengths > 0
    rows = np.flatnonzero(valid)
    if rows.size:
        readout[rows] = hs[batch.lengths[rows] - 1, rows, :]
    cache["readout"] = readout
    logits = readout @ params.w_out.T + params.b_out
    probs = softmax(logits)
    cache["probs"] = probs
    return probs, cache


def backward(params: NetworkParams, config: NetworkConfig, cache, label_indices):
    """Gradients of the mean cross-entropy over the batch, keyed like
    NetworkParams.tensors()."""
    probs = cache["probs"]
    b_size, t_len = cache["ids"].shape
    d_logits = (probs - one_hot(label_indices, probs.shape[1])) / b_size
    grads = {
        "w_out": d_logits.T @ cache["readout"],
        "b_out": d_logits.sum(axis=0),
    }
    d_readout = d_logits @ params.w_out

    hidden = params.lstm.hidden_size
    lengths = cache["lengths"]
    hs, cs, c_prevs, gates = cache["hs"], cache["cs"], cache["c_prevs"], cache["gates"]
    x = cache["x"]
    d_x = np.zeros_like(x)
    lstm = params.lstm
    d_w = {name: np.zeros_like(getattr(lstm, f"w_{name}")) for name in ("f", "i", "o", "g")}
    d_b = {name: np.zeros_like(getattr(lstm, f"b_{name}")) for name in ("f", "i", "o", "g")}

    d_h = np.zeros((b_size, hidden))
    d_c = np.zeros((b_size, hidden))
    in_dim = x.shape[2]
    for t in range(t_len - 1, -1, -1):
        inject = lengths - 1 == t
        if inject.any():
            d_h = d_h + np.where(inject[:, None], d_readout, 0.0)
        f, i, o, g = gates["f"][t], gates["i"][t], gates["o"][t], gates["g"][t]
        tanh_c = np.tanh(cs[t])
        d_o = d_h * tanh_c
        d_c = d_c + d_h * o * (1.0 - tanh_c**2)
        d_f = d_c * c_prevs[t]
        d_i = d_c * g
        d_g = d_c * i
        dz_f = d_f * f * (1.0 - f)
        dz_i = d_i * i * (1.0 - i)
        dz_o = d_o * o * (1.0 - o)
        dz_g = d_g * (1.0 - g**2)
        h_prev = hs[t - 1] if t > 0 else np.zeros((b_size, hidden))
        z = np.concatenate([x[:, t, :], h_prev], axis=1)
        d_z = np.zeros((b_size, in_dim + hidden))
        for name, dz in (("f", dz_f), ("i", dz_i), ("o", dz_o), ("g", dz_g)):
            d_w[name] += dz.T @ z
            d_b[name] += dz.sum(axis=0)
            d_z += dz @ getattr(lstm, f"w_{name}")
        d_x[:, t, :] = d_z[:, :in_dim]
        d_h = d_z[:, in_dim:]
        d_c = d_c * f

    for name in ("f", "i", "o", "g"):
        grads[f"lstm.w_{name}"] = d_w[name]
        grads[f"lstm.b_{name}"] = d_b[name]

    if params.conv is not None:
        relu_mask = cache["conv_pre"] > 0
        d_pre = d_x * relu_mask
        d_embedded, d_kernels, d_biases = _conv_backward(
            params.conv, cache["conv_windows"], d_pre, t_len
        )
        grads["conv.kernels"] = d_kernels
        grads["conv.biases"] = d_biases
    else:
        d_embedded = d_x

    d_embedding = np.zeros_like(params.embedding)
    np.add.at(d_embedding, cache["ids"], d_embedded)
    d_embedding[PAD_ID] = 0.0  # pad row is a pinned constant
    grads["embedding"] = d_embedding
    return grads


def _clip_gradients(grads: dict[str, np.ndarray], max_norm: float) -> None:
    total = math.sqrt(sum(float(np.sum(g * g)) for g in grads.values()))
    if total > max_norm:
        scale = max_norm / total
        for g in grads.values():
            g *= scale


def train_network(
    batch: SequenceBatch, config: NetworkConfig
) -> tuple[NetworkParams, list[float]]:
    """Seeded mini-batch gradient descent with BPTT and global-norm
    gradient clipping at 5.0. Returns the trained parameters and the
    per-epoch mean loss trace."""
    if batch.labels is None:
        raise InputError("training batch has no labels")
    labels = np.asarray(batch.labels, dtype=np.int64)
    present = set(labels.tolist())
    missing = [c for c in range(config.n_classes) if c not in present]
    if missing:
        raise InputError(f"no training examples for class indices {missing}")
    params = init_params(config)
    n = len(labels)
    rng = np.random.default_rng(config.seed)
    tensors = params.tensors()
    trace = []
    for epoch in range(config.epochs):
        order = rng.permutation(n)
        loss_sum = 0.0
        for start in range(0, n, config.batch_size):
            rows = order[start : start + config.batch_size]
            mini = SequenceBatch(
                token_ids=batch.token_ids[rows], lengths=batch.lengths[rows]
            )
            probs, cache = forward(params, config, mini)
            picked = probs[np.arange(len(rows)), labels[rows]]
            loss_sum += float(-np.sum(np.log(np.maximum(picked, 1e-12))))
            grads = backward(params, config, cache, labels[rows])
            _clip_gradients(grads, GRADIENT_CLIP_NORM)
            for name, grad in grads.items():
                tensors[name] -= config.learning_rate * grad
        epoch_loss = loss_sum / n
        if not math.isfinite(epoch_loss):
            raise DivergenceError(epoch)
        trace.append(epoch_loss)
    return params, trace


def predict(
    params: NetworkParams, config: NetworkConfig, batch: SequenceBatch
) -> np.ndarray:
    probs, _ = forward(params, config, batch)
    return probs


def gradient_check(config: NetworkConfig, seed: int = 0, epsilon: float = 1e-4):
    """Compare analytic gradients with central finite differences on a
    random small batch. Returns per-tensor max relative error.

    The pad embedding row is excluded: it is a pinned constant, not a
    trainable parameter.
    """
    rng = np.random.default_rng(seed)
    params = init_params(config, seed=seed + 1)
    b_size = 4
    ids = rng.integers(1, config.vocab_size + 2, size=(b_size, config.max_len))
    lengths = rng.integers(1, config.max_len + 1, size=b_size)
    for row, length in enumerate(lengths):
        ids[row, length:] = PAD_ID
    labels = rng.integers(0, config.n_classes, size=b_size)
    batch = SequenceBatch(token_ids=ids, lengths=lengths)

    _, cache = forward(params, config, batch)
    analytic = backward(params, config, cache, labels)

    def loss_of() -> float:
        probs, _ = forward(params, config, batch)
        picked = probs[np.arange(b_size), labels]
        return float(-np.mean(np.log(np.maximum(picked, 1e-12))))

    report = {}
    for name, tensor in params.tensors().items():
        grad = analytic[name]
        worst = 0.0
        it = np.nditer(tensor, flags=["multi_index"])
        for _ in it:
            index = it.multi_index
            if name == "embedding" and index[0] == PAD_ID:
                continue
            original = tensor[index]
            tensor[index] = original + epsilon
            up = loss_of()
            tensor[index] = original - epsilon
            down = loss_of()
            tensor[index] = original
            numeric = (up - down) / (2 * epsilon)
            # the 1e-6 floor keeps float64 rounding noise from dominating
            # coordinates whose true gradient is below measurement precision
            denom = max(abs(numeric) + abs(grad[index]), 1e-6)
            worst = max(worst, abs(numeric - grad[index]) / denom)
        report[name] = worst
    return report
