import math

import numpy as np
import pytest

from medtriage.errors import ConfigError, InputError
from medtriage.mathops import one_hot, softmax
from medtriage.neural import (
    CNN_LSTM,
    LSTM,
    PAD_ID,
    UNKNOWN_ID,
    LstmParams,
    NetworkConfig,
    SequenceBatch,
    encode_sequences,
    forward,
    gradient_check,
    init_params,
    lstm_cell_step,
    train_network,
)
from medtriage.preprocess import TokenizedDoc
from medtriage.vectorize import Vocabulary


def small_config(architecture: str = LSTM, **overrides) -> NetworkConfig:
    defaults = dict(
        architecture=architecture,
        vocab_size=20,
        embed_dim=7,
        hidden_size=8,
        n_filters=5,
        kernel_width=3,
        max_len=6,
        epochs=2,
        batch_size=4,
        learning_rate=0.5,
        seed=3,
    )
    defaults.update(overrides)
    return NetworkConfig(**defaults)


def zero_lstm(input_size: int, hidden: int) -> LstmParams:
    z = input_size + hidden
    return LstmParams(
        w_f=np.zeros((hidden, z)),
        w_i=np.zeros((hidden, z)),
        w_o=np.zeros((hidden, z)),
        w_g=np.zeros((hidden, z)),
        b_f=np.zeros(hidden),
        b_i=np.zeros(hidden),
        b_o=np.zeros(hidden),
        b_g=np.zeros(hidden),
    )


class TestEncodeSequences:
    VOCAB = Vocabulary.from_tokens(["alpha", "beta", "gamma"])

    def test_padding_and_lengths(self):
        batch = encode_sequences(
            [TokenizedDoc(tokens=("alpha", "beta", "gamma"))], self.VOCAB, max_len=256
        )
        row = batch.token_ids[0]
        assert batch.lengths[0] == 3
        assert np.count_nonzero(row) == 3
        assert np.all(row[3:] == PAD_ID)
        assert row[:3].min() >= 2

    def test_truncation(self):
        doc = TokenizedDoc(tokens=("alpha",) * 300)
        batch = encode_sequences([doc], self.VOCAB, max_len=256)
        assert batch.lengths[0] == 256
        assert np.all(batch.token_ids[0] != PAD_ID)

    def test_unknown_token_gets_id_one(self):
        batch = encode_sequences([TokenizedDoc(tokens=("zzz",))], self.VOCAB, max_len=4)
        assert batch.token_ids[0, 0] == UNKNOWN_ID


class TestLstmCellStep:
    def test_zero_everything(self):
        params = zero_lstm(3, 4)
        h, c, gates = lstm_cell_step(params, np.zeros((1, 3)), np.zeros((1, 4)), np.zeros((1, 4)))
        np.testing.assert_allclose(gates["f"], 0.5)
        np.testing.assert_allclose(gates["i"], 0.5)
        np.testing.assert_allclose(gates["o"], 0.5)
        np.testing.assert_allclose(gates["g"], 0.0)
        np.testing.assert_allclose(c, 0.0)
        np.testing.assert_allclose(h, 0.0)

    def test_saturated_gates_carry_cell_state(self):
        params = zero_lstm(3, 4)
        params.b_f[:] = 50.0  # forget gate pinned open
        params.b_i[:] = -50.0  # input gate pinned shut
        c_prev = np.array([[0.3, -1.2, 4.0, 0.01]])
        x = np.random.default_rng(0).normal(size=(1, 3))
        h_prev = np.random.default_rng(1).normal(size=(1, 4))
        _, c, _ = lstm_cell_step(params, x, h_prev, c_prev)
        np.testing.assert_allclose(c, c_prev, atol=1e-6)

    def test_gate_ranges(self):
        # magnitudes kept inside the float64-representable sigmoid range;
        # beyond |z| ~ 36 the gates saturate to exactly 0.0 / 1.0
        rng = np.random.default_rng(2)
        params = LstmParams(
            w_f=rng.normal(size=(4, 7)),
            w_i=rng.normal(size=(4, 7)),
            w_o=rng.normal(size=(4, 7)),
            w_g=rng.normal(size=(4, 7)),
            b_f=rng.normal(size=4),
            b_i=rng.normal(size=4),
            b_o=rng.normal(size=4),
            b_g=rng.normal(size=4),
        )
        for _ in range(20):
            x = rng.normal(size=(1, 3)) * 2
            h = rng.normal(size=(1, 4))
            c = rng.normal(size=(1, 4)) * 5
            h_t, c_t, gates = lstm_cell_step(params, x, h, c)
            for name in ("f", "i", "o"):
                assert np.all(gates[name] > 0) and np.all(gates[name] < 1)
            assert np.all(np.abs(gates["g"]) < 1)
            assert np.all(np.abs(np.tanh(c_t)) < 1)


class TestForward:
    def test_rows_sum_to_one(self):
        config = small_config()
        params = init_params(config)
        rng = np.random.default_rng(0)
        ids = rng.integers(1, config.vocab_size + 2, size=(5, config.max_len))
        batch = SequenceBatch(token_ids=ids, lengths=np.full(5, config.max_len))
        probs, _ = forward(params, config, batch)
        np.testing.assert_allclose(probs.sum(axis=1), 1.0, atol=1e-9)

    def test_zero_params_uniform(self):
        config = small_config()
        params = init_params(config)
        for tensor in params.tensors().values():
            tensor[:] = 0.0
        ids = np.array([[2, 3, 4, 0, 0, 0]])
        batch = SequenceBatch(token_ids=ids, lengths=np.array([3]))
        probs, _ = forward(params, config, batch)
        np.testing.assert_allclose(probs, 0.25, atol=1e-12)

    @pytest.mark.parametrize("architecture", [LSTM, CNN_LSTM])
    def test_pad_invariance(self, architecture):
        config_short = small_config(architecture, max_len=4)
        config_long = small_config(architecture, max_len=11)
        params = init_params(config_short)
        rng = np.random.default_rng(4)
        core = rng.integers(2, config_short.vocab_size + 2, size=(3, 4))
        lengths = np.array([4, 2, 3])
        short_ids = core.copy()
        for row, length in enumerate(lengths):
            short_ids[row, length:] = PAD_ID
        long_ids = np.zeros((3, 11), dtype=np.int64)
        long_ids[:, :4] = short_ids
        probs_short, _ = forward(params, config_short, SequenceBatch(short_ids, lengths))
        probs_long, _ = forward(params, config_long, SequenceBatch(long_ids, lengths))
        np.testing.assert_allclose(probs_short, probs_long, atol=1e-9)

    def test_architecture_params_mismatch(self):
        config = small_config(CNN_LSTM)
        params = init_params(small_config(LSTM))
        ids = np.array([[2, 3, 0, 0, 0, 0]])
        with pytest.raises(Exception):
            forward(params, config, SequenceBatch(ids, np.array([2])))


class TestGradients:
    @pytest.mark.parametrize("architecture", [LSTM, CNN_LSTM])
    def test_analytic_matches_finite_differences(self, architecture):
        report = gradient_check(small_config(architecture), seed=11)
        worst = max(report.values())
        assert worst < 1e-4, report

    def test_loss_gradient_is_probs_minus_onehot(self):
        """Central differences of -sum(y ln softmax(z)) against the closed
        form p - y."""
        rng = np.random.default_rng(7)
        logits = rng.normal(size=4) * 3
        label = 2
        analytic = softmax(logits) - one_hot(np.array([label]), 4)[0]
        eps = 1e-5
        for j in range(4):
            up = logits.copy()
            up[j] += eps
            down = logits.copy()
            down[j] -= eps
            loss_up = -math.log(softmax(up)[label])
            loss_down = -math.log(softmax(down)[label])
            numeric = (loss_up - loss_down) / (2 * eps)
            assert abs(numeric - analytic[j]) < 1e-9


class TestTrainNetwork:
    def _synthetic_batch(self, config, n=24, seed=0):
        rng = np.random.default_rng(seed)
        ids = np.zeros((n, config.max_len), dtype=np.int64)
        labels = np.zeros(n, dtype=np.int64)
        lengths = np.zeros(n, dtype=np.int64)
        for row in range(n):
            label = row % config.n_classes
            length = rng.integers(2, config.max_len + 1)
            # class-specific tokens: class c draws from a disjoint id range
            base = 2 + label * 4
            ids[row, :length] = rng.integers(base, base + 4, size=length)
            labels[row] = label
            lengths[row] = length
        return SequenceBatch(token_ids=ids, lengths=lengths, labels=labels)

    def test_loss_decreases(self):
        config = small_config(epochs=12, learning_rate=1.0, vocab_size=16)
        batch = self._synthetic_batch(config)
        _, trace = train_network(batch, config)
        assert trace[-1] < trace[0]

    def test_epochs_zero_rejected(self):
        with pytest.raises(ConfigError):
            small_config(epochs=0)

    def test_defaults_match_training_protocol(self):
        config = NetworkConfig(architecture=LSTM, vocab_size=10)
        assert config.epochs == 50
        assert config.batch_size == 100

    def test_missing_labels_rejected(self):
        config = small_config()
        batch = self._synthetic_batch(config)
        batch.labels = None
        with pytest.raises(InputError):
            train_network(batch, config)

    def test_bitwise_deterministic(self):
        config = small_config(epochs=4, vocab_size=16)
        batch = self._synthetic_batch(config)
        params_a, trace_a = train_network(batch, config)
        params_b, trace_b = train_network(batch, config)
        assert trace_a == trace_b
        for name, tensor in params_a.tensors().items():
            assert np.array_equal(tensor, params_b.tensors()[name]), name

    def test_pad_embedding_row_stays_zero(self):
        config = small_config(epochs=3, vocab_size=16)
        batch = self._synthetic_batch(config)
        params, _ = train_network(batch, config)
        assert np.all(params.embedding[PAD_ID] == 0.0)
