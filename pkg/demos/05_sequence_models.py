"""The recurrent classifiers: inspect a single LSTM cell step, verify the
gradients against finite differences, then train the LSTM and CNN-LSTM on
the synthetic corpus and compare."""

import numpy as np

from medtriage.artifacts import TrainOptions, train_artifact
from medtriage.neural import CNN_LSTM, LSTM, LstmParams, NetworkConfig, gradient_check, lstm_cell_step
from medtriage.synthetic import make_keyword_corpus

# one cell step with everything zero: gates sit at sigmoid(0) = 0.5 and
# the candidate at tanh(0) = 0, so no state forms
zero = LstmParams(
    w_f=np.zeros((4, 7)), w_i=np.zeros((4, 7)), w_o=np.zeros((4, 7)), w_g=np.zeros((4, 7)),
    b_f=np.zeros(4), b_i=np.zeros(4), b_o=np.zeros(4), b_g=np.zeros(4),
)
h, c, gates = lstm_cell_step(zero, np.zeros((1, 3)), np.zeros((1, 4)), np.zeros((1, 4)))
print(f"zero cell step: f={gates['f'][0, 0]} g={gates['g'][0, 0]} h={h[0, 0]} c={c[0, 0]}")

print("\ngradient checks (analytic BPTT vs central finite differences):")
for architecture in (LSTM, CNN_LSTM):
    config = NetworkConfig(
        architecture=architecture, vocab_size=20, embed_dim=7, hidden_size=8,
        n_filters=5, kernel_width=3, max_len=6, epochs=1, batch_size=4,
        learning_rate=0.5, seed=3,
    )
    report = gradient_check(config, seed=11)
    print(f"  {architecture}: worst relative error {max(report.values()):.2e}")

examples = make_keyword_corpus(200, seed=5)
shared = dict(seed=7, epochs=50, batch_size=20, max_len=32, embed_dim=32, hidden_size=32)
print("\ntraining both sequence models (50 epochs)...")
lstm = train_artifact(examples, TrainOptions(kind="lstm", **shared))
cnn = train_artifact(
    examples, TrainOptions(kind="cnn-lstm", n_filters=16, kernel_width=5, **shared)
)
for name, result in (("LSTM", lstm), ("CNN-LSTM", cnn)):
    print(f"  {name:8s} loss {result.loss_trace[0]:.3f} -> {result.loss_trace[-1]:.4f}, "
          f"test accuracy {result.test_accuracy:.3f}")

label, probs = cnn.artifact.classify("seizure activity over the left cortex with aphasia")
print(f"\nsample sequence classification: {label} p={np.round(probs, 3).tolist()}")
