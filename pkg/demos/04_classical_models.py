"""Train the two classical families end to end: softmax regression on
PCA-reduced TF-IDF (with a small grid search) and a random forest on raw
TF-IDF. Prints loss traces, the winning grid cell, and per-class tables."""

import numpy as np

from medtriage.artifacts import TrainOptions, train_artifact
from medtriage.classical import GdConfig, grid_search
from medtriage.corpus import BODY_SYSTEMS, SplitSpec, split_dataset
from medtriage.metrics import render_table
from medtriage.preprocess import default_clean_config, preprocess_document
from medtriage.synthetic import make_keyword_corpus
from medtriage.vectorize import fit_pca, fit_tfidf, project, to_matrix, transform_tfidf

examples = make_keyword_corpus(200, seed=5)

# grid search over learning rates on the raw feature pipeline
config = default_clean_config()
train_set, _ = split_dataset(examples, SplitSpec(0.8, seed=7))
docs = [preprocess_document(e.transcription, config, e.id) for e in train_set]
labels = [e.label for e in train_set]
tfidf = fit_tfidf(docs)
matrix = to_matrix([transform_tfidf(tfidf, d) for d in docs])
pca = fit_pca(matrix, variance_threshold=0.95)
features = project(pca, matrix)

candidates = [
    GdConfig(learning_rate=rate, epochs=50, batch_size=100, seed=0)
    for rate in (0.01, 0.1, 0.5)
]
best, scores = grid_search(features, labels, 0.25, candidates, BODY_SYSTEMS)
print("grid search over learning rates:")
for candidate, score in zip(candidates, scores):
    marker = "  <- winner" if candidate is best else ""
    print(f"  lr={candidate.learning_rate:<5} validation accuracy={score:.3f}{marker}")

print("\ntraining softmax regression (PCA on) and random forest (raw TF-IDF)...")
logreg = train_artifact(examples, TrainOptions(kind="logreg", seed=7, learning_rate=best.learning_rate))
forest = train_artifact(examples, TrainOptions(kind="forest", seed=7))

print(f"\nsoftmax regression: loss {logreg.loss_trace[0]:.4f} -> {logreg.loss_trace[-1]:.4f}, "
      f"test accuracy {logreg.test_accuracy:.3f}")
print(render_table(logreg.report))
print(f"\nrandom forest ({forest.artifact.model.n_estimators} trees, depth "
      f"{forest.artifact.model.max_depth}): test accuracy {forest.test_accuracy:.3f}")
print(render_table(forest.report))

label, probs = logreg.artifact.classify("recurrent angina with systolic murmur")
print(f"\nsample classification: {label} with probabilities "
      f"{np.round(probs, 3).tolist()} over {list(BODY_SYSTEMS)}")
