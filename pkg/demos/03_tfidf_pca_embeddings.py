"""Fit TF-IDF on the synthetic corpus, reduce with PCA, and write the 2-D
embedding export (one x,y,label row per document) that plotting tools can
consume. Prints per-class centroids so the separation is visible without
a plot."""

import tempfile
from pathlib import Path

import numpy as np

from medtriage.preprocess import default_clean_config, preprocess_document
from medtriage.synthetic import make_keyword_corpus
from medtriage.vectorize import fit_pca, fit_tfidf, project, to_matrix, transform_tfidf

examples = make_keyword_corpus(200, seed=5)
config = default_clean_config()
docs = [preprocess_document(e.transcription, config, e.id) for e in examples]

tfidf = fit_tfidf(docs)
print(f"vocabulary size: {tfidf.vocabulary.size}")
idf = tfidf.idf()
ranked = sorted(zip(tfidf.vocabulary.index_to_token, idf), key=lambda kv: kv[1])
print(f"most common (lowest idf): {[t for t, _ in ranked[:5]]}")
print(f"rarest (highest idf):     {[t for t, _ in ranked[-5:]]}")

matrix = to_matrix([transform_tfidf(tfidf, d) for d in docs])
norms = np.linalg.norm(matrix, axis=1)
print(f"document vectors are unit length: max |norm-1| = {np.abs(norms - 1).max():.2e}")

pca95 = fit_pca(matrix, variance_threshold=0.95)
print(f"\nPCA at 95% variance keeps {pca95.n_components} of {matrix.shape[1]} dimensions")
print(f"cumulative explained variance: {pca95.explained_variance_ratio.sum():.4f}")

pca2 = fit_pca(matrix, n_components=2)
points = project(pca2, matrix)
out = Path(tempfile.mkdtemp()) / "embeddings.csv"
with open(out, "w") as handle:
    handle.write("x,y,label\n")
    for (x, y), example in zip(points, examples):
        handle.write(f"{x!r},{y!r},{example.label}\n")
print(f"\nwrote {len(examples)} embedding rows to {out}")

print("\nper-class centroids in the 2-D projection:")
for label in ("Heart", "Brain", "Reproductive", "Digestive"):
    member_points = points[[i for i, e in enumerate(examples) if e.label == label]]
    cx, cy = member_points.mean(axis=0)
    print(f"  {label:13s} ({cx:+.3f}, {cy:+.3f})")
