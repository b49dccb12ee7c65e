"""Walk through corpus loading, curation, statistics, and splitting.

Runs on the bundled synthetic corpus so no dataset download is needed.
Point --data at a real snapshot CSV to see the same flow on actual
transcriptions.
"""

import argparse
import tempfile
from pathlib import Path

from medtriage.corpus import SpecialtyMapping, SplitSpec, compute_stats, curate, load_reports, split_dataset
from medtriage.synthetic import make_keyword_corpus, write_corpus_csv

parser = argparse.ArgumentParser()
parser.add_argument("--data", help="snapshot CSV (default: generated synthetic corpus)")
args = parser.parse_args()

if args.data:
    csv_path = Path(args.data)
else:
    csv_path = Path(tempfile.mkdtemp()) / "synthetic.csv"
    write_corpus_csv(make_keyword_corpus(200, seed=5), csv_path)
    print(f"no --data given; wrote a synthetic snapshot to {csv_path}")

reports = load_reports(csv_path)
print(f"\nloaded {len(reports)} raw reports")
print(f"distinct specialties: {len({r.specialty for r in reports})}")

mapping = SpecialtyMapping.default()
examples, curation = curate(reports, mapping)
print(f"\ncuration kept {curation.kept} reports")
print(f"  excluded (unmapped specialty): {curation.excluded_unmapped}")
print(f"  excluded (empty transcription): {curation.excluded_empty}")

stats = compute_stats(examples)
print(f"\nper-class counts: {stats.per_class_counts}")
print(f"unique raw words: {stats.unique_word_count}")
print(f"mean report length: {stats.mean_char_length:.1f} characters")
print("length histogram (250-char buckets):")
for start, end, count in stats.length_histogram:
    bar = "#" * max(1, count * 40 // max(c for _, _, c in stats.length_histogram))
    print(f"  [{start:5d},{end:5d}) {count:5d} {bar}")

train, test = split_dataset(examples, SplitSpec(train_fraction=0.8, seed=7, stratified=True))
print(f"\nstratified 80/20 split: {len(train)} train / {len(test)} test")
for label in stats.per_class_counts:
    n_test = sum(1 for e in test if e.label == label)
    print(f"  {label}: {n_test} held out")
