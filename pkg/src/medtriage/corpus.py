"""Corpus ingestion: CSV loading, specialty-to-body-system curation,
dataset statistics, and deterministic train/test splits."""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass, field
from importlib import resources

from .errors import ConfigError, EmptyDatasetError, SchemaError

# Canonical class order, used for tie-breaking and table rows everywhere.
BODY_SYSTEMS = ("Heart", "Brain", "Reproductive", "Digestive")

SPECIALTY_COLUMN = "medical_specialty"
TRANSCRIPTION_COLUMN = "transcription"
SAMPLE_NAME_COLUMN = "sample_name"

EXCLUDED = "excluded"

HISTOGRAM_BUCKET_WIDTH = 250


@dataclass(frozen=True)
class RawReport:
    id: str
    specialty: str
    transcription: str
    sample_name: str | None = None


@dataclass(frozen=True)
class CuratedExample:
    id: str
    label: str
    transcription: str


class SpecialtyMapping:
    """Case-insensitive specialty -> body-system lookup.

    Entries mapping to "excluded" are remembered as known-but-dropped so
    curation can distinguish them from typos, but lookups treat both as
    unmapped.
    """

    def __init__(self, entries: dict[str, str]):
        self._entries: dict[str, str] = {}
        for specialty, label in entries.items():
            key = specialty.strip().lower()
            if label != EXCLUDED and label not in BODY_SYSTEMS:
                raise ConfigError(f"unknown body system {label!r} for specialty {specialty!r}")
            self._entries[key] = label
        if not self._entries:
            raise ConfigError("specialty mapping is empty")

    def lookup(self, specialty: str) -> str | None:
        label = self._entries.get(specialty.strip().lower())
        return None if label == EXCLUDED else label

    def __len__(self) -> int:
        return len(self._entries)

    @classmethod
    def from_file(cls, path) -> "SpecialtyMapping":
        entries = {}
        with open(path, encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                specialty, _, label = line.partition("\t")
                if not label:
                    raise SchemaError(f"mapping line without tab separator: {line!r}")
                entries[specialty] = label.strip()
        return cls(entries)

    @classmethod
    def default(cls) -> "SpecialtyMapping":
        ref = resources.files("medtriage.data").joinpath("specialty_map.tsv")
        with resources.as_file(ref) as path:
            return cls.from_file(path)


@dataclass(frozen=True)
class DatasetStats:
    report_count: int
    per_class_counts: dict[str, int]
    unique_word_count: int
    mean_char_length: float
    length_histogram: list[tuple[int, int, int]]

    def to_dict(self) -> dict:
        return {
            "report_count": self.report_count,
            "per_class_counts": dict(self.per_class_counts),
            "unique_word_count": self.unique_word_count,
            "mean_char_length": self.mean_char_length,
            "length_histogram": [list(bucket) for bucket in self.length_histogram],
        }


@dataclass(frozen=True)
class SplitSpec:
    train_fraction: float
    seed: int = 0
    stratified: bool = True


@dataclass
class CurationReport:
    kept: int = 0
    excluded_unmapped: int = 0
    excluded_empty: int = 0
    kept_per_class: dict[str, int] = field(default_factory=dict)


def load_reports(csv_source) -> list[RawReport]:
    """Read raw reports from a CSV path or open text handle.

    Rows with empty transcriptions are kept here (they are dropped and
    counted at curation). Raises SchemaError if a required column is
    missing; I/O problems surface as OSError.
    """
    if hasattr(csv_source, "read"):
        return _read_rows(csv_source)
    with open(csv_source, newline="", encoding="utf-8") as handle:
        return _read_rows(handle)


def _read_rows(handle) -> list[RawReport]:
    reader = csv.DictReader(handle)
    header = reader.fieldnames or []
    for required in (SPECIALTY_COLUMN, TRANSCRIPTION_COLUMN):
        if required not in header:
            raise SchemaError(f"missing required column {required!r}")
    reports = []
    for index, row in enumerate(reader):
        reports.append(
            RawReport(
                id=row.get("id") or str(index),
                specialty=(row.get(SPECIALTY_COLUMN) or "").strip(),
                transcription=row.get(TRANSCRIPTION_COLUMN) or "",
                sample_name=row.get(SAMPLE_NAME_COLUMN),
            )
        )
    return reports


def curate(
    reports: list[RawReport], mapping: SpecialtyMapping
) -> tuple[list[CuratedExample], CurationReport]:
    """Label reports via the mapping, dropping unmapped specialties and
    empty transcriptions. Returns survivors plus exclusion counts."""
    examples = []
    report = CurationReport()
    for raw in reports:
        label = mapping.lookup(raw.specialty)
        if label is None:
            report.excluded_unmapped += 1
            continue
        if not raw.transcription.strip():
            report.excluded_empty += 1
            continue
        examples.append(CuratedExample(id=raw.id, label=label, transcription=raw.transcription))
        report.kept_per_class[label] = report.kept_per_class.get(label, 0) + 1
    report.kept = len(examples)
    if not examples:
        raise EmptyDatasetError("no reports survived curation")
    return examples, report


def compute_stats(examples: list[CuratedExample]) -> DatasetStats:
    """Counts, raw-text vocabulary size, mean character length, and a
    fixed-width (250 char) length histogram."""
    if not examples:
        raise EmptyDatasetError("cannot compute statistics of an empty dataset")
    per_class = {label: 0 for label in BODY_SYSTEMS}
    words: set[str] = set()
    lengths = []
    for example in examples:
        per_class[example.label] = per_class.get(example.label, 0) + 1
        words.update(example.transcription.split())
        lengths.append(len(example.transcription))
    n_buckets = max(lengths) // HISTOGRAM_BUCKET_WIDTH + 1
    histogram = []
    for i in range(n_buckets):
        start = i * HISTOGRAM_BUCKET_WIDTH
        end = start + HISTOGRAM_BUCKET_WIDTH
        count = sum(1 for length in lengths if start <= length < end)
        histogram.append((start, end, count))
    return DatasetStats(
        report_count=len(examples),
        per_class_counts=per_class,
        unique_word_count=len(words),
        mean_char_length=sum(lengths) / len(lengths),
        length_histogram=histogram,
    )


def split_dataset(
    examples: list[CuratedExample], spec: SplitSpec
) -> tuple[list[CuratedExample], list[CuratedExample]]:
    """Deterministic train/test split.

    Non-stratified: train gets floor(train_fraction * N) examples.
    Stratified: floor is applied per class, so the test side holds the
    per-class remainders.
    """
    if not 0 < spec.train_fraction < 1:
        raise ConfigError(f"train_fraction must be in (0, 1), got {spec.train_fraction}")
    rng = random.Random(spec.seed)
    if not spec.stratified:
        order = list(range(len(examples)))
        rng.shuffle(order)
        n_train = int(spec.train_fraction * len(examples))
        train_idx = sorted(order[:n_train])
        test_idx = sorted(order[n_train:])
        return [examples[i] for i in train_idx], [examples[i] for i in test_idx]

    by_class: dict[str, list[int]] = {}
    for i, example in enumerate(examples):
        by_class.setdefault(example.label, []).append(i)
    train_idx, test_idx = [], []
    for label in sorted(by_class):
        indices = by_class[label]
        if not indices:
            raise ConfigError(f"stratified split needs at least one example of {label!r}")
        rng.shuffle(indices)
        n_train = int(spec.train_fraction * len(indices))
        train_idx.extend(indices[:n_train])
        test_idx.extend(indices[n_train:])
    return [examples[i] for i in sorted(train_idx)], [examples[i] for i in sorted(test_idx)]
