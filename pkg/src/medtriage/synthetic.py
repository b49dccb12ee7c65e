"""Seeded synthetic corpus: four classes with disjoint keyword sets plus
shared noise words, rendered as messy raw text so the full cleaning chain
gets exercised."""

from __future__ import annotations

import random

from .corpus import BODY_SYSTEMS, CuratedExample

CLASS_KEYWORDS = {
    "Heart": ("aorta", "angina", "stent", "murmur", "systole"),
    "Brain": ("seizure", "cortex", "migraine", "neuron", "aphasia"),
    "Reproductive": ("uterus", "ovary", "cervix", "placenta", "testis"),
    "Digestive": ("colon", "bowel", "gastritis", "bile", "duodenum"),
}

NOISE_WORDS = (
    "patient", "doctor", "hospital", "report", "history", "normal", "exam",
    "pain", "daily", "review", "visit", "note", "chart", "stable", "mild",
)


def make_keyword_corpus(n_docs: int = 200, seed: int = 0) -> list[CuratedExample]:
    """Balanced labeled documents, deterministic under the seed.

    Roughly 60% of each document's words come from its class keyword set
    and the rest from the shared noise pool; casing, digits, and
    punctuation are sprinkled in so preprocessing has work to do.
    """
    rng = random.Random(seed)
    examples = []
    for index in range(n_docs):
        label = BODY_SYSTEMS[index % len(BODY_SYSTEMS)]
        keywords = CLASS_KEYWORDS[label]
        words = [rng.choice(keywords)]
        for _ in range(rng.randint(7, 19)):
            if rng.random() < 0.6:
                words.append(rng.choice(keywords))
            else:
                words.append(rng.choice(NOISE_WORDS))
        decorated = []
        for word in words:
            if rng.random() < 0.2:
                word = word.capitalize()
            if rng.random() < 0.1:
                word += ","
            decorated.append(word)
            if rng.random() < 0.08:
                decorated.append(str(rng.randint(1, 200)))
        text = " ".join(decorated) + "."
        examples.append(CuratedExample(id=f"syn-{index:04d}", label=label, transcription=text))
    return examples


def write_corpus_csv(examples: list[CuratedExample], path) -> None:
    """Write examples as a loadable snapshot CSV, reversing the label back
    to a representative source specialty."""
    import csv

    specialty_for = {
        "Heart": "Cardiovascular / Pulmonary",
        "Brain": "Neurology",
        "Reproductive": "Urology",
        "Digestive": "Gastroenterology",
    }
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["id", "medical_specialty", "transcription"])
        for example in examples:
            writer.writerow([example.id, specialty_for[example.label], example.transcription])
