"""Show the four-step cleaning chain on messy clinical text: strip
numbers/symbols/punctuation, lowercase tokenization with stopword
removal, then dictionary lemmatization."""

from medtriage.preprocess import (
    clean_and_tokenize,
    default_clean_config,
    lemmatize,
    preprocess_document,
)

config = default_clean_config()
print(f"stopwords: {len(config.stopwords)} words")
print(f"lemma dictionary: {len(config.lemma_dictionary)} surface->root pairs")

samples = [
    "The patient's BP: 120/80 [stable].",
    "FINDINGS: Studies of the vertebrae show 2 fractures; biopsies pending.",
    "Pt c/o chest pain x3 days, worsening w/ exertion!!!",
    "120 80 55",
]

for text in samples:
    cleaned = clean_and_tokenize(text, config)
    lemmatized = lemmatize(cleaned, config)
    print(f"\ninput:      {text!r}")
    print(f"cleaned:    {list(cleaned.tokens)}")
    print(f"lemmatized: {list(lemmatized.tokens)}")
    assert preprocess_document(text, config).tokens == lemmatized.tokens

print("\nlemma lookups worth noticing:")
for surface in ("studies", "vertebrae", "biopsies", "findings", "fractures"):
    print(f"  {surface} -> {config.lemma_dictionary.get(surface, surface)}")
