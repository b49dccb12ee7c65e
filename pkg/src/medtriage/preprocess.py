"""Text cleaning chain: strip non-letters, lowercase tokenization with
stopword removal, and dictionary lemmatization."""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from importlib import resources

# Anything that is not a Unicode letter (digits, punctuation, symbols,
# underscores) becomes a token boundary.
_NON_LETTER = re.compile(r"[\W\d_]+", re.UNICODE)

DEFAULT_MIN_TOKEN_LENGTH = 2


@dataclass(frozen=True)
class CleanConfig:
    stopwords: frozenset[str]
    lemma_dictionary: dict[str, str]
    min_token_length: int = DEFAULT_MIN_TOKEN_LENGTH

    def fingerprint(self) -> str:
        """Stable hash of the full config, pinned into model artifacts."""
        payload = json.dumps(
            {
                "stopwords": sorted(self.stopwords),
                "lemmas": sorted(self.lemma_dictionary.items()),
                "min_token_length": self.min_token_length,
            },
            ensure_ascii=False,
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class TokenizedDoc:
    tokens: tuple[str, ...]
    source_id: str = ""


def load_stopwords(path) -> frozenset[str]:
    words = set()
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            word = line.strip()
            if word and not word.startswith("#"):
                words.add(word.lower())
    return frozenset(words)


def load_lemma_dictionary(path) -> dict[str, str]:
    lemmas = {}
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            surface, _, root = line.partition("\t")
            if root:
                lemmas[surface] = root
    return lemmas


def default_clean_config() -> CleanConfig:
    """The pinned stopword list and lemma dictionary shipped with the
    package."""
    data = resources.files("medtriage.data")
    with resources.as_file(data.joinpath("stopwords.txt")) as path:
        stopwords = load_stopwords(path)
    with resources.as_file(data.joinpath("lemmas.tsv")) as path:
        lemmas = load_lemma_dictionary(path)
    return CleanConfig(stopwords=stopwords, lemma_dictionary=lemmas)


def clean_and_tokenize(text: str, config: CleanConfig, source_id: str = "") -> TokenizedDoc:
    """Replace non-letters with spaces, split, lowercase, then drop
    stopwords and tokens shorter than min_token_length."""
    tokens = []
    for raw in _NON_LETTER.sub(" ", text).split():
        token = raw.lower()
        if not token.islower() or not token.isalpha():
            # rare leftovers the regex cannot express: numeric characters
            # beyond \d (superscripts) and letters with no lowercase form
            # (mathematical capitals); both violate the output contract
            token = "".join(c for c in token if c.isalpha() and not c.isupper())
        if len(token) < config.min_token_length or token in config.stopwords:
            continue
        tokens.append(token)
    return TokenizedDoc(tokens=tuple(tokens), source_id=source_id)


def lemmatize(doc: TokenizedDoc, config: CleanConfig) -> TokenizedDoc:
    """Dictionary lookup per token; unknown tokens pass through unchanged."""
    lemmas = config.lemma_dictionary
    return TokenizedDoc(
        tokens=tuple(lemmas.get(token, token) for token in doc.tokens),
        source_id=doc.source_id,
    )


def preprocess_document(text: str, config: CleanConfig, source_id: str = "") -> TokenizedDoc:
    return lemmatize(clean_and_tokenize(text, config, source_id), config)
