import pytest

from medtriage.preprocess import CleanConfig, default_clean_config
from medtriage.synthetic import make_keyword_corpus


@pytest.fixture(scope="session")
def clean_config():
    return default_clean_config()


@pytest.fixture(scope="session")
def tiny_config():
    """Small explicit config so tests control the resources exactly."""
    return CleanConfig(
        stopwords=frozenset({"the", "of", "and", "a", "is", "to", "in"}),
        lemma_dictionary={"studies": "study", "hearts": "heart", "attacks": "attack"},
    )


@pytest.fixture(scope="session")
def keyword_corpus():
    return make_keyword_corpus(200, seed=5)
