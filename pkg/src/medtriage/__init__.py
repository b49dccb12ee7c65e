"""Body-system triage of medical transcription reports.

Library layers: corpus curation -> text cleaning -> TF-IDF / PCA features
-> four classifiers (softmax regression, random forest, LSTM, CNN-LSTM)
-> per-class evaluation, plus artifact serialization, a CLI, and an
authenticated HTTP classification service.
"""

from .corpus import BODY_SYSTEMS

__all__ = ["BODY_SYSTEMS"]
__version__ = "0.1.0"
