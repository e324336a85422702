"""Online cursive word recognition toolkit.

Pipeline: pen strokes -> preprocessing (dedup, smoothing, slant
correction, size normalization) -> per-point features -> bidirectional
LSTM with a label+blank output layer trained by backpropagation through
time -> dictionary/bigram constrained decoding.
"""

__version__ = "0.1.0"

from .errors import (
    ConfigError,
    DataFormatError,
    ModelFormatError,
    ScribeError,
    TrainingDivergedError,
)

__all__ = [
    "ConfigError",
    "DataFormatError",
    "ModelFormatError",
    "ScribeError",
    "TrainingDivergedError",
    "__version__",
]
