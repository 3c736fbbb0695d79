"""docpair: corpus construction and evaluation toolkit for document OCR.

Pairs multi-page source markup with per-page PDF text, applies
training-time augmentations, detects degenerate repetition in decoder
logit traces, and scores predictions against ground truth per text
modality.
"""

__version__ = "0.1.0"
