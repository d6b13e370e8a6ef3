"""End-to-end composition: grayscale image -> verdict."""

from __future__ import annotations

import numpy as np

from .classifier import Tolerances, Verdict, classify
from .geometry import FeatureVector, build_features
from .segment import binarize, isolate_object

__all__ = ["classify_raster"]


def classify_raster(
    image: np.ndarray,
    tol: Tolerances | None = None,
    threshold="otsu",
) -> tuple[Verdict, FeatureVector]:
    """Binarize, isolate the largest object, extract features, classify."""
    mask = isolate_object(binarize(image, threshold))
    features = build_features(mask)
    return classify(features, tol), features
