#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Directional co-occurrence matrices and texture descriptors."""

import enum
from dataclasses import astuple, dataclass, fields
from typing import Dict, List, Tuple

import numpy as np
from skimage.feature import graycomatrix

from .exceptions import TextureError
from .gray_image import GrayImage

#: Number of features extracted per image: 4 directions x 10 descriptors.
FEATURE_COUNT = 40


class Direction(enum.IntEnum):
    """Direction of the displacement between the two pixels of a pair."""

    DEG_0 = 0
    DEG_45 = 45
    DEG_90 = 90
    DEG_135 = 135

    def offset(self, distance: int) -> Tuple[int, int]:
        """Displacement ``(drow, dcol)`` from the first to the second pixel.

        Args:
            distance: Intersample distance in pixels.

        Returns:
            Row and column displacement. Rows grow downwards, so 45 degrees
            points to the upper-right neighbor.
        """
        drow, dcol = {
            Direction.DEG_0: (0, 1),
            Direction.DEG_45: (-1, 1),
            Direction.DEG_90: (-1, 0),
            Direction.DEG_135: (-1, -1),
        }[self]
        return (drow * distance, dcol * distance)


@dataclass(frozen=True)
class ExtractionConfig:
    """Texture feature extraction parameters.

    Attributes:
        gray_levels: Number of gray levels G images are quantized to.
        distance: Intersample distance d.
        idm_exponent: Exponent of the inverse difference moment.
        cluster_exponent: Exponent of the cluster tendency.
    """

    gray_levels: int = 16
    distance: int = 1
    idm_exponent: int = 2
    cluster_exponent: int = 2

    def __post_init__(self):
        if self.gray_levels < 2:
            raise TextureError("gray_levels must be at least 2")
        if self.distance < 1:
            raise TextureError("distance must be at least 1")
        if self.idm_exponent < 1 or self.cluster_exponent < 1:
            raise TextureError("exponents must be at least 1")

    def serialize(self) -> dict:
        """Dictionary representation for model files."""
        return {
            "gray_levels": self.gray_levels,
            "distance": self.distance,
            "idm_exponent": self.idm_exponent,
            "cluster_exponent": self.cluster_exponent,
        }

    @staticmethod
    def from_dict(data: dict) -> "ExtractionConfig":
        """Build a configuration from its dictionary representation."""
        return ExtractionConfig(**{k: int(v) for k, v in data.items()})


@dataclass(frozen=True, eq=False)
class CooccurrenceMatrix:
    """Counts of ordered pixel pairs at a given displacement.

    Attributes:
        gray_levels: Number of gray levels G.
        direction: Direction of the displacement.
        distance: Intersample distance d.
        counts: Integer array of shape ``(G, G)``; ``counts[i, j]`` is the
            number of pairs whose first pixel has level ``i`` and second
            pixel has level ``j``.
    """

    gray_levels: int
    direction: Direction
    distance: int
    counts: np.ndarray

    @property
    def total(self) -> int:
        """Number of pixel pairs counted."""
        return int(self.counts.sum())


@dataclass(frozen=True)
class TextureDescriptors:
    """Ten scalar statistics of a normalized co-occurrence matrix."""

    entropy: float
    energy: float
    contrast: float
    homogeneity: float
    sum_mean: float
    variance: float
    maximum_probability: float
    inverse_difference_moment: float
    cluster_tendency: float
    correlation: float

    def as_tuple(self) -> Tuple[float, ...]:
        """Values in field order."""
        return astuple(self)


#: Descriptor names, in feature-vector order.
DESCRIPTOR_NAMES: Tuple[str, ...] = tuple(
    field.name for field in fields(TextureDescriptors)
)


def feature_names() -> List[str]:
    """Names of the 40 features, direction-major.

    Returns:
        Names such as ``"deg45_contrast"``.
    """
    return [
        f"deg{direction.value}_{name}"
        for direction in Direction
        for name in DESCRIPTOR_NAMES
    ]


@dataclass(frozen=True, eq=False)
class FeatureVector:
    """Texture features of one image.

    Attributes:
        image_id: Identifier of the image, usually its manifest path.
        values: The 40 feature values, in :func:`feature_names` order.
    """

    image_id: str
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.shape != (FEATURE_COUNT,):
            raise TextureError(
                f"feature vector must have {FEATURE_COUNT} values, "
                f"got shape {values.shape}"
            )
        if not np.all(np.isfinite(values)):
            raise TextureError(f"non-finite feature in {self.image_id}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return FEATURE_COUNT

    def __eq__(self, other) -> bool:
        if not isinstance(other, FeatureVector):
            return NotImplemented
        return self.image_id == other.image_id and bool(
            np.array_equal(self.values, other.values)
        )

    def serialize(self) -> dict:
        """Dictionary representation for result logs."""
        return {"image_id": self.image_id, "values": self.values.tolist()}


def quantize(image: GrayImage, gray_levels: int) -> GrayImage:
    """Reduce an image to a given number of gray levels.

    Args:
        image: Input image.
        gray_levels: Number of output levels G.

    Returns:
        Image whose pixels ``p`` became ``floor(p * G / (max_value + 1))``,
        with maximum value ``G - 1``.
    """
    if gray_levels < 2:
        raise TextureError("gray_levels must be at least 2")
    levels = image.pixels * gray_levels // (image.max_value + 1)
    return GrayImage(levels, gray_levels - 1)


def cooccurrence(
    image: GrayImage, distance: int, direction: Direction
) -> CooccurrenceMatrix:
    """Count ordered pixel pairs at a given displacement.

    Pairs are one-sided: the second pixel is displaced from the first by
    :meth:`Direction.offset`, so the matrix is not symmetric in general.

    Args:
        image: Image already quantized; its gray levels are
            ``0 .. max_value``.
        distance: Intersample distance, at least 1.
        direction: Direction of the displacement.

    Returns:
        Co-occurrence matrix, with a zero total when the displacement does
        not fit in the raster.
    """
    if distance < 1:
        raise TextureError("distance must be at least 1")
    levels = image.max_value + 1
    drow, dcol = Direction(direction).offset(distance)
    # graycomatrix displaces by (round(sin a * r), round(cos a * r))
    pairs = graycomatrix(
        np.ascontiguousarray(image.pixels, dtype=np.uint16),
        distances=[np.hypot(drow, dcol)],
        angles=[np.arctan2(drow, dcol)],
        levels=levels,
        symmetric=False,
        normed=False,
    )
    counts = pairs[:, :, 0, 0].astype(np.int64)
    return CooccurrenceMatrix(levels, Direction(direction), distance, counts)


def normalize(matrix: CooccurrenceMatrix) -> np.ndarray:
    """Turn pair counts into joint probabilities.

    Args:
        matrix: Co-occurrence matrix with at least one pair.

    Returns:
        Array of shape ``(G, G)`` summing to one.
    """
    total = matrix.total
    if total == 0:
        raise TextureError("empty co-occurrence matrix")
    return matrix.counts / total


def descriptors(
    prob: np.ndarray, config: ExtractionConfig = ExtractionConfig()
) -> TextureDescriptors:
    """Compute the ten texture descriptors of a normalized matrix.

    Args:
        prob: Normalized co-occurrence matrix.
        config: Extraction configuration, for the exponents.

    Returns:
        Texture descriptors. Entropy uses the natural logarithm; the inverse
        difference moment skips the diagonal; cluster tendency and variance
        use the mean level of the row marginal; correlation uses the mean
        and standard deviation of both marginals and is zero for a constant
        marginal.
    """
    prob = np.asarray(prob, dtype=np.float64)
    if prob.ndim != 2 or prob.shape[0] != prob.shape[1]:
        raise TextureError(f"expected a square matrix, got {prob.shape}")
    if prob.min() < 0.0 or abs(prob.sum() - 1.0) > 1e-9:
        raise TextureError("co-occurrence matrix is not normalized")
    size = prob.shape[0]
    i, j = np.ogrid[0:size, 0:size]
    levels = np.arange(size)
    diff = i - j
    row_marginal = prob.sum(axis=1)
    col_marginal = prob.sum(axis=0)
    mu = float(levels @ row_marginal)
    mu_i, mu_j = mu, float(levels @ col_marginal)
    sigma_i = np.sqrt(((levels - mu_i) ** 2) @ row_marginal)
    sigma_j = np.sqrt(((levels - mu_j) ** 2) @ col_marginal)
    positive = prob[prob > 0]
    off_diagonal = diff != 0
    if sigma_i < 1e-12 or sigma_j < 1e-12:
        correlation = 0.0
    else:
        covariance = ((i - mu_i) * (j - mu_j) * prob).sum()
        correlation = covariance / (sigma_i * sigma_j)
    return TextureDescriptors(
        entropy=float(-(positive * np.log(positive)).sum()),
        energy=float((prob**2).sum()),
        contrast=float((diff**2 * prob).sum()),
        homogeneity=float((prob / (1 + np.abs(diff))).sum()),
        sum_mean=float(0.5 * (i * prob + j * prob).sum()),
        variance=float(
            0.5 * ((i - mu) ** 2 * prob + (j - mu) ** 2 * prob).sum()
        ),
        maximum_probability=float(prob.max()),
        inverse_difference_moment=float(
            (
                prob[off_diagonal]
                / np.abs(diff[off_diagonal]) ** config.idm_exponent
            ).sum()
        ),
        cluster_tendency=float(
            ((i + j - 2 * mu) ** config.cluster_exponent * prob).sum()
        ),
        correlation=float(correlation),
    )


def directional_descriptors(
    image: GrayImage, config: ExtractionConfig
) -> Dict[Direction, TextureDescriptors]:
    """Texture descriptors of an image in each of the four directions.

    Args:
        image: Preprocessed image, not yet quantized.
        config: Extraction configuration.

    Returns:
        Dictionary from direction to descriptors.

    Raises:
        TextureError: If the image is too small to produce a pair in some
            direction.
    """
    levels = quantize(image, config.gray_levels)
    result = {}
    for direction in Direction:
        matrix = cooccurrence(levels, config.distance, direction)
        if matrix.total == 0:
            raise TextureError(
                f"image too small: {image.width}x{image.height} has no pixel "
                f"pair at distance {config.distance} and {direction.value} "
                "degrees"
            )
        result[direction] = descriptors(normalize(matrix), config)
    return result


def extract_features(
    image: GrayImage, config: ExtractionConfig, image_id: str = ""
) -> FeatureVector:
    """Extract the 40 texture features of an image.

    Args:
        image: Preprocessed image.
        config: Extraction configuration.
        image_id: Identifier stored in the feature vector.

    Returns:
        Feature vector, direction-major (0, 45, 90, 135 degrees) with
        descriptors in :data:`DESCRIPTOR_NAMES` order.
    """
    by_direction = directional_descriptors(image, config)
    values = [
        value
        for direction in Direction
        for value in by_direction[direction].as_tuple()
    ]
    return FeatureVector(image_id, np.array(values, dtype=np.float64))
