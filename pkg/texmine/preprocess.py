#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Image cleaning: cropping, histogram equalization, hybrid median filter."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .exceptions import PreprocessError
from .gray_image import GrayImage


@dataclass(frozen=True)
class CropRect:
    """Rectangle to keep when cropping.

    Attributes:
        x0: Column of the top-left pixel.
        y0: Row of the top-left pixel.
        w: Width in pixels.
        h: Height in pixels.
    """

    x0: int
    y0: int
    w: int
    h: int

    def __post_init__(self):
        if self.x0 < 0 or self.y0 < 0 or self.w < 1 or self.h < 1:
            raise PreprocessError(f"invalid crop rectangle {self}")

    def serialize(self) -> list:
        """List ``[x0, y0, w, h]``."""
        return [self.x0, self.y0, self.w, self.h]


@dataclass(frozen=True)
class PreprocessConfig:
    """Preprocessing steps, applied as crop, equalize then filter.

    Attributes:
        crop: Optional rectangle to crop to.
        equalize: Apply histogram equalization.
        median_window: Hybrid median window size, or 0 to skip filtering.
    """

    crop: Optional[CropRect] = None
    equalize: bool = True
    median_window: int = 3

    def __post_init__(self):
        if self.median_window != 0 and (
            self.median_window < 3 or self.median_window % 2 == 0
        ):
            raise PreprocessError("window must be odd and at least 3")

    def serialize(self) -> dict:
        """Dictionary representation for model files."""
        return {
            "crop": self.crop.serialize() if self.crop else None,
            "equalize": self.equalize,
            "median_window": self.median_window,
        }

    @staticmethod
    def from_dict(data: dict) -> "PreprocessConfig":
        """Build a configuration from its dictionary representation."""
        crop = data.get("crop")
        return PreprocessConfig(
            crop=CropRect(*crop) if crop else None,
            equalize=bool(data.get("equalize", True)),
            median_window=int(data.get("median_window", 3)),
        )


def crop(image: GrayImage, rect: CropRect) -> GrayImage:
    """Crop an image to a rectangle.

    Args:
        image: Input image.
        rect: Rectangle to keep.

    Returns:
        Image of size ``(rect.w, rect.h)`` whose pixel at column ``i`` and
        row ``j`` is the input pixel at column ``x0 + i`` and row ``y0 + j``.

    Raises:
        PreprocessError: If the rectangle does not fit in the image.
    """
    if rect.x0 + rect.w > image.width or rect.y0 + rect.h > image.height:
        raise PreprocessError(
            f"rect out of bounds: {rect} in {image.width}x{image.height}"
        )
    rows = slice(rect.y0, rect.y0 + rect.h)
    cols = slice(rect.x0, rect.x0 + rect.w)
    block = image.pixels[rows, cols]
    return GrayImage(block, image.max_value)


def histogram_equalize(image: GrayImage) -> GrayImage:
    """Spread intensities so that their cumulative histogram becomes linear.

    Each pixel ``p`` maps to ``round((cdf(p) - cdf_min) / (N - cdf_min) *
    max_value)`` where ``cdf_min`` is the smallest nonzero cumulative count
    and ``N`` the number of pixels. Constant images are returned unchanged.

    Args:
        image: Input image.

    Returns:
        Equalized image with the same maximum value.
    """
    pixels = image.pixels
    histogram = np.bincount(pixels.ravel(), minlength=image.max_value + 1)
    cdf = np.cumsum(histogram)
    cdf_min = int(cdf[cdf > 0].min())
    total = pixels.size
    if total == cdf_min:
        return image
    scaled = (cdf - cdf_min) / (total - cdf_min) * image.max_value
    lookup = np.clip(np.floor(scaled + 0.5), 0, image.max_value)
    return GrayImage(lookup.astype(np.int64)[pixels], image.max_value)


def hybrid_median(image: GrayImage, window: int = 3) -> GrayImage:
    """Apply a hybrid median filter with edge replication at the borders.

    Each output pixel is the median of three values: the median of the
    plus-shaped neighborhood (row and column through the center), the
    median of the X-shaped neighborhood (both diagonals through the
    center), and the center pixel itself.

    Args:
        image: Input image.
        window: Odd window size, at least 3.

    Returns:
        Filtered image.

    Raises:
        PreprocessError: If the window is even, smaller than 3 or larger
            than the image.
    """
    if window % 2 == 0:
        raise PreprocessError("window must be odd")
    if window < 3:
        raise PreprocessError("window must be at least 3")
    if window > min(image.width, image.height):
        raise PreprocessError(
            f"window {window} exceeds image size "
            f"{image.width}x{image.height}"
        )
    radius = window // 2
    height, width = image.shape
    padded = np.pad(image.pixels, radius, mode="edge")

    def shifted(drow: int, dcol: int) -> np.ndarray:
        rows = slice(radius + drow, radius + drow + height)
        cols = slice(radius + dcol, radius + dcol + width)
        return padded[rows, cols]

    offsets = range(-radius, radius + 1)
    plus = [shifted(k, 0) for k in offsets]
    plus += [shifted(0, k) for k in offsets if k != 0]
    cross = [shifted(k, k) for k in offsets]
    cross += [shifted(k, -k) for k in offsets if k != 0]

    def median(stack) -> np.ndarray:
        values = np.sort(np.stack(stack), axis=0)
        return values[len(stack) // 2]  # odd count, exact median

    center = image.pixels
    output = median([median(plus), median(cross), center])
    return GrayImage(output, image.max_value)


def preprocess(image: GrayImage, config: PreprocessConfig) -> GrayImage:
    """Apply the configured cleaning steps in order.

    Args:
        image: Raw input image.
        config: Preprocessing configuration.

    Returns:
        Cleaned image.
    """
    if config.crop is not None:
        image = crop(image, config.crop)
    if config.equalize:
        image = histogram_equalize(image)
    if config.median_window:
        image = hybrid_median(image, config.median_window)
    return image
