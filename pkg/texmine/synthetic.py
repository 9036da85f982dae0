#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Synthetic texture dataset with one texture family per class."""

import logging
import os
from typing import Callable, Dict, List, Tuple

import numpy as np

from .gray_image import GrayImage, save_pgm
from .manifest import DatasetManifest, ManifestEntry, save_manifest

TextureGenerator = Callable[[np.random.Generator, int], np.ndarray]


def shaded_field(rng: np.random.Generator, size: int) -> np.ndarray:
    """Smooth intensity ramp in a random direction with faint noise."""
    rows, cols = np.mgrid[0:size, 0:size] / (size - 1)
    angle = rng.uniform(0.0, 2.0 * np.pi)
    ramp = np.cos(angle) * cols + np.sin(angle) * rows
    ramp = (ramp - ramp.min()) / max(np.ptp(ramp), 1e-9)
    field = 100.0 + 60.0 * ramp + rng.uniform(-10.0, 10.0)
    return field + rng.normal(0.0, 1.5, (size, size))


def coarse_checkerboard(rng: np.random.Generator, size: int) -> np.ndarray:
    """Checkerboard of 8-pixel blocks with additive noise."""
    block = 8
    phase = rng.integers(0, block, 2)[:, None, None]
    rows, cols = np.mgrid[0:size, 0:size] + phase
    board = ((rows // block + cols // block) % 2).astype(np.float64)
    return 80.0 + 96.0 * board + rng.normal(0.0, 10.0, (size, size))


def fine_stripes(rng: np.random.Generator, size: int) -> np.ndarray:
    """Vertical high-contrast stripes two pixels wide with additive noise."""
    width = 2
    cols = np.arange(size) + rng.integers(0, 2 * width)
    stripes = ((cols // width) % 2).astype(np.float64)
    field = np.tile(40.0 + 175.0 * stripes, (size, 1))
    return field + rng.normal(0.0, 10.0, (size, size))


#: Texture generator and keywords of each class.
CLASS_TEXTURES: Dict[str, Tuple[TextureGenerator, Tuple[str, ...]]] = {
    "normal": (shaded_field, ("normal",)),
    "benign": (coarse_checkerboard, ("benign", "abnormality=1")),
    "malign": (fine_stripes, ("malign", "abnormality=1")),
}


def synthetic_image(
    rng: np.random.Generator, label: str, size: int = 64
) -> GrayImage:
    """Draw an 8-bit image of a given class.

    Args:
        rng: Random number generator.
        label: Class label.
        size: Width and height in pixels.

    Returns:
        Synthetic image.
    """
    generator, _ = CLASS_TEXTURES[label]
    field = np.clip(np.rint(generator(rng, size)), 0, 255)
    return GrayImage(field.astype(np.int64), 255)


def generate_dataset(
    root: str,
    train_per_class: int = 50,
    test_per_class: int = 20,
    size: int = 64,
    seed: int = 42,
) -> Tuple[str, str]:
    """Write a synthetic dataset with training and test manifests.

    Args:
        root: Output directory, created if needed.
        train_per_class: Number of training images per class.
        test_per_class: Number of test images per class.
        size: Width and height of images in pixels.
        seed: Seed of the random number generator.

    Returns:
        Paths to the training and test manifests.
    """
    rng = np.random.default_rng(seed)
    paths = []
    for split, count in (("train", train_per_class), ("test", test_per_class)):
        os.makedirs(os.path.join(root, split), exist_ok=True)
        entries: List[ManifestEntry] = []
        for label, (_, keywords) in CLASS_TEXTURES.items():
            for index in range(count):
                image_path = f"{split}/{label}_{index:03d}.pgm"
                image = synthetic_image(rng, label, size)
                save_pgm(image, os.path.join(root, image_path))
                entries.append(ManifestEntry(image_path, label, keywords))
        manifest_path = os.path.join(root, f"{split}.csv")
        save_manifest(DatasetManifest(tuple(entries), root), manifest_path)
        logging.info("Wrote %d images to %s", len(entries), manifest_path)
        paths.append(manifest_path)
    return paths[0], paths[1]
