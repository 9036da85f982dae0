#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Feature extraction over batches of image files."""

import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import aiofiles

from .exceptions import TexmineError
from .gray_image import parse_pgm
from .preprocess import PreprocessConfig, preprocess
from .texture import ExtractionConfig, FeatureVector, extract_features


@dataclass(frozen=True)
class ImageResult:
    """Outcome of extracting the features of one image file.

    Attributes:
        image_id: Identifier of the image, e.g. its manifest path.
        path: Path the image was read from.
        features: Feature vector, or None if the image failed.
        error: Failure message, or None on success.
    """

    image_id: str
    path: str
    features: Optional[FeatureVector] = None
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        """Whether features were extracted."""
        return self.features is not None


def process_image(
    data: bytes,
    image_id: str,
    preprocessing: PreprocessConfig,
    extraction: ExtractionConfig,
) -> FeatureVector:
    """Decode, clean and extract the features of an in-memory PGM file.

    Args:
        data: PGM file contents.
        image_id: Identifier stored in the feature vector.
        preprocessing: Preprocessing configuration.
        extraction: Feature extraction configuration.

    Returns:
        Feature vector of the image.
    """
    image = parse_pgm(data)
    cleaned = preprocess(image, preprocessing)
    return extract_features(cleaned, extraction, image_id)


async def extract_batch_async(
    images: Sequence[Tuple[str, str]],
    preprocessing: PreprocessConfig,
    extraction: ExtractionConfig,
    jobs: int = 1,
) -> List[ImageResult]:
    """Extract features of several images concurrently.

    Files are read with asynchronous I/O while decoding and extraction run
    on a pool of worker threads.

    Args:
        images: Sequence of ``(image_id, path)`` pairs.
        preprocessing: Preprocessing configuration.
        extraction: Feature extraction configuration.
        jobs: Number of worker threads.

    Returns:
        One result per input image, in input order.
    """
    loop = asyncio.get_running_loop()
    semaphore = asyncio.Semaphore(4 * max(jobs, 1))

    async def extract_one(pool, image_id: str, path: str) -> ImageResult:
        async with semaphore:
            try:
                async with aiofiles.open(path, "rb") as file:
                    data = await file.read()
                features = await loop.run_in_executor(
                    pool,
                    process_image,
                    data,
                    image_id,
                    preprocessing,
                    extraction,
                )
            except (TexmineError, OSError) as exn:
                logging.error("Cannot extract features of %s: %s", path, exn)
                return ImageResult(image_id, path, error=str(exn))
        return ImageResult(image_id, path, features=features)

    with ThreadPoolExecutor(max_workers=max(jobs, 1)) as pool:
        tasks = [extract_one(pool, *image) for image in images]
        return list(await asyncio.gather(*tasks))


def extract_batch(
    images: Sequence[Tuple[str, str]],
    preprocessing: PreprocessConfig,
    extraction: ExtractionConfig,
    jobs: int = 1,
) -> List[ImageResult]:
    """Extract features of several images, see :func:`extract_batch_async`.

    Args:
        images: Sequence of ``(image_id, path)`` pairs.
        preprocessing: Preprocessing configuration.
        extraction: Feature extraction configuration.
        jobs: Number of worker threads.

    Returns:
        One result per input image, in input order.
    """
    return asyncio.run(
        extract_batch_async(images, preprocessing, extraction, jobs)
    )
