#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Grayscale raster type and PGM (P2/P5) input/output."""

from typing import List, Sequence, Tuple

import numpy as np

from .exceptions import ImageFormatError

PGM_MAX_VALUE = 65535


class GrayImage:
    """Raster of integer intensities.

    Attributes:
        width: Number of columns.
        height: Number of rows.
        max_value: Maximum representable intensity, e.g. 255.
        pixels: Read-only integer array of shape ``(height, width)``, in
            row-major order with the origin at the top-left corner.
    """

    width: int
    height: int
    max_value: int
    pixels: np.ndarray

    def __init__(self, pixels, max_value: int = 255):
        """Validate and wrap a raster.

        Args:
            pixels: Two-dimensional array-like of integers.
            max_value: Maximum representable intensity.

        Raises:
            ImageFormatError: If the raster violates an image invariant.
        """
        array = np.array(pixels, dtype=np.int64)
        if array.ndim != 2:
            raise ImageFormatError(f"raster must be 2D, got {array.ndim}D")
        height, width = array.shape
        if width < 1 or height < 1:
            raise ImageFormatError("image must have at least one pixel")
        if not 1 <= max_value <= PGM_MAX_VALUE:
            raise ImageFormatError(f"invalid max_value {max_value}")
        if array.min() < 0:
            raise ImageFormatError("negative pixel value")
        if array.max() > max_value:
            raise ImageFormatError(
                f"pixel value {array.max()} exceeds max_value {max_value}"
            )
        array.setflags(write=False)
        self.pixels = array
        self.width = int(width)
        self.height = int(height)
        self.max_value = int(max_value)

    @classmethod
    def from_sequence(
        cls, width: int, height: int, max_value: int, values: Sequence[int]
    ) -> "GrayImage":
        """Build an image from a flat row-major pixel sequence.

        Args:
            width: Number of columns.
            height: Number of rows.
            max_value: Maximum representable intensity.
            values: Flat sequence of ``width * height`` intensities.

        Returns:
            New image.
        """
        if len(values) != width * height:
            raise ImageFormatError(
                f"pixel count mismatch: expected {width * height}, "
                f"got {len(values)}"
            )
        array = np.asarray(values, dtype=np.int64).reshape(height, width)
        return cls(array, max_value)

    @property
    def shape(self) -> Tuple[int, int]:
        """Shape ``(height, width)`` of the pixel array."""
        return (self.height, self.width)

    def flat(self) -> List[int]:
        """Row-major list of pixel values."""
        return self.pixels.ravel().tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return (
            self.max_value == other.max_value
            and self.shape == other.shape
            and bool(np.array_equal(self.pixels, other.pixels))
        )

    def __repr__(self) -> str:
        return (
            f"GrayImage(width={self.width}, height={self.height}, "
            f"max_value={self.max_value})"
        )


def _read_header(data: bytes) -> Tuple[bytes, List[int], int]:
    """Read the magic number and the three header integers of a PGM file.

    Args:
        data: File contents.

    Returns:
        Tuple ``(magic, [width, height, max_value], offset)`` where
        ``offset`` is the index of the first raster byte.
    """
    magic = data[:2]
    if magic not in (b"P2", b"P5"):
        raise ImageFormatError("malformed header: not a P2 or P5 file")
    values: List[int] = []
    pos = 2
    while len(values) < 3:
        if pos >= len(data):
            raise ImageFormatError("malformed header: truncated")
        char = data[pos : pos + 1]
        if char.isspace():
            pos += 1
        elif char == b"#":
            end = data.find(b"\n", pos)
            pos = len(data) if end < 0 else end + 1
        elif char.isdigit():
            start = pos
            while pos < len(data) and data[pos : pos + 1].isdigit():
                pos += 1
            values.append(int(data[start:pos]))
        else:
            raise ImageFormatError(
                f"malformed header: unexpected byte {char!r} at {pos}"
            )
    # A single whitespace byte separates the header from the raster
    if pos >= len(data) or not data[pos : pos + 1].isspace():
        if magic == b"P5" or pos < len(data):
            raise ImageFormatError("malformed header: missing separator")
    return magic, values, pos + 1


def parse_pgm(data: bytes) -> GrayImage:
    """Decode an in-memory PGM file.

    Args:
        data: Contents of a P2 (ASCII) or P5 (binary) PGM file.

    Returns:
        Decoded image.

    Raises:
        ImageFormatError: On a malformed header, a pixel count mismatch or a
            pixel exceeding the declared maximum value.
    """
    magic, (width, height, max_value), offset = _read_header(data)
    if width < 1 or height < 1:
        raise ImageFormatError("malformed header: empty raster")
    if not 1 <= max_value <= PGM_MAX_VALUE:
        raise ImageFormatError(f"malformed header: max_value {max_value}")
    count = width * height
    if magic == b"P5":
        dtype = np.dtype(">u2") if max_value > 255 else np.dtype("u1")
        raster = data[offset:]
        if len(raster) != count * dtype.itemsize:
            raise ImageFormatError(
                f"pixel count mismatch: expected {count}, "
                f"got {len(raster) // dtype.itemsize}"
            )
        values = np.frombuffer(raster, dtype=dtype).astype(np.int64)
    else:
        lines = data[offset:].split(b"\n")
        tokens = b" ".join(line.split(b"#")[0] for line in lines).split()
        if len(tokens) != count:
            raise ImageFormatError(
                f"pixel count mismatch: expected {count}, got {len(tokens)}"
            )
        try:
            values = np.array([int(token) for token in tokens], np.int64)
        except ValueError as exn:
            raise ImageFormatError(f"malformed pixel value: {exn}") from exn
    if values.size and values.max() > max_value:
        raise ImageFormatError(
            f"pixel value {values.max()} exceeds max_value {max_value}"
        )
    return GrayImage(values.reshape(height, width), max_value)


def load_pgm(path: str) -> GrayImage:
    """Load a grayscale image from a PGM file.

    Args:
        path: Path to a P2 or P5 file.

    Returns:
        Decoded image.

    Raises:
        FileNotFoundError: If the file does not exist.
        ImageFormatError: If the file is not a well-formed PGM.
    """
    with open(path, "rb") as file:
        data = file.read()
    try:
        return parse_pgm(data)
    except ImageFormatError as exn:
        raise ImageFormatError(f"{path}: {exn}") from exn


def encode_pgm(image: GrayImage) -> bytes:
    """Encode an image as a binary (P5) PGM file.

    Args:
        image: Image to encode.

    Returns:
        File contents. Samples use two big-endian bytes when the maximum
        value exceeds 255, one byte otherwise.
    """
    header = f"P5\n{image.width} {image.height}\n{image.max_value}\n"
    dtype = ">u2" if image.max_value > 255 else "u1"
    return header.encode("ascii") + image.pixels.astype(dtype).tobytes()


def save_pgm(image: GrayImage, path: str) -> None:
    """Save a grayscale image to a binary (P5) PGM file.

    Args:
        image: Image to save.
        path: Destination path.

    Raises:
        OSError: If the destination is not writable.
    """
    with open(path, "wb") as file:
        file.write(encode_pgm(image))
