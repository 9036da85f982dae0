#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Utility functions."""

from typing import Tuple

#: Significant digits of floating-point values in CSV artifacts.
FLOAT_DIGITS = 17

#: Printf-style format matching :data:`FLOAT_DIGITS`.
FLOAT_FORMAT = f"%.{FLOAT_DIGITS}g"


def format_float(value: float) -> str:
    """Format a real number with 17 significant digits.

    Args:
        value: Number to format.

    Returns:
        String representation that parses back to the same double.
    """
    return FLOAT_FORMAT % value


def meets_threshold(count: int, total: int, threshold: float) -> bool:
    """Check whether the ratio ``count / total`` reaches a threshold.

    The comparison is carried out on counts with a small tolerance, so that
    e.g. 3 transactions out of 30 meet a 10% threshold despite 0.1 not
    being representable exactly.

    Args:
        count: Numerator.
        total: Denominator, strictly positive.
        threshold: Ratio to reach.

    Returns:
        True if and only if ``count / total >= threshold``.
    """
    return count >= threshold * total - 1e-9


def parse_int_tuple(text: str, size: int) -> Tuple[int, ...]:
    """Parse comma-separated integers, e.g. ``"0,0,64,64"``.

    Args:
        text: Input string.
        size: Expected number of integers.

    Returns:
        Tuple of integers.

    Raises:
        ValueError: If the string does not contain exactly ``size`` integers.
    """
    values = tuple(int(token) for token in text.split(","))
    if len(values) != size:
        raise ValueError(f"expected {size} integers, got {len(values)}")
    return values

