#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Items of the transaction database: feature intervals and keywords."""

import re
from dataclasses import dataclass
from typing import Iterable, Tuple, Union

from .exceptions import TransactionError

_FEATURE_PATTERN = re.compile(r"^f(\d+)_b(\d+)$")


class Item:
    """Base class for items.

    Items are totally ordered: feature items come first, sorted by feature
    then bin index, followed by keyword items sorted lexicographically.
    """

    @property
    def sort_key(self) -> Tuple[int, int, int, str]:
        """Key implementing the total order of items."""
        raise NotImplementedError

    def __lt__(self, other: "Item") -> bool:
        return self.sort_key < other.sort_key

    def serialize(self) -> str:
        """Text form of the item, e.g. ``f3_b2`` or ``kw_malign``."""
        return str(self)


@dataclass(frozen=True, eq=True)
class FeatureItem(Item):
    """Interval of a discretized feature.

    Attributes:
        feature_index: Index of the feature in the feature vector.
        bin_index: Index of the interval the feature value falls into.
    """

    feature_index: int
    bin_index: int

    def __post_init__(self):
        if self.feature_index < 0 or self.bin_index < 0:
            raise TransactionError(f"negative index in {self!r}")

    @property
    def sort_key(self) -> Tuple[int, int, int, str]:
        return (0, self.feature_index, self.bin_index, "")

    def __str__(self) -> str:
        return f"f{self.feature_index}_b{self.bin_index}"


@dataclass(frozen=True, eq=True)
class KeywordItem(Item):
    """Keyword attached to an image by a specialist.

    Attributes:
        token: Lower-case keyword, e.g. ``malign`` or ``subtlety=4``.
    """

    token: str

    def __post_init__(self):
        token = self.token.strip().lower()
        if not token:
            raise TransactionError("empty keyword")
        object.__setattr__(self, "token", token)

    @property
    def sort_key(self) -> Tuple[int, int, int, str]:
        return (1, 0, 0, self.token)

    def __str__(self) -> str:
        return f"kw_{self.token}"


AnyItem = Union[FeatureItem, KeywordItem]


def parse_item(text: str) -> AnyItem:
    """Parse the text form of an item.

    Args:
        text: Item text, e.g. ``f3_b2`` or ``kw_malign``.

    Returns:
        Parsed item.

    Raises:
        TransactionError: If the text is not an item.
    """
    if text.startswith("kw_"):
        return KeywordItem(text[3:])
    match = _FEATURE_PATTERN.match(text)
    if match is None:
        raise TransactionError(f"not an item: '{text}'")
    return FeatureItem(int(match.group(1)), int(match.group(2)))


def sorted_items(items: Iterable[Item]) -> Tuple[AnyItem, ...]:
    """Items sorted in their canonical order, duplicates removed."""
    return tuple(sorted(set(items), key=lambda item: item.sort_key))
