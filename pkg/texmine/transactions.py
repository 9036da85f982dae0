#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Discretization of feature vectors and the transaction database."""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Mapping, Sequence, Tuple

import numpy as np
import pandas as pd

from .exceptions import TransactionError
from .items import AnyItem, FeatureItem, KeywordItem, sorted_items
from .manifest import CLASS_LABELS, DatasetManifest
from .texture import FEATURE_COUNT, FeatureVector


@dataclass(frozen=True, eq=False)
class DiscretizationModel:
    """Equi-width intervals fitted on training features.

    Attributes:
        mins: Per-feature training minimum.
        maxs: Per-feature training maximum.
        bins: Number of intervals B per feature.
    """

    mins: np.ndarray
    maxs: np.ndarray
    bins: int = 10

    def __post_init__(self):
        mins = np.asarray(self.mins, dtype=np.float64)
        maxs = np.asarray(self.maxs, dtype=np.float64)
        if mins.shape != (FEATURE_COUNT,) or maxs.shape != (FEATURE_COUNT,):
            raise TransactionError(
                f"discretizer needs exactly {FEATURE_COUNT} feature slots"
            )
        if np.any(mins > maxs):
            raise TransactionError("discretizer has min > max")
        if self.bins < 2:
            raise TransactionError("bin count must be at least 2")
        object.__setattr__(self, "mins", mins)
        object.__setattr__(self, "maxs", maxs)

    @property
    def edges(self) -> np.ndarray:
        """Interval edges, array of shape ``(FEATURE_COUNT, B + 1)``."""
        steps = np.arange(self.bins + 1) / self.bins
        return self.mins[:, None] + steps * (self.maxs - self.mins)[:, None]

    def bin_indices(self, values: np.ndarray) -> np.ndarray:
        """Interval index of each feature value, clamped to valid bins.

        Args:
            values: Array of :data:`FEATURE_COUNT` feature values.

        Returns:
            Integer array of bin indices.
        """
        spans = self.maxs - self.mins
        safe = np.where(spans > 0, spans, 1.0)
        raw = np.floor((values - self.mins) * self.bins / safe)
        raw = np.where(spans > 0, raw, 0.0)
        return np.clip(raw, 0, self.bins - 1).astype(np.int64)

    def serialize(self) -> dict:
        """Dictionary representation for model files."""
        return {
            "bins": self.bins,
            "mins": self.mins.tolist(),
            "maxs": self.maxs.tolist(),
        }

    @staticmethod
    def from_dict(data: dict) -> "DiscretizationModel":
        """Build a discretizer from its dictionary representation."""
        return DiscretizationModel(
            mins=np.array(data["mins"], dtype=np.float64),
            maxs=np.array(data["maxs"], dtype=np.float64),
            bins=int(data["bins"]),
        )


@dataclass(frozen=True)
class Transaction:
    """Items of one image.

    Attributes:
        image_id: Identifier of the image.
        items: Feature items, one per feature, and keyword items.
    """

    image_id: str
    items: FrozenSet[AnyItem]

    @property
    def feature_items(self) -> FrozenSet[FeatureItem]:
        """Feature items of the transaction."""
        return frozenset(i for i in self.items if isinstance(i, FeatureItem))

    @property
    def keyword_items(self) -> FrozenSet[KeywordItem]:
        """Keyword items of the transaction."""
        return frozenset(i for i in self.items if isinstance(i, KeywordItem))

    def __str__(self) -> str:
        return " ".join(str(item) for item in sorted_items(self.items))


def fit_discretizer(
    vectors: Sequence[FeatureVector], bins: int = 10
) -> DiscretizationModel:
    """Fit equi-width intervals on training feature vectors.

    Args:
        vectors: Training feature vectors.
        bins: Number of intervals per feature.

    Returns:
        Discretization model with per-feature training ranges.
    """
    if len(vectors) < 1:
        raise TransactionError("cannot fit a discretizer on an empty set")
    matrix = np.stack([vector.values for vector in vectors])
    return DiscretizationModel(matrix.min(axis=0), matrix.max(axis=0), bins)


def discretize(
    vector: FeatureVector, model: DiscretizationModel
) -> FrozenSet[FeatureItem]:
    """Map a feature vector to its interval items.

    Args:
        vector: Feature vector.
        model: Fitted discretizer.

    Returns:
        One feature item per feature. Values outside the training range
        fall into the first or last interval.
    """
    indices = model.bin_indices(vector.values)
    return frozenset(
        FeatureItem(feature, int(index))
        for feature, index in enumerate(indices)
    )


def build_transactions(
    manifest: DatasetManifest,
    model: DiscretizationModel,
    features: Mapping[str, FeatureVector],
) -> List[Transaction]:
    """Merge discretized features with the keywords of training images.

    Args:
        manifest: Training manifest.
        model: Fitted discretizer.
        features: Feature vectors by manifest image path.

    Returns:
        One transaction per manifest entry, in manifest order. The class
        label is always among the keyword items.

    Raises:
        TransactionError: If a feature vector is missing, or if the
            keywords of an entry name a second class label.
    """
    transactions = []
    for entry in manifest.entries:
        if entry.image_path not in features:
            raise TransactionError(
                f"missing feature vector for {entry.image_path}"
            )
        keywords = {KeywordItem(token) for token in entry.keywords}
        keywords.add(KeywordItem(entry.class_label))
        items = discretize(features[entry.image_path], model) | keywords
        transaction = Transaction(entry.image_path, frozenset(items))
        class_keyword(transaction)  # exactly one class label
        transactions.append(transaction)
    return transactions


def class_keyword(transaction: Transaction) -> str:
    """Class label carried by a training transaction.

    Args:
        transaction: Training transaction.

    Returns:
        The unique class keyword token of the transaction.
    """
    labels = [
        item.token
        for item in transaction.keyword_items
        if item.token in CLASS_LABELS
    ]
    if len(labels) != 1:
        raise TransactionError(
            f"{transaction.image_id} has class keywords {sorted(labels)}"
        )
    return labels[0]


def transactions_frame(transactions: Iterable[Transaction]) -> pd.DataFrame:
    """Table of transactions with space-separated item lists.

    Args:
        transactions: Transactions to tabulate.

    Returns:
        Data frame with columns ``image_id`` and ``items``.
    """
    rows: List[Tuple[str, str]] = [
        (transaction.image_id, str(transaction))
        for transaction in transactions
    ]
    return pd.DataFrame(rows, columns=["image_id", "items"])


def write_transactions_csv(
    transactions: Iterable[Transaction], path: str
) -> None:
    """Export transactions for external miners.

    Args:
        transactions: Transactions to export.
        path: Destination CSV path.
    """
    frame = transactions_frame(transactions)
    frame.to_csv(path, index=False, lineterminator="\n")
