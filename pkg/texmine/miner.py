#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Level-wise mining of feature => keyword association rules."""

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    Optional,
    Sequence,
    Set,
    Tuple,
)

import numpy as np

from .exceptions import MiningError
from .items import AnyItem, FeatureItem, KeywordItem, parse_item, sorted_items
from .transactions import Transaction
from .utils import meets_threshold

#: Maximum number of distinct items the brute-force oracle accepts.
ORACLE_MAX_ITEMS = 20


@dataclass(frozen=True)
class MiningConfig:
    """Association rule mining thresholds.

    Attributes:
        min_support: Minimum fraction of transactions containing an itemset.
        min_confidence: Minimum confidence of a rule.
        max_level: Optional cap on the number of items of an itemset,
            keyword included, hence at least 2.
    """

    min_support: float = 0.10
    min_confidence: float = 0.97
    max_level: Optional[int] = None

    def __post_init__(self):
        if not 0.0 < self.min_support <= 1.0:
            raise MiningError("min_support must be in (0, 1]")
        if not 0.0 < self.min_confidence <= 1.0:
            raise MiningError("min_confidence must be in (0, 1]")
        if self.max_level is not None and self.max_level < 2:
            raise MiningError("max_level must be at least 2")


@dataclass(frozen=True)
class ItemSet:
    """Sorted set of items with its support in a transaction database.

    Attributes:
        items: Items in canonical order, without duplicates.
        support_count: Number of transactions containing every item.
        database_size: Number of transactions in the database.
    """

    items: Tuple[AnyItem, ...]
    support_count: int = 0
    database_size: int = 1

    @property
    def support(self) -> float:
        """Fraction of transactions containing the itemset."""
        return self.support_count / self.database_size

    @property
    def keyword(self) -> Optional[KeywordItem]:
        """Keyword item of the itemset, if any."""
        for item in self.items:
            if isinstance(item, KeywordItem):
                return item
        return None

    @property
    def features(self) -> Tuple[FeatureItem, ...]:
        """Feature items of the itemset, in canonical order."""
        return tuple(i for i in self.items if isinstance(i, FeatureItem))


@dataclass(frozen=True)
class AssociationRule:
    """Rule ``antecedent => consequent``.

    Attributes:
        antecedent: Non-empty conjunction of feature items.
        consequent: Keyword implied by the antecedent.
        support: Fraction of transactions containing antecedent and
            consequent.
        confidence: Support of the rule divided by the support of its
            antecedent.
    """

    antecedent: FrozenSet[FeatureItem]
    consequent: KeywordItem
    support: float
    confidence: float

    def __post_init__(self):
        if not self.antecedent:
            raise MiningError("rule antecedent is empty")
        if any(not isinstance(i, FeatureItem) for i in self.antecedent):
            raise MiningError("rule antecedent contains a keyword")

    def serialize(self) -> dict:
        """Dictionary representation for model files."""
        return {
            "antecedent": [str(i) for i in sorted_items(self.antecedent)],
            "consequent": self.consequent.token,
            "support": self.support,
            "confidence": self.confidence,
        }

    @staticmethod
    def from_dict(data: dict) -> "AssociationRule":
        """Build a rule from its dictionary representation."""
        antecedent = frozenset(parse_item(t) for t in data["antecedent"])
        return AssociationRule(
            antecedent=antecedent,  # type: ignore[arg-type]
            consequent=KeywordItem(data["consequent"]),
            support=float(data["support"]),
            confidence=float(data["confidence"]),
        )

    def __str__(self) -> str:
        return format_rule(self)


def format_rule(rule: AssociationRule) -> str:
    """Render a rule as one line of a rule dump.

    Args:
        rule: Association rule.

    Returns:
        Line such as ``f3_b2 & f17_b0 => kw_malign support=0.12
        confidence=0.98``.
    """
    body = " & ".join(str(item) for item in sorted_items(rule.antecedent))
    return (
        f"{body} => {rule.consequent} "
        f"support={rule.support:.6g} confidence={rule.confidence:.6g}"
    )


class TransactionTable:
    """Boolean incidence matrix of transactions over items.

    Attributes:
        items: Item vocabulary, in canonical order.
        matrix: Array of shape ``(transactions, items)``, true where a
            transaction contains an item.
    """

    items: Tuple[AnyItem, ...]
    matrix: np.ndarray

    def __init__(self, items: Sequence[AnyItem], matrix: np.ndarray):
        """Wrap an incidence matrix.

        Args:
            items: Item vocabulary, one per column.
            matrix: Boolean incidence matrix.
        """
        self.items = tuple(items)
        self.matrix = matrix
        self.__columns = {item: col for col, item in enumerate(self.items)}

    @staticmethod
    def from_transactions(
        transactions: Sequence[Transaction],
    ) -> "TransactionTable":
        """Build the incidence matrix of a transaction database.

        Args:
            transactions: Transaction database.

        Returns:
            New table over every item present in the database.
        """
        vocabulary = sorted_items(
            item for transaction in transactions for item in transaction.items
        )
        columns = {item: col for col, item in enumerate(vocabulary)}
        matrix = np.zeros((len(transactions), len(vocabulary)), dtype=bool)
        for row, transaction in enumerate(transactions):
            matrix[row, [columns[item] for item in transaction.items]] = True
        return TransactionTable(vocabulary, matrix)

    def __len__(self) -> int:
        return self.matrix.shape[0]

    def count(self, items: Iterable[AnyItem], shards: int = 1) -> int:
        """Number of transactions containing every given item.

        Args:
            items: Items of the itemset.
            shards: Number of row shards counted separately then summed.

        Returns:
            Support count, the number of rows for the empty itemset.
        """
        columns = []
        for item in items:
            if item not in self.__columns:
                return 0
            columns.append(self.__columns[item])
        selected = self.matrix[:, columns]
        return sum(
            int(shard.all(axis=1).sum())
            for shard in np.array_split(selected, max(shards, 1), axis=0)
        )

    def filter(self, keep: Set[AnyItem], min_items: int) -> "TransactionTable":
        """Restrict the table to some items.

        Args:
            keep: Items to keep as columns.
            min_items: Drop rows with fewer kept items than this.

        Returns:
            Filtered table. Counts of itemsets made of kept items are
            unchanged, as long as they have at least ``min_items`` items.
        """
        columns = [col for col, item in enumerate(self.items) if item in keep]
        matrix = self.matrix[:, columns]
        rows = matrix.sum(axis=1) >= min_items
        return TransactionTable([self.items[c] for c in columns], matrix[rows])


def count_support(
    itemsets: Iterable[ItemSet],
    transactions: Sequence[Transaction],
    shards: int = 1,
) -> List[ItemSet]:
    """Count in how many transactions each itemset occurs.

    Args:
        itemsets: Itemsets to count.
        transactions: Transaction database.
        shards: Number of transaction shards counted separately, merged by
            summation; the result does not depend on it.

    Returns:
        Itemsets with updated support counts, in input order.
    """
    table = TransactionTable.from_transactions(transactions)
    return [
        ItemSet(
            itemset.items,
            table.count(itemset.items, shards=shards),
            max(len(transactions), 1),
        )
        for itemset in itemsets
    ]


def _join(
    frequent: Iterable[Tuple[AnyItem, ...]],
) -> List[Tuple[AnyItem, ...]]:
    """Join keyword-anchored itemsets sharing all but their last feature.

    Args:
        frequent: Frequent itemsets of the previous level, each written as
            ``(keyword, feature_1, ..., feature_n)`` with sorted features.

    Returns:
        Candidate itemsets with one more feature, in the same layout.
    """
    groups: Dict[Tuple[AnyItem, ...], List[AnyItem]] = defaultdict(list)
    for itemset in frequent:
        groups[itemset[:-1]].append(itemset[-1])
    candidates = []
    for prefix, lasts in groups.items():
        lasts.sort(key=lambda item: item.sort_key)
        for first, second in itertools.combinations(lasts, 2):
            candidates.append(prefix + (first, second))
    return candidates


def _is_closed(candidate, frequent: Set[Tuple[AnyItem, ...]]) -> bool:
    """Check that every subset dropping one feature is frequent."""
    keyword, features = candidate[0], candidate[1:]
    for index in range(len(features)):
        subset = (keyword,) + features[:index] + features[index + 1 :]
        if subset not in frequent:
            return False
    return True


def frequent_itemsets(
    transactions: Sequence[Transaction],
    config: MiningConfig,
    shards: int = 1,
) -> List[ItemSet]:
    """Find frequent itemsets made of one keyword and some features.

    Args:
        transactions: Transaction database.
        config: Mining thresholds.
        shards: Number of transaction shards for support counting.

    Returns:
        Frequent itemsets with at least one feature and exactly one keyword.
    """
    if not transactions:
        raise MiningError("empty transaction database")
    size = len(transactions)
    table = TransactionTable.from_transactions(transactions)

    def is_frequent(count: int) -> bool:
        return meets_threshold(count, size, config.min_support)

    keywords = [i for i in table.items if isinstance(i, KeywordItem)]
    features = [i for i in table.items if isinstance(i, FeatureItem)]
    frequent_keywords = [k for k in keywords if is_frequent(table.count([k]))]
    frequent_features = [f for f in features if is_frequent(table.count([f]))]
    logging.debug(
        "Level 1: %d/%d frequent keywords, %d/%d frequent features",
        len(frequent_keywords),
        len(keywords),
        len(frequent_features),
        len(features),
    )

    candidates = [
        (keyword, feature)
        for keyword in frequent_keywords
        for feature in frequent_features
    ]
    found: List[ItemSet] = []
    level = 2
    while candidates:
        counts = {c: table.count(c, shards=shards) for c in candidates}
        frequent = {c for c, count in counts.items() if is_frequent(count)}
        logging.debug(
            "Level %d: %d candidates, %d frequent",
            level,
            len(candidates),
            len(frequent),
        )
        found.extend(
            ItemSet(sorted_items(c), counts[c], size) for c in frequent
        )
        level += 1
        if config.max_level is not None and level > config.max_level:
            break
        candidates = [c for c in _join(frequent) if _is_closed(c, frequent)]
        kept_items = {item for itemset in frequent for item in itemset}
        table = table.filter(kept_items, min_items=level)
    return found


def mine_rules(
    transactions: Sequence[Transaction],
    config: MiningConfig,
    shards: int = 1,
) -> Set[AssociationRule]:
    """Mine association rules from feature items to a keyword.

    Frequent itemsets are grown level by level from keyword-feature pairs.
    Each frequent itemset then yields the rule ``features => keyword``,
    kept when its confidence reaches the configured minimum.

    Args:
        transactions: Transaction database.
        config: Mining thresholds.
        shards: Number of transaction shards for support counting.

    Returns:
        Set of association rules.
    """
    itemsets = frequent_itemsets(transactions, config, shards)
    size = len(transactions)
    table = TransactionTable.from_transactions(transactions)
    antecedent_counts: Dict[Tuple[FeatureItem, ...], int] = {}
    rules = set()
    for itemset in itemsets:
        antecedent = itemset.features
        if antecedent not in antecedent_counts:
            antecedent_counts[antecedent] = table.count(antecedent)
        denominator = antecedent_counts[antecedent]
        if not meets_threshold(
            itemset.support_count, denominator, config.min_confidence
        ):
            continue
        keyword = itemset.keyword
        assert keyword is not None
        rules.add(
            AssociationRule(
                antecedent=frozenset(antecedent),
                consequent=keyword,
                support=itemset.support_count / size,
                confidence=itemset.support_count / denominator,
            )
        )
    logging.info(
        "Mined %d rules from %d frequent itemsets", len(rules), len(itemsets)
    )
    return rules


def brute_force_frequent(
    transactions: Sequence[Transaction], config: MiningConfig
) -> Set[AssociationRule]:
    """Mine rules by exhaustive enumeration, as a reference for tests.

    Every non-empty subset of feature items is paired with every keyword,
    and support and confidence are counted directly on the transactions.

    Args:
        transactions: Small transaction database.
        config: Mining thresholds.

    Returns:
        Same rules as :func:`mine_rules`.

    Raises:
        MiningError: If the database has more than
            :data:`ORACLE_MAX_ITEMS` distinct items.
    """
    if not transactions:
        raise MiningError("empty transaction database")
    distinct = sorted_items(i for t in transactions for i in t.items)
    if len(distinct) > ORACLE_MAX_ITEMS:
        raise MiningError(
            f"oracle size guard: {len(distinct)} distinct items "
            f"exceed {ORACLE_MAX_ITEMS}"
        )
    size = len(transactions)
    features = [i for i in distinct if isinstance(i, FeatureItem)]
    keywords = [i for i in distinct if isinstance(i, KeywordItem)]
    max_features = len(features)
    if config.max_level is not None:
        max_features = min(max_features, config.max_level - 1)
    rules = set()
    for length in range(1, max_features + 1):
        for subset in itertools.combinations(features, length):
            body = frozenset(subset)
            body_count = sum(1 for t in transactions if body <= t.items)
            for keyword in keywords:
                count = sum(
                    1
                    for t in transactions
                    if body <= t.items and keyword in t.items
                )
                if count / size < config.min_support - 1e-12:
                    continue
                if count / body_count < config.min_confidence - 1e-12:
                    continue
                rules.add(
                    AssociationRule(
                        antecedent=body,  # type: ignore[arg-type]
                        consequent=keyword,  # type: ignore[arg-type]
                        support=count / size,
                        confidence=count / body_count,
                    )
                )
    return rules
