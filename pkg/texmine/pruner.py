#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Ranking and pruning of association rules."""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from .items import sorted_items
from .miner import AssociationRule, format_rule

#: Reason code of a rule dropped for being more specific than a kept rule.
COND1 = "COND1"

#: Reason code of a rule dropped for conflicting with a kept rule.
COND3 = "COND3"


def rank_key(rule: AssociationRule) -> tuple:
    """Sort key putting higher-ranked rules first.

    Rules rank by decreasing confidence, then decreasing support, then
    increasing antecedent size, then lexicographically by antecedent items
    and consequent token.

    Args:
        rule: Association rule.

    Returns:
        Key such that sorting in ascending key order ranks rules.
    """
    return (
        -rule.confidence,
        -rule.support,
        len(rule.antecedent),
        tuple(item.sort_key for item in sorted_items(rule.antecedent)),
        rule.consequent.token,
    )


def compare_rank(first: AssociationRule, second: AssociationRule) -> int:
    """Compare the ranks of two rules.

    Args:
        first: Association rule.
        second: Association rule.

    Returns:
        Negative if ``first`` ranks above ``second``, positive if it ranks
        below, zero only for equal rules.
    """
    key_first, key_second = rank_key(first), rank_key(second)
    if key_first < key_second:
        return -1
    if key_first > key_second:
        return 1
    return 0


@dataclass(frozen=True)
class PruneDecision:
    """Record of a pruned rule.

    Attributes:
        rule: Dropped rule.
        reason: Reason code, :data:`COND1` or :data:`COND3`.
        kept: Higher-ranked surviving rule that triggered the drop.
    """

    rule: AssociationRule
    reason: str
    kept: AssociationRule

    def __str__(self) -> str:
        rule, kept = format_rule(self.rule), format_rule(self.kept)
        return f"{self.reason} {rule} BY {kept}"


@dataclass(frozen=True)
class RankedRuleSet:
    """Pruned rules in decreasing rank order.

    Attributes:
        rules: Surviving rules, highest-ranked first.
        dropped: Decisions for the rules that were pruned.
    """

    rules: Tuple[AssociationRule, ...] = ()
    dropped: Tuple[PruneDecision, ...] = ()

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def report(self) -> str:
        """Prune report, one line per dropped rule."""
        return "".join(f"{decision}\n" for decision in self.dropped)


def prune(rules: Iterable[AssociationRule]) -> RankedRuleSet:
    """Rank rules and drop specific and conflicting ones.

    Rules are walked in rank order. A rule is dropped when a kept rule with
    the same consequent has an antecedent included in its own (the kept
    rule is more general), or when a kept rule has the same antecedent and
    another consequent (the kept rule wins the conflict).

    Args:
        rules: Association rules.

    Returns:
        Ranked set of surviving rules with the pruning decisions.
    """
    kept: List[AssociationRule] = []
    by_consequent: Dict[str, List[AssociationRule]] = defaultdict(list)
    by_antecedent: Dict[frozenset, AssociationRule] = {}
    dropped: List[PruneDecision] = []
    for rule in sorted(set(rules), key=rank_key):
        decision = None
        for other in by_consequent[rule.consequent.token]:
            if other.antecedent <= rule.antecedent:
                decision = PruneDecision(rule, COND1, other)
                break
        if decision is None and rule.antecedent in by_antecedent:
            other = by_antecedent[rule.antecedent]
            decision = PruneDecision(rule, COND3, other)
        if decision is not None:
            logging.debug("Pruned %s", decision)
            dropped.append(decision)
            continue
        kept.append(rule)
        by_consequent[rule.consequent.token].append(rule)
        by_antecedent.setdefault(rule.antecedent, rule)
    logging.info(
        "Pruning kept %d rules, dropped %d (%d specific, %d conflicting)",
        len(kept),
        len(dropped),
        sum(1 for d in dropped if d.reason == COND1),
        sum(1 for d in dropped if d.reason == COND3),
    )
    return RankedRuleSet(tuple(kept), tuple(dropped))
