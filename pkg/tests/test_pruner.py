#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Test rule ranking and pruning."""

import unittest

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from texmine.items import FeatureItem, KeywordItem
from texmine.miner import AssociationRule
from texmine.pruner import (
    COND1,
    COND3,
    RankedRuleSet,
    compare_rank,
    prune,
)


def rule(features, head, confidence=1.0, support=0.5) -> AssociationRule:
    return AssociationRule(
        frozenset(FeatureItem(f, 0) for f in features),
        KeywordItem(head),
        support=support,
        confidence=confidence,
    )


rules_strategy = st.builds(
    rule,
    st.sets(st.integers(0, 4), min_size=1, max_size=3),
    st.sampled_from(["a", "b", "c"]),
    st.sampled_from([0.5, 0.9, 1.0]),
    st.sampled_from([0.1, 0.3, 0.5]),
)


def random_rules(rng: np.random.Generator, count: int):
    return [
        rule(
            {
                int(f)
                for f in rng.choice(6, int(rng.integers(1, 4)), replace=False)
            },
            str(rng.choice(["a", "b", "c"])),
            float(rng.choice([0.9, 0.95, 0.97, 1.0])),
            float(rng.choice([0.1, 0.2, 0.3])),
        )
        for _ in range(count)
    ]


def check_invariants(test: unittest.TestCase, ranked: RankedRuleSet):
    rules = ranked.rules
    for index, higher in enumerate(rules):
        for lower in rules[index + 1 :]:
            test.assertLess(compare_rank(higher, lower), 0)
            if higher.consequent == lower.consequent:
                test.assertFalse(higher.antecedent <= lower.antecedent)
            elif higher.antecedent == lower.antecedent:
                test.fail(f"conflicting rules {higher} and {lower}")


class TestCompareRank(unittest.TestCase):
    def test_confidence_first(self):
        first = rule([1], "a", confidence=0.99, support=0.2)
        second = rule([1], "a", confidence=0.98, support=0.5)
        self.assertEqual(compare_rank(first, second), -1)
        self.assertEqual(compare_rank(second, first), 1)

    def test_support_second(self):
        first = rule([1], "a", support=0.4)
        second = rule([2], "a", support=0.3)
        self.assertEqual(compare_rank(first, second), -1)

    def test_size_third(self):
        first = rule([5], "a")
        second = rule([1, 2], "a")
        self.assertEqual(compare_rank(first, second), -1)

    def test_lexicographic_tiebreak(self):
        self.assertEqual(compare_rank(rule([1], "a"), rule([2], "a")), -1)
        self.assertEqual(compare_rank(rule([1], "b"), rule([1], "a")), 1)
        self.assertEqual(compare_rank(rule([1], "a"), rule([1], "a")), 0)

    @given(rules_strategy, rules_strategy)
    def test_antisymmetric(self, first, second):
        self.assertEqual(
            compare_rank(first, second), -compare_rank(second, first)
        )
        if compare_rank(first, second) == 0:
            self.assertEqual(first, second)

    @given(rules_strategy, rules_strategy, rules_strategy)
    def test_transitive(self, first, second, third):
        if compare_rank(first, second) < 0 and compare_rank(second, third) < 0:
            self.assertLess(compare_rank(first, third), 0)


class TestPrune(unittest.TestCase):
    def test_specific_rule_dropped(self):
        general = rule([1], "A", confidence=0.99)
        specific = rule([1, 2], "A", confidence=0.98)
        ranked = prune({general, specific})
        self.assertEqual(ranked.rules, (general,))
        self.assertEqual(ranked.dropped[0].reason, COND1)
        self.assertEqual(ranked.dropped[0].kept, general)

    def test_conflict_keeps_higher_rank(self):
        first = rule([1], "A", confidence=0.99)
        second = rule([1], "B", confidence=0.95)
        ranked = prune([second, first])
        self.assertEqual(ranked.rules, (first,))
        self.assertEqual(ranked.dropped[0].reason, COND3)

    def test_disjoint_rules_survive(self):
        first, second = rule([1], "A"), rule([2], "B")
        self.assertEqual(prune({first, second}).rules, (first, second))

    def test_cross_head_subsets_survive(self):
        general = rule([1], "A", confidence=1.0)
        other = rule([1, 2], "B", confidence=0.97)
        self.assertEqual(len(prune([general, other])), 2)

    def test_report(self):
        general = rule([1], "A", confidence=0.99)
        specific = rule([1, 2], "A", confidence=0.98)
        report = prune([general, specific]).report()
        self.assertEqual(
            report,
            "COND1 f1_b0 & f2_b0 => kw_a support=0.5 confidence=0.98 "
            "BY f1_b0 => kw_a support=0.5 confidence=0.99\n",
        )

    def test_empty(self):
        ranked = prune([])
        self.assertEqual(len(ranked), 0)
        self.assertEqual(ranked.report(), "")

    def test_random_rule_sets(self):
        rng = np.random.default_rng(2024)
        for _ in range(100):
            rules = random_rules(rng, int(rng.integers(0, 201)))
            ranked = prune(rules)
            check_invariants(self, ranked)
            self.assertTrue(set(ranked.rules) <= set(rules))
            self.assertEqual(
                len(ranked.rules) + len(ranked.dropped), len(set(rules))
            )
            self.assertEqual(prune(ranked.rules).rules, ranked.rules)

    @given(st.lists(rules_strategy, max_size=30))
    def test_idempotent(self, rules):
        once = prune(rules)
        self.assertEqual(prune(once.rules).rules, once.rules)
        self.assertEqual(prune(reversed(rules)).rules, once.rules)
