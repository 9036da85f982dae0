#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Test keyword suggestion and classification."""

import unittest

import numpy as np

from texmine.classifier import (
    ClassifierModel,
    MatchTally,
    classify,
    classify_features,
    label_from_keywords,
    score_abnormality,
    suggest_keywords,
    tally_matches,
)
from texmine.exceptions import ModelError
from texmine.gray_image import GrayImage
from texmine.items import FeatureItem, KeywordItem
from texmine.miner import AssociationRule
from texmine.preprocess import PreprocessConfig
from texmine.pruner import RankedRuleSet
from texmine.texture import FEATURE_COUNT, ExtractionConfig, FeatureVector
from texmine.transactions import DiscretizationModel


def rule(features, head) -> AssociationRule:
    return AssociationRule(
        frozenset(FeatureItem(f, 0) for f in features),
        KeywordItem(head),
        support=0.5,
        confidence=1.0,
    )


def model_with(*rules, threshold=0.001) -> ClassifierModel:
    discretizer = DiscretizationModel(
        np.zeros(FEATURE_COUNT), np.ones(FEATURE_COUNT), 2
    )
    return ClassifierModel(
        discretizer, RankedRuleSet(tuple(rules)), threshold=threshold
    )


def items(*features):
    return frozenset(FeatureItem(f, 0) for f in features)


class TestSuggestKeywords(unittest.TestCase):
    def test_half_matches(self):
        model = model_with(rule([1], "a"), rule([2], "a"))
        self.assertEqual(suggest_keywords(items(1), model), {"a"})

    def test_threshold_above_ratio(self):
        model = model_with(rule([1], "a"), rule([2], "a"), threshold=0.6)
        self.assertEqual(suggest_keywords(items(1), model), frozenset())

    def test_no_rules(self):
        self.assertEqual(suggest_keywords(items(1), model_with()), frozenset())

    def test_tallies(self):
        tallies = tally_matches(
            items(1, 3), [rule([1], "a"), rule([2], "a"), rule([1, 3], "b")]
        )
        self.assertEqual(tallies["a"].matches, 1)
        self.assertEqual(tallies["a"].non_matches, 1)
        self.assertEqual(tallies["b"].ratio, 1.0)
        self.assertEqual(MatchTally().ratio, 0.0)

    def test_monotonic_in_threshold(self):
        rng = np.random.default_rng(17)
        thresholds = [0.0, 0.001, 0.2, 0.5, 0.8, 1.0]
        for _ in range(50):
            rules = [
                rule(
                    [int(f) for f in rng.choice(8, 2, replace=False)],
                    str(rng.choice(["benign", "malign", "x"])),
                )
                for _ in range(int(rng.integers(1, 12)))
            ]
            features = items(*(int(f) for f in rng.choice(8, 4, False)))
            suggestions = [
                suggest_keywords(features, model_with(*rules, threshold=t))
                for t in thresholds
            ]
            for lower, higher in zip(suggestions, suggestions[1:]):
                self.assertTrue(higher <= lower)

    def test_rule_order_irrelevant(self):
        rules = [rule([1], "a"), rule([2], "b"), rule([3], "a")]
        forward = suggest_keywords(items(1, 2), model_with(*rules))
        backward = suggest_keywords(items(1, 2), model_with(*rules[::-1]))
        self.assertEqual(forward, backward)


class TestLabels(unittest.TestCase):
    def test_precedence(self):
        self.assertEqual(
            label_from_keywords({"malign", "assessment=5"}), "malign"
        )
        self.assertEqual(label_from_keywords({"benign", "malign"}), "malign")
        self.assertEqual(label_from_keywords({"benign"}), "benign")
        self.assertEqual(label_from_keywords(set()), "normal")
        self.assertEqual(label_from_keywords({"normal"}), "normal")


class TestScoreAbnormality(unittest.TestCase):
    def test_no_abnormal_rules(self):
        model = model_with(rule([1], "normal"))
        self.assertEqual(score_abnormality(items(1), model), 0.0)

    def test_single_matching_rule(self):
        model = model_with(rule([1], "malign"))
        self.assertEqual(score_abnormality(items(1), model), 1.0)

    def test_best_head(self):
        benign = [rule([1], "benign")] + [
            rule([k], "benign") for k in (10, 11)
        ]
        malign = [rule([2], "malign"), rule([3], "malign")]
        model = model_with(*benign, *malign)
        # benign matches 1 of 3 rules, malign 1 of 2
        self.assertEqual(score_abnormality(items(1, 2), model), 0.5)


class TestClassify(unittest.TestCase):
    def test_empty_model_gives_normal(self):
        rng = np.random.default_rng(3)
        image = GrayImage(rng.integers(0, 256, size=(16, 16)))
        result = classify(image, model_with())
        self.assertEqual(result.label, "normal")
        self.assertEqual(result.score, 0.0)
        self.assertEqual(result.keywords, frozenset())

    def test_classify_features(self):
        values = np.zeros(FEATURE_COUNT)
        values[5] = 0.9  # bin 1 of feature 5 with two bins on [0, 1]
        vector = FeatureVector("x", values)
        model = model_with(
            rule([0], "benign"), rule([5], "malign"), rule([0, 1], "x=1")
        )
        result = classify_features(vector, model)
        self.assertEqual(result.keywords, {"benign", "x=1"})
        self.assertEqual(result.label, "benign")
        self.assertEqual(result.score, 1.0)
        record = result.serialize()
        self.assertEqual(record["keywords"], ["benign", "x=1"])
        self.assertEqual(
            record["tallies"]["malign"], {"matches": 0, "non_matches": 1}
        )

    def test_classify_is_deterministic(self):
        rng = np.random.default_rng(4)
        image = GrayImage(rng.integers(0, 256, size=(20, 20)))
        model = ClassifierModel(
            DiscretizationModel(
                np.zeros(FEATURE_COUNT), np.full(FEATURE_COUNT, 5.0), 4
            ),
            RankedRuleSet((rule([2], "malign"),)),
            extraction=ExtractionConfig(gray_levels=8),
            preprocessing=PreprocessConfig(median_window=0),
        )
        self.assertEqual(classify(image, model), classify(image, model))

    def test_threshold_range(self):
        with self.assertRaises(ModelError):
            model_with(threshold=1.5)
