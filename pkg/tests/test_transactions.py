#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Test items, discretization and transactions."""

import os
import tempfile
import unittest

import numpy as np
import pandas as pd

from texmine.exceptions import TransactionError
from texmine.items import FeatureItem, KeywordItem, parse_item, sorted_items
from texmine.manifest import DatasetManifest, ManifestEntry
from texmine.texture import FEATURE_COUNT, FeatureVector
from texmine.transactions import (
    DiscretizationModel,
    Transaction,
    build_transactions,
    class_keyword,
    discretize,
    fit_discretizer,
    write_transactions_csv,
)


def vector(image_id: str, first: float, rest: float = 0.0) -> FeatureVector:
    values = np.full(FEATURE_COUNT, rest)
    values[0] = first
    return FeatureVector(image_id, values)


def bin_of(items, feature_index: int) -> int:
    return next(i.bin_index for i in items if i.feature_index == feature_index)


class TestItems(unittest.TestCase):
    def test_text_forms(self):
        self.assertEqual(str(FeatureItem(3, 2)), "f3_b2")
        self.assertEqual(str(KeywordItem("Malign")), "kw_malign")
        self.assertEqual(parse_item("f17_b0"), FeatureItem(17, 0))
        self.assertEqual(
            parse_item("kw_subtlety=4"), KeywordItem("subtlety=4")
        )
        with self.assertRaises(TransactionError):
            parse_item("g1")

    def test_order(self):
        items = [
            KeywordItem("b"),
            FeatureItem(2, 0),
            KeywordItem("a"),
            FeatureItem(1, 5),
            FeatureItem(1, 2),
            FeatureItem(1, 2),
        ]
        self.assertEqual(
            [str(item) for item in sorted_items(items)],
            ["f1_b2", "f1_b5", "f2_b0", "kw_a", "kw_b"],
        )

    def test_invalid_items(self):
        with self.assertRaises(TransactionError):
            KeywordItem("  ")
        with self.assertRaises(TransactionError):
            FeatureItem(-1, 0)


class TestDiscretization(unittest.TestCase):
    def test_two_bins(self):
        vectors = [vector(str(k), float(k)) for k in range(10)]
        model = fit_discretizer(vectors, bins=2)
        self.assertEqual(model.edges[0].tolist(), [0.0, 4.5, 9.0])
        self.assertEqual(bin_of(discretize(vector("t", 3.0), model), 0), 0)
        self.assertEqual(bin_of(discretize(vector("t", 7.0), model), 0), 1)

    def test_clamping(self):
        vectors = [vector(str(k), float(k)) for k in range(10)]
        model = fit_discretizer(vectors, bins=10)
        self.assertEqual(bin_of(discretize(vector("t", 0.0), model), 0), 0)
        self.assertEqual(bin_of(discretize(vector("t", 9.0), model), 0), 9)
        self.assertEqual(bin_of(discretize(vector("t", -5.0), model), 0), 0)
        self.assertEqual(bin_of(discretize(vector("t", 99.0), model), 0), 9)

    def test_constant_feature(self):
        model = fit_discretizer([vector("a", 1.0, 3.0)] * 3, bins=4)
        items = discretize(vector("t", 1.0, 8.0), model)
        self.assertEqual(len(items), FEATURE_COUNT)
        self.assertTrue(all(item.bin_index == 0 for item in items))

    def test_training_values_stay_in_range(self):
        rng = np.random.default_rng(4)
        vectors = [
            FeatureVector(str(k), rng.normal(size=FEATURE_COUNT))
            for k in range(25)
        ]
        model = fit_discretizer(vectors, bins=10)
        edges = model.edges
        for vec in vectors:
            for item in discretize(vec, model):
                value = vec.values[item.feature_index]
                low = edges[item.feature_index, item.bin_index]
                high = edges[item.feature_index, item.bin_index + 1]
                self.assertTrue(low - 1e-12 <= value <= high + 1e-12)

    def test_errors(self):
        with self.assertRaises(TransactionError):
            fit_discretizer([], bins=10)
        with self.assertRaises(TransactionError):
            DiscretizationModel(np.zeros(FEATURE_COUNT), np.ones(40), 1)
        with self.assertRaises(TransactionError):
            DiscretizationModel(np.ones(FEATURE_COUNT), np.zeros(40), 10)

    def test_round_trip(self):
        model = fit_discretizer([vector("a", 1.0), vector("b", 2.5)], 3)
        loaded = DiscretizationModel.from_dict(model.serialize())
        self.assertEqual(loaded.bins, 3)
        self.assertTrue(np.array_equal(loaded.mins, model.mins))
        self.assertTrue(np.array_equal(loaded.maxs, model.maxs))


class TestBuildTransactions(unittest.TestCase):
    def setUp(self):
        self.manifest = DatasetManifest(
            (
                ManifestEntry("a.pgm", "malign", ("malign",)),
                ManifestEntry("b.pgm", "benign", ("benign", "subtlety=4")),
                ManifestEntry("c.pgm", "normal", ("normal", "normal")),
                ManifestEntry("d.pgm", "benign", ()),
            )
        )
        self.features = {
            "a.pgm": vector("a.pgm", 0.0),
            "b.pgm": vector("b.pgm", 1.0),
            "c.pgm": vector("c.pgm", 2.0),
            "d.pgm": vector("d.pgm", 3.0),
        }
        self.model = fit_discretizer(list(self.features.values()), 10)

    def test_items(self):
        transactions = build_transactions(
            self.manifest, self.model, self.features
        )
        self.assertEqual(
            [len(t.items) for t in transactions],
            [FEATURE_COUNT + 1, FEATURE_COUNT + 2, FEATURE_COUNT + 1, 41],
        )
        self.assertEqual(
            [class_keyword(t) for t in transactions],
            ["malign", "benign", "normal", "benign"],
        )
        self.assertIn(KeywordItem("subtlety=4"), transactions[1].items)
        self.assertEqual(len(transactions[1].feature_items), FEATURE_COUNT)

    def test_missing_vector(self):
        del self.features["c.pgm"]
        with self.assertRaisesRegex(TransactionError, "c.pgm"):
            build_transactions(self.manifest, self.model, self.features)

    def test_class_keyword_conflict(self):
        transaction = Transaction(
            "x", frozenset({KeywordItem("benign"), KeywordItem("malign")})
        )
        with self.assertRaises(TransactionError):
            class_keyword(transaction)

    def test_second_class_keyword(self):
        manifest = DatasetManifest(
            (ManifestEntry("a.pgm", "malign", ("benign", "malign")),)
        )
        with self.assertRaisesRegex(TransactionError, "a.pgm"):
            build_transactions(manifest, self.model, self.features)

    def test_csv_export(self):
        transactions = build_transactions(
            self.manifest, self.model, self.features
        )
        with tempfile.TemporaryDirectory() as tmp_dir:
            path = os.path.join(tmp_dir, "transactions.csv")
            write_transactions_csv(transactions, path)
            frame = pd.read_csv(path)
        self.assertEqual(list(frame.columns), ["image_id", "items"])
        self.assertEqual(frame["image_id"].tolist()[0], "a.pgm")
        tokens = frame["items"][1].split(" ")
        self.assertEqual(tokens[0], "f0_b3")
        self.assertEqual(tokens[-2:], ["kw_benign", "kw_subtlety=4"])
