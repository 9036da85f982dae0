#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Test the command-line interface from synthetic data to reports."""

import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

import pandas as pd

from texmine.cli import RunConfig, main
from texmine.cli.main import get_argument_parser
from texmine.manifest import (
    DatasetManifest,
    ManifestEntry,
    load_manifest,
    save_manifest,
)
from texmine.model_file import load_model
from texmine.preprocess import CropRect
from texmine.synthetic import generate_dataset


def report_value(report: str, name: str, section: str = "") -> float:
    """Value of ``name=...`` in a report, after an optional section."""
    lines = report.splitlines()
    start = lines.index(section) if section else 0
    prefix = f"  {name}="
    for line in lines[start:]:
        if line.startswith(prefix):
            return float(line[len(prefix) :])
    raise KeyError(name)


def read_bytes(path: str) -> bytes:
    with open(path, "rb") as file:
        return file.read()


class TestSyntheticBenchmark(unittest.TestCase):
    """Train and evaluate with default flags on the synthetic dataset."""

    @classmethod
    def setUpClass(cls):
        cls.tmp_dir = tempfile.TemporaryDirectory()
        root = cls.tmp_dir.name
        cls.train, cls.test = generate_dataset(os.path.join(root, "data"))
        cls.model = os.path.join(root, "model.json")
        cls.report = os.path.join(root, "report.txt")
        cls.rules = os.path.join(root, "rules.txt")
        cls.roc = os.path.join(root, "roc.csv")
        cls.train_code = main(
            [
                "train",
                "-q",
                "--manifest",
                cls.train,
                "--model",
                cls.model,
                "--rules-out",
                cls.rules,
            ]
        )
        cls.eval_code = main(
            [
                "eval",
                "-q",
                "--manifest",
                cls.test,
                "--model",
                cls.model,
                "--out",
                cls.report,
                "--roc-out",
                cls.roc,
            ]
        )

    @classmethod
    def tearDownClass(cls):
        cls.tmp_dir.cleanup()

    def test_exit_codes(self):
        self.assertEqual(self.train_code, 0)
        self.assertEqual(self.eval_code, 0)

    def test_rules_for_abnormal_classes(self):
        rules = load_model(self.model).rules
        heads = {rule.consequent.token for rule in rules}
        self.assertIn("benign", heads)
        self.assertIn("malign", heads)
        with open(self.rules, "r", encoding="utf-8") as file:
            self.assertIn("=> kw_malign", file.read())

    def test_accuracy(self):
        with open(self.report, "r", encoding="utf-8") as file:
            report = file.read()
        accuracy = report_value(report, "accuracy", "class confusion")
        self.assertGreaterEqual(accuracy, 0.9)
        self.assertGreaterEqual(report_value(report, "A_z"), 0.95)

    def test_roc_csv(self):
        frame = pd.read_csv(self.roc)
        self.assertEqual(list(frame.columns), ["threshold", "tpr", "fpr"])
        self.assertEqual(frame["threshold"].tolist(), sorted(frame.threshold))

    def test_training_image_of_malign_class(self):
        image = os.path.join(self.tmp_dir.name, "data/train/malign_000.pgm")
        stdout = io.StringIO()
        with redirect_stdout(stdout):
            code = main(["classify", "-q", "--model", self.model, image])
        self.assertEqual(code, 0)
        frame = pd.read_csv(io.StringIO(stdout.getvalue()))
        self.assertEqual(frame["label"].tolist(), ["malign"])

    def test_repeat_is_byte_identical(self):
        root = self.tmp_dir.name
        model = os.path.join(root, "model_again.json")
        report = os.path.join(root, "report_again.txt")
        args = ["--manifest", self.train, "--model", model]
        self.assertEqual(main(["train", "-q", *args]), 0)
        self.assertEqual(
            main(
                [
                    "eval",
                    "-q",
                    "--manifest",
                    self.test,
                    "--model",
                    model,
                    "--out",
                    report,
                ]
            ),
            0,
        )
        self.assertEqual(read_bytes(model), read_bytes(self.model))
        self.assertEqual(read_bytes(report), read_bytes(self.report))


class TestCommands(unittest.TestCase):
    def setUp(self):
        self.tmp_dir = tempfile.TemporaryDirectory()
        self.root = self.tmp_dir.name
        self.train, self.test = generate_dataset(
            os.path.join(self.root, "data"), 4, 2, size=16, seed=7
        )
        self.model = os.path.join(self.root, "model.json")

    def tearDown(self):
        self.tmp_dir.cleanup()

    def path(self, name: str) -> str:
        return os.path.join(self.root, name)

    def train_model(self, *flags: str) -> int:
        return main(
            [
                "train",
                "-q",
                "--manifest",
                self.train,
                "--model",
                self.model,
                *flags,
            ]
        )

    def filtered_manifest(self, name: str, label: str) -> str:
        manifest = load_manifest(self.test)
        entries = tuple(e for e in manifest if e.class_label == label)
        path = os.path.join(self.root, "data", name)
        save_manifest(DatasetManifest(entries), path)
        return path

    def test_no_subcommand(self):
        with redirect_stdout(io.StringIO()):
            self.assertEqual(main([]), 0)

    def test_extract(self):
        out = self.path("features.csv")
        code = main(["extract", "-q", "--manifest", self.train, "--out", out])
        self.assertEqual(code, 0)
        frame = pd.read_csv(out)
        self.assertEqual(frame.shape, (12, 41))
        self.assertEqual(frame.columns[0], "image_path")
        self.assertEqual(frame.columns[-1], "f39")

    def test_train_outputs(self):
        report = self.path("pruned.txt")
        transactions = self.path("transactions.csv")
        code = self.train_model(
            "--prune-report", report, "--transactions-out", transactions
        )
        self.assertEqual(code, 0)
        self.assertTrue(os.path.exists(report))
        self.assertEqual(len(pd.read_csv(transactions)), 12)

    def test_no_rules_survive(self):
        with self.assertLogs(level="WARNING") as logs:
            code = self.train_model("--min-support", "1.0")
        self.assertEqual(code, 0)
        self.assertIn("No rules survived pruning", "\n".join(logs.output))
        self.assertEqual(len(load_model(self.model).rules), 0)

    def test_single_class_manifest(self):
        manifest = self.filtered_manifest("benign.csv", "benign")
        with self.assertLogs(level="ERROR") as logs:
            code = main(
                ["train", "--manifest", manifest, "--model", self.model]
            )
        self.assertEqual(code, 1)
        self.assertIn("at least two classes", "\n".join(logs.output))
        self.assertFalse(os.path.exists(self.model))

    def test_missing_image_fails_before_mining(self):
        manifest = load_manifest(self.train)
        path = self.path("data/missing.csv")
        gone = ManifestEntry("train/gone.pgm", "normal", ())
        entries = manifest.entries + (gone,)
        save_manifest(DatasetManifest(entries), path)
        with self.assertLogs(level="ERROR"):
            code = main(["train", "--manifest", path, "--model", self.model])
        self.assertEqual(code, 1)
        self.assertFalse(os.path.exists(self.model))

    def test_missing_manifest(self):
        self.assertEqual(self.train_model(), 0)
        missing = self.path("nope.csv")
        with self.assertLogs(level="ERROR") as logs:
            code = main(["eval", "--manifest", missing, "--model", self.model])
        self.assertEqual(code, 1)
        self.assertIn("No such file", "\n".join(logs.output))

    def test_corrupt_model(self):
        with open(self.model, "w", encoding="utf-8") as file:
            file.write("not json")
        image = os.path.join(self.root, "data/test/normal_000.pgm")
        with self.assertLogs(level="ERROR") as logs:
            code = main(["classify", "--model", self.model, image])
        self.assertEqual(code, 1)
        self.assertIn("model parse", "\n".join(logs.output))

    def test_classify_with_failures(self):
        self.assertEqual(self.train_model(), 0)
        image = os.path.join(self.root, "data/test/normal_000.pgm")
        out = self.path("predictions.csv")
        args = ["classify", "-q", "--model", self.model, "--out", out]
        with self.assertLogs(level="ERROR"):
            code = main([*args, image, self.path("gone.pgm")])
        self.assertEqual(code, 1)
        frame = pd.read_csv(out, keep_default_na=False)
        self.assertEqual(
            list(frame.columns), ["image_path", "label", "score", "keywords"]
        )
        self.assertEqual(frame["image_path"].tolist(), [image])

    def test_model_flags_win(self):
        self.assertEqual(self.train_model("--gray-levels", "8"), 0)
        out = self.path("predictions.csv")
        with self.assertLogs(level="WARNING") as logs:
            code = main(
                [
                    "classify",
                    "--model",
                    self.model,
                    "--manifest",
                    self.test,
                    "--gray-levels",
                    "16",
                    "--out",
                    out,
                ]
            )
        self.assertEqual(code, 0)
        self.assertIn(
            "Ignoring --gray-levels=16: model was trained with 8",
            "\n".join(logs.output),
        )
        self.assertEqual(len(pd.read_csv(out)), 6)

    def test_eval_without_abnormal_cases(self):
        self.assertEqual(self.train_model(), 0)
        manifest = self.filtered_manifest("normal.csv", "normal")
        report = self.path("report.txt")
        roc = self.path("roc.csv")
        with self.assertLogs(level="WARNING") as logs:
            code = main(
                [
                    "eval",
                    "--manifest",
                    manifest,
                    "--model",
                    self.model,
                    "--out",
                    report,
                    "--roc-out",
                    roc,
                ]
            )
        self.assertEqual(code, 0)
        self.assertIn("Skipping ROC analysis", "\n".join(logs.output))
        with open(report, "r", encoding="utf-8") as file:
            self.assertIn("skipped: ROC needs both classes", file.read())
        self.assertFalse(os.path.exists(roc))

    def test_eval_log_and_dump(self):
        self.assertEqual(self.train_model(), 0)
        log = self.path("results.mpack")
        args = ["--manifest", self.test, "--model", self.model]
        args += ["--out", self.path("report.txt"), "--log", log]
        self.assertEqual(main(["eval", "-q", *args]), 0)
        stdout = io.StringIO()
        with redirect_stdout(stdout):
            self.assertEqual(main(["dump", log]), 0)
        records = [json.loads(line) for line in stdout.getvalue().splitlines()]
        self.assertEqual(len(records), 6)
        self.assertEqual(
            {record["actual"] for record in records},
            {"normal", "benign", "malign"},
        )
        stdout = io.StringIO()
        with redirect_stdout(stdout):
            self.assertEqual(main(["dump", "--format", "csv", log]), 0)
        frame = pd.read_csv(io.StringIO(stdout.getvalue()))
        self.assertEqual(frame.columns[-1], "actual")

    def test_synth(self):
        stdout = io.StringIO()
        with redirect_stdout(stdout):
            code = main(
                [
                    "synth",
                    self.path("synth"),
                    "--train-per-class",
                    "1",
                    "--test-per-class",
                    "1",
                    "--size",
                    "8",
                ]
            )
        self.assertEqual(code, 0)
        train, test = stdout.getvalue().split()
        self.assertEqual(len(load_manifest(train)), 3)
        self.assertEqual(len(load_manifest(test)), 3)


class TestRunConfig(unittest.TestCase):
    def parse(self, *argv: str) -> RunConfig:
        return RunConfig.from_args(get_argument_parser().parse_args(argv))

    def test_defaults(self):
        config = self.parse("train", "--manifest", "m.csv", "--model", "x")
        self.assertEqual(config.extraction.gray_levels, 16)
        self.assertEqual(config.extraction.distance, 1)
        self.assertEqual(config.bins, 10)
        self.assertEqual(config.mining.min_support, 0.10)
        self.assertEqual(config.mining.min_confidence, 0.97)
        self.assertEqual(config.mining.max_level, 3)
        self.assertEqual(config.threshold, 0.001)
        self.assertTrue(config.preprocessing.equalize)
        self.assertEqual(config.preprocessing.median_window, 3)
        self.assertIsNone(config.preprocessing.crop)
        self.assertEqual(config.explicit, frozenset())

    def test_explicit_flags(self):
        config = self.parse(
            "train",
            "--manifest",
            "m.csv",
            "--model",
            "x",
            "--crop",
            "1,2,30,40",
            "--no-equalize",
            "--max-level",
            "0",
        )
        self.assertEqual(config.preprocessing.crop, CropRect(1, 2, 30, 40))
        self.assertFalse(config.preprocessing.equalize)
        self.assertIsNone(config.mining.max_level)
        self.assertEqual(config.explicit, {"crop", "equalize", "max_level"})

    def test_invalid_crop(self):
        parser = get_argument_parser()
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit):
                parser.parse_args(
                    ["extract", "--manifest", "m", "--crop", "0,0"]
                )
