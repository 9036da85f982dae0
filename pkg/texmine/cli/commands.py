#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Subcommands of the command-line interface."""

import dataclasses
import json
import logging
import sys
import time
from typing import List, Optional, Sequence, Tuple

import pandas as pd

from ..classifier import Classification, ClassifierModel, classify_features
from ..evaluation import (
    ClassConfusion,
    confusion_from_predictions,
    format_report,
    roc,
)
from ..exceptions import EvaluationError, ManifestError, TexmineError
from ..manifest import DatasetManifest, load_manifest
from ..miner import format_rule, mine_rules
from ..model_file import load_model, save_model
from ..pipeline import ImageResult, extract_batch
from ..preprocess import PreprocessConfig
from ..pruner import prune
from ..read_results import read_results, results_frame
from ..result_logger import ResultLogger
from ..synthetic import generate_dataset
from ..texture import ExtractionConfig, feature_names
from ..transactions import (
    build_transactions,
    fit_discretizer,
    write_transactions_csv,
)
from ..utils import FLOAT_FORMAT
from .run_config import RunConfig


def write_frame(frame: pd.DataFrame, out: Optional[str]) -> None:
    """Write a table as CSV to a file, or to the standard output."""
    frame.to_csv(
        out if out else sys.stdout,
        index=False,
        lineterminator="\n",
        float_format=FLOAT_FORMAT,
    )


def write_text(text: str, out: Optional[str]) -> None:
    """Write text to a file, or to the standard output."""
    if not out:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as file:
        file.write(text)


def extract_manifest(
    manifest: DatasetManifest,
    preprocessing: PreprocessConfig,
    extraction: ExtractionConfig,
    jobs: int,
) -> List[ImageResult]:
    """Extract the features of every image of a manifest.

    Args:
        manifest: Dataset manifest.
        preprocessing: Preprocessing configuration.
        extraction: Feature extraction configuration.
        jobs: Number of worker threads.

    Returns:
        One result per entry in manifest order, identified by the image
        path as written in the manifest.
    """
    images = [(e.image_path, manifest.resolve(e)) for e in manifest]
    return extract_batch(images, preprocessing, extraction, jobs)


def load_run_manifest(config: RunConfig) -> DatasetManifest:
    """Load the manifest of a run, which must be given."""
    if config.manifest is None:
        raise ManifestError("this command needs a --manifest")
    return load_manifest(config.manifest)


def cmd_extract(config: RunConfig) -> int:
    """Write the feature vector of every image of a manifest as CSV.

    Args:
        config: Run configuration.

    Returns:
        Exit code, nonzero if any image failed.
    """
    config.check_inputs(config.manifest)
    manifest = load_run_manifest(config)
    results = extract_manifest(
        manifest, config.preprocessing, config.extraction, config.jobs
    )
    names = [f"f{index}" for index in range(len(feature_names()))]
    rows = [
        [result.image_id, *result.features.values]
        for result in results
        if result.features is not None
    ]
    frame = pd.DataFrame(rows, columns=["image_path", *names])
    write_frame(frame, config.out)
    failures = sum(1 for result in results if not result.ok)
    if failures:
        logging.error(
            "Failed to extract %d of %d images", failures, len(results)
        )
        return 1
    return 0


def cmd_train(
    config: RunConfig,
    prune_report: Optional[str] = None,
    rules_out: Optional[str] = None,
    transactions_out: Optional[str] = None,
) -> int:
    """Train a classifier model and save it to the model path.

    Args:
        config: Run configuration.
        prune_report: Optional path to write the prune report to.
        rules_out: Optional path to write the surviving rules to.
        transactions_out: Optional path to export training transactions.

    Returns:
        Exit code.
    """
    config.check_inputs(config.manifest)
    if config.model is None:
        raise TexmineError("training needs a --model output path")
    manifest = load_run_manifest(config)
    if len(manifest.class_labels) < 2:
        raise ManifestError(
            "training needs at least two classes, got "
            f"{manifest.class_labels}"
        )
    results = extract_manifest(
        manifest, config.preprocessing, config.extraction, config.jobs
    )
    failed = [result for result in results if result.features is None]
    if failed:
        raise TexmineError(
            f"cannot train: {len(failed)} images failed, "
            f"first {failed[0].path}: {failed[0].error}"
        )
    vectors = {
        result.image_id: result.features
        for result in results
        if result.features is not None
    }
    discretizer = fit_discretizer(list(vectors.values()), config.bins)
    transactions = build_transactions(manifest, discretizer, vectors)
    if transactions_out:
        write_transactions_csv(transactions, transactions_out)
    rules = prune(mine_rules(transactions, config.mining, config.jobs))
    if len(rules) == 0:
        logging.warning("No rules survived pruning")
    if prune_report:
        write_text(rules.report(), prune_report)
    if rules_out:
        write_text("".join(f"{format_rule(r)}\n" for r in rules), rules_out)
    model = ClassifierModel(
        discretizer=discretizer,
        rules=rules,
        threshold=config.threshold,
        extraction=config.extraction,
        preprocessing=config.preprocessing,
    )
    save_model(model, config.model)
    logging.info("Saved model with %d rules to %s", len(rules), config.model)
    return 0


def load_run_model(config: RunConfig) -> ClassifierModel:
    """Load the model of a run, the model winning over explicit flags.

    Args:
        config: Run configuration.

    Returns:
        Classifier model, with the threshold of ``--threshold`` if given.
    """
    if config.model is None:
        raise TexmineError("this command needs a --model")
    config.check_inputs(config.model)
    model = load_model(config.model)
    config.warn_model_mismatches(model)
    if "threshold" in config.explicit:
        model = dataclasses.replace(model, threshold=config.threshold)
    return model


def classify_images(
    images: Sequence[Tuple[str, str]],
    model: ClassifierModel,
    jobs: int,
) -> List[Tuple[ImageResult, Optional[Classification]]]:
    """Classify image files with a model.

    Args:
        images: Sequence of ``(image_id, path)`` pairs.
        model: Classifier model.
        jobs: Number of worker threads.

    Returns:
        Extraction result and classification of each image, the latter
        None when extraction failed.
    """
    results = extract_batch(
        images, model.preprocessing, model.extraction, jobs
    )
    start = time.perf_counter()
    classified = [
        (
            result,
            (
                classify_features(result.features, model)
                if result.features is not None
                else None
            ),
        )
        for result in results
    ]
    logging.info(
        "Classified %d images in %.1f ms",
        len(results),
        1e3 * (time.perf_counter() - start),
    )
    return classified


def predictions_frame(
    classified: Sequence[Tuple[ImageResult, Optional[Classification]]],
) -> pd.DataFrame:
    """Predictions table, see :func:`cmd_classify`."""
    rows = [
        (
            result.image_id,
            outcome.label,
            outcome.score,
            ";".join(sorted(outcome.keywords)),
        )
        for result, outcome in classified
        if outcome is not None
    ]
    return pd.DataFrame(
        rows, columns=["image_path", "label", "score", "keywords"]
    )


def cmd_classify(
    config: RunConfig, image_paths: Sequence[str] = (), log: str = ""
) -> int:
    """Write the predicted label and keywords of images as CSV.

    Args:
        config: Run configuration.
        image_paths: Images to classify, in addition to manifest images.
        log: Optional path to a MessagePack result log.

    Returns:
        Exit code, nonzero if any image failed.
    """
    model = load_run_model(config)
    logger = ResultLogger(log) if log else None
    images = [(path, path) for path in image_paths]
    if config.manifest is not None:
        config.check_inputs(config.manifest)
        manifest = load_manifest(config.manifest)
        images += [(e.image_path, manifest.resolve(e)) for e in manifest]
    classified = classify_images(images, model, config.jobs)
    write_frame(predictions_frame(classified), config.out)
    if logger is not None:
        for result, outcome in classified:
            if outcome is not None:
                logger.put(result.image_id, outcome)
        logger.write()
    return 1 if any(outcome is None for _, outcome in classified) else 0


def cmd_eval(
    config: RunConfig, roc_out: Optional[str] = None, log: str = ""
) -> int:
    """Classify a labeled manifest and report the classifier performance.

    Args:
        config: Run configuration.
        roc_out: Optional path to write the ROC curve to as CSV.
        log: Optional path to a MessagePack result log.

    Returns:
        Exit code, nonzero if any image failed.
    """
    model = load_run_model(config)
    config.check_inputs(config.manifest)
    logger = ResultLogger(log) if log else None
    manifest = load_run_manifest(config)
    labels = {entry.image_path: entry.class_label for entry in manifest}
    images = [(e.image_path, manifest.resolve(e)) for e in manifest]
    classified = [
        (result, outcome)
        for result, outcome in classify_images(images, model, config.jobs)
        if outcome is not None
    ]
    pairs = [
        (labels[result.image_id], outcome.label)
        for result, outcome in classified
    ]
    matrix = confusion_from_predictions(pairs)
    class_confusion = ClassConfusion.from_predictions(pairs)
    summary, notice = None, ""
    try:
        summary = roc(
            [
                (outcome.score, labels[result.image_id])
                for result, outcome in classified
            ]
        )
    except EvaluationError as exn:
        notice = str(exn)
        logging.warning("Skipping ROC analysis: %s", notice)
    write_text(
        format_report(matrix, class_confusion, summary, notice), config.out
    )
    if roc_out and summary is not None:
        write_frame(summary.frame(), roc_out)
    if logger is not None:
        for result, outcome in classified:
            actual = labels[result.image_id]
            logger.put(result.image_id, outcome, actual=actual)
        logger.write()
    return 0 if len(classified) == len(images) else 1


def cmd_dump(logfile: str, output_format: str = "json") -> int:
    """Print a result log to the standard output.

    Args:
        logfile: Path to the result log.
        output_format: ``json`` for JSON Lines or ``csv`` for a table.

    Returns:
        Exit code.
    """
    if output_format == "csv":
        write_frame(results_frame(logfile), None)
        return 0
    try:
        for record in read_results(logfile):
            print(json.dumps(record, allow_nan=False))
    except BrokenPipeError:  # e.g. piping to `head`
        pass
    return 0


def cmd_synth(
    root: str,
    train_per_class: int = 50,
    test_per_class: int = 20,
    size: int = 64,
    seed: int = 42,
) -> int:
    """Generate the synthetic three-class texture dataset.

    Returns:
        Exit code.
    """
    train, test = generate_dataset(
        root, train_per_class, test_per_class, size, seed
    )
    print(train)
    print(test)
    return 0
