#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Classifier model files in JSON."""

import json

from .classifier import ClassifierModel
from .exceptions import ModelError, TexmineError
from .miner import AssociationRule
from .preprocess import PreprocessConfig
from .pruner import RankedRuleSet, prune
from .serialize import serialize
from .texture import ExtractionConfig
from .transactions import DiscretizationModel

#: Version of the model file layout.
FORMAT_VERSION = 1


def model_to_dict(model: ClassifierModel) -> dict:
    """Dictionary representation of a classifier model.

    Args:
        model: Classifier model.

    Returns:
        Dictionary with rules in rank order.
    """
    return {
        "format_version": FORMAT_VERSION,
        "extraction": model.extraction.serialize(),
        "preprocessing": model.preprocessing.serialize(),
        "discretizer": model.discretizer.serialize(),
        "threshold": model.threshold,
        "class_precedence": list(model.class_precedence),
        "rules": [rule.serialize() for rule in model.rules],
    }


def model_from_dict(data: dict) -> ClassifierModel:
    """Build a classifier model from its dictionary representation.

    Args:
        data: Dictionary as produced by :func:`model_to_dict`.

    Returns:
        Classifier model.

    Raises:
        ModelError: If the version is unsupported, a field is invalid or the
            rules are not the ranked output of pruning.
    """
    version = data.get("format_version")
    if version != FORMAT_VERSION:
        raise ModelError(
            f"model version mismatch: got {version}, "
            f"expected {FORMAT_VERSION}"
        )
    try:
        rules = tuple(AssociationRule.from_dict(r) for r in data["rules"])
    except (KeyError, TypeError, ValueError, TexmineError) as exn:
        raise ModelError(f"model parse: {exn!r}") from exn
    if prune(rules).rules != rules:
        raise ModelError("model parse: rules are not ranked and pruned")
    try:
        return ClassifierModel(
            discretizer=DiscretizationModel.from_dict(data["discretizer"]),
            rules=RankedRuleSet(rules),
            threshold=float(data["threshold"]),
            extraction=ExtractionConfig.from_dict(data["extraction"]),
            preprocessing=PreprocessConfig.from_dict(data["preprocessing"]),
            class_precedence=tuple(data["class_precedence"]),
        )
    except (KeyError, TypeError, ValueError, TexmineError) as exn:
        raise ModelError(f"model parse: {exn!r}") from exn


def save_model(model: ClassifierModel, path: str) -> None:
    """Write a classifier model to a JSON file.

    Args:
        model: Classifier model.
        path: Destination path.
    """
    with open(path, "w", encoding="utf-8") as file:
        json.dump(model_to_dict(model), file, indent=2, default=serialize)
        file.write("\n")


def load_model(path: str) -> ClassifierModel:
    """Read a classifier model from a JSON file.

    Args:
        path: Path to the model file.

    Returns:
        Classifier model.

    Raises:
        FileNotFoundError: If the file does not exist.
        ModelError: If the file is not a valid model.
    """
    with open(path, "r", encoding="utf-8") as file:
        try:
            data = json.load(file)
        except json.JSONDecodeError as exn:
            raise ModelError(f"model parse: {path}: {exn}") from exn
    if not isinstance(data, dict):
        raise ModelError(f"model parse: {path} is not a JSON object")
    return model_from_dict(data)
