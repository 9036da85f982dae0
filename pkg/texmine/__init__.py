#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Classify grayscale images from texture features and association rules."""

__version__ = "1.0.0"

from .classifier import (
    Classification,
    ClassifierModel,
    classify,
    classify_features,
    score_abnormality,
    suggest_keywords,
)
from .evaluation import (
    ConfusionMatrix,
    metrics,
    roc,
)
from .exceptions import TexmineError
from .gray_image import GrayImage, load_pgm, save_pgm
from .manifest import DatasetManifest, load_manifest
from .miner import AssociationRule, MiningConfig, mine_rules
from .model_file import load_model, save_model
from .preprocess import CropRect, PreprocessConfig, preprocess
from .pruner import RankedRuleSet, prune
from .read_results import read_results
from .result_logger import ResultLogger
from .texture import ExtractionConfig, FeatureVector, extract_features
from .transactions import (
    Transaction,
    build_transactions,
    discretize,
    fit_discretizer,
)

__all__ = [
    "AssociationRule",
    "Classification",
    "ClassifierModel",
    "ConfusionMatrix",
    "CropRect",
    "DatasetManifest",
    "ExtractionConfig",
    "FeatureVector",
    "GrayImage",
    "MiningConfig",
    "PreprocessConfig",
    "RankedRuleSet",
    "ResultLogger",
    "TexmineError",
    "Transaction",
    "build_transactions",
    "classify",
    "classify_features",
    "discretize",
    "extract_features",
    "fit_discretizer",
    "load_manifest",
    "load_model",
    "load_pgm",
    "metrics",
    "mine_rules",
    "preprocess",
    "prune",
    "read_results",
    "roc",
    "save_model",
    "save_pgm",
    "score_abnormality",
    "suggest_keywords",
]
