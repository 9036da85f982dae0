#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Keyword suggestion and classification of test images."""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from .exceptions import ModelError
from .gray_image import GrayImage
from .items import FeatureItem
from .preprocess import PreprocessConfig, preprocess
from .pruner import RankedRuleSet
from .texture import ExtractionConfig, FeatureVector, extract_features
from .transactions import DiscretizationModel, discretize

#: Abnormal class labels, most severe first.
CLASS_PRECEDENCE = ("malign", "benign")

#: Label given to images without any suggested class keyword.
DEFAULT_LABEL = "normal"


@dataclass(frozen=True)
class ClassifierModel:
    """Everything needed to classify a test image.

    Attributes:
        discretizer: Discretizer fitted on the training features.
        rules: Pruned rules, highest-ranked first.
        threshold: Minimum match ratio T of a suggested keyword.
        extraction: Feature extraction configuration used in training.
        preprocessing: Preprocessing configuration used in training.
        class_precedence: Abnormal labels, most severe first.
    """

    discretizer: DiscretizationModel
    rules: RankedRuleSet = field(default_factory=RankedRuleSet)
    threshold: float = 0.001
    extraction: ExtractionConfig = field(default_factory=ExtractionConfig)
    preprocessing: PreprocessConfig = field(default_factory=PreprocessConfig)
    class_precedence: Tuple[str, ...] = CLASS_PRECEDENCE

    def __post_init__(self):
        if not 0.0 <= self.threshold <= 1.0:
            raise ModelError(f"threshold {self.threshold} not in [0, 1]")


@dataclass
class MatchTally:
    """Matches and non-matches of the rules sharing a head.

    Attributes:
        matches: Number of rules whose body matches the test features.
        non_matches: Number of rules whose body does not match.
    """

    matches: int = 0
    non_matches: int = 0

    @property
    def ratio(self) -> float:
        """Fraction of the head's rules that matched."""
        total = self.matches + self.non_matches
        return self.matches / total if total else 0.0

    def serialize(self) -> dict:
        """Dictionary representation for result logs."""
        return {"matches": self.matches, "non_matches": self.non_matches}


@dataclass(frozen=True)
class Classification:
    """Outcome of classifying one image.

    Attributes:
        label: Predicted class label.
        keywords: Suggested keywords S.
        score: Abnormality score in [0, 1].
        tallies: Match tally of each rule head.
    """

    label: str
    keywords: FrozenSet[str]
    score: float
    tallies: Dict[str, MatchTally] = field(default_factory=dict, hash=False)

    def serialize(self) -> dict:
        """Dictionary representation for result logs."""
        return {
            "label": self.label,
            "keywords": sorted(self.keywords),
            "score": self.score,
            "tallies": {
                head: tally.serialize()
                for head, tally in sorted(self.tallies.items())
            },
        }


def tally_matches(
    features: FrozenSet[FeatureItem], rules: Iterable
) -> Dict[str, MatchTally]:
    """Count, per rule head, the rules whose body matches some features.

    Args:
        features: Discretized features of a test image.
        rules: Association rules.

    Returns:
        Tally of each head keyword token.
    """
    tallies: Dict[str, MatchTally] = {}
    for rule in rules:
        heads = [rule.consequent]  # rule heads are single keywords
        for head in heads:
            tally = tallies.setdefault(head.token, MatchTally())
            if rule.antecedent <= features:
                tally.matches += 1
            else:
                tally.non_matches += 1
    return tallies


def suggest_keywords(
    features: FrozenSet[FeatureItem],
    model: ClassifierModel,
    tallies: Optional[Dict[str, MatchTally]] = None,
) -> FrozenSet[str]:
    """Suggest the keywords whose rules match often enough.

    Args:
        features: Discretized features of a test image.
        model: Classifier model.
        tallies: Precomputed tallies, computed from the model otherwise.

    Returns:
        Keyword tokens whose match ratio reaches the model threshold.
    """
    if tallies is None:
        tallies = tally_matches(features, model.rules)
    return frozenset(
        head
        for head, tally in tallies.items()
        if tally.ratio >= model.threshold
    )


def score_abnormality(
    features: FrozenSet[FeatureItem],
    model: ClassifierModel,
    tallies: Optional[Dict[str, MatchTally]] = None,
) -> float:
    """Abnormality score, the best match ratio of an abnormal head.

    Args:
        features: Discretized features of a test image.
        model: Classifier model.
        tallies: Precomputed tallies, computed from the model otherwise.

    Returns:
        Score in [0, 1], zero when no rule concludes an abnormal class.
    """
    if tallies is None:
        tallies = tally_matches(features, model.rules)
    ratios = [
        tallies[head].ratio
        for head in model.class_precedence
        if head in tallies
    ]
    return max(ratios, default=0.0)


def label_from_keywords(
    keywords: Iterable[str], precedence: Tuple[str, ...] = CLASS_PRECEDENCE
) -> str:
    """Class label of a set of suggested keywords.

    Args:
        keywords: Suggested keyword tokens.
        precedence: Abnormal labels, most severe first.

    Returns:
        Most severe abnormal label among the keywords, normal otherwise.
    """
    suggested = set(keywords)
    for label in precedence:
        if label in suggested:
            return label
    return DEFAULT_LABEL


def classify_features(
    vector: FeatureVector, model: ClassifierModel
) -> Classification:
    """Classify an image from its extracted features.

    Args:
        vector: Feature vector of the test image.
        model: Classifier model.

    Returns:
        Classification of the image.
    """
    features = discretize(vector, model.discretizer)
    tallies = tally_matches(features, model.rules)
    keywords = suggest_keywords(features, model, tallies)
    return Classification(
        label=label_from_keywords(keywords, model.class_precedence),
        keywords=keywords,
        score=score_abnormality(features, model, tallies),
        tallies=tallies,
    )


def classify(image: GrayImage, model: ClassifierModel) -> Classification:
    """Classify a raw test image.

    The image goes through the training preprocessing and feature
    extraction before its features are matched against the rules.

    Args:
        image: Raw test image.
        model: Classifier model.

    Returns:
        Classification of the image.
    """
    cleaned = preprocess(image, model.preprocessing)
    vector = extract_features(cleaned, model.extraction)
    return classify_features(vector, model)
