#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Configuration of a command-line run."""

import argparse
import logging
import os
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple

from ..classifier import ClassifierModel
from ..exceptions import PreprocessError
from ..miner import MiningConfig
from ..preprocess import CropRect, PreprocessConfig
from ..texture import ExtractionConfig
from ..utils import parse_int_tuple

#: Default values of the flags that may be left out.
FLAG_DEFAULTS = {
    "gray_levels": 16,
    "distance": 1,
    "bins": 10,
    "min_support": 0.10,
    "min_confidence": 0.97,
    "max_level": 3,
    "threshold": 0.001,
    "crop": None,
    "median_window": 3,
    "equalize": True,
    "jobs": 1,
}


def crop_rect(text: str) -> CropRect:
    """Argument type of ``--crop x0,y0,w,h``."""
    try:
        return CropRect(*parse_int_tuple(text, 4))
    except (ValueError, PreprocessError) as exn:
        raise argparse.ArgumentTypeError(f"invalid crop {text!r}") from exn


@dataclass(frozen=True)
class RunConfig:
    """Union of the configurations of a pipeline run.

    Attributes:
        preprocessing: Preprocessing configuration.
        extraction: Feature extraction configuration.
        mining: Rule mining configuration.
        bins: Number of discretization intervals B per feature.
        threshold: Match ratio threshold T.
        jobs: Number of worker threads.
        manifest: Path to the dataset manifest, if any.
        model: Path to the model file, if any.
        out: Output path, standard output if None.
        explicit: Names of the flags given on the command line.
    """

    preprocessing: PreprocessConfig = field(default_factory=PreprocessConfig)
    extraction: ExtractionConfig = field(default_factory=ExtractionConfig)
    mining: MiningConfig = field(default_factory=MiningConfig)
    bins: int = 10
    threshold: float = 0.001
    jobs: int = 1
    manifest: Optional[str] = None
    model: Optional[str] = None
    out: Optional[str] = None
    explicit: FrozenSet[str] = frozenset()

    @staticmethod
    def from_args(args: argparse.Namespace) -> "RunConfig":
        """Build the configuration of a run from parsed arguments.

        Args:
            args: Command-line arguments.

        Returns:
            Run configuration, defaults filling the flags left out.
        """
        given = {
            name: getattr(args, name)
            for name in FLAG_DEFAULTS
            if getattr(args, name, None) is not None
        }
        values = {**FLAG_DEFAULTS, **given}
        max_level = values["max_level"]
        return RunConfig(
            preprocessing=PreprocessConfig(
                crop=values["crop"],
                equalize=values["equalize"],
                median_window=values["median_window"],
            ),
            extraction=ExtractionConfig(
                gray_levels=values["gray_levels"],
                distance=values["distance"],
            ),
            mining=MiningConfig(
                min_support=values["min_support"],
                min_confidence=values["min_confidence"],
                max_level=max_level if max_level > 0 else None,
            ),
            bins=values["bins"],
            threshold=values["threshold"],
            jobs=max(values["jobs"], 1),
            manifest=getattr(args, "manifest", None),
            model=getattr(args, "model", None),
            out=getattr(args, "out", None),
            explicit=frozenset(given),
        )

    def check_inputs(self, *paths: Optional[str]) -> None:
        """Check that input files exist before any work begins.

        Args:
            paths: Paths to check, None entries being skipped.

        Raises:
            FileNotFoundError: If a path does not exist.
        """
        for path in paths:
            if path is not None and not os.path.isfile(path):
                raise FileNotFoundError(f"No such file: {path}")

    def model_mismatches(
        self, model: ClassifierModel
    ) -> List[Tuple[str, object, object]]:
        """Explicit flags that disagree with a model file.

        Args:
            model: Classifier model loaded for classification.

        Returns:
            List of ``(flag, flag value, model value)`` conflicts.
        """
        model_values = {
            "gray_levels": model.extraction.gray_levels,
            "distance": model.extraction.distance,
            "bins": model.discretizer.bins,
            "crop": model.preprocessing.crop,
            "median_window": model.preprocessing.median_window,
            "equalize": model.preprocessing.equalize,
        }
        flag_values = {
            "gray_levels": self.extraction.gray_levels,
            "distance": self.extraction.distance,
            "bins": self.bins,
            "crop": self.preprocessing.crop,
            "median_window": self.preprocessing.median_window,
            "equalize": self.preprocessing.equalize,
        }
        return [
            (name, flag_values[name], model_values[name])
            for name in sorted(model_values)
            if name in self.explicit
            and flag_values[name] != model_values[name]
        ]

    def warn_model_mismatches(self, model: ClassifierModel) -> None:
        """Log a warning for each flag overridden by the model file."""
        for name, flag_value, model_value in self.model_mismatches(model):
            logging.warning(
                "Ignoring --%s=%s: model was trained with %s",
                name.replace("_", "-"),
                flag_value,
                model_value,
            )
