#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Exceptions raised by texmine."""


class TexmineError(Exception):
    """Base class for texmine errors caused by invalid inputs."""


class ImageFormatError(TexmineError):
    """Image file or raster does not follow the PGM format."""


class ManifestError(TexmineError):
    """Dataset manifest could not be parsed."""


class PreprocessError(TexmineError):
    """Invalid preprocessing parameters for a given image."""


class TextureError(TexmineError):
    """Texture feature extraction failed."""


class TransactionError(TexmineError):
    """Transaction database could not be built."""


class MiningError(TexmineError):
    """Association rule mining failed."""


class ModelError(TexmineError):
    """Classifier model file is invalid."""


class EvaluationError(TexmineError):
    """Evaluation inputs are insufficient for the requested metric."""


class InvariantError(TexmineError):
    """Internal invariant violation, i.e. a bug rather than a bad input."""
