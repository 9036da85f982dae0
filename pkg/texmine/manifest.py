#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Dataset manifests: image paths with their diagnosis keywords."""

import os
from dataclasses import dataclass, field
from typing import List, Tuple

import pandas as pd

from .exceptions import ManifestError

#: Class labels, from least to most severe.
CLASS_LABELS = ("normal", "benign", "malign")

#: Columns of a manifest file, in order.
MANIFEST_COLUMNS = ("image_path", "class_label", "keywords")


def split_keywords(text: str) -> Tuple[str, ...]:
    """Split a ``;``-joined keyword list into normalized tokens.

    Args:
        text: Keyword list, e.g. ``"malign;assessment=5"``.

    Returns:
        Lower-case tokens, empty tokens skipped, in order of appearance.
    """
    tokens = (token.strip().lower() for token in text.split(";"))
    return tuple(token for token in tokens if token)


@dataclass(frozen=True)
class ManifestEntry:
    """Row of a dataset manifest.

    Attributes:
        image_path: Image path as written in the manifest.
        class_label: One of :data:`CLASS_LABELS`.
        keywords: Diagnosis keywords attached to the image.
    """

    image_path: str
    class_label: str
    keywords: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.class_label not in CLASS_LABELS:
            raise ManifestError(f"unknown class label '{self.class_label}'")


@dataclass(frozen=True)
class DatasetManifest:
    """Labeled images of a dataset.

    Attributes:
        entries: Manifest rows, in file order.
        root: Directory that relative image paths are resolved against.
    """

    entries: Tuple[ManifestEntry, ...]
    root: str = field(default=".")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def resolve(self, entry: ManifestEntry) -> str:
        """Path of an entry's image on the file system.

        Args:
            entry: Manifest entry.

        Returns:
            Absolute or root-relative path to the image file.
        """
        if os.path.isabs(entry.image_path):
            return entry.image_path
        return os.path.join(self.root, entry.image_path)

    @property
    def class_labels(self) -> List[str]:
        """Distinct class labels present in the manifest, sorted."""
        return sorted({entry.class_label for entry in self.entries})


def load_manifest(path: str) -> DatasetManifest:
    """Load a dataset manifest from a CSV file.

    The file has a header ``image_path,class_label,keywords``; keywords are
    joined by ``;``. Relative image paths are resolved against the directory
    of the manifest. Blank lines are skipped.

    Args:
        path: Path to the manifest CSV file.

    Returns:
        Parsed manifest.

    Raises:
        FileNotFoundError: If the manifest does not exist.
        ManifestError: On an empty manifest, missing or extra columns, a row
            with a wrong number of fields, an unknown class label or a
            keyword naming another class. Row-level messages carry the line
            number.
    """
    try:
        frame = pd.read_csv(
            path,
            header=None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False,
            encoding="utf-8",
            skipinitialspace=True,
        )
    except pd.errors.EmptyDataError as exn:
        raise ManifestError(f"{path}: empty manifest") from exn
    except pd.errors.ParserError as exn:  # e.g. a row with extra fields
        raise ManifestError(f"{path}: {exn}") from exn
    header = [str(name).strip() for name in frame.iloc[0].fillna("")]
    missing = [col for col in MANIFEST_COLUMNS if col not in header]
    if missing:
        raise ManifestError(f"{path}: missing columns {missing}")
    if len(header) != len(MANIFEST_COLUMNS):
        raise ManifestError(
            f"{path}: expected columns {list(MANIFEST_COLUMNS)}, "
            f"got {header}"
        )
    rows = frame.iloc[1:].set_axis(header, axis=1)[list(MANIFEST_COLUMNS)]
    entries = []
    # one frame row per physical line since blank lines are kept
    for line, row in enumerate(rows.itertuples(index=False), start=2):
        given = [not pd.isna(value) for value in row]
        if not any(given):
            continue
        if not all(given):
            raise ManifestError(
                f"{path}:{line}: expected {len(MANIFEST_COLUMNS)} fields"
            )
        entries.append(_parse_row(path, line, row))
    if not entries:
        raise ManifestError(f"{path}: empty manifest")
    root = os.path.dirname(os.path.abspath(path))
    return DatasetManifest(tuple(entries), root)


def _parse_row(path: str, line: int, row) -> ManifestEntry:
    image_path = row.image_path.strip()
    if not image_path:
        raise ManifestError(f"{path}:{line}: missing image path")
    label = row.class_label.strip().lower()
    if label not in CLASS_LABELS:
        raise ManifestError(
            f"{path}:{line}: unknown class label '{row.class_label}'"
        )
    keywords = split_keywords(row.keywords)
    others = sorted(set(keywords) & set(CLASS_LABELS) - {label})
    if others:
        raise ManifestError(
            f"{path}:{line}: keywords name class {others[0]} "
            f"but the class label is {label}"
        )
    return ManifestEntry(image_path, label, keywords)


def save_manifest(manifest: DatasetManifest, path: str) -> None:
    """Write a dataset manifest to a CSV file.

    Args:
        manifest: Manifest to write; image paths are written as stored.
        path: Destination path.
    """
    frame = pd.DataFrame(
        [
            (entry.image_path, entry.class_label, ";".join(entry.keywords))
            for entry in manifest.entries
        ],
        columns=list(MANIFEST_COLUMNS),
    )
    frame.to_csv(path, index=False, lineterminator="\n")
