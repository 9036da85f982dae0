#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2024 Inria
# Copyright 2026 texmine contributors

"""Read classification records back from a result log."""

from typing import Generator

import msgpack
import pandas as pd

from .exceptions import TexmineError


def read_results(
    path: str, chunk_size: int = 100_000
) -> Generator[dict, None, None]:
    """Read classification records in series from a result log.

    Args:
        path: Path to a log written by :class:`texmine.ResultLogger`.
        chunk_size: Optional, number of bytes to read per internal loop cycle.

    Returns:
        Generator to each record of the log, in sequence.

    Raises:
        TexmineError: If the log contains something else than records.
    """
    with open(path, "rb") as file:
        unpacker = msgpack.Unpacker(raw=False)
        while True:
            data = file.read(chunk_size)
            if not data:  # end of file
                break
            unpacker.feed(data)
            for unpacked in unpacker:
                if not isinstance(unpacked, dict):
                    raise TexmineError(f"{unpacked=} is not a record")
                if "image_path" not in unpacked:
                    raise TexmineError(f"no image path in {unpacked}")
                yield unpacked


def results_frame(path: str) -> pd.DataFrame:
    """Tabulate a result log like the ``classify`` predictions CSV.

    Args:
        path: Path to the result log.

    Returns:
        Data frame with columns ``image_path,label,score,keywords``, plus
        ``actual`` when the records carry actual labels.
    """
    rows = [
        {
            "image_path": record["image_path"],
            "label": record["label"],
            "score": record["score"],
            "keywords": ";".join(record["keywords"]),
            **({"actual": record["actual"]} if "actual" in record else {}),
        }
        for record in read_results(path)
    ]
    columns = ["image_path", "label", "score", "keywords"]
    if any("actual" in row for row in rows):
        columns.append("actual")
    return pd.DataFrame(rows, columns=columns)
