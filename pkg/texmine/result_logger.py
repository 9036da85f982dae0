#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2023 Inria
# Copyright 2026 texmine contributors

"""Log per-image classification results to a MessagePack file."""

import os
import queue

import msgpack

from .classifier import Classification
from .serialize import serialize


class ResultLogger:
    """Queue classification results and write them as a MessagePack stream.

    Each record is a dictionary with the image path, the predicted label,
    the abnormality score, the suggested keywords and the match tally of
    every rule head.
    """

    def __init__(self, path: str):
        """Initialize logger.

        Args:
            path: Path to the output log file.

        Raises:
            FileExistsError: If the file already exists.
        """
        self.path = path
        self.queue: queue.Queue = queue.Queue()

        # Results of distinct runs must not end up in the same stream
        if os.path.exists(self.path):
            raise FileExistsError(f"File {path} already exists!")

    def put(self, image_path: str, result: Classification, **extra) -> None:
        """Queue the classification of an image.

        Args:
            image_path: Path of the classified image.
            result: Classification outcome.
            extra: Additional fields of the record, e.g. the actual label.
        """
        record = {"image_path": image_path}
        record.update(result.serialize())
        record.update(extra)
        self.queue.put(record)

    def write(self) -> None:
        """Append all queued records to the file."""
        with open(self.path, "ab") as file:
            packer = msgpack.Packer(default=serialize, use_bin_type=True)
            while not self.queue.empty():
                record = self.queue.get()
                file.write(packer.pack(record))
