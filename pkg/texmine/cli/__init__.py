#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

"""Run the image mining pipeline from the command line."""

from .main import main
from .run_config import RunConfig

__all__ = [
    "RunConfig",
    "main",
]
