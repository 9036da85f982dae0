#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 texmine contributors

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
