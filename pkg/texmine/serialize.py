#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2022 Stéphane Caron
# Copyright 2026 texmine contributors

"""Serialization function shared by the JSON and MessagePack writers."""


def serialize(obj):
    """Convert an object to types that JSON and MessagePack can encode.

    Numpy arrays and scalars become lists and Python numbers, objects with a
    ``serialize`` method are replaced by its output, and sets become sorted
    lists so that output files are deterministic.

    Args:
        obj: Object to serialize.

    Returns:
        Serialized object.
    """
    if hasattr(obj, "tolist"):  # numpy.ndarray and numpy scalars
        return obj.tolist()
    if hasattr(obj, "serialize"):  # items, rules, configs
        return obj.serialize()
    if isinstance(obj, (set, frozenset)):
        return sorted(serialize(x) for x in obj)
    return obj
