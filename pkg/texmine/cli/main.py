#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
# Copyright 2022 Stéphane Caron
# Copyright 2026 texmine contributors

"""Main command line interface function."""

import argparse
import logging

from ..exceptions import InvariantError, TexmineError
from .commands import (
    cmd_classify,
    cmd_dump,
    cmd_eval,
    cmd_extract,
    cmd_synth,
    cmd_train,
)
from .run_config import RunConfig, crop_rect


def add_feature_flags(parser: argparse.ArgumentParser) -> None:
    """Flags of the feature space, stored in model files."""
    parser.add_argument(
        "--gray-levels",
        type=int,
        help="number of gray levels G of co-occurrence matrices (16)",
    )
    parser.add_argument(
        "--distance",
        type=int,
        help="intersample distance d of co-occurrence matrices (1)",
    )
    parser.add_argument(
        "--crop",
        type=crop_rect,
        metavar="x0,y0,w,h",
        help="crop images to this rectangle before anything else",
    )
    parser.add_argument(
        "--median-window",
        type=int,
        help="hybrid median window size, 0 to skip filtering (3)",
    )
    parser.add_argument(
        "--no-equalize",
        dest="equalize",
        action="store_const",
        const=False,
        help="skip histogram equalization",
    )


def add_classify_flags(parser: argparse.ArgumentParser) -> None:
    """Flags shared by the commands that apply a model."""
    parser.add_argument(
        "--model", required=True, help="model file written by train"
    )
    parser.add_argument(
        "--threshold",
        type=float,
        help="override the match ratio threshold T of the model",
    )
    parser.add_argument(
        "--bins",
        type=int,
        help="ignored, the model decides the discretization",
    )
    parser.add_argument(
        "--log", default="", help="write per-image results to this log"
    )


def get_argument_parser() -> argparse.ArgumentParser:
    """Parser for command-line arguments.

    Returns:
        Command-line argument parser.
    """
    common = argparse.ArgumentParser(add_help=False)
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument(
        "-v", "--verbose", action="store_true", help="log debug messages"
    )
    verbosity.add_argument(
        "-q", "--quiet", action="store_true", help="only log warnings"
    )
    common.add_argument(
        "-j", "--jobs", type=int, help="number of worker threads (1)"
    )

    main_parser = argparse.ArgumentParser(
        description="Classify image textures with association rules"
    )
    subparsers = main_parser.add_subparsers(title="subcommands", dest="subcmd")

    # texmine extract ---------------------------------------------------------
    extract_parser = subparsers.add_parser(
        "extract",
        parents=[common],
        help="Write texture features of manifest images as CSV",
    )
    extract_parser.add_argument("--manifest", required=True)
    extract_parser.add_argument("--out", help="output CSV (stdout)")
    add_feature_flags(extract_parser)

    # texmine train -----------------------------------------------------------
    train_parser = subparsers.add_parser(
        "train",
        parents=[common],
        help="Mine and prune rules from a labeled manifest",
    )
    train_parser.add_argument("--manifest", required=True)
    train_parser.add_argument(
        "--model", required=True, help="output model file"
    )
    add_feature_flags(train_parser)
    train_parser.add_argument(
        "--bins", type=int, help="intervals per feature (10)"
    )
    train_parser.add_argument(
        "--min-support", type=float, help="minimum support (0.10)"
    )
    train_parser.add_argument(
        "--min-confidence", type=float, help="minimum confidence (0.97)"
    )
    train_parser.add_argument(
        "--max-level",
        type=int,
        help="maximum itemset size with the keyword, 0 for no limit (3)",
    )
    train_parser.add_argument(
        "--threshold", type=float, help="match ratio threshold T (0.001)"
    )
    train_parser.add_argument(
        "--prune-report", help="write pruned rules and reasons to this file"
    )
    train_parser.add_argument(
        "--rules-out", help="write surviving rules to this file"
    )
    train_parser.add_argument(
        "--transactions-out", help="write training transactions as CSV"
    )

    # texmine classify --------------------------------------------------------
    classify_parser = subparsers.add_parser(
        "classify",
        parents=[common],
        help="Predict labels and keywords of images",
    )
    classify_parser.add_argument("images", nargs="*", help="PGM images")
    classify_parser.add_argument("--manifest", help="manifest of images")
    classify_parser.add_argument("--out", help="output CSV (stdout)")
    add_classify_flags(classify_parser)
    add_feature_flags(classify_parser)

    # texmine eval ------------------------------------------------------------
    eval_parser = subparsers.add_parser(
        "eval",
        parents=[common],
        help="Evaluate a model on a labeled manifest",
    )
    eval_parser.add_argument("--manifest", required=True)
    eval_parser.add_argument("--out", help="output report (stdout)")
    eval_parser.add_argument("--roc-out", help="write the ROC curve as CSV")
    add_classify_flags(eval_parser)
    add_feature_flags(eval_parser)

    # texmine dump ------------------------------------------------------------
    dump_parser = subparsers.add_parser(
        "dump",
        parents=[common],
        help="Dump a result log to the standard output",
    )
    dump_parser.add_argument(
        "logfile", metavar="logfile", help="log file to open"
    )
    dump_parser.add_argument(
        "--format",
        choices=["csv", "json"],
        default="json",
        help="output format (CSV or JSON Lines)",
    )

    # texmine synth -----------------------------------------------------------
    synth_parser = subparsers.add_parser(
        "synth",
        parents=[common],
        help="Generate a synthetic three-class texture dataset",
    )
    synth_parser.add_argument("output_dir", help="dataset directory")
    synth_parser.add_argument("--seed", type=int, default=42)
    synth_parser.add_argument("--train-per-class", type=int, default=50)
    synth_parser.add_argument("--test-per-class", type=int, default=20)
    synth_parser.add_argument("--size", type=int, default=64)

    return main_parser


def run(args: argparse.Namespace) -> int:
    """Run the subcommand selected by command-line arguments.

    Args:
        args: Parsed command-line arguments.

    Returns:
        Exit code of the subcommand.
    """
    if args.subcmd == "dump":
        return cmd_dump(args.logfile, args.format)
    if args.subcmd == "synth":
        return cmd_synth(
            args.output_dir,
            args.train_per_class,
            args.test_per_class,
            args.size,
            args.seed,
        )
    config = RunConfig.from_args(args)
    if args.subcmd == "extract":
        return cmd_extract(config)
    if args.subcmd == "train":
        return cmd_train(
            config,
            prune_report=args.prune_report,
            rules_out=args.rules_out,
            transactions_out=args.transactions_out,
        )
    if args.subcmd == "classify":
        return cmd_classify(config, args.images, args.log)
    return cmd_eval(config, roc_out=args.roc_out, log=args.log)


def main(argv=None) -> int:
    """Main function for the `texmine` command line.

    Args:
        argv: Command-line arguments.

    Returns:
        Exit code: 0 on success, 1 on input errors, 2 when an internal
        invariant is violated.
    """
    parser = get_argument_parser()
    args = parser.parse_args(argv)
    if args.subcmd is None:
        parser.print_help()
        return 0
    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    logging.basicConfig(format="%(levelname)s: %(message)s")
    logging.getLogger().setLevel(level)
    try:
        return run(args)
    except (InvariantError, AssertionError) as exn:
        logging.critical("Internal invariant violated: %s", exn)
        return 2
    except (TexmineError, OSError) as exn:
        logging.error("%s", exn)
        return 1
