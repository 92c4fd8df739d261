"""Helpers shared by the omnileib command modules."""

import argparse
import sys
from pathlib import Path
from typing import Any

from loguru import logger

from omnileib.algebra import LeibnizAlgebra
from omnileib.catalog import CatalogLookupError, default_catalog
from omnileib.cli_progress import CLIProgressReporter
from omnileib.config import ConfigLoader
from omnileib.documents import (
    KIND_ALGEBRA,
    algebra_from_data,
    document_kind,
    dumps,
    read_document,
)
from omnileib.progress import ProgressCallback

from .errors import CLIError


def looks_like_path(value: str) -> bool:
    """A name containing a separator or ending in .json is read as a file."""
    return value.endswith(".json") or "/" in value or "\\" in value or Path(value).is_file()


def resolve_settings(args: argparse.Namespace) -> dict:
    """Effective settings: CLI flags over project, user and package config."""
    no_validate = getattr(args, "no_validate", False)
    settings = ConfigLoader().resolve_with_overrides(
        max_degree=getattr(args, "max_degree", None),
        seed=getattr(args, "seed", None),
        trials=getattr(args, "trials", None),
        workers=getattr(args, "workers", None),
        validate=False if no_validate else None,
    )
    logger.debug(f"Resolved settings: {settings}")
    return settings


def resolve_algebra(name_or_path: str, validate: bool = True) -> LeibnizAlgebra:
    """
    Return the algebra named on the command line.

    ``name_or_path`` can be either:
      • a catalog name such as ``L2``, or
      • a path to an algebra document (``*.json``).
    """
    if looks_like_path(name_or_path):
        data = read_document(name_or_path)
        if document_kind(data) != KIND_ALGEBRA:
            raise CLIError(f"'{name_or_path}' is not an algebra document")
        alg = algebra_from_data(data, validate=validate)
        if not alg.name:
            alg = LeibnizAlgebra(alg.dim, alg.constants, Path(name_or_path).stem)
        return alg

    try:
        return default_catalog().get(name_or_path)
    except CatalogLookupError as e:
        raise CLIError(
            f"Unknown algebra '{name_or_path}'.",
            suggestions=e.suggestions,
            tip="Run 'omnileib catalog list' to see available algebras",
        ) from None


def require_same_algebra(expected: LeibnizAlgebra, actual: LeibnizAlgebra, what: str) -> None:
    if expected != actual:
        raise CLIError(
            f"The {what} is defined over {actual.name or 'another algebra'} "
            f"(dim {actual.dim}), not {expected.name or 'the given algebra'} (dim {expected.dim})"
        )


def progress_callback(args: argparse.Namespace) -> ProgressCallback:
    """Progress on stderr; ``--quiet`` leaves only failed checks."""
    reporter = CLIProgressReporter(
        verbose=getattr(args, "verbose", False),
        quiet=getattr(args, "quiet", False),
    )
    return reporter.report


def emit_report(args: argparse.Namespace, text: str, data: Any) -> None:
    """Write the report as text or, with ``--json``, as deterministic JSON.

    Goes to ``--output`` when given, otherwise to stdout.
    """
    if getattr(args, "json", False):
        output = dumps(data)
    else:
        output = text if text.endswith("\n") else text + "\n"

    target = getattr(args, "output", None)
    if target:
        try:
            with open(target, "w", encoding="utf-8") as f:
                f.write(output)
        except OSError as e:
            raise CLIError(f"Cannot write '{target}': {e.strerror}") from None
        logger.info(f"Report written to {target}")
    else:
        sys.stdout.write(output)
        sys.stdout.flush()
