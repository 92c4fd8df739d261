"""
Argument types and option groups shared by the omnileib commands.

Choice strings such as ``--rep trivial``, ``--omnirep trivial:2`` and
``--mode graph:pairs.json`` are split here; files are read in :mod:`.utils`.
"""

import argparse
from dataclasses import dataclass
from typing import Optional

from omnileib.config import Config


@dataclass(frozen=True)
class Choice:
    """A parsed ``kind[:argument]`` option value."""
    kind: str
    argument: Optional[str] = None


def degree(value: str) -> int:
    """argparse type for ``--max-degree``."""
    try:
        result = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from None
    if not 0 <= result <= Config.DEGREE_CAP:
        raise argparse.ArgumentTypeError(f"degree must be between 0 and {Config.DEGREE_CAP}, got {result}")
    return result


def positive_int(value: str) -> int:
    try:
        result = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from None
    if result < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {result}")
    return result


def non_negative_int(value: str) -> int:
    try:
        result = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from None
    if result < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {result}")
    return result


def rep_choice(value: str) -> Choice:
    """``trivial``, ``adjoint`` or a representation file."""
    if value in ("trivial", "adjoint"):
        return Choice(value)
    return Choice("file", value)


def omnirep_choice(value: str) -> Choice:
    """``trivial:<k>`` (1-based), ``trivial``, ``adjoint`` or an omni-representation file."""
    if value == "adjoint":
        return Choice("adjoint")
    if value == "trivial":
        return Choice("trivial", "1")
    if value.startswith("trivial:"):
        index = value.split(":", 1)[1]
        if not index.isdigit() or int(index) < 1:
            raise argparse.ArgumentTypeError(f"trivial index must be a positive integer, got {index!r}")
        return Choice("trivial", index)
    return Choice("file", value)


def mode_choice(value: str) -> Choice:
    """``trivial``, ``adjoint`` or ``graph:<file>``."""
    if value in ("trivial", "adjoint"):
        return Choice(value)
    if value.startswith("graph:") and value[len("graph:"):]:
        return Choice("graph", value[len("graph:"):])
    if value == "graph":
        return Choice("graph")
    raise argparse.ArgumentTypeError(f"mode must be trivial, adjoint, graph or graph:<file>, got {value!r}")


def add_output_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="Print a JSON report")


def add_degree_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-degree", "-k",
        type=degree,
        default=None,
        help=f"Highest cohomology degree (default from config, cap {Config.DEGREE_CAP})",
    )
    parser.add_argument("--workers", type=positive_int, default=None,
                        help="Threads for per-degree rank computations")


def add_validation_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--no-validate", action="store_true",
                        help="Skip identity and axiom checks on loaded documents")


def add_seed_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=non_negative_int, default=None, help="Random seed (default from config)")
    parser.add_argument("--trials", type=positive_int, default=None, help="Number of random trials")
