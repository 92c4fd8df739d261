"""
``omnileib cohomology``, ``omnileib omni-cohomology`` and ``omnileib compare``.

All three print a dimension table; ``compare`` exits 1 when the
Loday-Pirashvili and omni dimensions differ on the compared degrees.
"""

import argparse

from loguru import logger

from omnileib.algebra import LeibnizAlgebra
from omnileib.cohomology import CohomologyTable, cohomology_table
from omnileib.documents import (
    omnirep_document_from_data,
    read_document,
    rep_from_data,
)
from omnileib.linalg import zeros
from omnileib.omni import OmniRep, adjoint_omnirep, trivial_omnireps
from omnileib.omni_cohomology import omni_cohomology_table
from omnileib.representations import Representation, adjoint_rep, trivial_rep
from omnileib.verify import (
    MODE_ADJOINT,
    MODE_GRAPH,
    MODE_TRIVIAL,
    adjoint_graph_pair,
    compare_adjoint,
    compare_graph,
    compare_trivial,
)

from .errors import EXIT_FAILURE, EXIT_OK, CLIError
from .parsing import (
    add_degree_args,
    add_output_args,
    add_validation_args,
    mode_choice,
    omnirep_choice,
    rep_choice,
)
from .utils import (
    emit_report,
    progress_callback,
    require_same_algebra,
    resolve_algebra,
    resolve_settings,
)


def _add_common_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("algebra", help="Catalog name or path to an algebra document")
    add_degree_args(parser)
    add_validation_args(parser)
    add_output_args(parser)


def add_cohomology_parser(subparsers):
    parser = subparsers.add_parser(
        "cohomology",
        help="Loday-Pirashvili cohomology dimensions",
        description="Dimensions of H^0..H^K of an algebra with coefficients in a representation.",
    )
    _add_common_args(parser)
    parser.add_argument(
        "--rep",
        type=rep_choice,
        default=rep_choice("trivial"),
        metavar="trivial|adjoint|FILE",
        help="Coefficients (default: trivial)",
    )
    return parser


def add_omni_cohomology_parser(subparsers):
    parser = subparsers.add_parser(
        "omni-cohomology",
        help="Omni-cohomology dimensions",
        description="Dimensions of H_omni^0..H_omni^K for an omni-representation.",
    )
    _add_common_args(parser)
    parser.add_argument(
        "--omnirep",
        type=omnirep_choice,
        default=omnirep_choice("adjoint"),
        metavar="trivial:K|adjoint|FILE",
        help="Omni-representation; trivial:K is the K-th trivial one (default: adjoint)",
    )
    return parser


def add_compare_parser(subparsers):
    parser = subparsers.add_parser(
        "compare",
        help="Compare Loday-Pirashvili and omni-cohomology",
        description=(
            "Compute both dimension tables side by side. Exits 0 when they agree on every "
            "compared degree and 1 otherwise. 'graph' without a file uses the adjoint pair."
        ),
    )
    _add_common_args(parser)
    parser.add_argument(
        "--mode",
        type=mode_choice,
        default=mode_choice(MODE_ADJOINT),
        metavar="trivial|adjoint|graph[:FILE]",
        help="Which correspondence to check (default: adjoint)",
    )
    return parser


def _table_lines(table: CohomologyTable) -> list[str]:
    lines = ["  k  dim C^k  rank d_k  dim H^k"]
    for k in range(table.max_degree + 1):
        lines.append(f"  {k:<3}{table.cochain_dims[k]:>7}{table.ranks[k]:>10}{table.dims[k]:>9}")
    return lines


def _report_table(args, command: str, alg: LeibnizAlgebra, label: str, table: CohomologyTable) -> None:
    title = "H" if command == "cohomology" else "H_omni"
    text = "\n".join([f"{title}({alg.name or 'g'}; {label}) degrees 0..{table.max_degree}"]
                     + _table_lines(table)
                     + [f"dims: {list(table.dims)}"])
    data = {"command": command, "algebra": alg.name or "g", "coefficients": label}
    data.update(table.to_dict())
    emit_report(args, text, data)


def load_rep(alg: LeibnizAlgebra, choice, validate: bool) -> Representation:
    if choice.kind == "trivial":
        return trivial_rep(alg)
    if choice.kind == "adjoint":
        return adjoint_rep(alg)
    rep = rep_from_data(read_document(choice.argument), validate)
    require_same_algebra(alg, rep.algebra, "representation")
    return rep


def _zero_omnirep(alg: LeibnizAlgebra) -> OmniRep:
    return OmniRep(alg, 1, zeros((alg.dim, 1, 1)), zeros((alg.dim, 1)), "zero")


def load_omnirep(alg: LeibnizAlgebra, choice, validate: bool) -> OmniRep:
    if choice.kind == "adjoint":
        return adjoint_omnirep(alg)
    if choice.kind == "trivial":
        index = int(choice.argument)
        reps = trivial_omnireps(alg)
        if not reps and index == 1:
            logger.info(f"[g,g] = g for {alg!r}; using rho = 0")
            return _zero_omnirep(alg)
        if index > len(reps):
            raise CLIError(
                f"{alg.name or 'The algebra'} has {len(reps)} trivial omni-representation(s); "
                f"trivial:{index} is out of range"
            )
        return reps[index - 1]
    document = omnirep_document_from_data(read_document(choice.argument), validate)
    require_same_algebra(alg, document.rho.algebra, "omni-representation")
    return document.rho


def _label(choice) -> str:
    if choice.kind == "file":
        return choice.argument
    if choice.argument:
        return f"{choice.kind}:{choice.argument}"
    return choice.kind


def handle_cohomology_command(args, remaining) -> int:
    settings = resolve_settings(args)
    alg = resolve_algebra(args.algebra, settings["validate"])
    rep = load_rep(alg, args.rep, settings["validate"])
    table = cohomology_table(
        rep,
        settings["max_degree"],
        workers=settings["workers"],
        progress_callback=progress_callback(args),
        validate=settings["validate"],
    )
    _report_table(args, "cohomology", alg, _label(args.rep), table)
    return EXIT_OK


def handle_omni_cohomology_command(args, remaining) -> int:
    settings = resolve_settings(args)
    alg = resolve_algebra(args.algebra, settings["validate"])
    rho = load_omnirep(alg, args.omnirep, settings["validate"])
    table = omni_cohomology_table(
        rho,
        settings["max_degree"],
        workers=settings["workers"],
        progress_callback=progress_callback(args),
        validate=settings["validate"],
    )
    _report_table(args, "omni-cohomology", alg, _label(args.omnirep), table)
    return EXIT_OK


def handle_compare_command(args, remaining) -> int:
    settings = resolve_settings(args)
    alg = resolve_algebra(args.algebra, settings["validate"])
    kwargs = {
        "workers": settings["workers"],
        "progress_callback": progress_callback(args),
        "validate": settings["validate"],
    }
    max_degree = settings["max_degree"]
    mode = args.mode

    if mode.kind == MODE_TRIVIAL:
        comparison = compare_trivial(alg, max_degree, **kwargs)
    elif mode.kind == MODE_ADJOINT:
        comparison = compare_adjoint(alg, max_degree, **kwargs)
    elif mode.kind == MODE_GRAPH and mode.argument is None:
        pair = adjoint_graph_pair(alg)
        comparison = compare_graph(pair.rho, pair.phi, max_degree, **kwargs)
    else:
        document = omnirep_document_from_data(read_document(mode.argument), settings["validate"])
        if document.graph_phi is None:
            raise CLIError(
                f"'{mode.argument}' has no graph_phi",
                tip="graph mode needs the embedding tensor phi whose graph contains img(rho)",
            )
        require_same_algebra(alg, document.rho.algebra, "omni-representation")
        comparison = compare_graph(document.rho, document.graph_phi, max_degree, **kwargs)

    emit_report(args, comparison.describe(), comparison.to_dict())
    return EXIT_OK if comparison.equal else EXIT_FAILURE
