"""
``omnileib validate``, ``omnileib mc-check`` and ``omnileib balavoine-selftest``.

Each command exits 0 when every check passes and 1 when one fails.
"""

from typing import Any

from loguru import logger

from omnileib.algebra import is_leibniz, require_leibniz
from omnileib.balavoine import mc_check
from omnileib.catalog import default_catalog
from omnileib.documents import (
    KIND_ALGEBRA,
    KIND_REP,
    algebra_from_data,
    document_kind,
    omnirep_document_from_data,
    read_document,
    rep_from_data,
)
from omnileib.omni import graph_check, graph_factorization_failure, omnirep_check
from omnileib.representations import rep_check
from omnileib.verify import (
    adjoint_correspondence_suite,
    balavoine_selftest,
    graph_criterion_suite,
)

from .errors import EXIT_FAILURE, EXIT_OK
from .parsing import add_output_args, add_seed_args, positive_int
from .utils import emit_report, progress_callback, resolve_settings


def add_validate_parser(subparsers):
    parser = subparsers.add_parser(
        "validate",
        help="Check an algebra, representation or omni-representation document",
        description=(
            "Run the checker matching the document: the Leibniz identity, the "
            "representation axioms, or the omni-representation equations."
        ),
    )
    parser.add_argument("file", help="Path to a JSON document")
    add_output_args(parser)
    return parser


def add_mc_check_parser(subparsers):
    parser = subparsers.add_parser(
        "mc-check",
        help="Maurer-Cartan check for a representation",
        description=(
            "Evaluate d(rbar) - 1/2 [rbar, rbar] on the semidirect product g x_(l,0) V. "
            "The pair (l, r) need not satisfy the right-action axioms."
        ),
    )
    parser.add_argument("file", help="Path to a representation document")
    add_output_args(parser)
    return parser


def add_balavoine_parser(subparsers):
    parser = subparsers.add_parser(
        "balavoine-selftest",
        help="Randomized graded Lie algebra checks for the Balavoine bracket",
        description=(
            "Graded skew-symmetry and Jacobi on random cochains, and [a, a] = 0 "
            "exactly for Leibniz brackets on random tables."
        ),
    )
    add_seed_args(parser)
    parser.add_argument("--tables", type=positive_int, default=100,
                        help="Number of random structure-constant tables (default: 100)")
    parser.add_argument("--extended", action="store_true",
                        help="Also run the embedding tensor and adjoint correspondence suites")
    add_output_args(parser)
    return parser


def _check_entry(name: str, check) -> dict[str, Any]:
    entry = {"check": name, "ok": bool(check), "message": check.describe()}
    witness = getattr(check, "witness", None) or getattr(check, "pair", None)
    if witness is not None:
        entry["witness"] = list(witness)
    return entry


def _finish(args, file: str, kind: str, entries: list[dict[str, Any]]) -> int:
    ok = all(entry["ok"] for entry in entries)
    lines = [f"{file}: {kind} document"]
    lines.extend(f"  {'ok  ' if entry['ok'] else 'FAIL'}  {entry['message']}" for entry in entries)
    lines.append(f"verdict: {'valid' if ok else 'INVALID'}")
    emit_report(args, "\n".join(lines), {"command": args.resource, "file": file, "kind": kind,
                                         "ok": ok, "checks": entries})
    return EXIT_OK if ok else EXIT_FAILURE


def handle_validate_command(args, remaining) -> int:
    data = read_document(args.file)
    kind = document_kind(data)
    logger.debug(f"Validating {args.file} as a {kind} document")
    entries = []

    if kind == KIND_ALGEBRA:
        alg = algebra_from_data(data, validate=False)
        entries.append(_check_entry("leibniz", is_leibniz(alg)))
        return _finish(args, args.file, kind, entries)

    if kind == KIND_REP:
        rep = rep_from_data(data, validate=False)
        leibniz = is_leibniz(rep.algebra)
        entries.append(_check_entry("leibniz", leibniz))
        if leibniz:
            entries.append(_check_entry("representation", rep_check(rep)))
        return _finish(args, args.file, kind, entries)

    document = omnirep_document_from_data(data, validate=False)
    rho = document.rho
    leibniz = is_leibniz(rho.algebra)
    entries.append(_check_entry("leibniz", leibniz))
    if leibniz:
        entries.append(_check_entry("omni-representation", omnirep_check(rho)))
    if document.graph_phi is not None:
        graph = graph_check(document.graph_phi)
        entries.append(_check_entry("embedding-tensor", graph))
        failure = graph_factorization_failure(rho, document.graph_phi)
        entries.append({
            "check": "graph",
            "ok": failure is None,
            "message": ("img(rho) lies in the graph of phi" if failure is None
                        else f"rho(e{failure}) is not phi(theta(e{failure})) + theta(e{failure})"),
        })
    return _finish(args, args.file, kind, entries)


def handle_mc_check_command(args, remaining) -> int:
    settings = resolve_settings(args)
    rep = rep_from_data(read_document(args.file), validate=False)
    if settings["validate"]:
        require_leibniz(rep.algebra)

    axioms = rep_check(rep)
    mc = mc_check(rep, validate=False)
    entries = [_check_entry("representation", axioms), _check_entry("maurer-cartan", mc)]
    if bool(axioms) != bool(mc):
        message = "Maurer-Cartan verdict disagrees with the representation axioms"
        logger.error(f"{args.file}: {message}")
        entries.append({"check": "agreement", "ok": False, "message": message})

    ok = bool(mc) and bool(axioms)
    lines = [f"{args.file}: Maurer-Cartan check"]
    lines.extend(f"  {'ok  ' if entry['ok'] else 'FAIL'}  {entry['message']}" for entry in entries)
    lines.append(f"verdict: {'holds' if ok else 'FAILS'}")
    data = {"command": "mc-check", "file": args.file, "ok": ok, "checks": entries}
    if not mc:
        data["witness"] = list(mc.witness)
    emit_report(args, "\n".join(lines), data)
    return EXIT_OK if ok else EXIT_FAILURE


def handle_balavoine_command(args, remaining) -> int:
    settings = resolve_settings(args)
    callback = progress_callback(args)
    results = [balavoine_selftest(settings["seed"], settings["trials"], args.tables, callback)]
    if args.extended:
        results.append(graph_criterion_suite(settings["seed"], progress_callback=callback))
        catalog = default_catalog()
        for name in catalog.names():
            alg = catalog.get(name)
            if alg.dim <= 3:
                results.append(adjoint_correspondence_suite(alg, settings["seed"], progress_callback=callback))

    ok = all(result.ok for result in results)
    text = "\n".join([result.describe() for result in results] + [f"verdict: {'passed' if ok else 'FAILED'}"])
    emit_report(args, text, {"command": "balavoine-selftest", "ok": ok,
                             "suites": [result.to_dict() for result in results]})
    return EXIT_OK if ok else EXIT_FAILURE
