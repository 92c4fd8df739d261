"""``omnileib catalog list|show <name>``."""

import argparse

from omnileib.catalog import default_catalog
from omnileib.documents import algebra_to_data

from .base import ListableMixin, ResourceCommand
from .errors import EXIT_OK
from .parsing import add_output_args
from .utils import emit_report, resolve_algebra


def _format_bracket(i: int, j: int, k: int, value: str) -> str:
    if value == "1":
        coefficient = ""
    elif value == "-1":
        coefficient = "-"
    else:
        coefficient = f"{value} "
    return f"[e{i}, e{j}] = {coefficient}e{k}"


def describe_algebra(name: str, dim: int, description: str, entries: list) -> str:
    lines = [f"{name} (dim {dim})"]
    if description:
        lines.append(f"  {description}")
    if not entries:
        lines.append("  all brackets vanish")
    # several entries can share (i, j); list them term by term
    lines.extend(f"  {_format_bracket(i, j, k, value)}" for i, j, k, value in entries)
    return "\n".join(lines)


class CatalogCommand(ListableMixin, ResourceCommand):
    name = "catalog"
    help_text = "List and show catalog algebras"
    description = (
        "Browse the algebra catalog. Project (.omnileib/algebras) and user "
        "(~/.config/omnileib/algebras) documents shadow packaged ones of the same name."
    )
    list_title = "algebras"

    actions = {
        "list": {"help": "List catalog algebras"},
        "show": {"help": "Show the structure constants of an algebra", "args": ["name"],
                 "add_args": add_output_args},
    }

    examples = {
        "list": "omnileib catalog list",
        "show": "omnileib catalog show sl2 --json",
    }

    def default_action(self):
        return "list"

    def list_rows(self) -> list[tuple[str, int, str]]:
        catalog = default_catalog()
        return [(entry.name, entry.dim, entry.description)
                for entry in (catalog.get_entry(name) for name in catalog.names())]

    def handle_show(self, args: argparse.Namespace, remaining: list[str]) -> int:
        alg = resolve_algebra(args.name)
        catalog = default_catalog()
        description = catalog.get_entry(alg.name).description if alg.name in catalog else ""
        emit_report(
            args,
            describe_algebra(alg.name, alg.dim, description, alg.entries()),
            algebra_to_data(alg, description),
        )
        return EXIT_OK


_catalog_command = CatalogCommand()


def add_catalog_parser(subparsers):
    return _catalog_command.setup_parser(subparsers)


def handle_catalog_commands(args, remaining) -> int:
    return _catalog_command.handle(args, remaining)
