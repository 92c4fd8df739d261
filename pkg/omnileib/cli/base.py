"""
Base class for omnileib resource commands.

A resource (``catalog``, ``config``) declares its actions as data; this
module builds the argparse subparsers and routes to ``handle_<action>``.
Handlers return a process exit code.
"""

import argparse
from abc import ABC
from typing import Any, Optional

from .errors import EXIT_OK, show_missing_action_help, show_unknown_action_error


class ResourceCommand(ABC):
    """
    Base class for resource-based CLI commands.

    Subclasses define their resource type and actions declaratively,
    and this base class handles parser setup and routing.
    """

    name: str = ""
    help_text: str = ""
    description: str = ""

    # {action_name: {'help': str, 'args': [positional args], 'add_args': callable, 'handler': str}}
    actions: dict[str, dict[str, Any]] = {}

    # {action_name: example_command}
    examples: dict[str, str] = {}

    common_args: list[tuple[str, dict]] = []

    def __init__(self):
        self.parser: Optional[argparse.ArgumentParser] = None
        self.action_parsers: dict[str, argparse.ArgumentParser] = {}

    def setup_parser(self, subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
        """Register this resource with the main argument parser."""
        self.parser = subparsers.add_parser(
            self.name,
            help=self.help_text,
            description=self.description or self.help_text,
        )

        for arg_name, arg_kwargs in self.common_args:
            self.parser.add_argument(arg_name, **arg_kwargs)

        action_subparsers = self.parser.add_subparsers(
            dest="action",
            help="Available actions",
            metavar="<action>",
        )

        for action_name, action_config in self.actions.items():
            action_parser = action_subparsers.add_parser(
                action_name,
                help=action_config.get("help", ""),
            )
            for pos_arg in action_config.get("args", []):
                action_parser.add_argument(pos_arg, help=f"Name of the {self.name} entry to {action_name}")

            args_func = action_config.get("add_args")
            if args_func:
                args_func(action_parser)

            self.action_parsers[action_name] = action_parser

        return self.parser

    def handle(self, args: argparse.Namespace, remaining: list[str]) -> int:
        """Route to the appropriate action handler."""
        if args.action is None:
            default = self.default_action()
            if default is None:
                self._show_missing_action_help()
            args.action = default

        if args.action not in self.actions:
            show_unknown_action_error(self.name, args.action, list(self.actions.keys()))

        handler_name = self.actions[args.action].get("handler", args.action)
        handler = getattr(self, f"handle_{handler_name}", None)
        if handler is None:
            raise NotImplementedError(f"Handler for action '{args.action}' not implemented")

        code = handler(args, remaining)
        return EXIT_OK if code is None else code

    def default_action(self) -> Optional[str]:
        """Action to run when none is given; None shows the action help."""
        return None

    def _show_missing_action_help(self) -> None:
        actions_help = {
            action: config.get("help", "")
            for action, config in self.actions.items()
        }
        show_missing_action_help(self.name, actions_help, self.examples)


class ListableMixin:
    """Mixin that adds a tabular ``list`` action.

    Expects ``list_rows()`` returning ``(name, dim, description)`` tuples.
    """

    list_title: str = "entries"

    def list_rows(self) -> list[tuple[str, int, str]]:
        raise NotImplementedError

    def handle_list(self, args: argparse.Namespace, remaining: list[str]) -> int:
        rows = self.list_rows()
        if not rows:
            print(f"No {self.list_title} found")
            return EXIT_OK

        print(f"Available {self.list_title} ({len(rows)} total):")
        print("-" * 72)
        print(f"{'Name':16} {'Dim':>4}  {'Description':50}")
        print("-" * 72)
        for name, dim, desc in rows:
            desc = str(desc)
            desc = desc[:47] + "..." if len(desc) > 50 else desc
            print(f"{name:16} {dim:>4}  {desc:50}")
        return EXIT_OK
