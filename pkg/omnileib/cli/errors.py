"""
Error reporting and exit codes for the omnileib CLI.

Exit codes:

- 0: every check passed
- 1: a mathematical check failed or a theorem instance did not hold
- 2: the input was malformed, unknown or too large
"""

import sys
from difflib import get_close_matches
from typing import NoReturn, Optional

from omnileib.linalg import InputError, VerificationError

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2


class CLIError(Exception):
    """Raised by command handlers to stop with a message and an exit code."""

    def __init__(self, message: str, exit_code: int = EXIT_INPUT,
                 suggestions: Optional[list[str]] = None, tip: Optional[str] = None):
        super().__init__(message)
        self.exit_code = exit_code
        self.suggestions = suggestions or []
        self.tip = tip


def print_error(
    message: str,
    suggestions: Optional[list[str]] = None,
    tip: Optional[str] = None,
    available: Optional[list[str]] = None,
    available_label: Optional[str] = None,
) -> None:
    """Print a formatted error message to stderr."""
    print(f"Error: {message}", file=sys.stderr)

    if suggestions:
        if len(suggestions) == 1:
            print(f"\nDid you mean: {suggestions[0]}", file=sys.stderr)
        else:
            print(f"\nDid you mean one of: {', '.join(suggestions)}", file=sys.stderr)

    if available and available_label:
        print(f"\n{available_label}: {', '.join(available)}", file=sys.stderr)

    if tip:
        print(f"\nTip: {tip}", file=sys.stderr)


def error(message: str, exit_code: int = EXIT_INPUT, **kwargs) -> NoReturn:
    """Print a formatted error message and exit."""
    print_error(message, **kwargs)
    sys.exit(exit_code)


def suggest_similar(input_str: str, valid_options: list[str], cutoff: float = 0.6, n: int = 3) -> list[str]:
    """Close matches for a possibly mistyped name."""
    return get_close_matches(input_str, valid_options, n=n, cutoff=cutoff)


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, CLIError):
        return exc.exit_code
    if isinstance(exc, VerificationError):
        return EXIT_FAILURE
    return EXIT_INPUT


def report_exception(exc: BaseException) -> int:
    """Print an exception from a handler and return its exit code."""
    if isinstance(exc, CLIError):
        print_error(str(exc), suggestions=exc.suggestions, tip=exc.tip)
    elif isinstance(exc, (InputError, VerificationError)):
        print_error(str(exc))
    else:
        print_error(f"{type(exc).__name__}: {exc}")
    return exit_code_for(exc)


def show_unknown_command_error(command: str, valid_commands: list[str]) -> NoReturn:
    error(
        f"Unknown command '{command}'.",
        suggestions=suggest_similar(command, valid_commands),
        available=valid_commands,
        available_label="Available commands",
    )


def show_missing_action_help(resource: str, actions: dict[str, str],
                             examples: Optional[dict[str, str]] = None) -> NoReturn:
    """Show help when no action is given for a resource command."""
    print(f"Error: Please specify an action for '{resource}'.\n", file=sys.stderr)

    print("Available actions:", file=sys.stderr)
    width = max(len(a) for a in actions)
    for action, help_text in actions.items():
        print(f"  {action:<{width + 2}} {help_text}", file=sys.stderr)

    if examples:
        print("\nExamples:", file=sys.stderr)
        for example in examples.values():
            print(f"  {example}", file=sys.stderr)

    print(f"\nFor help: omnileib {resource} --help", file=sys.stderr)
    sys.exit(EXIT_INPUT)


def show_unknown_action_error(resource: str, action: str, valid_actions: list[str]) -> NoReturn:
    error(
        f"Unknown action '{action}' for '{resource}'.",
        suggestions=suggest_similar(action, valid_actions),
        available=valid_actions,
        available_label="Available actions",
    )
