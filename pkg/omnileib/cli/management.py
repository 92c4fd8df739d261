"""``omnileib config show|set``."""

import argparse

import yaml

from omnileib.config import Config, ConfigLoader

from .base import ResourceCommand
from .errors import EXIT_OK, CLIError, suggest_similar

_KEY_TYPES = {
    "max_degree": int,
    "seed": int,
    "trials": int,
    "workers": int,
    "validate": bool,
}


def _add_show_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--resolved",
        action="store_true",
        help="Show fully resolved configuration with all layers merged",
    )


def _add_set_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("key", help=f"Configuration key ({', '.join(Config.SETTINGS_KEYS)})")
    parser.add_argument("value", help="Configuration value")
    parser.add_argument(
        "--project",
        action="store_true",
        help="Set in project config (.omnileib/config.yaml) instead of user config",
    )


def parse_setting(key: str, value: str):
    """Parse a ``config set`` value with YAML rules and check its type."""
    if key not in Config.SETTINGS_KEYS:
        raise CLIError(
            f"Invalid key '{key}'.",
            suggestions=suggest_similar(key, list(Config.SETTINGS_KEYS)),
            tip=f"Valid keys: {', '.join(Config.SETTINGS_KEYS)}",
        )
    parsed = yaml.safe_load(value)
    expected = _KEY_TYPES[key]
    # bool is an int subclass
    if expected is int and (isinstance(parsed, bool) or not isinstance(parsed, int)):
        raise CLIError(f"'{key}' expects an integer, got '{value}'")
    if expected is bool and not isinstance(parsed, bool):
        raise CLIError(f"'{key}' expects true or false, got '{value}'")
    if key == "max_degree" and not 0 <= parsed <= Config.DEGREE_CAP:
        raise CLIError(f"max_degree must be between 0 and {Config.DEGREE_CAP}, got {parsed}")
    if key in ("trials", "workers") and parsed < 1:
        raise CLIError(f"'{key}' must be positive, got {parsed}")
    if key == "seed" and parsed < 0:
        raise CLIError(f"seed must be non-negative, got {parsed}")
    return parsed


class ConfigCommand(ResourceCommand):
    name = "config"
    help_text = "Show or change settings"
    description = "Layered settings: CLI flags > project config > user config > package defaults."

    actions = {
        "show": {"help": "Show current configuration", "add_args": _add_show_args},
        "set": {"help": "Set a configuration value", "add_args": _add_set_args},
    }

    examples = {
        "show": "omnileib config show --resolved",
        "set": "omnileib config set max_degree 4 --project",
    }

    def handle_show(self, args: argparse.Namespace, remaining: list[str]) -> int:
        config_loader = ConfigLoader()

        print("omnileib configuration")
        print("=" * 50)

        print("\nConfiguration Files:")
        user_exists = "✓" if config_loader.has_user_config else "✗"
        project_exists = "✓" if config_loader.has_project_config else "✗"
        print(f"  {user_exists} User:    {config_loader.user_config_path}")
        print(f"  {project_exists} Project: {config_loader.project_config_path}")

        if args.resolved:
            print("\nResolved Configuration (all layers merged):")
            for key, value in config_loader.resolve_with_overrides().items():
                print(f"  {key}: {value}")
        else:
            if config_loader._user_config:
                print("\nUser Config:")
                for key, value in config_loader._user_config.items():
                    print(f"  {key}: {value}")
            if config_loader._project_config:
                print("\nProject Config:")
                for key, value in config_loader._project_config.items():
                    print(f"  {key}: {value}")
            if not config_loader._user_config and not config_loader._project_config:
                print("\nNo configuration files found.")
                print("Run 'omnileib config set <key> <value>' to create one.")

        print("\nAlgebra Directories (search order):")
        for d in Config.get_algebras_dirs():
            exists = "✓" if d.exists() else "✗"
            print(f"  {exists} {d}")
        return EXIT_OK

    def handle_set(self, args: argparse.Namespace, remaining: list[str]) -> int:
        value = parse_setting(args.key, args.value)
        config_loader = ConfigLoader()
        target = "project" if args.project else "user"

        if args.project:
            existing = config_loader._project_config.copy()
            config_path = config_loader.project_config_path
        else:
            existing = config_loader._user_config.copy()
            config_path = config_loader.user_config_path

        existing[args.key] = value

        if args.project:
            config_loader.save_project_config(existing)
        else:
            config_loader.save_user_config(existing)

        print(f"Set {args.key} = {value} in {target} config")
        print(f"   Saved to: {config_path}")
        return EXIT_OK


_config_command = ConfigCommand()


def add_config_parser(subparsers):
    return _config_command.setup_parser(subparsers)


def handle_config_commands(args, remaining) -> int:
    return _config_command.handle(args, remaining)
