import argparse
import importlib
import sys
from pathlib import Path
from typing import Sequence

from pydantic import ValidationError

import lib.infrastructure.cli.commands as commands
from lib.core.sdk.cli import CLICommand
from lib.core.sdk.utils import get_all_modules
from lib.infrastructure.config.containers import ApplicationContainer


def create_parser() -> argparse.ArgumentParser:
    """
    Builds the parser with one subcommand per enabled CLI feature found in the commands package. The
    ApplicationContainer must be instantiated first so that the command modules are wired.
    """
    parser = argparse.ArgumentParser(
        prog="qmbp",
        description="Decay parameter of quadratic Markov branching processes: Hardy index, bounds, "
        "Sturm-Liouville eigenvalue and chain estimates",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    cli_commands = get_all_modules(package=commands, relative_package_dir=Path(__file__).parent / "commands")
    for cli_command in cli_commands:
        module = importlib.import_module(cli_command)
        cli_feature_class = next(
            (
                obj
                for name, obj in module.__dict__.items()
                if isinstance(obj, type) and "CLIFeature" in obj.__name__ and obj != CLICommand
            ),
            None,
        )
        if cli_feature_class is None:
            continue
        cli_feature_class().load(subparsers)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    app_container = ApplicationContainer()
    app_container.init_resources()
    try:
        parser = create_parser()
        args = parser.parse_args(argv)
        try:
            return int(args.handler(args))
        except ValidationError as e:
            parser.error(f"invalid arguments: {e}")
    finally:
        app_container.shutdown_resources()


if __name__ == "__main__":
    sys.exit(main())
