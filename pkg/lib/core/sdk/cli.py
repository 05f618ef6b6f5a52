import argparse
import sys
from abc import ABC, abstractmethod
from typing import Any, Generic, TextIO

from lib.core.sdk.controller import BaseController, TBaseControllerParameters
from lib.core.sdk.feature_descriptor import BaseFeatureDescriptor
from lib.core.sdk.viewmodel import TBaseViewModel


class CLICommand(ABC, Generic[TBaseControllerParameters, TBaseViewModel]):
    """
    A subcommand of the command line, backed by the controller of a feature. The view model is printed as JSON on
    stdout and its code is the exit code of the process.

    @ivar command: The name of the subcommand.
    @type command: str
    """

    def __init__(
        self,
        controller: BaseController[TBaseControllerParameters, Any, Any, Any, TBaseViewModel],
        descriptor: BaseFeatureDescriptor,
        command: str,
    ) -> None:
        self._controller = controller
        self._descriptor = descriptor
        self._command = command

    @property
    def command(self) -> str:
        return self._command

    @property
    def controller(self) -> BaseController[TBaseControllerParameters, Any, Any, Any, TBaseViewModel]:
        return self._controller

    @property
    def descriptor(self) -> BaseFeatureDescriptor:
        return self._descriptor

    def load(self, subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> argparse.ArgumentParser | None:
        if not self.descriptor.enabled:
            return None
        parser = subparsers.add_parser(self.command, help=self.descriptor.description)
        self.register_command(parser)
        parser.set_defaults(handler=self.execute)
        return parser

    @abstractmethod
    def register_command(self, parser: argparse.ArgumentParser) -> None:
        raise NotImplementedError("You must implement the register_command method in your CLI command subclass")

    @abstractmethod
    def create_parameters(self, args: argparse.Namespace) -> TBaseControllerParameters:
        raise NotImplementedError("You must implement the create_parameters method in your CLI command subclass")

    def execute(self, args: argparse.Namespace, stdout: TextIO | None = None) -> int:
        view_model = self.controller.execute(self.create_parameters(args))
        if view_model is None:
            raise RuntimeError(f"Command {self.command} did not receive a view model")
        print(view_model.model_dump_json(indent=2), file=stdout or sys.stdout)
        return view_model.code
