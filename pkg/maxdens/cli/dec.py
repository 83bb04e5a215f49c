"""
Subcommands are plain functions taking the parsed arguments:

@command("coverage")
def cmd_coverage(args) -> int:
    ...
    return 0

The decorator registers the function and turns every failure into a JSON error line on stderr plus
the exit code carried by the exception.
"""
import json
import logging
import sys
from functools import wraps
from typing import Callable

from pydantic import ValidationError

from maxdens.core.defaults import DEFAULT_MESSAGE_ERROR
from maxdens.core.exceptions import MaxDensError
from maxdens.core.response import create_json_from_maxdens_error, create_json_from_validation_error

__all__ = ['command', 'COMMANDS', 'emit_error']

COMMANDS: dict[str, Callable] = {}

VALIDATION_EXIT_CODE = 1
UNEXPECTED_EXIT_CODE = 1


def emit_error(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, default=str), file=sys.stderr)


def command(name: str) -> Callable:
    """
    :param name: The subcommand name used on the command line and in run manifests
    :return: A decorator registering the function and translating its errors to exit codes
    """

    def decorator(command_func):
        @wraps(command_func)
        def _wrapped_command(args) -> int:
            try:
                return command_func(args) or 0
            except ValidationError as exception:
                logging.debug("Invalid parameters for %s", name, exc_info=True)
                emit_error(create_json_from_validation_error(exception))
                return VALIDATION_EXIT_CODE
            except MaxDensError as exception:
                logging.debug("%s failed", name, exc_info=True)
                emit_error(create_json_from_maxdens_error(exception))
                return exception.exit_code
            except Exception as exception:
                logging.exception(exception)
                emit_error(DEFAULT_MESSAGE_ERROR)
                return UNEXPECTED_EXIT_CODE

        _wrapped_command.command_name = name
        COMMANDS[name] = _wrapped_command
        return _wrapped_command

    return decorator
