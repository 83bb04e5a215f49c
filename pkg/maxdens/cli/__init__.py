import logging

from .dec import COMMANDS, command
from .parser import build_parser
from . import commands

__all__ = ["main", "build_parser", "command", "COMMANDS"]


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level),
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    return COMMANDS[args.command](args)
