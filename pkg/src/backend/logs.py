"""
Logging setup for the command line. Logs go to stderr; stdout carries only
command output.
"""

from __future__ import annotations

import logging
import sys

from pythonjsonlogger.json import JsonFormatter

PLAIN_FORMAT = "%(levelname)s %(name)s: %(message)s"
JSON_FIELDS = "%(asctime)s %(levelname)s %(name)s %(message)s"


def configure_logging(level: str = "WARNING", fmt: str = "plain") -> logging.Handler:
    """
    Install one stderr handler on the root logger, replacing any handler a
    previous call installed, and return it.
    """
    handler = logging.StreamHandler(sys.stderr)
    if fmt == "json":
        handler.setFormatter(JsonFormatter(JSON_FIELDS, rename_fields={"levelname": "level"}))
    else:
        handler.setFormatter(logging.Formatter(PLAIN_FORMAT))
    handler.set_name("pclosed")

    root = logging.getLogger()
    for old in list(root.handlers):
        if old.get_name() == "pclosed":
            root.removeHandler(old)
    root.addHandler(handler)
    root.setLevel(level.upper())
    return handler
