"""Logging setup.

Library modules log through ``logging.getLogger(__name__)``; the CLI installs a
rich handler on stderr so that JSON written to stdout stays clean.
"""

from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

_configured = False


def configure_logging(verbose: bool = False) -> None:
    """Install a RichHandler on the ``mysticum`` logger (idempotent)."""
    global _configured
    logger = logging.getLogger("mysticum")
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    if _configured:
        return
    handler = RichHandler(
        console=Console(stderr=True),
        show_path=False,
        rich_tracebacks=False,
    )
    handler.setFormatter(logging.Formatter("%(message)s", datefmt="[%X]"))
    logger.addHandler(handler)
    logger.propagate = False
    _configured = True
