"""Utility functions for file handling and logging."""

from .file_utils import (
    ensure_directory,
    run_stem
)
from .logging_utils import (
    setup_logging,
    get_logger
)

__all__ = [
    'ensure_directory',
    'run_stem',
    'setup_logging',
    'get_logger'
]
