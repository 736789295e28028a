# kicked_top/utils/logging_utils.py
import logging
from pathlib import Path
from typing import Optional, Union

LOGGER_NAME = 'kicked_top'


def setup_logging(output_dir: Optional[Union[str, Path]] = None,
                  level: int = logging.INFO) -> None:
    """
    Setup logging configuration.

    Args:
        output_dir: Directory receiving ``ktop.log``; console only when None
        level: Logging level
    """
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(level)
    # repeated CLI invocations in one process (tests) must not stack handlers
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    file_formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    console_formatter = logging.Formatter('%(message)s')

    console_handler = logging.StreamHandler()
    console_handler.setLevel(logging.WARNING)
    console_handler.setFormatter(console_formatter)
    logger.addHandler(console_handler)

    if output_dir is not None:
        output_dir = Path(output_dir)
        output_dir.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(str(output_dir / 'ktop.log'))
        file_handler.setLevel(level)
        file_handler.setFormatter(file_formatter)
        logger.addHandler(file_handler)


def get_logger(name: str) -> logging.Logger:
    """Get a logger instance"""
    return logging.getLogger(name)
