import os
from pathlib import Path
from typing import Union

from ..exceptions import OutputError


def ensure_directory(path: Union[str, Path]) -> Path:
    """
    Ensure a directory exists, creating it if necessary.

    Args:
        path: Directory path to ensure

    Returns:
        Path object of the ensured directory

    Raises:
        OutputError: if the directory cannot be created or written to
    """
    path = Path(path)
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise OutputError(f"Cannot create output directory {path}: {e}")
    if not os.access(path, os.W_OK):
        raise OutputError(f"Output directory is not writable: {path}")
    return path


def run_stem(mode: str, two_j: int, k: float) -> str:
    """Deterministic file stem for one grid point, e.g. ``compare_2j10_k3``."""
    k_text = format(k, '.17g').replace('-', 'm').replace('.', 'p')
    return f"{mode}_2j{two_j}_k{k_text}"
