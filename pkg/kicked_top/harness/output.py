import json
from pathlib import Path
from typing import Any, Dict, Tuple

import pandas as pd

from .. import __version__
from ..config import ExperimentConfig
from ..exceptions import OutputError
from ..utils.file_utils import ensure_directory, run_stem
from ..utils.logging_utils import get_logger

logger = get_logger(__name__)

SCHEMA_VERSION = 1
FLOAT_FORMAT = '%.17g'


def save_table(table: pd.DataFrame, path: Path) -> Path:
    """Write a table as UTF-8 CSV with LF line ends and 17 significant digits"""
    try:
        table.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator='\n', encoding='utf-8')
    except OSError as e:
        raise OutputError(f"Cannot write {path}: {e}")
    return path


def save_json(document: Dict[str, Any], path: Path) -> Path:
    try:
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            json.dump(document, f, indent=2, sort_keys=True)
            f.write('\n')
    except OSError as e:
        raise OutputError(f"Cannot write {path}: {e}")
    return path


def write_run(config: ExperimentConfig, table: pd.DataFrame) -> Tuple[Path, Path]:
    """
    Write the CSV of one run and its JSON sidecar into ``config.output_dir``.

    Returns:
        (csv path, sidecar path)
    """
    output_dir = ensure_directory(config.output_dir)
    stem = run_stem(config.mode.value, config.two_j, config.k)
    csv_path = save_table(table, output_dir / f"{stem}.csv")
    sidecar = {
        'schema_version': SCHEMA_VERSION,
        'version': __version__,
        'columns': list(table.columns),
        'rows': len(table),
        'config': config.to_dict(),
    }
    json_path = save_json(sidecar, output_dir / f"{stem}.json")
    logger.info(f"Results saved to {csv_path}")
    return csv_path, json_path
