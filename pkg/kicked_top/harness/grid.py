from concurrent.futures import ProcessPoolExecutor
from concurrent.futures import as_completed
from pathlib import Path
from typing import List, Tuple

from tqdm import tqdm

from ..config import ExperimentConfig
from ..exceptions import GridFailure
from ..utils.file_utils import run_stem
from ..utils.logging_utils import get_logger
from .experiments import run_experiment
from .output import write_run

logger = get_logger(__name__)


def run_and_write(config: ExperimentConfig) -> Tuple[Path, Path]:
    """Compute one grid point and write its files"""
    return write_run(config, run_experiment(config))


def run_grid(configs: List[ExperimentConfig], workers: int = 1) -> List[Tuple[Path, Path]]:
    """
    Run every grid point, up to ``workers`` at a time.

    Each point writes only its own files, so results do not depend on the
    worker count. Output paths are returned in grid order.

    Raises:
        GridFailure: after all points finished, if any of them failed
    """
    results = {}
    failures = []
    with ProcessPoolExecutor(max_workers=workers) as executor, tqdm(
        total=len(configs),
        desc="Grid points",
        bar_format="{desc}: {n}/{total} runs"
    ) as pbar:
        futures = {executor.submit(run_and_write, config): index for index, config in enumerate(configs)}

        for future in as_completed(futures):
            index = futures[future]
            config = configs[index]
            try:
                results[index] = future.result()
            except Exception as e:
                stem = run_stem(config.mode.value, config.two_j, config.k)
                logger.error(f"Run {stem} failed: {e}")
                failures.append((stem, str(e)))
            finally:
                pbar.update(1)

    if failures:
        raise GridFailure(sorted(failures))
    return [results[index] for index in range(len(configs))]
