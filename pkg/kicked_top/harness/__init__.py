"""Experiment orchestration, validation suites and result writers."""

from .experiments import (
    COLUMNS,
    matrix_trajectory,
    moment_trajectory,
    point_trajectory,
    oracle_deviation,
    run_experiment,
    semiclassical_sweep
)
from .output import (
    SCHEMA_VERSION,
    save_table,
    save_json,
    write_run
)
from .grid import (
    run_and_write,
    run_grid
)
from .validation import (
    SuiteResult,
    SuiteSizes,
    select_kq_variant,
    run_validation,
    report_table,
    report_document
)

__all__ = [
    'COLUMNS',
    'matrix_trajectory',
    'moment_trajectory',
    'point_trajectory',
    'oracle_deviation',
    'run_experiment',
    'semiclassical_sweep',
    'SCHEMA_VERSION',
    'save_table',
    'save_json',
    'write_run',
    'run_and_write',
    'run_grid',
    'SuiteResult',
    'SuiteSizes',
    'select_kq_variant',
    'run_validation',
    'report_table',
    'report_document'
]
