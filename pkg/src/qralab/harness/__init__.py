from .csv_io import CSV_COLUMNS, emit_csv, format_csv, parse_csv, read_csv
from .models import ExperimentSpec, ProtocolName, ResultRecord, build_spec
from .presets import EXPERIMENT_GRID, GridRow, Scale, preset
from .report import (
    ComparisonRow,
    SignificanceReport,
    final_mse_per_seed,
    final_records,
    significance_report,
    summarize,
)
from .runner import Cell, experiment_cells, run_experiment
from .seeds import DEFAULT_MASTER_SEED, STREAM_LABELS, SeedScheme, label_hash
from .spec_file import format_spec, load_spec_file, parse_spec_text
from .validation import CheckResult, validate

__all__ = [
    "CSV_COLUMNS",
    "DEFAULT_MASTER_SEED",
    "EXPERIMENT_GRID",
    "STREAM_LABELS",
    "Cell",
    "CheckResult",
    "ComparisonRow",
    "ExperimentSpec",
    "GridRow",
    "ProtocolName",
    "ResultRecord",
    "Scale",
    "SeedScheme",
    "SignificanceReport",
    "build_spec",
    "emit_csv",
    "experiment_cells",
    "final_mse_per_seed",
    "final_records",
    "format_csv",
    "format_spec",
    "label_hash",
    "load_spec_file",
    "parse_csv",
    "parse_spec_text",
    "preset",
    "read_csv",
    "run_experiment",
    "significance_report",
    "summarize",
    "validate",
]
