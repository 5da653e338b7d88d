"""Retail chain failure statistics: descriptive tables, logistic screens,
a Firth-penalized failure model and failure-probability tables."""

from ._core import (
    PUBLISHED_FINAL_COEFFICIENTS,
    Dataset,
    RetailfailError,
    column_names,
    correlation_matrix,
    describe,
    embedded_dataset,
    fit_final_model,
    fit_firth,
    fit_logistic,
    load_dataset,
    parse_dataset,
    probability_table,
    run_command,
    run_screen,
    shapiro_wilk,
)

__all__ = [
    "PUBLISHED_FINAL_COEFFICIENTS",
    "Dataset",
    "RetailfailError",
    "column_names",
    "correlation_matrix",
    "describe",
    "embedded_dataset",
    "fit_final_model",
    "fit_firth",
    "fit_logistic",
    "load_dataset",
    "parse_dataset",
    "probability_table",
    "run_command",
    "run_screen",
    "shapiro_wilk",
]
