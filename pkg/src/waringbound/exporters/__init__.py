"""Exporters for certified bounds and reports."""

from .base import BaseExporter
from .csv_exporter import CSVExporter
from .json_exporter import JSONExporter, JSONLinesExporter, record_to_dict

__all__ = [
    "BaseExporter",
    "CSVExporter",
    "JSONExporter",
    "JSONLinesExporter",
    "record_to_dict",
]
