"""Base exporter class with shared functionality."""

import sys
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Optional, Sequence, TextIO

from pydantic import BaseModel

from ..core.exceptions import ExportError
from ..utils.logging import get_logger


class BaseExporter(ABC):
    """
    Abstract base class for all exporters.

    Records are pydantic models (bounds, patterns, finite-ring and lemma reports).
    Subclasses only turn them into text; writing to a file or stream, directory creation,
    error wrapping and logging live here. Rendering never includes timestamps or other
    run-dependent data, so equal inputs give byte-identical output.
    """

    def __init__(self) -> None:
        self.logger = get_logger(self.__class__.__name__)

    def export(
        self,
        records: Sequence[BaseModel],
        filename: Optional[str] = None,
        stream: Optional[TextIO] = None,
    ) -> None:
        """
        Render ``records`` and write them to ``filename``, or to ``stream`` (default stdout).

        Args:
            records: Records to export
            filename: Output file path
            stream: Output stream when no filename is given

        Raises:
            ExportError: If export fails
        """
        try:
            text = self.render(records)
            if filename is None:
                # Stream output (stdout by default)
                (stream if stream is not None else sys.stdout).write(text)
                return

            self.logger.info(
                f"Exporting {len(records)} records to {filename} ({self.__class__.__name__})"
            )
            # Create parent directories as needed
            path = Path(filename)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
            self.logger.info(f"Successfully exported {len(records)} records to {filename}")

        except ExportError:
            raise
        except Exception as e:
            raise ExportError(f"Failed to export with {self.__class__.__name__}: {e}") from e

    def render(self, records: Sequence[BaseModel]) -> str:
        """
        Render records to text.

        Raises:
            ExportError: If the records are not exportable
        """
        self._validate_records(records)
        return self._do_render(list(records))

    @abstractmethod
    def _do_render(self, records: Sequence[BaseModel]) -> str:
        """Format-specific rendering; ``records`` is already validated."""

    def _validate_records(self, records: Sequence[BaseModel]) -> None:
        if records is None:
            raise ExportError("Cannot export: records is None")
        if not records:
            raise ExportError("Cannot export: no records given")
        for record in records:
            if not isinstance(record, BaseModel):
                raise ExportError(f"Invalid record type: {type(record).__name__}")
