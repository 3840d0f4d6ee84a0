"""CSV exporter for sweep and verification summaries."""

from typing import List, Optional, Sequence

import pandas as pd
from pydantic import BaseModel

from ..core.exceptions import ExportError
from .base import BaseExporter


class CSVExporter(BaseExporter):
    """
    Export records as CSV via pandas.

    Each record supplies its row through ``csv_row()``; the header is the key order of the
    first row unless ``columns`` is given.
    """

    def __init__(self, columns: Optional[List[str]] = None) -> None:
        super().__init__()
        self.columns = columns

    def to_frame(self, records: Sequence[BaseModel]) -> pd.DataFrame:
        """The table that :meth:`render` writes."""
        self._validate_records(records)
        rows = []
        for record in records:
            csv_row = getattr(record, "csv_row", None)
            if not callable(csv_row):
                raise ExportError(f"{type(record).__name__} has no CSV row form")
            rows.append(csv_row())
        columns = self.columns or list(rows[0])
        return pd.DataFrame(rows, columns=columns)

    def _do_render(self, records: Sequence[BaseModel]) -> str:
        return self.to_frame(records).to_csv(index=False, lineterminator="\n")
