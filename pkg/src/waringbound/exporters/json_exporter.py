"""JSON exporter for certified bounds and reports."""

import json
from typing import Any, Dict, Sequence

from pydantic import BaseModel

from .base import BaseExporter


def record_to_dict(record: BaseModel) -> Dict[str, Any]:
    """A record's JSON document; models with ``to_json_dict`` choose their own shape."""
    to_json = getattr(record, "to_json_dict", None)
    if callable(to_json):
        return to_json()
    return record.model_dump(mode="json")


class JSONExporter(BaseExporter):
    """
    Export records as JSON.

    A single record is written as one object, several as an array. Keys keep the model's
    field order.
    """

    def __init__(self, pretty: bool = True) -> None:
        super().__init__()
        self.pretty = pretty

    def _do_render(self, records: Sequence[BaseModel]) -> str:
        documents = [record_to_dict(r) for r in records]
        data: Any = documents[0] if len(documents) == 1 else documents
        return json.dumps(data, indent=2 if self.pretty else None, ensure_ascii=False) + "\n"


class JSONLinesExporter(BaseExporter):
    """Export records as JSON Lines."""

    def _do_render(self, records: Sequence[BaseModel]) -> str:
        return "".join(
            json.dumps(record_to_dict(r), ensure_ascii=False) + "\n" for r in records
        )
