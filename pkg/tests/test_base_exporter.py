"""Unit tests for the base exporter."""

import io
from typing import Sequence

import pytest
from pydantic import BaseModel

from waringbound.core.exceptions import ExportError
from waringbound.core.models import BoundMethod, CertifiedBound
from waringbound.exporters.base import BaseExporter


class LineExporter(BaseExporter):
    """Minimal concrete exporter: one lower bound per line."""

    def _do_render(self, records: Sequence[BaseModel]) -> str:
        return "".join(f"{r.lower_bound}\n" for r in records)


class FailingExporter(BaseExporter):
    def _do_render(self, records: Sequence[BaseModel]) -> str:
        raise RuntimeError("renderer broke")


@pytest.fixture
def bounds():
    return [
        CertifiedBound(lower_bound=4, method=BoundMethod.COUNTING),
        CertifiedBound(lower_bound=1, method=BoundMethod.RANK_COMPLETION, witness=["11"]),
    ]


class TestBaseExporter:
    """Test suite for BaseExporter."""

    def test_cannot_instantiate_abstract(self):
        with pytest.raises(TypeError):
            BaseExporter()

    def test_logger_named_after_class(self):
        assert LineExporter().logger.name == "waringbound.LineExporter"

    def test_export_to_stream(self, bounds):
        stream = io.StringIO()
        LineExporter().export(bounds, stream=stream)
        assert stream.getvalue() == "4\n1\n"

    def test_export_to_stdout(self, bounds, capsys):
        LineExporter().export(bounds)
        assert capsys.readouterr().out == "4\n1\n"

    def test_export_creates_parent_directory(self, bounds, tmp_path):
        target = tmp_path / "nested" / "dir" / "bounds.txt"
        LineExporter().export(bounds, filename=str(target))
        assert target.read_text(encoding="utf-8") == "4\n1\n"

    @pytest.mark.parametrize("records", [None, []])
    def test_nothing_to_export(self, records):
        with pytest.raises(ExportError):
            LineExporter().export(records, stream=io.StringIO())

    def test_non_model_record(self):
        with pytest.raises(ExportError, match="Invalid record type: dict"):
            LineExporter().render([{"lower_bound": 1}])

    def test_renderer_errors_are_wrapped(self, bounds):
        with pytest.raises(ExportError, match="FailingExporter: renderer broke"):
            FailingExporter().export(bounds, stream=io.StringIO())

    def test_unwritable_path(self, bounds, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("")
        with pytest.raises(ExportError):
            LineExporter().export(bounds, filename=str(blocker / "out.txt"))
