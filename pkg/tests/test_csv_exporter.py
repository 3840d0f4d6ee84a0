"""Unit tests for CSV exporter."""

import pytest

from waringbound.core.exceptions import ExportError
from waringbound.core.models import (
    BoundMethod,
    CertifiedBound,
    LemmaCounterexample,
    PatternMatrix,
)
from waringbound.exporters.csv_exporter import CSVExporter
from waringbound.rings.finite_rings import CSV_COLUMNS, waring_profile


class TestCSVExporter:
    """Test suite for CSVExporter."""

    def test_finite_ring_rows(self):
        text = CSVExporter().render([waring_profile(16, 4)])
        assert text == "q,k,|powers|,|subring|,v_value\n16,4,2,16,8\n"

    def test_header_from_first_row(self):
        bounds = [
            CertifiedBound(lower_bound=1, method=BoundMethod.EXACT_SEARCH, witness=["110"]),
            CertifiedBound(lower_bound=2, method=BoundMethod.RANK_COMPLETION, witness=["1-01"]),
        ]
        text = CSVExporter().render(bounds)
        assert text == "lower_bound,method,witness\n1,exact_search,110\n2,rank_completion,1-01\n"

    def test_explicit_columns(self):
        reports = [waring_profile(q, 2) for q in (3, 5)]
        frame = CSVExporter(columns=["q", "v_value"]).to_frame(reports)
        assert list(frame.columns) == ["q", "v_value"]
        assert frame["v_value"].tolist() == [1, 2]

    def test_column_order_matches_frame_helper(self):
        frame = CSVExporter().to_frame([waring_profile(7, 3)])
        assert list(frame.columns) == CSV_COLUMNS

    def test_pattern_document(self):
        document = PatternMatrix.from_pairs(4, [(1, 2), (3, 4)]).to_document()
        assert CSVExporter().render([document]) == "m,weight,bits\n4,2,1-2 3-4\n"

    def test_record_without_row_form(self):
        record = LemmaCounterexample(
            trial=0, n=2, num_vars=2, polynomial="x1", check="closed_form", expected="1", actual="0"
        )
        with pytest.raises(ExportError, match="no CSV row form"):
            CSVExporter().render([record])

    def test_export_file(self, tmp_path):
        path = tmp_path / "out" / "rings.csv"
        CSVExporter().export([waring_profile(5, 2)], filename=str(path))
        assert path.read_text(encoding="utf-8").splitlines()[1] == "5,2,3,5,2"
