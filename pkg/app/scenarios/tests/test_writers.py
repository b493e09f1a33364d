import math
import tempfile
from pathlib import Path

from django.test import SimpleTestCase

from scenarios.analyses import ResultTable, ScenarioResult
from scenarios.writers import format_cell, write_csv, write_result


class FormatCellTests(SimpleTestCase):
    """Test the textual form of CSV cells"""

    def test_cells(self):
        """Test numbers, flags, gaps and non-finite values"""
        self.assertEqual(format_cell(0.1), "0.10000000000000001")
        self.assertEqual(format_cell(3.0), "3")
        self.assertEqual(format_cell(7), "7")
        self.assertEqual(format_cell(True), "true")
        self.assertEqual(format_cell(None), "")
        self.assertEqual(format_cell(math.nan), "nan")
        self.assertEqual(format_cell(-math.inf), "-inf")
        self.assertEqual(format_cell("loss"), "loss")


class WriterTests(SimpleTestCase):
    """Test the files written for one scenario"""

    def test_csv_line_endings(self):
        """Test header first and LF endings"""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "table.csv"
            write_csv(path, ("t", "x"), [(1.0, 2.5), (2.0, None)])
            self.assertEqual(path.read_bytes(), b"t,x\n1,2.5\n2,\n")

    def test_result_files(self):
        """Test one CSV per table, the summary and the effective configuration"""
        result = ScenarioResult(
            name="demo",
            tables=[ResultTable.build("regimes", ("alpha0", "regime"), [(2.0, "x")])],
            notes=["regimes: x"],
            warnings=["w", "w"],
        )
        with tempfile.TemporaryDirectory() as tmp:
            directory = write_result(result, Path(tmp) / "out", {"name": "demo"})

            self.assertEqual(
                sorted(path.name for path in directory.iterdir()),
                ["effective_config.yaml", "regimes.csv", "summary.txt"],
            )
            summary = (directory / "summary.txt").read_text()
            self.assertIn("status: ok", summary)
            self.assertEqual(summary.count("  - w"), 1)
