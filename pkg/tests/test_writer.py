"""
Tests for CSV output: the field-grid and fringe formats, determinism and
output path validation.
"""

import os
from pathlib import Path

import numpy as np
import pytest

from ablab.interference.beams import BeamGeometry
from ablab.interference.pattern import two_beam_pattern
from ablab.scenario.writer import FIELD_COLUMNS, CsvWriter, field_grid_csv, fringe_csv
from ablab.sources.flux import lattice, sample_field_grid

running_as_root = hasattr(os, "geteuid") and os.geteuid() == 0


@pytest.fixture
def samples(unit_loop):
    return sample_field_grid(unit_loop, lattice((3, 3, 3), 1.5))


class TestFieldGridCsv:
    """Tests for the field-grid CSV text."""

    def test_header(self, samples):
        """Test the units comment and the column header."""
        lines = field_grid_csv(samples).splitlines()
        assert lines[0].startswith("# units:")
        assert lines[1] == "x,y,z,Ax,Ay,Az,Bx,By,Bz"
        assert len(lines) == 2 + len(samples)

    def test_rows_round_trip_numbers(self, samples):
        """Test that every number is written in round-trip form."""
        rows = field_grid_csv(samples).splitlines()[2:]
        first = [float(v) for v in rows[0].split(",")]
        assert len(first) == len(FIELD_COLUMNS)
        assert first[:3] == list(samples[0].point)
        assert first[3:6] == list(samples[0].vector_potential)

    def test_ends_with_newline(self, samples):
        """Test LF line endings and a trailing newline."""
        text = field_grid_csv(samples)
        assert text.endswith("\n")
        assert "\r" not in text


class TestFringeCsv:
    def test_layout(self):
        geom = BeamGeometry()
        reference = two_beam_pattern(geom, 0.0)
        shifted = two_beam_pattern(geom, np.pi)
        lines = fringe_csv(reference, shifted, 0.5).splitlines()
        assert lines[1] == "screen_x,intensity_ref,intensity_shifted"
        assert len(lines) == 3 + reference.sample_count
        assert lines[-1] == "# shift_fraction=0.5"


class TestSampleFieldGrid:
    def test_wire_points_are_skipped(self, unit_loop, caplog):
        """Test that lattice nodes on the wire are dropped with a warning."""
        points = lattice((5, 5, 5), 2.0)
        samples = sample_field_grid(unit_loop, points)
        assert len(samples) == len(points) - 4
        assert "near-wire exclusion" in caplog.text

    def test_lattice_order(self):
        """Test that x varies slowest and z fastest."""
        points = lattice((2, 3, 4), 1.0)
        assert points.shape == (24, 3)
        assert points[0] == pytest.approx([-1.0, -1.0, -1.0])
        assert points[1] == pytest.approx([-1.0, -1.0, -1.0 / 3.0])
        assert points[-1] == pytest.approx([1.0, 1.0, 1.0])

    def test_single_node_axis_is_centred(self):
        points = lattice((1, 1, 3), 2.0, center=(0.5, 0.0, 0.0))
        assert points[:, 0] == pytest.approx(np.full(3, 0.5))

    @pytest.mark.parametrize("shape, extent", [((0, 1, 1), 1.0), ((2, 2), 1.0), ((2, 2, 2), 0.0)])
    def test_invalid_lattice(self, shape, extent):
        with pytest.raises(ValueError):
            lattice(shape, extent)


class TestCsvWriter:
    """Tests for writing CSV text to validated paths."""

    def test_write_returns_resolved_path(self, tmp_path, samples):
        """Test writing with a valid string path."""
        output_file = str(tmp_path / "fields.csv")
        result_path = CsvWriter.write_field_grid(samples, output_file)

        assert isinstance(result_path, Path)
        assert result_path.is_absolute()
        assert result_path == Path(output_file).resolve()
        assert result_path.read_text(encoding="utf-8") == field_grid_csv(samples)

    def test_repeated_writes_are_byte_identical(self, tmp_path, unit_loop):
        """Test that two independent runs produce identical bytes."""
        first = CsvWriter.write_field_grid(sample_field_grid(unit_loop, lattice((4, 4, 4), 1.5)), tmp_path / "a.csv")
        second = CsvWriter.write_field_grid(sample_field_grid(unit_loop, lattice((4, 4, 4), 1.5)), tmp_path / "b.csv")
        assert first.read_bytes() == second.read_bytes()

    def test_write_fringes(self, tmp_path):
        geom = BeamGeometry()
        path = CsvWriter.write_fringes(two_beam_pattern(geom, 0.0), two_beam_pattern(geom, 1.0), 0.159, tmp_path / "f.csv")
        assert path.read_text(encoding="utf-8").endswith("# shift_fraction=0.159\n")

    def test_overwrite_existing_file(self, tmp_path):
        """Test overwriting an existing file."""
        output_file = tmp_path / "existing.csv"
        output_file.write_text("old content that is longer than the new one\n")
        CsvWriter.write_text("new\n", output_file)
        assert output_file.read_text() == "new\n"

    def test_relative_path(self, tmp_path, monkeypatch):
        """Test that relative paths resolve against the working directory."""
        monkeypatch.chdir(tmp_path)
        result = CsvWriter.validate_output_path("out.csv")
        assert result.is_absolute()
        assert result.parent == tmp_path.resolve()

    def test_missing_parent_directory(self):
        """Test writing below a non-existent directory."""
        with pytest.raises(ValueError) as exc_info:
            CsvWriter.validate_output_path("/nonexistent/directory/fields.csv")

        assert "Parent directory does not exist" in str(exc_info.value)

    @pytest.mark.parametrize("bad", [123, None])
    def test_invalid_path_type(self, bad):
        """Test writing with an invalid path type."""
        with pytest.raises(TypeError) as exc_info:
            CsvWriter.validate_output_path(bad)

        assert "must be str or Path" in str(exc_info.value)

    @pytest.mark.skipif(os.name == "nt" or running_as_root, reason="Permission bits are not enforced")
    def test_no_permission_new_file(self, tmp_path):
        """Test writing a new file into a read-only directory."""
        readonly_dir = tmp_path / "readonly"
        readonly_dir.mkdir()
        readonly_dir.chmod(0o444)

        try:
            with pytest.raises(PermissionError) as exc_info:
                CsvWriter.write_text("x\n", readonly_dir / "fields.csv")

            assert "No write permission" in str(exc_info.value)
        finally:
            readonly_dir.chmod(0o755)
