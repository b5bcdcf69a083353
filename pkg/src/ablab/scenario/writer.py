"""
CSV output of field grids and fringe patterns.

Numbers are written in their shortest round-trip form with LF line
endings, so repeated runs produce byte-identical files.
"""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Iterable, Sequence, Union

from ..interference.pattern import InterferencePattern
from ..sources.flux import FieldSample

logger = logging.getLogger(__name__)

FIELD_COLUMNS = ("x", "y", "z", "Ax", "Ay", "Az", "Bx", "By", "Bz")
FRINGE_COLUMNS = ("screen_x", "intensity_ref", "intensity_shifted")
FIELD_UNITS = "# units: lengths in loop radii, A and B in natural Gaussian units (c = 1)"
FRINGE_UNITS = "# units: screen_x in screen length units, intensities for unit-amplitude subbeams"


def format_number(value: float) -> str:
    return repr(float(value))


def _rows(rows: Iterable[Sequence[float]]) -> list[str]:
    return [",".join(format_number(v) for v in row) for row in rows]


def field_grid_csv(samples: Sequence[FieldSample]) -> str:
    rows = (
        (*s.point, *s.vector_potential, *s.magnetic_field)
        for s in samples
    )
    return "\n".join([FIELD_UNITS, ",".join(FIELD_COLUMNS), *_rows(rows)]) + "\n"


def fringe_csv(reference: InterferencePattern, shifted: InterferencePattern, shift_fraction: float) -> str:
    rows = zip(reference.screen_positions, reference.intensities, shifted.intensities)
    lines = [FRINGE_UNITS, ",".join(FRINGE_COLUMNS), *_rows(rows), f"# shift_fraction={format_number(shift_fraction)}"]
    return "\n".join(lines) + "\n"


class CsvWriter:
    """Writes CSV text to validated output paths."""

    @staticmethod
    def validate_output_path(output_file: Union[str, Path]) -> Path:
        """
        Resolve ``output_file`` and check that it can be written.

        Raises:
            ValueError: the parent directory does not exist.
            PermissionError: the file or its directory is not writable.
        """
        if not isinstance(output_file, (str, Path)):
            raise TypeError(f"output_file must be str or Path, got {type(output_file).__name__}")
        path = Path(output_file).resolve()
        parent = path.parent
        if not parent.exists():
            raise ValueError(f"Parent directory does not exist: {parent}")
        target = path if path.exists() else parent
        if not os.access(target, os.W_OK):
            raise PermissionError(f"No write permission for {target}")
        return path

    @classmethod
    def write_text(cls, text: str, output_file: Union[str, Path]) -> Path:
        path = cls.validate_output_path(output_file)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        logger.debug("wrote %d bytes to %s", len(text.encode("utf-8")), path)
        return path

    @classmethod
    def write_field_grid(cls, samples: Sequence[FieldSample], output_file: Union[str, Path]) -> Path:
        return cls.write_text(field_grid_csv(samples), output_file)

    @classmethod
    def write_fringes(
        cls,
        reference: InterferencePattern,
        shifted: InterferencePattern,
        shift_fraction: float,
        output_file: Union[str, Path],
    ) -> Path:
        return cls.write_text(fringe_csv(reference, shifted, shift_fraction), output_file)
