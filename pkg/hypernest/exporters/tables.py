import csv
import io
from typing import Any, Iterable, List, Sequence

from hypernest.core.matrices import IncidenceMatrix, SplitIncidence

SOURCE_PREFIX = 's:'
TARGET_PREFIX = 't:'


def _write_rows(header: Sequence[Any], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def to_csv(matrix: IncidenceMatrix) -> str:
    """One row per matrix row; the leading cell is the row label, cells are integers."""
    rows: List[List[Any]] = [[label, *(int(value) for value in matrix.entries[index])]
                             for index, label in enumerate(matrix.rows)]
    return _write_rows([matrix.row_header, *matrix.cols], rows)


def split_to_csv(split: SplitIncidence) -> str:
    """Source incidence columns ``s:<id>`` followed by target incidence columns ``t:<id>``."""
    source, target = split.source, split.target
    header = [source.row_header,
              *(f'{SOURCE_PREFIX}{label}' for label in source.cols),
              *(f'{TARGET_PREFIX}{label}' for label in target.cols)]
    rows: List[List[Any]] = [[label,
                              *(int(value) for value in source.entries[index]),
                              *(int(value) for value in target.entries[index])]
                             for index, label in enumerate(source.rows)]
    return _write_rows(header, rows)
