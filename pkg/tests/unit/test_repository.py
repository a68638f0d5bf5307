from pathlib import Path

import pytest

from dtos.tables import CountRow, OrbitRow
from repositories.table_repository import TableRepository
from utils.context_managers import AtomicFileWriter


def test_default_path(tmp_path):
    repository = TableRepository(output_folder=tmp_path)

    assert repository.default_path("series", "square") == tmp_path / "series_square.csv"
    assert repository.default_path("selftest") == tmp_path / "selftest.csv"


def test_write_rows_uses_field_aliases(tmp_path):
    # Arrange
    repository = TableRepository(output_folder=tmp_path)
    rows = [CountRow(symmetry_class="full", m=4, n=3, count=4), CountRow(symmetry_class="full", m=4, n=4, count=1)]
    path = tmp_path / "nested" / "counts.csv"

    # Act
    written = repository.write_rows(path, rows, CountRow)

    # Assert
    assert written == path
    assert path.read_text(encoding="utf-8") == "class,m,n,count\nfull,4,3,4\nfull,4,4,1\n"
    assert repository.read_rows(path)[0] == {"class": "full", "m": "4", "n": "3", "count": "4"}


def test_empty_table_keeps_its_header(tmp_path):
    repository = TableRepository(output_folder=tmp_path)

    path = repository.write_rows(tmp_path / "orbits.csv", [], OrbitRow)

    assert path.read_text(encoding="utf-8") == "subgroup,m,n,orbit_count\n"


def test_write_plot(tmp_path):
    repository = TableRepository(output_folder=tmp_path)

    path = repository.write_plot(tmp_path / "plot.dat", [(32, "0.4378"), (128, "0.4418")])

    assert path.read_text(encoding="utf-8") == "32 0.4378\n128 0.4418\n"


def test_atomic_writer_replaces_target_on_success(tmp_path):
    # Arrange
    target = tmp_path / "table.csv"
    target.write_text("old\n", encoding="utf-8")

    # Act
    with AtomicFileWriter(target) as file:
        file.write("new\n")

    # Assert
    assert target.read_text(encoding="utf-8") == "new\n"
    assert not Path(str(target) + ".tmp").exists()


def test_atomic_writer_keeps_target_on_error(tmp_path):
    # Arrange
    target = tmp_path / "table.csv"
    target.write_text("old\n", encoding="utf-8")

    # Act
    with pytest.raises(RuntimeError):
        with AtomicFileWriter(target) as file:
            file.write("partial")
            raise RuntimeError("interrupted")

    # Assert
    assert target.read_text(encoding="utf-8") == "old\n"
    assert list(tmp_path.iterdir()) == [target]
