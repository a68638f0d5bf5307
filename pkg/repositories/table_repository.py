import csv
from pathlib import Path
from typing import Iterable, Optional, Sequence, Type

from pydantic import BaseModel

from utils.context_managers import AtomicFileWriter


class TableRepository:
    """Persists CSV tables and plot files under the output folder."""

    def __init__(self, output_folder: Path):
        self.output_folder = Path(output_folder)

    def default_path(self, command: str, selector: Optional[str] = None) -> Path:
        stem = f"{command}_{selector}" if selector else command
        return self.output_folder / f"{stem}.csv"

    def write_rows(self, path: Path, rows: Sequence[BaseModel], model: Type[BaseModel]) -> Path:
        """Writes pydantic rows as CSV; field aliases become column names."""
        header = [field.alias or name for name, field in model.model_fields.items()]
        dumped = [row.model_dump(by_alias=True) for row in rows]
        with AtomicFileWriter(path) as file:
            writer = csv.DictWriter(file, fieldnames=list(header), lineterminator="\n")
            writer.writeheader()
            writer.writerows(dumped)
        return Path(path)

    def write_plot(self, path: Path, points: Iterable[tuple[object, object]]) -> Path:
        """Whitespace separated two-column data."""
        with AtomicFileWriter(path) as file:
            for x, y in points:
                file.write(f"{x} {y}\n")
        return Path(path)

    def read_rows(self, path: Path) -> list[dict]:
        with open(path, newline="", encoding="utf-8") as file:
            return list(csv.DictReader(file))
