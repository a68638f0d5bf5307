import os
from pathlib import Path
from typing import IO


class AtomicFileWriter:
    """Writes to a sibling temp file and renames it over the target on success."""

    def __init__(self, path: Path, mode: str = "w"):
        self.path = Path(path)
        self.mode = mode
        self.tmp_path = self.path.with_name(self.path.name + ".tmp")
        self.file = None

    def __enter__(self) -> IO:
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            # newline="" keeps csv line endings exactly as written
            self.file = open(self.tmp_path, self.mode, newline="", encoding="utf-8")
            return self.file
        except Exception as e:
            if self.file:
                self.file.close()
            raise e

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.file:
            self.file.close()
        if exc_type is None:
            os.replace(self.tmp_path, self.path)
        elif self.tmp_path.exists():
            self.tmp_path.unlink()
