import os
import tempfile
from pathlib import Path

import pandas as pd
from loguru import logger

from trendcast.constants.defaults import CSV_FLOAT_FORMAT


class FileUtils:
    @staticmethod
    def write_atomic(path: Path, text: str) -> Path:
        """Write ``text`` to ``path`` through a sibling temp file and ``os.replace``.

        Readers never observe a partially written file.
        """
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
                handle.write(text)
            os.replace(tmp_name, path)
        except BaseException:
            Path(tmp_name).unlink(missing_ok=True)
            raise

        logger.bind(name=__name__).info(f"Wrote {path}")
        return path

    @staticmethod
    def frame_to_csv(frame: pd.DataFrame) -> str:
        """Render a result table as UTF-8 CSV text with LF endings and 17 significant digits."""
        return frame.to_csv(index=False, lineterminator="\n", float_format=CSV_FLOAT_FORMAT)
