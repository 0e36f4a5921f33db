"""File utilities for encoding detection and JSON input files."""

from __future__ import annotations

import codecs
import json
import logging
from pathlib import Path
from typing import Any

logger = logging.getLogger(__name__)


class FileReadError(Exception):
    """Raised when an input file cannot be read or is not valid JSON."""

    def __init__(self, message: str, path: Path, line: int | None = None, column: int | None = None):
        self.path = path
        self.line = line
        self.column = column
        where = f"{path}:{line}:{column}" if line is not None else str(path)
        super().__init__(f"{where}: {message}")


def detect_file_encoding(file_path: Path, sample_bytes: int = 64 * 1024) -> str:
    """
    Detect the encoding of a text file.

    Args:
        file_path: Path to the file to analyze
        sample_bytes: Number of bytes to read for detection

    Returns:
        The detected encoding string

    Raises:
        FileReadError: If the path is not a regular file or its bytes are not UTF-8
    """
    if not file_path.exists():
        raise FileReadError("file not found", file_path)

    if not file_path.is_file():
        raise FileReadError("path is not a file", file_path)

    with file_path.open("rb") as f:
        raw_data = f.read(sample_bytes)

    # JSON is UTF-8 by definition; a BOM is tolerated
    encoding = "utf-8-sig" if raw_data.startswith(codecs.BOM_UTF8) else "utf-8"
    # a truncated sample may end inside a multi-byte sequence
    final = len(raw_data) < sample_bytes
    try:
        codecs.getincrementaldecoder(encoding)().decode(raw_data, final=final)
    except UnicodeDecodeError as e:
        raise FileReadError(f"not valid UTF-8 at byte {e.start}", file_path) from e
    return encoding


def read_text_file_safe(file_path: Path, encoding: str | None = None) -> str:
    """Read a text file, detecting the encoding when none is given."""
    if encoding is None:
        encoding = detect_file_encoding(file_path)

    try:
        return file_path.read_text(encoding=encoding)
    except (OSError, UnicodeDecodeError) as e:
        raise FileReadError(f"cannot read with encoding {encoding}: {e}", file_path) from e


def validate_file_path(file_path: Path, must_exist: bool = True) -> bool:
    """
    Check that a path names a usable input file.

    Args:
        file_path: Path to validate
        must_exist: Whether the file must exist

    Returns:
        True if the path can be read as an input file
    """
    try:
        resolved_path = file_path.resolve()

        if must_exist:
            if not resolved_path.exists():
                logger.warning(f"File does not exist: {resolved_path}")
                return False

            if not resolved_path.is_file():
                logger.warning(f"Path is not a file: {resolved_path}")
                return False

        return True

    except (OSError, ValueError) as e:
        logger.warning(f"Path validation failed for {file_path}: {e}")
        return False


def load_json_file(file_path: Path) -> Any:
    """Parse a JSON file; syntax errors carry the line and column."""
    if not validate_file_path(file_path):
        raise FileReadError("not a readable file", file_path)

    text = read_text_file_safe(file_path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FileReadError(e.msg, file_path, e.lineno, e.colno) from e
