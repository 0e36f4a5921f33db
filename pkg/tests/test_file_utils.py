"""Tests for file utility functions."""

import tempfile
from pathlib import Path
from unittest.mock import patch

import pytest

from nfoldkit.utils.file_utils import (
    FileReadError,
    detect_file_encoding,
    load_json_file,
    read_text_file_safe,
    validate_file_path,
)


@pytest.fixture
def temp_dir():
    """Create a temporary directory."""
    with tempfile.TemporaryDirectory() as directory:
        yield Path(directory)


def test_detect_file_encoding(temp_dir):
    """Test file encoding detection."""
    path = temp_dir / "plain.json"
    path.write_text('{"matrix": [[1]]}', encoding="utf-8")
    assert detect_file_encoding(path) == "utf-8"


def test_detect_file_encoding_rejects_latin1(temp_dir):
    """Test that bytes which are not UTF-8 are refused."""
    path = temp_dir / "latin.json"
    path.write_bytes("café".encode("latin-1"))
    with pytest.raises(FileReadError, match="not valid UTF-8 at byte 3"):
        detect_file_encoding(path)
    with pytest.raises(FileReadError, match="not valid UTF-8"):
        read_text_file_safe(path)
    with pytest.raises(FileReadError, match="not valid UTF-8"):
        load_json_file(path)


def test_detect_file_encoding_split_sample(temp_dir):
    """Test that a sample ending inside a multi-byte character is accepted."""
    path = temp_dir / "accent.json"
    path.write_bytes('"é"'.encode())
    assert detect_file_encoding(path, sample_bytes=2) == "utf-8"
    assert load_json_file(path) == "é"


def test_detect_file_encoding_bom(temp_dir):
    """Test that a byte-order mark is recognised."""
    path = temp_dir / "bom.json"
    path.write_bytes(b"\xef\xbb\xbf[1, 2]")
    assert detect_file_encoding(path) == "utf-8-sig"


def test_detect_file_encoding_nonexistent():
    """Test encoding detection with non-existent file."""
    with pytest.raises(FileReadError, match="file not found"):
        detect_file_encoding(Path("non_existent_file.json"))


def test_detect_file_encoding_directory(temp_dir):
    """Test encoding detection with directory instead of file."""
    with pytest.raises(FileReadError, match="path is not a file"):
        detect_file_encoding(temp_dir)


def test_read_text_file_safe(temp_dir):
    """Test safe text file reading."""
    path = temp_dir / "vectors.json"
    path.write_text('{"vectors": [[1], [-1]]}\n', encoding="utf-8")
    assert read_text_file_safe(path) == '{"vectors": [[1], [-1]]}\n'


def test_read_text_file_safe_with_encoding(temp_dir):
    """Test safe text file reading with an explicit encoding."""
    path = temp_dir / "bom.txt"
    path.write_bytes(b"\xef\xbb\xbf" + "café".encode())
    assert read_text_file_safe(path, encoding="utf-8-sig") == "café"
    assert read_text_file_safe(path) == "café"


def test_read_text_file_safe_wrong_encoding(temp_dir):
    """Test that a decode failure becomes a FileReadError."""
    path = temp_dir / "latin.txt"
    path.write_bytes("café".encode("latin-1"))
    with pytest.raises(FileReadError, match="utf-8"):
        read_text_file_safe(path, encoding="utf-8")


def test_validate_file_path(temp_dir):
    """Test file path validation."""
    path = temp_dir / "instance.json"
    path.write_text("{}")

    assert validate_file_path(path, must_exist=True)
    assert validate_file_path(temp_dir / "new.json", must_exist=False)


def test_validate_file_path_nonexistent():
    """Test validation of non-existent files when existence is required."""
    assert not validate_file_path(Path("definitely_does_not_exist.json"), must_exist=True)


def test_validate_file_path_directory(temp_dir):
    """Test validation when path is a directory."""
    assert not validate_file_path(temp_dir, must_exist=True)


def test_load_json_file(temp_dir):
    """Test JSON parsing."""
    path = temp_dir / "matrix.json"
    path.write_text('{"matrix": [[1, 0], [0, 1]]}')
    assert load_json_file(path) == {"matrix": [[1, 0], [0, 1]]}


def test_load_json_file_syntax_error(temp_dir):
    """Test that syntax errors carry line and column."""
    path = temp_dir / "broken.json"
    path.write_text('{\n  "matrix": [[1, 0],\n}')

    with pytest.raises(FileReadError) as excinfo:
        load_json_file(path)
    assert excinfo.value.line == 3
    assert excinfo.value.column is not None
    assert str(excinfo.value).startswith(f"{path}:3:")


def test_load_json_file_missing(temp_dir):
    """Test that a missing file is reported with its path."""
    with pytest.raises(FileReadError, match="not a readable file"):
        load_json_file(temp_dir / "missing.json")


def test_file_utils_error_handling(temp_dir):
    """Test that OS errors while reading become FileReadError."""
    path = temp_dir / "locked.json"
    path.write_text("{}")
    with patch("pathlib.Path.read_text", side_effect=PermissionError("Access denied")):
        with pytest.raises(FileReadError, match="Access denied"):
            read_text_file_safe(path, encoding="utf-8")
