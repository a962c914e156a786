#plugsim\src\core\files.py
"""
UTF-8 text input. Unreadable paths (missing, directories, permissions) and
undecodable bytes both surface as InvalidInputError.
"""

from pathlib import Path
from typing import Union

from src.core.errors import InvalidInputError


def decode_text(data: bytes, what: str) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data[:e.start].count(b"\n") + 1
        raise InvalidInputError(f"{what} is not UTF-8 text (line {line}, byte {e.start})") from e


def read_text(path: Union[str, Path], what: str = "file") -> str:
    path = Path(path)
    try:
        data = path.read_bytes()
    except FileNotFoundError as e:
        raise InvalidInputError(f"{what} not found: {path}") from e
    except OSError as e:
        raise InvalidInputError(f"cannot read {what} {path}: {e.strerror or e}") from e
    return decode_text(data, f"{what} {path}")
