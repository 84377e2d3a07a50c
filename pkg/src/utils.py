"""
Helper functions shared by the command-line layer: reading inputs and
rendering vectors and key/value reports.
"""

import os
from typing import Iterable, List, Tuple, Union

import galois
import numpy as np

from src.custom_exceptions import InputError


def read_text(path: str) -> str:
    """
    Read a UTF-8 text file.

    Raises:
        InputError: If the file does not exist or cannot be read
    """
    if not os.path.exists(path):
        raise InputError(f"File not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e}")


def read_text_or_literal(value: str) -> str:
    """Contents of ``value`` if it names a file, otherwise ``value`` itself."""
    return read_text(value) if os.path.isfile(value) else value


def format_vector(v: galois.FieldArray) -> str:
    return " ".join(str(int(x)) for x in v.view(np.ndarray).reshape(-1))


def yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def format_key_values(pairs: Iterable[Tuple[str, Union[str, int]]]) -> str:
    """One ``key: value`` line per pair."""
    lines: List[str] = [f"{key}: {value}" for key, value in pairs]
    return "\n".join(lines) + "\n"
