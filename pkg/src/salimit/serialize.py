"""JSON helpers: exact rationals as "num/den" strings and atomic file writes."""
from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from pathlib import Path


def frac_str(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text) -> Fraction:
    if isinstance(text, float):
        raise TypeError("floats are not accepted as exact rationals")
    return Fraction(str(text).strip())


def dumps(data) -> str:
    """Deterministic JSON text (sorted keys, fixed separators, trailing newline)."""
    return json.dumps(data, sort_keys=True, indent=2, default=_default) + "\n"


def _default(obj):
    if isinstance(obj, Fraction):
        return frac_str(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def write_atomic(path, text: str) -> None:
    """Write through a temporary file in the target directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_json(path, data) -> None:
    write_atomic(path, dumps(data))


def read_json(path):
    with open(path) as fh:
        return json.load(fh)
