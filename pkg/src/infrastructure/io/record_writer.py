"""Line-delimited JSON files (manifests, failure lists, reports)."""

import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Union

from ...shared.exceptions import ImageIOError


def write_jsonl(path: Union[str, Path], records: Iterable[Dict[str, Any]]) -> str:
    """
    Write one JSON object per line, UTF-8, newline terminated.

    Keys keep their insertion order so identical records produce
    identical bytes.
    """
    target = Path(path)
    text = "".join(json.dumps(record, ensure_ascii=False) + "\n" for record in records)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8")
    except OSError as e:
        raise ImageIOError(f"Cannot write records ({e.strerror or e})", path=str(target)) from e
    return str(target)


def read_jsonl(path: Union[str, Path]) -> List[Dict[str, Any]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ImageIOError(f"Cannot read records ({e.strerror or e})", path=str(path)) from e
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def write_json(path: Union[str, Path], payload: Dict[str, Any]) -> str:
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    except OSError as e:
        raise ImageIOError(f"Cannot write file ({e.strerror or e})", path=str(target)) from e
    return str(target)
