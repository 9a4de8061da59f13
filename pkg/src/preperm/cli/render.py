"""
Rendering of emitted documents as JSON or fixed-width text.
"""
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel

from preperm.models.options import OutputFormat


def _is_scalar(value: Any) -> bool:
    return not isinstance(value, (dict, list))


def _cell(value: Any) -> str:
    if isinstance(value, list) and all(_is_scalar(v) for v in value):
        return " ".join(str(v) for v in value)
    if isinstance(value, dict) and all(_is_scalar(v) for v in value.values()):
        return ", ".join(f"{key}={value[key]}" for key in sorted(value))
    if _is_scalar(value):
        return "" if value is None else str(value)
    return json.dumps(value, sort_keys=True, ensure_ascii=False)


def _grid(rows: List[Dict[str, Any]]) -> List[str]:
    columns = sorted({key for row in rows for key in row})
    cells = [[_cell(row.get(column)) for column in columns] for row in rows]
    widths = [
        max([len(column)] + [len(line[i]) for line in cells])
        for i, column in enumerate(columns)
    ]
    header = "  ".join(column.ljust(width) for column, width in zip(columns, widths))
    lines = [header.rstrip(), "  ".join("-" * width for width in widths)]
    for line in cells:
        lines.append("  ".join(value.ljust(width) for value, width in zip(line, widths)).rstrip())
    return lines


def _lines(data: Dict[str, Any], prefix: str = "") -> List[str]:
    simple: List[tuple] = []
    sections: List[str] = []
    for key in sorted(data):
        value = data[key]
        label = f"{prefix}{key}"
        if isinstance(value, dict) and not all(_is_scalar(v) for v in value.values()):
            sections.extend([""] + _lines(value, f"{label}."))
        elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            sections.extend(["", f"{label}:"] + _grid(value))
        else:
            simple.append((label, _cell(value)))
    width = max((len(label) for label, _ in simple), default=0)
    head = [f"{label.ljust(width)} : {value}".rstrip() for label, value in simple]
    return head + sections


def render(document: BaseModel, fmt: OutputFormat) -> str:
    """Serialize a document; identical documents give identical text."""
    data = document.model_dump(mode="json")
    if OutputFormat(fmt) == OutputFormat.TABLE:
        return "\n".join(_lines(data)).lstrip("\n") + "\n"
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit(document: BaseModel, fmt: OutputFormat, out: Optional[str] = None) -> None:
    """Write to the given path, or to stdout."""
    text = render(document, fmt)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
