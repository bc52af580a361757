"""Flat `key = value` experiment spec files.

    # comments start with '#'
    id = nq6-shot
    protocol = single_c
    noise = shot
    num_qubits = 6
    seeds = 2
    trials = 1
    nc_list = 5, 10

List fields are comma-separated. An empty value or `none` leaves the field unset.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

from ..exceptions import ConfigurationError, ExperimentIOError
from .models import ExperimentSpec, build_spec

LIST_FIELDS = frozenset({"nc_list", "m_list"})


def _value(key: str, raw: str) -> Any:
    text = raw.strip()
    if text == "" or text.lower() == "none":
        return None
    if key in LIST_FIELDS:
        return [item.strip() for item in text.split(",") if item.strip()]
    if key == "id" and text.isdigit():
        return int(text)
    return text


def parse_spec_text(text: str, source: str = "<string>") -> ExperimentSpec:
    """Parse spec-file content into a validated spec.

    Raises:
        ConfigurationError: On malformed lines, duplicate keys or invalid values.
    """
    data: dict[str, Any] = {}
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        key, sep, raw = stripped.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ConfigurationError(f"{source}:{line_number}: expected 'key = value'")
        if key in data:
            raise ConfigurationError(f"{source}:{line_number}: duplicate key {key!r}")
        value = _value(key, raw)
        if value is not None:
            data[key] = value
    return build_spec(data)


def load_spec_file(path: str | Path) -> ExperimentSpec:
    source = Path(path)
    try:
        text = source.read_text(encoding="utf-8")
    except OSError as e:
        raise ExperimentIOError(f"could not read spec file ({e.strerror})", str(source)) from e
    return parse_spec_text(text, str(source))


def format_spec(spec: ExperimentSpec) -> str:
    """Render a spec in the same format, readable by `parse_spec_text`."""
    lines = []
    for key, value in spec.model_dump().items():
        if value is None:
            continue
        if isinstance(value, list):
            value = ", ".join(str(v) for v in value)
        lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"
