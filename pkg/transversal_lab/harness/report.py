"""
Line-oriented `key: value` rendering for harness reports.
"""

from typing import Any, Iterable, List, Mapping, Optional


def render_value(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Mapping):
        return " ".join(f"{key}={render_value(item)}" for key, item in value.items()) or "-"
    if isinstance(value, (list, tuple)):
        return " ".join(render_value(item) for item in value) or "-"
    return str(value)


def render_fields(fields: Mapping[str, Any]) -> List[str]:
    """One `key: value` line per field, in mapping order."""
    return [f"{key}: {render_value(value)}" for key, value in fields.items()]


def render_report(
    blocks: Iterable[Mapping[str, Any]], summary: Optional[Mapping[str, Any]] = None
) -> str:
    """
    Render per-instance blocks separated by blank lines, then the summary after a `---` line.

    Args:
        blocks: Field mappings, one per instance
        summary: Aggregate fields

    Returns:
        str: The report ending with a newline
    """
    sections = ["\n".join(render_fields(block)) for block in blocks]
    text = "\n\n".join(section for section in sections if section)
    if summary is not None:
        text = (text + "\n" if text else "") + "---\n" + "\n".join(render_fields(summary))
    return text + "\n"
