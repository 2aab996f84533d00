"""
Rendering of command results as text tables or JSON.
"""

import json
from typing import List

from src.utils.helpers import to_jsonable


def to_json(result) -> str:
    """
    Serialize a result with the stable top-level schema
    {"command", "inputs", "result", "citations"}.

    Rationals are written as {"num", "den"} objects, never as floats.
    """
    document = {
        'command': result.command,
        'inputs': to_jsonable(result.inputs),
        'result': {'status': result.status, 'value': to_jsonable(result.payload)},
        'citations': [
            {'ref': c['ref'], 'quote': c['quote'], 'status': c['status']}
            for c in result.citations
        ],
    }
    return json.dumps(document, indent=2, ensure_ascii=False)


def to_text(result) -> str:
    """Plain-text rendering: message lines, then the table, then citations."""
    parts: List[str] = list(result.lines)
    if result.table is not None and not result.table.empty:
        parts.append(result.table.to_string(index=False))
    for citation in result.citations:
        parts.append(f"[{citation['status']}] {citation['ref']}: {citation['quote']}")
    return '\n'.join(parts)


def render(result, as_json: bool = False) -> str:
    return to_json(result) if as_json else to_text(result)
