"""
JSON / TSV 报告编码
符号键使用 "-"/位串编码，二进有理数编码为 {"num": str, "exp": int}
"""
import json
import math
from typing import Any, Dict, Iterable, Mapping, Sequence

import jsonschema

from core.bitstring import BitString
from core.dyadic import Dyadic

CENSUS_SCHEMA = {
    "type": "object",
    "required": ["machine", "maxN", "rows"],
    "properties": {
        "machine": {"type": "string"},
        "maxN": {"type": "integer", "minimum": 0},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "s", "count"],
                "properties": {
                    "n": {"type": "integer", "minimum": 0},
                    "s": {"type": "string", "pattern": "^(-|[01]+)$"},
                    "count": {"type": "integer", "minimum": 0}
                }
            }
        }
    }
}

DYADIC_SCHEMA = {
    "type": "object",
    "required": ["num", "exp"],
    "properties": {
        "num": {"type": "string", "pattern": "^[0-9]+$"},
        "exp": {"type": "integer", "minimum": 0}
    }
}


def to_json(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def encode_bounds(bounds: Mapping[BitString, int]) -> Dict[str, int]:
    return {s.text: value for s, value in bounds.items()}


def encode_dyadic_map(values: Mapping[BitString, Dyadic]) -> Dict[str, Dict[str, Any]]:
    return {s.text: value.to_dict() for s, value in values.items()}


def decode_dyadic_map(data: Mapping[str, Any]) -> Dict[BitString, Dyadic]:
    result = {}
    for key, value in data.items():
        jsonschema.validate(instance=value, schema=DYADIC_SCHEMA)
        result[BitString.parse(key)] = Dyadic.from_dict(value)
    return result


def validate_census(data: Dict[str, Any]) -> Dict[str, Any]:
    jsonschema.validate(instance=data, schema=CENSUS_SCHEMA)
    return data


def format_number(value: float) -> str:
    """TSV 数值列：整数原样，无穷写作 inf，浮点保留 6 位"""
    if isinstance(value, int):
        return str(value)
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.6f}"


def to_tsv(header_lines: Sequence[str], columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    lines = [f"# {line}" for line in header_lines]
    lines.append("\t".join(columns))
    for row in rows:
        lines.append("\t".join(
            cell.text if isinstance(cell, BitString)
            else cell if isinstance(cell, str)
            else format_number(cell)
            for cell in row
        ))
    return "\n".join(lines) + "\n"
