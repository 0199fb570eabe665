#!/usr/bin/env python3
"""Validation of report documents and group table files against the packaged JSON schemas."""
# package imports
from brpiclab.backend.errors import JSONValidationError

# third party imports
import jsonschema

# standard imports
import json
import logging
from pathlib import Path
from typing import Dict, Union

logger = logging.getLogger(__name__)

JsonInputTypes = Union[str, dict, Path]

# http://json-schema.org/learn/getting-started-step-by-step.html
REPORT_SCHEMA_FILE = Path(__file__).parent / "schema.json"
TABLE_SCHEMA_FILE = Path(__file__).parent / "group_table.schema.json"


def _load_schema(path: Path) -> dict:
    """Load a packaged schema."""
    try:
        with open(path, "r") as handle:
            schema = json.load(handle)
    except FileNotFoundError as e:
        raise RuntimeError(f"Failed to load schema from {path}") from e

    if not schema:
        raise RuntimeError(f"Failed to load schema from {path}")
    return schema


REPORT_SCHEMA: dict = _load_schema(REPORT_SCHEMA_FILE)
TABLE_SCHEMA: dict = _load_schema(TABLE_SCHEMA_FILE)


def todict(obj: JsonInputTypes) -> Dict:
    """Convert the supplied object into a dict. Raise a TypeError if the object is not a type that has a conversion method."""
    if isinstance(obj, dict):
        return obj
    elif isinstance(obj, Path):
        with open(obj, "r") as handle:
            return json.load(handle)
    elif isinstance(obj, str):
        return json.loads(obj)
    else:
        raise TypeError(f"Do not know how to convert type={type(obj)} to dict")


def _validate(json_obj: Dict, schema: dict, what: str) -> None:
    try:
        jsonschema.validate(json_obj, schema=schema)
    except jsonschema.ValidationError as e:
        msg = f"{what} does not match its schema: {e.message}"
        logger.error(msg)
        raise JSONValidationError(msg) from e


def validate_report(obj: JsonInputTypes) -> Dict:
    """Validate a report document and return it as a dict.

    Raises
    ------
    JSONValidationError
        If the document does not validate against the report schema
    """
    json_obj = todict(obj)
    _validate(json_obj, REPORT_SCHEMA, "report")
    return json_obj


def validate_group_table(obj: JsonInputTypes) -> Dict:
    """Validate a group table document; rows must have ``order`` entries in ``0 .. order-1``."""
    json_obj = todict(obj)
    _validate(json_obj, TABLE_SCHEMA, "group table")
    n = json_obj["order"]
    table = json_obj["table"]
    if len(table) != n or any(len(row) != n for row in table):
        msg = f"group table must be {n} x {n}"
        logger.error(msg)
        raise JSONValidationError(msg)
    if any(not 0 <= v < n for row in table for v in row):
        msg = f"group table entries must lie in 0..{n - 1}"
        logger.error(msg)
        raise JSONValidationError(msg)
    return json_obj
