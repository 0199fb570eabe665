#!/usr/bin/env python3
"""Writing report documents to disk."""
# third party imports
import numpy as np

# standard imports
import json
import logging
from pathlib import Path
from typing import Union

# setup module level logger
logger = logging.getLogger(__name__)


def _to_builtin(value):
    """Convert numpy scalars and arrays left in a report."""
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def dumps_report(report: dict) -> str:
    """Serialize a report the same way every time."""
    return json.dumps(report, indent=2, sort_keys=False, default=_to_builtin) + "\n"


def save_report(
    report: dict,
    filepath: Union[str, Path],
) -> str:
    """
    Save a report dict to a file.

    Parameters
    ----------
    report : dict
        The report to save.
    filepath : str
        The filepath to save the report to.

    Returns
    -------
        the text written
    """
    # sanity check
    filepath = Path(filepath)
    if filepath.suffix not in (".json", ".JSON"):
        raise ValueError("incorrect report file extension")

    # make the directory if not exist
    filepath.parent.mkdir(parents=True, exist_ok=True)

    # now write to disk
    text = dumps_report(report)
    with open(filepath, "w") as outfile:
        outfile.write(text)
    logger.info(f"Report saved to {str(filepath)}")
    return text
