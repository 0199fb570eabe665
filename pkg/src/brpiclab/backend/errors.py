#!/usr/bin/env python3
"""Exceptions and exit codes shared by the library and the command line."""
# standard imports
from enum import Enum
from typing import Optional


class BrPicExitCodes(Enum):
    r"""Exit codes used by ``brpic-lab``."""

    SUCCESS = 0
    ERROR_GENERAL = 1
    ERROR_PARSE = 2
    ERROR_CAP = 3
    ERROR_CROSS_CHECK = 4


class BrPicError(RuntimeError):
    """Base class for brpiclab errors."""

    exit_code = BrPicExitCodes.ERROR_GENERAL.value


class GroupSpecError(BrPicError):
    """A group specification could not be parsed or built."""

    exit_code = BrPicExitCodes.ERROR_PARSE.value

    def __init__(self, message: str, position: Optional[int] = None):
        super().__init__(message)
        self.position = position


class OrderCapError(BrPicError):
    """A group or product is larger than the configured cap."""

    exit_code = BrPicExitCodes.ERROR_CAP.value


class CrossCheckError(BrPicError):
    """Two independent computations disagree, which points to an internal bug."""

    exit_code = BrPicExitCodes.ERROR_CROSS_CHECK.value


class JSONValidationError(BrPicError):
    """Custom exception for validation errors independent of what created them."""

    pass  # default behavior is good enough
