"""brpiclab: Brauer-Picard groups of pointed fusion categories Vec_G from finite group data."""

import logging
from .backend import analysis, bimodule, cohomology, dataio, diagnostics, group, lagrangian  # noqa: F401

logging.getLogger("brpiclab").setLevel(logging.INFO)
try:
    from ._version import __version__  # noqa: F401
except ImportError:
    __version__ = "unknown"
