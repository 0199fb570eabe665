#!/usr/bin/env python3
"""On-disk cache of report documents, keyed as described in :meth:`ReportCache.key`."""
# package imports
from brpiclab.backend.analysis.report import SCHEMA_VERSION
from brpiclab.backend.dataio.config import dumps_report, save_report
from brpiclab.backend.dataio.spec import GroupSpec, ProductNode, SpecNode, TableNode
from brpiclab.backend.dataio.validate import validate_report
from brpiclab.backend.errors import JSONValidationError

# standard imports
import hashlib
import json
import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

logger = logging.getLogger(__name__)

DEFAULT_CACHE_DIR = ".brpic-cache"


def table_digests(node: SpecNode) -> List[str]:
    """SHA-256 of every table file a spec reads, ``"missing"`` for files that cannot be read."""
    if isinstance(node, ProductNode):
        return [digest for factor in node.factors for digest in table_digests(factor)]
    if not isinstance(node, TableNode):
        return []
    try:
        return [hashlib.sha256(Path(node.path).read_bytes()).hexdigest()]
    except OSError:
        return ["missing"]


class ReportCache:
    """Reports stored as ``<sha256>.json`` under ``directory``.

    Parameters
    ----------
    directory:
        cache location, created on first store
    schema_version:
        part of the key, so a new document layout never reads old entries
    """

    def __init__(self, directory: Union[str, Path] = DEFAULT_CACHE_DIR, schema_version: int = SCHEMA_VERSION):
        self.directory = Path(directory)
        self.schema_version = schema_version

    def key(self, spec: GroupSpec) -> str:
        """SHA-256 of the canonical spec and schema version, extended by the digest of each table file."""
        parts = [spec.canonical(), str(self.schema_version)] + table_digests(spec.node)
        return hashlib.sha256("|".join(parts).encode("utf-8")).hexdigest()

    def path(self, spec: GroupSpec) -> Path:
        """File holding the entry for ``spec``."""
        return self.directory / f"{self.key(spec)}.json"

    def load(self, spec: GroupSpec) -> Optional[Tuple[dict, str]]:
        """The stored report and its exact text, or ``None`` on a miss or a corrupt entry."""
        path = self.path(spec)
        if not path.exists():
            logger.debug(f"cache miss for {spec.canonical()}")
            return None
        try:
            text = path.read_text()
            report = validate_report(json.loads(text))
        except (OSError, json.JSONDecodeError, JSONValidationError) as e:
            logger.warning(f"ignoring corrupt cache entry {path}: {e}")
            return None
        if report.get("schema_version") != self.schema_version:
            logger.warning(f"ignoring cache entry {path} with schema version {report.get('schema_version')}")
            return None
        logger.info(f"loaded {spec.canonical()} from cache")
        return report, text

    def store(self, spec: GroupSpec, report: dict) -> str:
        """Validate and write ``report``; returns the text written."""
        validate_report(json.loads(dumps_report(report)))
        return save_report(report, self.path(spec))
