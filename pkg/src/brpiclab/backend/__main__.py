"""
The command line entry point.

This can be invoked using

.. code-block:: sh

   brpic-lab <command> <spec>
   python -m brpiclab.backend <command> <spec>

``<spec>`` names a finite group: ``S4``, ``A4``, ``D8`` (dihedral of ORDER 8), ``Q8``, ``C6``,
``C2xC4``, ``pq(3,7)``, ``perm:[(1,2,3);(1,2)]`` or ``table:path/to/group.json``.
The built-in help will give the commands and options when supplied a ``--help`` flag.
"""
# package imports
from brpiclab.backend.analysis.l0 import l0_set
from brpiclab.backend.analysis.report import (
    aut_block,
    full_report,
    lagrangian_rows,
    out_block,
    schur_block,
)
from brpiclab.backend.bimodule.datum import is_involution
from brpiclab.backend.bimodule.enumerate import enumerate_invertible, involution_census
from brpiclab.backend.dataio.cache import DEFAULT_CACHE_DIR, ReportCache
from brpiclab.backend.dataio.config import dumps_report
from brpiclab.backend.dataio.spec import GroupSpec, build_group, parse_spec
from brpiclab.backend.dataio.validate import validate_report
from brpiclab.backend.diagnostics.checks import run_checks
from brpiclab.backend.errors import BrPicError, BrPicExitCodes
from brpiclab.backend.group.finite_group import FiniteGroup
from brpiclab.backend.lagrangian.lagrangian import enumerate_lagrangians

# standard imports
import argparse
import json
import logging
from pathlib import Path
import sys
from typing import Callable, Dict, Tuple

logger = logging.getLogger(__name__)

COMMANDS = ("schur", "out", "aut", "lagrangians", "l0", "bimodules", "brpic", "report", "check")
SUCCESS = BrPicExitCodes.SUCCESS.value


def render_text(payload, indent: int = 0) -> str:
    """Plain text view: ``key: value`` lines for mappings, aligned columns for lists of rows."""
    pad = " " * indent
    if isinstance(payload, dict):
        lines = []
        for key, value in payload.items():
            if isinstance(value, dict) or (isinstance(value, list) and value and isinstance(value[0], dict)):
                lines.append(f"{pad}{key}:")
                lines.append(render_text(value, indent + 2))
            else:
                lines.append(f"{pad}{key}: {_cell(value)}")
        return "\n".join(lines)
    if isinstance(payload, list) and payload and isinstance(payload[0], dict):
        columns = list(payload[0].keys())
        cells = [[_cell(row.get(c, "")) for c in columns] for row in payload]
        widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(columns)]
        header = pad + "  ".join(c.ljust(w) for c, w in zip(columns, widths))
        body = [pad + "  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
        return "\n".join([header.rstrip()] + [line.rstrip() for line in body])
    return pad + _cell(payload)


def _cell(value) -> str:
    if isinstance(value, list):
        return "[" + ",".join(_cell(v) for v in value) + "]"
    if value is None:
        return "-"
    return str(value)


# every command returns (payload, exit code)


def _schur(group: FiniteGroup, spec: GroupSpec, args) -> Tuple[dict, int]:
    return schur_block(group), SUCCESS


def _out(group: FiniteGroup, spec: GroupSpec, args) -> Tuple[dict, int]:
    return out_block(group), SUCCESS


def _aut(group: FiniteGroup, spec: GroupSpec, args) -> Tuple[dict, int]:
    return aut_block(group), SUCCESS


def _lagrangians(group: FiniteGroup, spec: GroupSpec, args) -> Tuple[list, int]:
    return lagrangian_rows(enumerate_lagrangians(group)), SUCCESS


def _l0(group: FiniteGroup, spec: GroupSpec, args) -> Tuple[list, int]:
    orbits = enumerate_invertible(group=group, max_workers=args.max_workers)
    rows = lagrangian_rows(enumerate_lagrangians(group), l0_set(group, orbits))
    return [row for row in rows if row["in_l0"]], SUCCESS


def _bimodules(group: FiniteGroup, spec: GroupSpec, args) -> Tuple[dict, int]:
    orbits = enumerate_invertible(group=group, max_workers=args.max_workers)
    rows = []
    for orbit in orbits:
        row = orbit.describe()
        row["involution"] = is_involution(orbit.datum)[0]
        rows.append(row)
    return {"count": len(orbits), "involutions": involution_census(group, orbits), "orbits": rows}, SUCCESS


def _brpic(group: FiniteGroup, spec: GroupSpec, args) -> Tuple[dict, int]:
    report = full_report(group=group, spec=spec.canonical(), max_workers=args.max_workers)
    return report["brpic"], SUCCESS


def _check(group: FiniteGroup, spec: GroupSpec, args) -> Tuple[list, int]:
    results = run_checks(group=group, max_workers=args.max_workers)
    passed = all(r["passed"] for r in results)
    return results, SUCCESS if passed else BrPicExitCodes.ERROR_CROSS_CHECK.value


HANDLERS: Dict[str, Callable] = {
    "schur": _schur,
    "out": _out,
    "aut": _aut,
    "lagrangians": _lagrangians,
    "l0": _l0,
    "bimodules": _bimodules,
    "brpic": _brpic,
    "check": _check,
}


def _report_text(group: FiniteGroup, spec: GroupSpec, args) -> Tuple[dict, str]:
    """The report and its JSON text, served from the cache when allowed."""
    cache = None if args.no_cache else ReportCache(args.cache_dir)
    if cache is not None:
        hit = cache.load(spec)
        if hit is not None:
            return hit
    report = full_report(group=group, spec=spec.canonical(), max_workers=args.max_workers)
    if cache is not None:
        return report, cache.store(spec, report)
    text = dumps_report(report)
    validate_report(json.loads(text))
    return report, text


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for ``brpic-lab``."""
    parser = argparse.ArgumentParser(
        prog="brpic-lab",
        description="Brauer-Picard groups of pointed fusion categories Vec_G",
        epilog="Dihedral groups are named by their order: D8 has 8 elements.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("spec", help="group specification, e.g. S4, D8, C2xC4, pq(3,7), table:group.json")
    parser.add_argument(
        "--format", choices=["text", "json"], default="text", help="output format (default: %(default)s)"
    )
    parser.add_argument(
        "--cache-dir", type=Path, default=Path(DEFAULT_CACHE_DIR), help="report cache (default: %(default)s)"
    )
    parser.add_argument("--no-cache", action="store_true", help="neither read nor write the report cache")
    parser.add_argument("--max-workers", type=int, default=1, help="worker processes, 0 picks a value for the host")
    parser.add_argument(
        "-l",
        "--log",
        nargs="?",
        default="info",
        choices=["debug", "info", "warn", "error"],
        help="The log level (default: %(default)s)",
    )
    return parser


def main(args=None) -> int:
    """Underlying entrypoint for ``brpic-lab``.

    The function args are exposed this way to allow for testing.
    Passing in None causes argparse to use ``sys.argv``.
    Returns the exit code: 0 success, 1 general error, 2 bad group specification,
    3 order cap exceeded, 4 failed cross-check.
    """
    args = build_parser().parse_args(args)

    # configure logging
    logging.basicConfig()  # setup default handlers and formatting
    # override log level
    for handler in logging.getLogger().handlers:
        handler.setLevel(args.log.upper())

    try:
        spec = parse_spec(args.spec)
        group = build_group(spec)
        logger.info(f"{args.command} for {spec.canonical()} (order {group.order})")
        if args.command == "report":
            report, text = _report_text(group, spec, args)
            sys.stdout.write(text if args.format == "json" else render_text(report) + "\n")
            return SUCCESS
        payload, code = HANDLERS[args.command](group, spec, args)
    except BrPicError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except Exception:
        logger.exception(f"{args.command} {args.spec} failed")
        return BrPicExitCodes.ERROR_GENERAL.value

    sys.stdout.write(dumps_report(payload) if args.format == "json" else render_text(payload) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
