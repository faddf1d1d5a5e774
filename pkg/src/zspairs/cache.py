"""On-disk cache for survey reports, one JSON file per (k, mode, sum_cap).

Entries are invalidated by tool version, and writes go through a
temporary file plus rename so readers never see a torn entry.  The
directory defaults to the user cache dir and can be overridden with the
ZSPAIRS_CACHE_DIR environment variable.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

CACHE_DIR_ENV = "ZSPAIRS_CACHE_DIR"


@dataclass(frozen=True)
class CacheEntry:
    key: tuple[int, str, int]
    report: dict
    tool_version: str
    created_at: str

    def to_obj(self) -> dict:
        k, mode, sum_cap = self.key
        return {
            "key": {"k": k, "mode": mode, "sum_cap": sum_cap},
            "tool_version": self.tool_version,
            "created_at": self.created_at,
            "report": self.report,
        }


def cache_dir() -> Path:
    env = os.environ.get(CACHE_DIR_ENV)
    if env:
        return Path(env)
    xdg = os.environ.get("XDG_CACHE_HOME")
    base = Path(xdg) if xdg else Path.home() / ".cache"
    return base / "zspairs"


def entry_path(k: int, mode: str, sum_cap: int) -> Path:
    return cache_dir() / f"ell-k{k}-{mode}-cap{sum_cap}.json"


def load_report(k: int, mode: str, sum_cap: int, tool_version: str) -> dict | None:
    """The cached report for this exact key and version, or None."""
    path = entry_path(k, mode, sum_cap)
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return None
    if data.get("tool_version") != tool_version:
        return None
    if data.get("key") != {"k": k, "mode": mode, "sum_cap": sum_cap}:
        return None
    report = data.get("report")
    return report if isinstance(report, dict) else None


def store_report(
    k: int, mode: str, sum_cap: int, tool_version: str, report: dict
) -> Path:
    """Persist a report atomically; returns the entry path."""
    path = entry_path(k, mode, sum_cap)
    path.parent.mkdir(parents=True, exist_ok=True)
    entry = CacheEntry(
        key=(k, mode, sum_cap),
        report=report,
        tool_version=tool_version,
        created_at=datetime.now(timezone.utc).isoformat(),
    )
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(entry.to_obj(), fh, indent=2)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
    return path
