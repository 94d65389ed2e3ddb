"""Versioned on-disk JSON caches for Macdonald tables and kernels.

The disk layer is off until a directory is configured, either through
:func:`configure`, the ``CHARVAR_CACHE_DIR`` environment variable, or the
CLI (which defaults to ``~/.cache/charvar``).  Every file carries a format
name and version; files with any other version are refused, never rewritten.
"""

import json
import os
from pathlib import Path

from filelock import FileLock

from .errors import CacheVersionError

FORMAT_VERSION = 1
ENV_VAR = "CHARVAR_CACHE_DIR"
DEFAULT_DIR = Path.home() / ".cache" / "charvar"
KINDS = ("macdonald", "kernel")

_configured = None


def configure(path):
    """Use ``path`` for the disk cache; ``None`` falls back to the environment."""
    global _configured
    _configured = Path(path) if path is not None else None


def cache_dir():
    """Active cache directory or ``None`` when disk caching is disabled."""
    if _configured is not None:
        return _configured
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else None


def _file(kind):
    d = cache_dir()
    return None if d is None else d / ("%s.v%d.json" % (kind, FORMAT_VERSION))


def _lock(d):
    d.mkdir(parents=True, exist_ok=True)
    return FileLock(str(d / ".charvar.lock"))


def _check_header(doc, kind, path):
    if doc.get("format") != "charvar-" + kind or doc.get("version") != FORMAT_VERSION:
        raise CacheVersionError(
            "%s has format %r version %r; expected %r version %d"
            % (path, doc.get("format"), doc.get("version"), "charvar-" + kind, FORMAT_VERSION))


def _read(path, kind):
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    _check_header(doc, kind, path)
    return doc["entries"]


def load(kind, key):
    """Cached JSON value for ``key`` or ``None``."""
    path = _file(kind)
    if path is None or not path.exists():
        return None
    with _lock(path.parent):
        return _read(path, kind).get(key)


def store(kind, key, value):
    """Insert ``key`` unless present; the file is left untouched if it is."""
    path = _file(kind)
    if path is None:
        return False
    with _lock(path.parent):
        entries = _read(path, kind) if path.exists() else {}
        if key in entries:
            return False
        entries[key] = value
        doc = {"format": "charvar-" + kind, "version": FORMAT_VERSION, "entries": entries}
        tmp = path.with_suffix(".tmp")
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, sort_keys=True, separators=(",", ":"))
        os.replace(tmp, path)
    return True


def status():
    """Entry counts and sizes of every cache file, plus stray old versions."""
    d = cache_dir()
    report = {"dir": str(d) if d else None, "files": {}}
    if d is None or not d.exists():
        return report
    for kind in KINDS:
        path = _file(kind)
        if path.exists():
            entries = _read(path, kind)
            report["files"][kind] = {"entries": sorted(entries), "bytes": path.stat().st_size}
    stale = sorted(p.name for p in d.glob("*.v*.json") if p.name not in
                   {"%s.v%d.json" % (k, FORMAT_VERSION) for k in KINDS})
    if stale:
        report["unreadable_versions"] = stale
    return report


def clear():
    """Remove versioned cache files only; returns the names removed."""
    d = cache_dir()
    removed = []
    if d is None or not d.exists():
        return removed
    with _lock(d):
        for kind in KINDS:
            for p in sorted(d.glob("%s.v*.json" % kind)):
                p.unlink()
                removed.append(p.name)
    return removed
