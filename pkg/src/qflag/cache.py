"""
On-disk product tables.

The file is JSON (gzip-compressed when the name ends in ``.gz``)::

    {"format_version": 1, "n": 4, "columns": ["1234", ...],
     "entries": [{"u": "1234", "v": "1234", "class": [...]}, ...]}

Every entry is re-validated on load (nonnegative, Laurent-free, graded)
before it is trusted.
"""

from __future__ import annotations

import gzip
import json
from pathlib import Path

from .permutation import all_perms, format_perm, parse_perm
from .qhclass import QHClass
from .qhring import EngineError, ProductTable

FORMAT_VERSION = 1


class CacheFormatError(ValueError):
    pass


def _open(path: Path, mode: str, compressed: bool | None = None):
    if compressed is None:
        compressed = path.suffix == ".gz"
    if compressed:
        return gzip.open(path, mode + "t", encoding="utf-8")
    return open(path, mode, encoding="utf-8")


def table_to_dict(table: ProductTable) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "n": table.n,
        "columns": sorted(format_perm(v) for v in table.columns),
        "entries": [
            {"u": format_perm(u), "v": format_perm(v), "class": x.to_json()}
            for u, v, x in table.entries()
        ],
    }


def save_table(table: ProductTable, path) -> None:
    path = Path(path)
    payload = table_to_dict(table)
    tmp = path.with_name(path.name + ".tmp")
    with _open(tmp, "w", compressed=path.suffix == ".gz") as fh:
        json.dump(payload, fh, sort_keys=True, separators=(",", ":"))
    tmp.replace(path)


def load_table(path, n: int | None = None) -> ProductTable:
    path = Path(path)
    try:
        with _open(path, "r") as fh:
            payload = json.load(fh)
        return _from_payload(path, payload, n)
    except CacheFormatError:
        raise
    except (OSError, EOFError, KeyError, TypeError, ValueError, EngineError) as exc:
        raise CacheFormatError(f"{path}: unreadable product table ({exc})") from exc


def _from_payload(path: Path, payload: dict, n: int | None) -> ProductTable:
    if payload.get("format_version") != FORMAT_VERSION:
        raise CacheFormatError(f"{path}: unsupported format version {payload.get('format_version')!r}")
    rank = payload["n"]
    if n is not None and rank != n:
        raise CacheFormatError(f"{path}: table is for n={rank}, expected n={n}")
    table = ProductTable(rank)
    for item in payload["entries"]:
        u, v = parse_perm(item["u"]), parse_perm(item["v"])
        if len(u) != rank or len(v) != rank:
            raise CacheFormatError(f"{path}: entry ({item['u']}, {item['v']}) has the wrong rank")
        table.insert(u, v, QHClass.from_json(rank, item["class"]))
    for text in payload.get("columns", []):
        v = parse_perm(text)
        missing = [u for u in all_perms(rank) if (u, v) not in table]
        if missing:
            raise CacheFormatError(f"{path}: column {text} is incomplete")
        table.mark_column(v)
    return table

