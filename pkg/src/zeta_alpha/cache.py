"""On-disk cache for the exact beta_k coefficient table.

Format (all ASCII, one record per line):

    zeta-alpha-cache v1 max_k=<K>
    1:1/2
    2:1/12;1/8
    ...
    <K>:<c0>;<c1>;...;<c_{K-1}>
    <sha256 hex digest of every preceding byte, newlines included>

Coefficients are the lowest-first "num/den" strings of beta_k, so the file
is canonical: loading and re-saving is byte-identical.  The checksum line
guards against truncation and bit rot; a version mismatch rejects the file
before any record is parsed.
"""

from __future__ import annotations

import hashlib
import os
from pathlib import Path

from .alpha import AlphaTable
from .errors import CacheFormatError
from .exact_algebra import RationalPolynomial, rat_from_str, rat_to_str

__all__ = ["FORMAT_VERSION", "ENV_CACHE_PATH", "save_table", "load_table",
           "default_cache_path"]

FORMAT_VERSION = "v1"

#: Environment variable naming the default cache location for the CLI.
ENV_CACHE_PATH = "ZETA_ALPHA_CACHE"


def default_cache_path() -> Path | None:
    value = os.environ.get(ENV_CACHE_PATH)
    return Path(value) if value else None


def _header_line(max_k: int) -> str:
    return f"zeta-alpha-cache {FORMAT_VERSION} max_k={max_k}"


def _record_line(k: int, poly: RationalPolynomial) -> str:
    coeffs = ";".join(rat_to_str(c) for c in poly.coefficients)
    return f"{k}:{coeffs}"


def _render(table: AlphaTable) -> bytes:
    lines = [_header_line(table.max_k)]
    for k in range(1, table.max_k + 1):
        lines.append(_record_line(k, table.beta(k)))
    body = ("\n".join(lines) + "\n").encode("ascii")
    digest = hashlib.sha256(body).hexdigest()
    return body + (digest + "\n").encode("ascii")


def save_table(table: AlphaTable, path: str | Path) -> Path:
    """Write the table's beta polynomials to ``path`` (canonical bytes)."""
    path = Path(path)
    path.write_bytes(_render(table))
    return path


def _parse_header(line: str) -> int:
    parts = line.split()
    if len(parts) != 3 or parts[0] != "zeta-alpha-cache":
        raise CacheFormatError(f"not a cache file (header {line!r})")
    if parts[1] != FORMAT_VERSION:
        raise CacheFormatError(
            f"unsupported cache version {parts[1]!r} (expected {FORMAT_VERSION})"
        )
    key, _, value = parts[2].partition("=")
    if key != "max_k" or not value.isdigit():
        raise CacheFormatError(f"malformed header field {parts[2]!r}")
    return int(value)


def load_table(path: str | Path, *, kmax: int | None = None) -> AlphaTable:
    """Read a cache file back into an AlphaTable.

    ``kmax`` loads only the first kmax records (they form a valid prefix
    table); the checksum always covers the whole file and is verified first.
    """
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise CacheFormatError(f"cannot read cache {path}: {exc}") from exc
    first, _, _ = raw.partition(b"\n")
    max_k = _parse_header(first.decode("ascii", errors="replace"))
    stripped = raw[:-1] if raw.endswith(b"\n") else raw
    cut = stripped.rfind(b"\n")
    if cut < 0:
        raise CacheFormatError("cache file too short")
    body = stripped[: cut + 1]
    digest_line = stripped[cut + 1 :].decode("ascii", errors="replace")
    if hashlib.sha256(body).hexdigest() != digest_line:
        raise CacheFormatError("cache checksum mismatch (truncated or corrupt)")
    records = body.decode("ascii").splitlines()[1:]
    if len(records) != max_k:
        raise CacheFormatError(
            f"cache holds {len(records)} records, header claims {max_k}"
        )
    if kmax is not None:
        if kmax < 1 or kmax > max_k:
            raise CacheFormatError(
                f"requested kmax={kmax} outside cache range 1..{max_k}"
            )
        records = records[:kmax]
    betas = []
    for expect_k, line in enumerate(records, start=1):
        head, sep, tail = line.partition(":")
        if not sep or not head.isdigit() or int(head) != expect_k:
            raise CacheFormatError(f"malformed record for k={expect_k}: {line!r}")
        try:
            coeffs = [rat_from_str(tok) for tok in tail.split(";")]
        except ValueError as exc:
            raise CacheFormatError(
                f"bad coefficient in record k={expect_k}: {exc}"
            ) from exc
        if len(coeffs) != expect_k:
            raise CacheFormatError(
                f"record k={expect_k} has {len(coeffs)} coefficients, expected {expect_k}"
            )
        betas.append(RationalPolynomial(coeffs))
    return AlphaTable(betas)
