"""On-disk cache of integer depth rows.

One file per (seed key, depth).  The payload is one decimal integer per
line; the header records the widest column stored and a sha256 of the
payload so silent corruption is detected on load.  Plain text was chosen
over anything compact so a row can be inspected or diffed by hand.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

from .errors import CacheIntegrityError


class RowCache:
    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def path(self, key: str, depth: int) -> Path:
        return self.directory / f"{key}.depth{depth}.txt"

    @staticmethod
    def _digest(payload: bytes) -> str:
        return hashlib.sha256(payload).hexdigest()

    def load(self, key: str, depth: int, k_max: int) -> list[int] | None:
        """Row covering columns 0..k_max, or None when absent or too narrow.

        Raises CacheIntegrityError when the file exists but fails its own
        checksum or does not parse; a damaged cache must never be silently
        recomputed over, because the damage may indicate a larger problem.
        """
        path = self.path(key, depth)
        if not path.exists():
            return None
        text = path.read_text()
        head, _, payload = text.partition("\n")
        fields = dict(part.split("=", 1) for part in head.split() if "=" in part)
        try:
            stored_k = int(fields["k_max"])
            digest = fields["sha256"]
        except (KeyError, ValueError) as exc:
            raise CacheIntegrityError(f"malformed cache header in {path}") from exc
        if self._digest(payload.encode()) != digest:
            raise CacheIntegrityError(f"checksum mismatch in {path}")
        if stored_k < k_max:
            return None
        try:
            values = [int(line) for line in payload.splitlines()]
        except ValueError as exc:
            raise CacheIntegrityError(f"non-integer payload in {path}") from exc
        if len(values) != stored_k + 1:
            raise CacheIntegrityError(f"row length mismatch in {path}")
        return values

    def store(self, key: str, depth: int, values: list[int]) -> Path:
        payload = "\n".join(str(v) for v in values)
        header = f"k_max={len(values) - 1} sha256={self._digest(payload.encode())}"
        path = self.path(key, depth)
        path.write_text(header + "\n" + payload)
        return path
