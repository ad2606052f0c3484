"""Chunked, resumable, parallel enumeration of the D_4t Hadamard search space.

The 2^(4t-3) subset counters are cut into aligned chunks of ``chunk_size``
counters.  A chunk's result is the sorted list of Hadamard counters it
contains; the whole run is the union of chunk results, so chunks can be
processed in any order, by any number of workers, across any number of
interruptions.

Checkpoint file (JSON, one object)::

    {
      "format": "cocyclic-checkpoint",
      "version": 1,
      "t": 5,
      "chunk_size": 1024,
      "n_chunks": 128,
      "completed": "<hex bitmap, bit i = chunk i done>",
      "chunks": {"<i>": {"hits": [...], "digest": "<sha256>"}, ...},
      "checksum": "<sha256 of the canonical JSON of all other fields>"
    }

The per-chunk digest covers (t, chunk_size, index, hits); the checksum
covers the rest of the document.  Either mismatch is an integrity error.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path

from .search import check_t, scan_range, search_bits

log = logging.getLogger(__name__)

FORMAT = "cocyclic-checkpoint"
VERSION = 1


class CheckpointIntegrityError(Exception):
    pass


def chunk_digest(t: int, chunk_size: int, index: int, hits) -> str:
    payload = f"{t}:{chunk_size}:{index}:" + ",".join(map(str, hits))
    return hashlib.sha256(payload.encode()).hexdigest()


def _checksum(doc: dict) -> str:
    body = {k: v for k, v in doc.items() if k != "checksum"}
    return hashlib.sha256(json.dumps(body, sort_keys=True).encode()).hexdigest()


@dataclass
class SearchCheckpoint:
    t: int
    chunk_size: int
    chunks: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        check_t(self.t)
        space = 1 << search_bits(self.t)
        cs = self.chunk_size
        if cs < 1 or cs & (cs - 1) or cs > space:
            raise ValueError(f"chunk_size must be a power of two <= {space}, got {cs}")

    @property
    def low_bits(self) -> int:
        return self.chunk_size.bit_length() - 1

    @property
    def n_chunks(self) -> int:
        return (1 << search_bits(self.t)) // self.chunk_size

    @property
    def bitmap(self) -> int:
        return sum(1 << i for i in self.chunks)

    def pending(self) -> list[int]:
        return [i for i in range(self.n_chunks) if i not in self.chunks]

    @property
    def complete(self) -> bool:
        return len(self.chunks) == self.n_chunks

    def add(self, index: int, hits) -> None:
        hits = tuple(hits)
        prev = self.chunks.get(index)
        if prev is not None and prev != hits:
            raise CheckpointIntegrityError(f"conflicting results for chunk {index}")
        self.chunks[index] = hits

    def merge(self, other: SearchCheckpoint) -> SearchCheckpoint:
        if (other.t, other.chunk_size) != (self.t, self.chunk_size):
            raise ValueError("cannot merge checkpoints of different runs")
        out = SearchCheckpoint(self.t, self.chunk_size, dict(self.chunks))
        for i, h in other.chunks.items():
            out.add(i, h)
        return out

    def hits(self) -> list[int]:
        out: list[int] = []
        for i in sorted(self.chunks):
            out.extend(self.chunks[i])
        return out

    # -- persistence ------------------------------------------------------

    def to_dict(self) -> dict:
        doc = {
            "format": FORMAT,
            "version": VERSION,
            "t": self.t,
            "chunk_size": self.chunk_size,
            "n_chunks": self.n_chunks,
            "completed": format(self.bitmap, "x"),
            "chunks": {
                str(i): {
                    "hits": list(self.chunks[i]),
                    "digest": chunk_digest(self.t, self.chunk_size, i, self.chunks[i]),
                }
                for i in sorted(self.chunks)
            },
        }
        doc["checksum"] = _checksum(doc)
        return doc

    @classmethod
    def from_dict(cls, doc: dict) -> SearchCheckpoint:
        try:
            if doc.get("format") != FORMAT or doc.get("version") != VERSION:
                raise CheckpointIntegrityError("not a version-1 cocyclic checkpoint")
            if doc.get("checksum") != _checksum(doc):
                raise CheckpointIntegrityError("checkpoint checksum mismatch")
            ck = cls(doc["t"], doc["chunk_size"])
            if doc["n_chunks"] != ck.n_chunks:
                raise CheckpointIntegrityError("chunk count does not match t and chunk_size")
            for key, entry in doc["chunks"].items():
                i = int(key)
                hits = tuple(int(h) for h in entry["hits"])
                if not 0 <= i < ck.n_chunks:
                    raise CheckpointIntegrityError(f"chunk index {i} out of range")
                if entry["digest"] != chunk_digest(ck.t, ck.chunk_size, i, hits):
                    raise CheckpointIntegrityError(f"digest mismatch for chunk {i}")
                ck.chunks[i] = hits
            if int(doc["completed"], 16) != ck.bitmap:
                raise CheckpointIntegrityError("completed bitmap disagrees with chunk list")
        except (KeyError, TypeError, ValueError) as exc:
            raise CheckpointIntegrityError(f"malformed checkpoint: {exc}") from None
        return ck

    def save(self, path) -> None:
        path = Path(path)
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_text(json.dumps(self.to_dict()) + "\n")
        os.replace(tmp, path)

    @classmethod
    def load(cls, path) -> SearchCheckpoint:
        try:
            doc = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise CheckpointIntegrityError(f"checkpoint is not valid JSON: {exc}") from None
        return cls.from_dict(doc)


def _work(args):
    t, index, low_bits = args
    return index, scan_range(t, index, low_bits)


def run_chunked(
    t: int,
    chunk_size: int,
    checkpoint: SearchCheckpoint | None = None,
    workers: int = 1,
    path=None,
    max_chunks: int | None = None,
) -> SearchCheckpoint:
    """Process the incomplete chunks of the search space.

    ``checkpoint`` is extended in place.  With ``path`` the checkpoint is
    saved after every finished chunk.  ``max_chunks`` stops after that
    many new chunks, leaving a partial checkpoint behind.
    """
    if checkpoint is None:
        checkpoint = SearchCheckpoint(t, chunk_size)
    elif (checkpoint.t, checkpoint.chunk_size) != (t, chunk_size):
        raise ValueError(
            f"checkpoint is for t={checkpoint.t}, chunk_size={checkpoint.chunk_size}"
        )
    todo = checkpoint.pending()
    if max_chunks is not None:
        todo = todo[:max_chunks]
    jobs = [(t, i, checkpoint.low_bits) for i in todo]

    def record(index, hits):
        checkpoint.add(index, hits)
        if path is not None:
            checkpoint.save(path)
        log.debug("chunk %d/%d done: %d hits", index + 1, checkpoint.n_chunks, len(hits))

    if workers <= 1 or len(jobs) <= 1:
        for job in jobs:
            record(*_work(job))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_work, job) for job in jobs]
            for fut in as_completed(futures):
                record(*fut.result())
    return checkpoint
