"""Verification reports and reproducible random streams."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

PASS = "pass"
FAIL = "fail"

#: samples per independent RNG stream; fixed so results do not depend on worker count
CHUNK = 250


@dataclass
class Check:
    name: str
    status: str
    witness: Any = None
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"name": self.name, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    command: str
    checks: list[Check] = field(default_factory=list)
    seed: int | None = None
    info: dict = field(default_factory=dict)
    timing: float | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, ok: bool, witness: Any = None, **detail) -> Check:
        c = Check(name, PASS if ok else FAIL, witness, detail)
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.witness, c.detail))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        out: dict[str, Any] = {
            "command": self.command,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "seed": self.seed,
        }
        if self.info:
            out["info"] = self.info
        if self.timing is not None:
            out["timing"] = self.timing
        return out

    def summary(self) -> str:
        lines = [f"{self.command}: {'PASSED' if self.passed else 'FAILED'}"]
        for c in self.checks:
            lines.append(f"  [{c.status}] {c.name}")
        return "\n".join(lines)


def generator(seed: int, *path: int) -> np.random.Generator:
    """Generator for the child stream ``path`` of ``seed``.

    Distinct paths give statistically independent streams (numpy's
    SeedSequence spawn keys), so work can be split without coordination.
    """
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=path)))


def worker_count() -> int:
    raw = os.environ.get("HAMREP_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_chunked(fn: Callable, samples: int, seed: int, *args, stream: int = 0) -> list:
    """Call ``fn(rng, count, *args)`` on consecutive chunks of ``samples``.

    Returns the concatenated per-chunk result lists, in chunk order. Chunk
    ``c`` always draws from stream ``(seed, stream, c)``; the worker count
    only changes scheduling.
    """
    jobs = []
    for c, start in enumerate(range(0, samples, CHUNK)):
        jobs.append((c, min(CHUNK, samples - start)))
    workers = min(worker_count(), len(jobs))
    if workers <= 1:
        parts = [_run_one(fn, seed, (stream, c), n, args) for c, n in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_one, *zip(*[(fn, seed, (stream, c), n, args) for c, n in jobs])))
    return [x for part in parts for x in part]


def _run_one(fn, seed, path, count, args):
    return fn(generator(seed, *path), count, *args)
