"""Exhaustive enumeration of all primitive solutions with x below a bound.

Candidate legs are generated from Euclid's parametrization of Pythagorean
triples (every pair y < x with x^2 - y^2 square is a k-multiple of a
primitive triple), bucketed by hypotenuse into fixed-width blocks so that
memory stays bounded and blocks can be scanned by a worker pool.  Within a
hypotenuse, unordered leg pairs are tested with the fast square filter.
A slow quadratic oracle with no parametrization is provided for
cross-checking on small bounds.
"""

from __future__ import annotations

import hashlib
import json
import math
import multiprocessing
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .arith import format_rational, is_perfect_square
from .errors import SquareDiffError
from .triples import EulerTriple, SquareCertificate, verify_euler

CSV_HEADER = "x,y,z,t,u,v,m"


@dataclass(frozen=True)
class SearchConfig:
    bound_N: int
    block_width: int = 100_000
    worker_count: int = 1
    checkpoint_path: str | None = None
    emit_format: str = "jsonl"

    def __post_init__(self):
        if self.bound_N < 2:
            raise SquareDiffError("bound_N must be >= 2")
        if self.block_width < 1:
            raise SquareDiffError("block_width must be >= 1")
        if self.worker_count < 1:
            raise SquareDiffError("worker_count must be >= 1")
        if self.emit_format not in ("jsonl", "csv"):
            raise SquareDiffError(f"unknown emit format {self.emit_format!r}")

    def config_hash(self) -> str:
        key = f"{self.bound_N}:{self.block_width}:{self.emit_format}"
        return hashlib.sha256(key.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class SolutionRecord:
    triple: EulerTriple
    certificate: SquareCertificate
    m: Fraction

    @classmethod
    def from_xyz(cls, x: int, y: int, z: int) -> "SolutionRecord":
        triple, cert = verify_euler(x, y, z)
        m = Fraction(cert.v * (triple.x - triple.z), cert.u * (triple.y - triple.z))
        return cls(triple, cert, m)

    def to_json(self) -> dict[str, str]:
        d = self.triple.to_json()
        d["m"] = format_rational(self.m)
        return d

    def jsonl_line(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def csv_line(self) -> str:
        t, c = self.triple, self.certificate
        return f"{t.x},{t.y},{t.z},{c.t},{c.u},{c.v},{format_rational(self.m)}"

    def line(self, emit_format: str) -> str:
        return self.jsonl_line() if emit_format == "jsonl" else self.csv_line()


@dataclass(frozen=True)
class Checkpoint:
    last_completed_block_end: int
    running_count: int
    config_hash: str

    def to_json(self) -> dict[str, str]:
        return {
            "block_end": str(self.last_completed_block_end),
            "count": str(self.running_count),
            "config_hash": self.config_hash,
        }

    @classmethod
    def from_json(cls, d: dict) -> "Checkpoint":
        return cls(int(d["block_end"]), int(d["count"]), d["config_hash"])


def legs_by_hypotenuse(range_lo: int, range_hi: int) -> dict[int, list[int]]:
    """All (hypotenuse, legs) with hypotenuse in [range_lo, range_hi).

    For every x in range that is a hypotenuse, the value lists exactly the
    y with 0 < y < x and x^2 - y^2 a perfect square, descending.
    """
    if not 0 < range_lo <= range_hi:
        raise SquareDiffError("need 0 < range_lo <= range_hi")
    buckets: dict[int, set[int]] = {}
    m = 2
    while m * m + 1 < range_hi:
        mm = m * m
        for n in range(1 + (m & 1), m, 2):
            if math.gcd(m, n) != 1:
                continue
            h0 = mm + n * n
            if h0 >= range_hi:
                break
            leg_a = mm - n * n
            leg_b = 2 * m * n
            k0 = max(1, -(-range_lo // h0))
            for h in range(k0 * h0, range_hi, h0):
                k = h // h0
                bucket = buckets.get(h)
                if bucket is None:
                    buckets[h] = bucket = set()
                bucket.add(k * leg_a)
                bucket.add(k * leg_b)
        m += 1
    return {x: sorted(legs, reverse=True) for x, legs in sorted(buckets.items())}


def _scan_block(bounds: tuple[int, int]) -> list[tuple[int, int, int]]:
    """All primitive solutions with hypotenuse in [lo, hi), sorted by (x, y, z)."""
    lo, hi = bounds
    found = []
    gcd = math.gcd
    misqrt = math.isqrt
    for x, legs in legs_by_hypotenuse(lo, hi).items():
        count = len(legs)
        if count < 2:
            continue
        for i in range(count):
            y = legs[i]
            yy = y * y
            for j in range(i + 1, count):
                z = legs[j]
                diff = yy - z * z
                ok, _ = is_perfect_square(diff)
                if ok and gcd(gcd(x, y), z) == 1:
                    found.append((x, y, z))
    found.sort()
    return found


def _blocks(cfg: SearchConfig, start: int = 1) -> Iterator[tuple[int, int]]:
    lo = start
    while lo < cfg.bound_N:
        yield lo, min(lo + cfg.block_width, cfg.bound_N)
        lo += cfg.block_width


def _scan_blocks(cfg: SearchConfig, start: int = 1) -> Iterator[tuple[int, list[tuple[int, int, int]]]]:
    """Yield (block_end, solutions) per block, in block order, optionally in parallel."""
    blocks = list(_blocks(cfg, start))
    if cfg.worker_count == 1:
        for lo, hi in blocks:
            yield hi, _scan_block((lo, hi))
        return
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(cfg.worker_count) as pool:
        for (lo, hi), result in zip(blocks, pool.imap(_scan_block, blocks)):
            yield hi, result


def search(cfg: SearchConfig) -> tuple[int, list[SolutionRecord]]:
    """Count and list every primitive solution with x < bound_N, ordered by (x, y)."""
    records = []
    for _end, found in _scan_blocks(cfg):
        records.extend(SolutionRecord.from_xyz(*xyz) for xyz in found)
    return len(records), records


def _write_checkpoint(path: str, ck: Checkpoint) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(ck.to_json(), fh)
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def load_checkpoint(path: str) -> Checkpoint | None:
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        return Checkpoint.from_json(json.load(fh))


def _line_x(line: str, emit_format: str) -> int | None:
    """x of a record line, or None if the line is malformed (a torn final write)."""
    try:
        if emit_format == "jsonl":
            return int(json.loads(line)["x"])
        return int(line.split(",", 1)[0])
    except (ValueError, KeyError, TypeError):
        return None


def run_search(cfg: SearchConfig, output_path: str) -> tuple[int, int]:
    """Run the search writing records to ``output_path``, checkpointing per block.

    Resumes from ``cfg.checkpoint_path`` when it holds a checkpoint for an
    identical configuration; the output is then trimmed back to the last
    completed block so that an interrupted-and-resumed run is byte-identical
    to an uninterrupted one.  Returns (count, resume_start).
    """
    start = 1
    count = 0
    kept_lines: list[str] = []
    if cfg.checkpoint_path:
        ck = load_checkpoint(cfg.checkpoint_path)
        if ck is not None:
            if ck.config_hash != cfg.config_hash():
                raise SquareDiffError(
                    "checkpoint was written by a different configuration; "
                    "refusing to resume"
                )
            start = ck.last_completed_block_end
            count = ck.running_count
            if os.path.exists(output_path):
                with open(output_path) as fh:
                    for line in fh:
                        line = line.rstrip("\n")
                        if not line:
                            continue
                        if cfg.emit_format == "csv" and line == CSV_HEADER:
                            continue
                        x = _line_x(line, cfg.emit_format)
                        if x is not None and x < start:
                            kept_lines.append(line)
            if len(kept_lines) != count:
                raise SquareDiffError(
                    f"output file holds {len(kept_lines)} records before block "
                    f"boundary {start} but checkpoint says {count}"
                )

    with open(output_path, "w") as out:
        if cfg.emit_format == "csv":
            out.write(CSV_HEADER + "\n")
        for line in kept_lines:
            out.write(line + "\n")
        out.flush()
        for block_end, found in _scan_blocks(cfg, start):
            for xyz in found:
                record = SolutionRecord.from_xyz(*xyz)
                out.write(record.line(cfg.emit_format) + "\n")
            count += len(found)
            out.flush()
            os.fsync(out.fileno())
            if cfg.checkpoint_path:
                _write_checkpoint(
                    cfg.checkpoint_path,
                    Checkpoint(block_end, count, cfg.config_hash()),
                )
    return count, start


def naive_oracle_search(bound_N: int) -> tuple[int, list[SolutionRecord]]:
    """Quadratic reference search: direct square tests, no parametrization.

    Refuses bounds above 10^5; this exists to cross-check :func:`search`
    on small ranges, so it deliberately shares none of its machinery.
    """
    if bound_N > 100_000:
        raise SquareDiffError("naive_oracle_search is quadratic; bound must be <= 100000")
    records = []
    gcd = math.gcd
    for x in range(2, bound_N):
        xx = x * x
        legs = [y for y in range(x - 1, 0, -1) if is_perfect_square(xx - y * y)[0]]
        for i in range(len(legs)):
            y = legs[i]
            yy = y * y
            for j in range(i + 1, len(legs)):
                z = legs[j]
                if is_perfect_square(yy - z * z)[0] and gcd(gcd(x, y), z) == 1:
                    records.append((x, y, z))
    records.sort()
    return len(records), [SolutionRecord.from_xyz(*xyz) for xyz in records]
