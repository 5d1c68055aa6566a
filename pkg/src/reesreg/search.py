"""Counter-example search over 4-generated ideals.

Every 4-generated equigenerated ideal is (x^d, x^b y^(d-b), x^a y^(d-a), y^d)
for some 0 < a < b < d, and swapping x with y maps (a, b) to (d-b, d-a)
without changing any invariant.  The scan therefore examines only the
lexicographically canonical representative of each mirror pair, runs the
full regularity comparison on it, and records one line per case:

    d,a,b,r_J,reg_F,status        status in {TRUE, FALSE, UNRESOLVED}

Lines stream to a checkpoint as cases finish, so a killed scan resumes
where it stopped; the final in-memory results are sorted by (d, a, b) and
do not depend on the worker count.
"""

from __future__ import annotations

import multiprocessing
import os
import re
import time
from dataclasses import dataclass

from .errors import CapExceeded, CheckpointError, ResourceLimit
from .ratliff_rush import Monomial
from .regularity import eu_check
from .staircase import make_ideal, mirror

ENV_WORKERS = "REESREG_WORKERS"

_LINE = re.compile(r"^(\d+),(\d+),(\d+),(\d+|-),(\d+|-),(TRUE|FALSE|UNRESOLVED)$")


@dataclass(frozen=True)
class SearchRecord:
    """Outcome of one canonical case."""

    d: int
    a: int
    b: int
    r_j: int | None
    reg_f: int | None
    status: str
    witness: Monomial | None = None
    elapsed: float = 0.0

    def line(self) -> str:
        r_j = "-" if self.r_j is None else str(self.r_j)
        reg_f = "-" if self.reg_f is None else str(self.reg_f)
        return f"{self.d},{self.a},{self.b},{r_j},{reg_f},{self.status}"


@dataclass(frozen=True)
class ScanSummary:
    """Counts per degree and overall, plus the unresolved cases."""

    d_min: int
    d_max: int
    examined: int
    true_count: int
    false_count: int
    unresolved_count: int
    per_degree: dict[int, tuple[int, int, int, int]]  # examined, true, false, unresolved
    unresolved: tuple[tuple[int, int, int], ...]


def canonical_triples(d_min: int, d_max: int) -> list[tuple[int, int, int]]:
    """All (d, a, b) with d in range and (a, b) not above its mirror."""
    if d_min < 2:
        raise ValueError(f"degrees below 2 have no cases, got d_min={d_min}")
    if d_max < d_min:
        raise ValueError(f"empty degree range {d_min}..{d_max}")
    out = []
    for d in range(d_min, d_max + 1):
        for a in range(1, d - 1):
            for b in range(a + 1, d):
                if (a, b) <= (d - b, d - a):
                    out.append((d, a, b))
    return out


def examine(triple: tuple[int, int, int]) -> SearchRecord:
    """Run the full regularity comparison on one case.

    Cap or resource exhaustion becomes an UNRESOLVED record; it is never
    dropped and never mistaken for a verdict.
    """
    d, a, b = triple
    start = time.perf_counter()
    try:
        report = eu_check(make_ideal(d, (a, b)))
        status = "TRUE" if report.conjecture_holds else "FALSE"
        record = SearchRecord(
            d, a, b, report.r_j, report.reg_f, status,
            report.witness, time.perf_counter() - start,
        )
    except (CapExceeded, ResourceLimit):
        record = SearchRecord(
            d, a, b, None, None, "UNRESOLVED", None, time.perf_counter() - start
        )
    return record


def parse_record_line(line: str) -> SearchRecord:
    m = _LINE.match(line)
    if m is None:
        raise CheckpointError(f"corrupt checkpoint line: {line!r}")
    d, a, b = int(m.group(1)), int(m.group(2)), int(m.group(3))
    r_j = None if m.group(4) == "-" else int(m.group(4))
    reg_f = None if m.group(5) == "-" else int(m.group(5))
    return SearchRecord(d, a, b, r_j, reg_f, m.group(6))


def load_checkpoint(path: str) -> dict[tuple[int, int, int], SearchRecord]:
    """Strictly parsed checkpoint records, keyed by triple."""
    if not os.path.exists(path):
        raise CheckpointError(f"no checkpoint at {path}")
    done: dict[tuple[int, int, int], SearchRecord] = {}
    with open(path, "r", encoding="ascii") as handle:
        for i, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line:
                continue
            try:
                rec = parse_record_line(line)
            except CheckpointError:
                raise CheckpointError(f"corrupt checkpoint {path}, line {i}: {line!r}")
            done[(rec.d, rec.a, rec.b)] = rec
    return done


def _default_workers() -> int:
    env = os.environ.get(ENV_WORKERS)
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"{ENV_WORKERS} must be an integer, got {env!r}")
    return 1


def scan(
    d_min: int,
    d_max: int,
    workers: int | None = None,
    checkpoint: str | None = None,
    resume: bool = False,
    flush_every: int = 1000,
    progress=None,
) -> tuple[list[SearchRecord], ScanSummary]:
    """Examine every canonical case in the degree range.

    Returns the counter-example records (sorted by (d, a, b), each with a
    verified witness and a verified mirror) plus summary counts.  With a
    checkpoint path, finished lines stream to disk and a later resume skips
    them; the final results are identical either way.
    """
    triples = canonical_triples(d_min, d_max)
    done: dict[tuple[int, int, int], SearchRecord] = {}
    if resume:
        if checkpoint is None:
            raise ValueError("resume requires a checkpoint path")
        done = load_checkpoint(checkpoint)
    todo = [t for t in triples if t not in done]
    if workers is None:
        workers = _default_workers()

    results: dict[tuple[int, int, int], SearchRecord] = {}
    out = open(checkpoint, "a" if resume else "w", encoding="ascii") if checkpoint else None
    try:
        if workers > 1 and len(todo) > 1:
            chunk = max(1, len(todo) // (workers * 8))
            with multiprocessing.Pool(processes=workers) as pool:
                stream = pool.imap_unordered(examine, todo, chunksize=chunk)
                _collect(stream, results, out, flush_every, progress)
        else:
            _collect(map(examine, todo), results, out, flush_every, progress)
    finally:
        if out is not None:
            out.close()

    merged = {t: done[t] for t in triples if t in done}
    merged.update(results)
    counterexamples = []
    per_degree = {d: [0, 0, 0, 0] for d in range(d_min, d_max + 1)}
    unresolved = []
    for t in triples:
        rec = merged[t]
        tally = per_degree[rec.d]
        tally[0] += 1
        if rec.status == "TRUE":
            tally[1] += 1
        elif rec.status == "FALSE":
            tally[2] += 1
            if rec.witness is None:  # resumed line: recover the full record
                rec = examine(t)
            _verify_counterexample(rec)
            counterexamples.append(rec)
        else:
            tally[3] += 1
            unresolved.append(t)
    summary = ScanSummary(
        d_min=d_min,
        d_max=d_max,
        examined=len(triples),
        true_count=sum(v[1] for v in per_degree.values()),
        false_count=sum(v[2] for v in per_degree.values()),
        unresolved_count=sum(v[3] for v in per_degree.values()),
        per_degree={d: tuple(v) for d, v in per_degree.items()},
        unresolved=tuple(unresolved),
    )
    counterexamples.sort(key=lambda r: (r.d, r.a, r.b))
    return counterexamples, summary


def _collect(stream, results, out, flush_every, progress) -> None:
    written = 0
    for rec in stream:
        results[(rec.d, rec.a, rec.b)] = rec
        if out is not None:
            out.write(rec.line() + "\n")
            written += 1
            if written % flush_every == 0:
                out.flush()
        if progress is not None:
            progress(rec)


def _verify_counterexample(rec: SearchRecord) -> None:
    """The mirror of a reported counter-example must itself be one."""
    twin = mirror(make_ideal(rec.d, (rec.a, rec.b)))
    twin_report = eu_check(twin)
    if twin_report.conjecture_holds:
        raise RuntimeError(
            f"mirror of counter-example {rec.d},{rec.a},{rec.b} verifies TRUE; "
            "mirror invariance is broken"
        )
