"""Brute-force census of truth tables, the ground truth for the formulas.

The function space at arity n is enumerated as the integers
0 .. 2^(2^n) - 1, whose binary expansion is the output column. Each
function is classified with the truth-table oracle and aggregated into an
(m, k, r) histogram. Exhaustive mode is capped at n <= 4 (65536 tables);
n = 5 is reachable only through the sampled mode or the chunk-resumable
mode with an explicit checkpoint file.

Aggregation is associative and commutative, so results are independent of
the worker count and of how the index range is partitioned.
"""

from __future__ import annotations

import math
import multiprocessing
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .enumeration import CountTable
from .truthtable import classify_bits

EXHAUSTIVE_MAX_N = 4
RESUMABLE_MAX_N = 5


@dataclass
class CensusReport:
    """Histogram of (m, k, r) classes over scanned or sampled truth tables."""

    n: int
    mode: str  # "exhaustive" or "sampled"
    histogram: dict
    total: int
    samples: Optional[int] = None
    seed: Optional[int] = None
    mismatches: Optional[list] = None


def _scan_range(args):
    n, start, stop = args
    hist = {}
    for value in range(start, stop):
        key = classify_bits(n, value)
        hist[key] = hist.get(key, 0) + 1
    return hist


def _merge(target, part):
    for key, count in part.items():
        target[key] = target.get(key, 0) + count


def _scan(n, start, stop, workers):
    """Scan [start, stop) with a private histogram per worker, then merge."""
    count = stop - start
    if workers is None:
        workers = os.cpu_count() or 1
    workers = max(1, min(workers, count))
    hist = {}
    if workers == 1 or count < 4096:
        _merge(hist, _scan_range((n, start, stop)))
        return hist
    chunk = math.ceil(count / (workers * 4))
    tasks = [
        (n, lo, min(lo + chunk, stop)) for lo in range(start, stop, chunk)
    ]
    with multiprocessing.Pool(workers) as pool:
        for part in pool.imap_unordered(_scan_range, tasks):
            _merge(hist, part)
    return hist


def census_exhaustive(n: int, workers: Optional[int] = None) -> CensusReport:
    """Classify every n-input truth table, n <= 4.

    Parameters:
        n (int): arity; the hard cap is 4 (2^16 tables). Use
            census_resumable for the opt-in n = 5 scan.
        workers (int | None): parallel workers; None uses all cores.
    """
    if not 0 <= n <= EXHAUSTIVE_MAX_N:
        raise ValueError(
            f"exhaustive census is capped at n <= {EXHAUSTIVE_MAX_N}; "
            "use census_resumable or census_sampled for larger n"
        )
    size = 1 << (1 << n)
    hist = _scan(n, 0, size, workers)
    return CensusReport(n=n, mode="exhaustive", histogram=hist, total=size)


def census_sampled(n: int, samples: int, seed: int) -> CensusReport:
    """Classify uniformly random truth tables from a pinned generator.

    The generator is numpy's PCG64 (a documented, seedable 64-bit
    generator); each sample draws ceil(2^n / 8) bytes interpreted
    little-endian as the output column, masked to 2^n bits. Results with
    a fixed seed are bit-reproducible.
    """
    if not 0 <= n <= 31:
        raise ValueError("sampled census supports 0 <= n <= 31")
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = np.random.Generator(np.random.PCG64(seed))
    nbytes = ((1 << n) + 7) // 8
    mask = (1 << (1 << n)) - 1
    hist = {}
    for _ in range(samples):
        value = int.from_bytes(rng.bytes(nbytes), "little") & mask
        key = classify_bits(n, value)
        hist[key] = hist.get(key, 0) + 1
    return CensusReport(
        n=n,
        mode="sampled",
        histogram=hist,
        total=samples,
        samples=samples,
        seed=seed,
    )


def _formula_cells(n, table):
    cells = {}
    for m in range(n + 1):
        for k in range(m + 1):
            for r in range(1, k + 1) if k else (0,):
                cells[(m, k, r)] = table.count(n, m, k, r)
    return cells


def compare(report: CensusReport, table: CountTable) -> list:
    """Cell-by-cell comparison of an exhaustive census against the formulas.

    Returns the list of (cell, formula value, census value) mismatches,
    empty iff the formulas reproduce the ground truth; the list is also
    stored on the report. A non-empty result maps to a failing process
    exit status in the CLI.
    """
    if report.mode != "exhaustive":
        raise ValueError("compare needs an exhaustive census report")
    formulas = _formula_cells(report.n, table)
    cells = sorted(set(formulas) | set(report.histogram))
    mismatches = []
    for cell in cells:
        expected = formulas.get(cell, 0)
        observed = report.histogram.get(cell, 0)
        if expected != observed:
            mismatches.append((cell, expected, observed))
    report.mismatches = mismatches
    return mismatches


def compare_sampled(report: CensusReport, table: CountTable) -> list:
    """Informational comparison of sampled proportions with exact ones.

    For each cell returns (cell, observed count, observed proportion,
    exact proportion, binomial z-score). No pass/fail semantics; the
    z-scores flag cells worth a second look.
    """
    if report.mode != "sampled":
        raise ValueError("compare_sampled needs a sampled census report")
    total_fns = table.total(report.n)
    formulas = _formula_cells(report.n, table)
    rows = []
    for cell in sorted(set(formulas) | set(report.histogram)):
        exact = Fraction(formulas.get(cell, 0), total_fns)
        observed = report.histogram.get(cell, 0)
        p = float(exact)
        sd = math.sqrt(p * (1.0 - p) / report.total)
        obs_p = observed / report.total
        z = (obs_p - p) / sd if sd > 0 else 0.0
        rows.append((cell, observed, obs_p, exact, z))
    return rows


def write_histogram_csv(report: CensusReport, stream):
    """Histogram CSV with header ``n,m,k,r,count``."""
    stream.write("n,m,k,r,count\n")
    for (m, k, r), count in sorted(report.histogram.items()):
        stream.write(f"{report.n},{m},{k},{r},{count}\n")


def write_comparison_csv(report: CensusReport, table: CountTable, stream):
    """Comparison CSV with header ``n,m,k,r,formula,census,diff``."""
    if report.mode != "exhaustive":
        raise ValueError("comparison CSV needs an exhaustive census report")
    formulas = _formula_cells(report.n, table)
    stream.write("n,m,k,r,formula,census,diff\n")
    for cell in sorted(set(formulas) | set(report.histogram)):
        expected = formulas.get(cell, 0)
        observed = report.histogram.get(cell, 0)
        m, k, r = cell
        stream.write(
            f"{report.n},{m},{k},{r},{expected},{observed},{observed - expected}\n"
        )


def write_checkpoint(path, n, next_index, hist):
    """Checkpoint: plain text header (n, next index) plus histogram CSV."""
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(f"n={n} next={next_index}\n")
        fh.write("m,k,r,count\n")
        for (m, k, r), count in sorted(hist.items()):
            fh.write(f"{m},{k},{r},{count}\n")
    os.replace(tmp, path)


def read_checkpoint(path):
    """Read (n, next_index, histogram) back from a checkpoint file."""
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().strip()
        fields = dict(item.split("=") for item in header.split())
        n = int(fields["n"])
        next_index = int(fields["next"])
        fh.readline()  # column header
        hist = {}
        for line in fh:
            m, k, r, count = line.strip().split(",")
            hist[(int(m), int(k), int(r))] = int(count)
    return n, next_index, hist


def census_resumable(
    n: int,
    checkpoint: str,
    chunk_size: int = 1 << 16,
    max_chunks: Optional[int] = None,
    workers: Optional[int] = None,
) -> Optional[CensusReport]:
    """Chunked, checkpointed exhaustive census, the opt-in path to n = 5.

    Processes contiguous index chunks, persisting progress to the
    checkpoint file after each one. Returns the finished report, or None
    if max_chunks ran out first (progress is kept for the next call).
    """
    if not 0 <= n <= RESUMABLE_MAX_N:
        raise ValueError(f"resumable census is capped at n <= {RESUMABLE_MAX_N}")
    if chunk_size < 1:
        raise ValueError("chunk_size must be positive")
    size = 1 << (1 << n)
    if os.path.exists(checkpoint):
        saved_n, start, hist = read_checkpoint(checkpoint)
        if saved_n != n:
            raise ValueError(
                f"checkpoint is for n={saved_n}, requested n={n}"
            )
    else:
        start, hist = 0, {}
    done_chunks = 0
    while start < size:
        if max_chunks is not None and done_chunks >= max_chunks:
            return None
        stop = min(start + chunk_size, size)
        _merge(hist, _scan(n, start, stop, workers))
        start = stop
        done_chunks += 1
        write_checkpoint(checkpoint, n, start, hist)
    return CensusReport(n=n, mode="exhaustive", histogram=hist, total=size)
