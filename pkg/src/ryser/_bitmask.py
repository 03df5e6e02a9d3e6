"""Shared plumbing for exhaustive sign-mask searches and worker pools."""

import multiprocessing
import os

import numpy as np

# 2^16 masks per task: keeps peak memory per worker in the low megabytes
# while numpy still dominates the per-task overhead.
CHUNK_BITS = 16


def available_parallelism() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def mask_spans(n_bits: int, chunk_bits: int = CHUNK_BITS) -> list[tuple[int, int]]:
    """Split [0, 2^n_bits) into half-open spans of at most 2^chunk_bits."""
    total = 1 << n_bits
    step = 1 << min(chunk_bits, n_bits)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def expand_masks(masks: np.ndarray, n: int) -> np.ndarray:
    """Masks to a sign matrix: bit i of a mask is h_{i+1}, 0 meaning +1."""
    shifts = np.arange(n, dtype=np.uint64)
    bits = ((masks[:, None] >> shifts) & np.uint64(1)).astype(np.int8)
    return 1 - 2 * bits


def run_spans(worker, tasks: list, workers: int) -> list:
    """Apply worker to every task, preserving task order in the result.

    A process pool is used only when it can help; results are merged in
    submission order either way, so the caller sees one canonical output.
    """
    if workers <= 1 or len(tasks) <= 1:
        return [worker(task) for task in tasks]
    with multiprocessing.Pool(min(workers, len(tasks))) as pool:
        return pool.map(worker, tasks)
