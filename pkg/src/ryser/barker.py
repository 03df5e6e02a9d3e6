"""Barker sequence verification and exhaustive search.

A Barker sequence is a +-1 sequence whose off-peak aperiodic
autocorrelations all lie in {-1, 0, 1}; the known lengths are 1, 2, 3, 4,
5, 7, 11 and 13. Even lengths beyond 4 reduce classically to circulant
Hadamard orders, so the order criterion can exclude them; that reduction is
reported as background, never proven here.
"""

import dataclasses

import numpy as np

from ._bitmask import expand_masks, mask_spans, run_spans
from .circulant import SignRow
from .criterion import CriterionReport, Verdict, check_order
from .errors import IndexOutOfRange, LengthTooLarge

MAX_SEARCH_LENGTH = 24


def aperiodic_autocorrelation(seq: SignRow, k: int) -> int:
    """c_k: the sum of h_i * h_{i+k} without wraparound, exact integer."""
    length = seq.n
    if not 0 <= k < length:
        raise IndexOutOfRange(f"shift k={k} outside [0, {length})")
    e = seq.entries
    return sum(e[i] * e[i + k] for i in range(length - k))


def is_barker(seq: SignRow) -> bool:
    """True iff |c_k| <= 1 for every k = 1 .. L-1."""
    return all(abs(aperiodic_autocorrelation(seq, k)) <= 1
               for k in range(1, seq.n))


def search_barker(length: int, *, workers: int = 1) -> list[SignRow]:
    """All Barker sequences of the given length, by exhaustion.

    Same mask enumeration and lexicographic ordering (+1 before -1) as the
    circulant search; each shift filter is applied to the whole surviving
    population at once, and the result never depends on the worker count.
    """
    if not 1 <= length <= MAX_SEARCH_LENGTH:
        raise LengthTooLarge(f"length {length} outside [1, {MAX_SEARCH_LENGTH}]")
    tasks = [(length, lo, hi) for lo, hi in mask_spans(length)]
    found = run_spans(_search_span, tasks, workers)
    rows = [SignRow.from_mask(mask, length) for span in found for mask in span]
    rows.sort(key=SignRow.literal)
    return rows


def _search_span(task: tuple[int, int, int]) -> list[int]:
    length, lo, hi = task
    masks = np.arange(lo, hi, dtype=np.uint64)
    signs = expand_masks(masks, length)
    for k in range(1, length):
        c = (signs[:, : length - k] * signs[:, k:]).sum(axis=1, dtype=np.int64)
        keep = np.abs(c) <= 1
        masks = masks[keep]
        signs = signs[keep]
        if masks.size == 0:
            break
    return [int(mask) for mask in masks]


def barker_exclusion_report(length: int) -> CriterionReport:
    """Apply the order criterion to an even length and annotate the outcome.

    A REJECTED verdict excludes Barker sequences of that length via the
    classical reduction to circulant Hadamard matrices. Lengths not of
    candidate form come back NOT_APPLICABLE.
    """
    if length % 2 != 0 or length <= 4:
        raise ValueError(f"length must be even and greater than 4, got {length}")
    report = check_order(length)
    if report.verdict is Verdict.REJECTED:
        note = (f"no Barker sequence of length {length}: the order criterion "
                "rejects it as a circulant Hadamard order, and Barker "
                "sequences of even length reduce classically to such orders")
    elif report.verdict is Verdict.NOT_APPLICABLE:
        note = (f"length {length} is not 4*u^2 with u odd, so the order "
                "criterion does not apply")
    else:
        note = (f"the order criterion does not decide length {length}; "
                "no Barker conclusion follows")
    return dataclasses.replace(report, annotation=note)
