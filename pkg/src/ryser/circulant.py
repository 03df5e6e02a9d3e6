"""Circulant Hadamard verification: exact autocorrelation test, floating
spectrum cross-check, eigenvalue coefficient grouping, exhaustive search.

A circulant matrix is determined by its first row, so rows stand in for
matrices throughout and the full matrix is never materialized. The binding
Hadamard test is exact integer autocorrelation; the floating spectrum is a
cross-check only and never decides a verdict.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ._bitmask import expand_masks, mask_spans, run_spans
from .errors import IndexOutOfRange, NotADivisor, OrderTooLarge

MAX_SEARCH_ORDER = 28

# Relative tolerance (times sqrt(n)) for every floating spectrum comparison.
SPECTRUM_RTOL = 1e-9

ROOT_CONVENTION = "w_n = exp(2i*pi/n), b_s = R(w_n^(s-1))"


@dataclass(frozen=True)
class SignRow:
    """First row (h_1 .. h_n) of a circulant matrix with entries +1 or -1."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) < 1:
            raise ValueError("row must have length at least 1")
        if any(h not in (1, -1) for h in self.entries):
            raise ValueError("entries must be +1 or -1")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_literal(cls, text: str) -> "SignRow":
        """Parse a '+'/'-' string, '+' meaning +1."""
        if not text or set(text) - {"+", "-"}:
            raise ValueError(f"row literal must match [+-]+, got {text!r}")
        return cls(tuple(1 if ch == "+" else -1 for ch in text))

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "SignRow":
        """Decode an n-bit mask, bit i holding h_{i+1}, 0 meaning +1."""
        if n < 1 or not 0 <= mask < (1 << n):
            raise ValueError(f"mask {mask} out of range for n={n}")
        return cls(tuple(-1 if (mask >> i) & 1 else 1 for i in range(n)))

    def literal(self) -> str:
        return "".join("+" if h == 1 else "-" for h in self.entries)

    def mask(self) -> int:
        return sum(1 << i for i, h in enumerate(self.entries) if h == -1)


@dataclass(frozen=True)
class SpectrumReport:
    """Eigenvalues of a circulant row and their deviation from sqrt(n)."""

    eigenvalues: tuple[complex, ...]
    magnitudes: tuple[float, ...]
    max_deviation: float
    root_convention: str = ROOT_CONVENTION


def periodic_autocorrelation(row: SignRow, k: int) -> int:
    """PAF_k: the sum of h_i * h_{i+k} with cyclic indices, exact integer."""
    n = row.n
    if not 0 <= k < n:
        raise IndexOutOfRange(f"shift k={k} outside [0, {n})")
    e = row.entries
    return sum(e[i] * e[(i + k) % n] for i in range(n))


def is_circulant_hadamard(row: SignRow) -> bool:
    """True iff every off-peak periodic autocorrelation vanishes.

    This integer condition is exactly equivalent to all eigenvalues of the
    circulant having magnitude sqrt(n), with no tolerance involved.
    """
    return all(periodic_autocorrelation(row, k) == 0 for k in range(1, row.n))


def spectrum(row: SignRow) -> SpectrumReport:
    """Eigenvalues b_s = R(w_n^(s-1)) of circ(row), s = 1..n.

    R(x) = h_1 + h_2 x + ... + h_n x^(n-1), evaluated directly by Horner's
    rule at the n-th roots of unity; no Fourier matrix is ever built. O(n^2),
    which is plenty since n stays small on all spectral paths.
    """
    n = row.n
    eigenvalues = []
    for s in range(n):
        x = cmath.exp(2j * cmath.pi * s / n)
        acc = 0j
        for h in reversed(row.entries):
            acc = acc * x + h
        eigenvalues.append(acc)
    magnitudes = tuple(abs(b) for b in eigenvalues)
    root = math.sqrt(n)
    max_deviation = max(abs(m - root) for m in magnitudes)
    return SpectrumReport(tuple(eigenvalues), magnitudes, max_deviation)


def group_coefficients(row: SignRow, n1: int) -> tuple[int, ...]:
    """Sum the entries by index class mod n1: c_r over i with i = r (mod n1).

    For n1 dividing n, sum_r c_r w_{n1}^r equals the eigenvalue b_j with
    j - 1 = n/n1, an exact integer witness that this eigenvalue lies in the
    n1-th cyclotomic field (w_{n1} = w_n^(n/n1)).
    """
    if n1 < 1 or row.n % n1 != 0:
        raise NotADivisor(f"{n1} does not divide {row.n}")
    out = [0] * n1
    for i, h in enumerate(row.entries):
        out[i % n1] += h
    return tuple(out)


def search_all(n: int, *, workers: int = 1) -> list[SignRow]:
    """All first rows of circulant Hadamard matrices of order n, exhaustively.

    Enumerates the 2^n sign masks (bit i is h_{i+1}, 0 meaning +1) in
    spans, pruning first on the row sum and then on each autocorrelation
    shift. Results are sorted lexicographically with +1 before -1 and do not
    depend on the worker count.
    """
    if not 1 <= n <= MAX_SEARCH_ORDER:
        raise OrderTooLarge(f"order {n} outside [1, {MAX_SEARCH_ORDER}]")
    tasks = [(n, lo, hi) for lo, hi in mask_spans(n)]
    found = run_spans(_search_span, tasks, workers)
    rows = [SignRow.from_mask(mask, n) for span in found for mask in span]
    rows.sort(key=SignRow.literal)
    return rows


def _search_span(task: tuple[int, int, int]) -> list[int]:
    n, lo, hi = task
    masks = np.arange(lo, hi, dtype=np.uint64)
    # The row sum must be +-sqrt(n): with c entries flipped it is n - 2c.
    counts = np.bitwise_count(masks).astype(np.int64)
    sums = n - 2 * counts
    masks = masks[sums * sums == n]
    if masks.size == 0:
        return []
    signs = expand_masks(masks, n)
    # PAF_k equals PAF_{n-k} exactly, so shifts up to n//2 decide the rest.
    for k in range(1, n // 2 + 1):
        paf = (signs * np.roll(signs, -k, axis=1)).sum(axis=1, dtype=np.int64)
        keep = paf == 0
        masks = masks[keep]
        signs = signs[keep]
        if masks.size == 0:
            return []
    return [int(mask) for mask in masks]
